#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "triorient/graph.hpp"

namespace triorient {

// Oriented three-vertex patterns.
//   B1: both arcs point into the middle vertex of a path.
//   B2: both arcs point out of the middle vertex of a path.
//   B3: directed two-edge path.
//   T3: transitive triangle.
//   C3: directed triangle.
//   K1K2: a single arc plus an isolated third vertex.
enum class pattern : std::uint8_t { B1 = 0, B2, B3, T3, C3, K1K2 };

std::string to_string(pattern p);
std::optional<pattern> pattern_from_string(const std::string& name);

// Subset of the six patterns, value semantics.
class forbidden_set {
public:
    constexpr forbidden_set() = default;
    constexpr forbidden_set(std::initializer_list<pattern> ps) {
        for (pattern p : ps) insert(p);
    }

    constexpr void insert(pattern p) { bits_ |= mask(p); }
    constexpr bool contains(pattern p) const { return bits_ & mask(p); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    // Simple sets are the subsets of {B1, B2, B3, T3}; only these are
    // handled by the constraint-digraph solver.
    constexpr bool is_simple() const {
        return (bits_ & ~(mask(pattern::B1) | mask(pattern::B2) | mask(pattern::B3) |
                          mask(pattern::T3))) == 0;
    }

    friend constexpr bool operator==(forbidden_set, forbidden_set) = default;

    // Comma-separated names, e.g. "B1,T3".  Throws std::invalid_argument.
    static forbidden_set parse(const std::string& names);
    std::string to_string() const;

    // The 15 nonempty subsets of {B1, B2, B3, T3}, by size then lexicographic.
    static std::vector<forbidden_set> all_simple_nonempty();

private:
    static constexpr std::uint8_t mask(pattern p) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(p));
    }
    std::uint8_t bits_ = 0;
};

struct violation {
    std::array<int, 3> triple{}; // sorted ascending
    pattern which = pattern::B1;

    friend bool operator==(const violation&, const violation&) = default;
    friend auto operator<=>(const violation&, const violation&) = default;
};

// Pattern induced on three distinct vertices, nullopt if the triple spans no
// edge.  Throws std::invalid_argument on out-of-range or repeated vertices.
std::optional<pattern> induced_pattern(const orientation& o, std::array<int, 3> triple);

// All forbidden-pattern occurrences in o, sorted by (triple, pattern).
std::vector<violation> violations(const orientation& o, forbidden_set f);

// Same question as violations(o, f).empty(), without materializing the list.
bool has_violation(const orientation& o, forbidden_set f);

// Exhaustive search over all 2^m orientations in binary-counter order over
// the canonical edge order; returns the first f-free orientation, or nullopt
// if none exists.  Throws std::invalid_argument when m exceeds max_edges.
std::optional<orientation> brute_force_orientable(const graph& g, forbidden_set f,
                                                  int max_edges = 24);

} // namespace triorient
