// Command line front end: decide orientability with certificates, replay and
// check orientations, extract concrete obstructions, generate graph families
// and print the per-set atlas.  All output is deterministic.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "triorient/classes.hpp"
#include "triorient/families.hpp"
#include "triorient/json_io.hpp"
#include "triorient/obstruction.hpp"
#include "triorient/patterns.hpp"
#include "triorient/solver.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

triorient::forbidden_set parse_simple_forbid(const std::string& names) {
    triorient::forbidden_set f = triorient::forbidden_set::parse(names);
    if (!f.is_simple())
        throw std::runtime_error(
            "sets containing C3 or K1K2 have no constraint digraph; use the atlas "
            "subcommand, whose exhaustive rows cover them on small graphs");
    return f;
}

int run_orient(const std::vector<std::string>& files, const std::string& forbid, bool as_json) {
    triorient::forbidden_set f = parse_simple_forbid(forbid);
    int exit_code = 0;
    for (const std::string& path : files) {
        triorient::graph g = triorient::parse_graph(read_input(path));
        triorient::certificate c = triorient::solve(g, f);
        if (files.size() > 1) std::cout << "== " << path << " ==\n";
        if (as_json) {
            std::cout << triorient::certificate_to_json(c) << "\n";
        } else if (triorient::is_yes(c)) {
            std::cout << "yes\n" << write_orientation(std::get<triorient::yes_certificate>(c).oriented);
        } else {
            const auto& no = std::get<triorient::no_certificate>(c);
            std::cout << "no\nedge " << no.edge.u << " " << no.edge.v << "\n";
            for (auto [from, to] : no.path) std::cout << from << " " << to << "\n";
        }
        if (!triorient::is_yes(c)) exit_code = 1;
    }
    return exit_code;
}

int run_check(const std::string& graph_path, const std::string& orient_path,
              const std::string& forbid) {
    triorient::forbidden_set f = triorient::forbidden_set::parse(forbid);
    triorient::graph g = triorient::parse_graph(read_input(graph_path));
    triorient::orientation o = triorient::parse_orientation(read_input(orient_path), g);
    auto found = triorient::violations(o, f);
    for (const triorient::violation& v : found)
        std::cout << v.triple[0] << " " << v.triple[1] << " " << v.triple[2] << " "
                  << triorient::to_string(v.which) << "\n";
    if (found.empty()) {
        std::cout << "pattern-free\n";
        return 0;
    }
    return 1;
}

int run_obstruct(const std::string& path) {
    triorient::graph g = triorient::parse_graph(read_input(path));
    auto result = triorient::extract_t3_obstruction(g);
    if (std::holds_alternative<triorient::orientation>(result)) {
        std::cout << "orientable\n" << write_orientation(std::get<triorient::orientation>(result));
        return 0;
    }
    std::cout << triorient::obstruction_to_json(std::get<triorient::obstruction>(result)) << "\n";
    return 1;
}

int run_atlas(const std::string& path, bool as_json, int cap) {
    triorient::graph g = triorient::parse_graph(read_input(path));
    triorient::atlas_report report = triorient::atlas(g, cap);
    if (as_json)
        std::cout << triorient::atlas_to_json(report) << "\n";
    else
        std::cout << triorient::format_atlas(report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certifying three-vertex-pattern orientation engine"};
    app.require_subcommand(1);

    std::string forbid;
    std::vector<std::string> files;
    bool as_json = false;

    CLI::App* orient = app.add_subcommand("orient", "decide orientability with a certificate");
    orient->add_option("--forbid", forbid, "comma separated patterns, e.g. B1,T3")->required();
    orient->add_flag("--json", as_json, "certificate as JSON");
    orient->add_option("files", files, "edge list files, - for stdin")->required();

    std::string graph_path, orient_path;
    CLI::App* check = app.add_subcommand("check", "verify an orientation file");
    check->add_option("graph", graph_path, "edge list file")->required();
    check->add_option("orientation", orient_path, "arc list file")->required();
    check->add_option("--forbid", forbid, "patterns to scan for")->required();

    std::string obstruct_path;
    CLI::App* obstruct =
        app.add_subcommand("obstruct", "orient without transitive triangles or extract a donut");
    obstruct->add_option("file", obstruct_path, "edge list file, - for stdin")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a graph as an edge list");
    gen->require_subcommand(1);
    int p = 1, q = 3;
    std::string merge = "11";
    bool mobius = false;
    CLI::App* gen_tj = gen->add_subcommand("tjoin", "triangulated strip between two paths");
    gen_tj->add_option("--p", p, "vertices on the first path")->required();
    gen_tj->add_option("--q", q, "vertices on the second path")->required();
    gen_tj->add_option("--merge", merge, "triangulation sequence of 0s and 1s")->required();
    CLI::App* gen_do = gen->add_subcommand("donut", "strip with identified ends");
    gen_do->add_option("--p", p, "vertices on the first path")->required();
    gen_do->add_option("--q", q, "vertices on the second path")->required();
    gen_do->add_option("--merge", merge, "triangulation sequence of 0s and 1s")->required();
    gen_do->add_flag("--mobius", mobius, "identify the ends crosswise");
    std::string family;
    std::vector<int> family_args;
    CLI::App* gen_std = gen->add_subcommand("std", "named family");
    gen_std->add_option("name", family,
                        "path|cycle|star|complete|complete_multipartite|wheel|hajos|grotzsch")
        ->required();
    gen_std->add_option("args", family_args, "size arguments");

    std::string atlas_path;
    int cap = 20;
    CLI::App* atlas_cmd = app.add_subcommand("atlas", "decisions for all 26 forbidden sets");
    atlas_cmd->add_option("file", atlas_path, "edge list file, - for stdin")->required();
    atlas_cmd->add_flag("--json", as_json, "atlas as JSON");
    atlas_cmd->add_option("--cap", cap, "edge limit for the exhaustive rows")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*orient) return run_orient(files, forbid, as_json);
        if (*check) return run_check(graph_path, orient_path, forbid);
        if (*obstruct) return run_obstruct(obstruct_path);
        if (*gen_tj) {
            std::cout << write_graph(triorient::gen_tjoin({p, q, merge}));
            return 0;
        }
        if (*gen_do) {
            std::cout << write_graph(triorient::gen_donut({{p, q, merge}, mobius}));
            return 0;
        }
        if (*gen_std) {
            std::cout << write_graph(triorient::gen_standard(family, family_args));
            return 0;
        }
        if (*atlas_cmd) return run_atlas(atlas_path, as_json, cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
