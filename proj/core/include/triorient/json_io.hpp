#pragma once

#include <string>

#include "triorient/classes.hpp"
#include "triorient/obstruction.hpp"
#include "triorient/solver.hpp"

namespace triorient {

// {"answer":"yes","orientation":[[from,to],...]} with arcs in edge order, or
// {"answer":"no","edge":[u,v],"path":[[from,to],...]}.
std::string certificate_to_json(const certificate& c);

// {"kind":"odd_donut"|"even_mobius_donut",
//  "tjoin":{"n":...,"edges":[[u,v],...]},
//  "identify":[[a,b],[c,d]], "phi":[...]}
// Everything a third party needs to re-verify the obstruction.
std::string obstruction_to_json(const obstruction& o);

std::string atlas_to_json(const atlas_report& r);

} // namespace triorient
