#ifndef CMREES_REGISTRY_HPP
#define CMREES_REGISTRY_HPP

#include <string>
#include <vector>

#include "cmrees/group.hpp"

namespace cmrees {

// Built-in groups: Cyc1..Cyc12 (mu_d on C), G2_1_2/G3_1_2/G4_1_2
// (G(d,1,2) as d-signed permutations of C^2), S3 (2-dimensional reflection
// representation), G4 (Shephard-Todd no. 4). Cached; one instance each.
GroupPtr registry_group(const std::string& name);

std::vector<std::string> registry_names();

// Group definition file: lines "name <id>", "conductor <m>", "dim <n>",
// and one "generator <row ; row ; ...>" per generator, rows as
// comma-separated cyclotomic literals.
GroupPtr load_group_file(const std::string& path);

// Registry name or path to a group file.
GroupPtr resolve_group(const std::string& selector);

}  // namespace cmrees

#endif
