#ifndef CMREES_REPORT_HPP
#define CMREES_REPORT_HPP

#include <string>
#include <vector>

#include "cmrees/center.hpp"
#include "cmrees/chern.hpp"
#include "cmrees/g4.hpp"

namespace cmrees {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, data on success
};

struct SuiteReport {
  std::string suite;
  std::string group;
  int order = 0;
  bool pass = false;
  std::vector<CheckResult> checks;
};

// Transfer identities (raw coset conjugation vs closed formulas), the
// codimension-filtration transfer spanning identity, the exterior-twisted
// induction identity at the Laurent level, and the unit normalization.
SuiteReport run_identity_suite(const GroupPtr& g, int order);

SuiteReport run_theorem_a_suite(const GroupPtr& g, int order);
SuiteReport run_theorem_b_suite(int order);

// (i, dim gr_i, dim F_i) table for the family partition; for rank-1 groups
// additionally checks that only degrees 0 and 1 are populated.
SuiteReport run_conjecture_suite(const GroupPtr& g, const FamilyPartition& fam);

// Character table with codims, fake degrees, and invariant degrees.
SuiteReport run_chartab_suite(const GroupPtr& g);

std::string render_json(const SuiteReport& rep);
std::string render_tsv(const SuiteReport& rep);

}  // namespace cmrees

#endif
