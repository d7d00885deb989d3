#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/group.hpp"

namespace troprep {

struct UnknownCheckIdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CheckStatus { pass, fail, skipped };

// One named verification: a quantified statement instantiated over the
// catalog and evaluated against actual enumerated objects (orbits,
// families, kernel verdicts).
struct TheoremCheck {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  std::string scope;           // what the check quantified over
  std::string detail;          // what was verified / why skipped
  std::string counterexample;  // JSON payload, nonempty iff status == fail

  bool passed() const { return status == CheckStatus::pass; }
};

// Registered check ids in the order run_all executes them.
const std::vector<std::string>& check_ids();

// Z_4..Z_13, D_3..D_6, Q8, S_3, S_4, Z_2xZ_2, Z_2xZ_4.
std::vector<GroupTable> default_catalog();

// Run one check against the catalog.  workers > 1 turns on the search
// pool (results are identical for every worker count).  An empty catalog
// yields a skipped result.
TheoremCheck run_check(const std::string& id, const std::vector<GroupTable>& catalog,
                       int workers = 0);

// Every registered check in fixed order, sharing classification work.
std::vector<TheoremCheck> run_all(const std::vector<GroupTable>& catalog,
                                  int workers = 0);

}  // namespace troprep
