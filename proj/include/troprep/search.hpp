#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/group.hpp"
#include "troprep/matroid.hpp"
#include "troprep/orbit.hpp"

namespace troprep {

struct ContradictoryOptionsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  // Default mode: depth-first search over orbit in/out decisions with
  // unit propagation over implication rules and exchange clauses.
  bool use_pruning = true;
  // Exhaustive mode: test every nonempty orbit union through the matroid
  // kernel.  Incompatible with use_pruning.
  bool oracle_mode = false;
  // Refusal threshold for oracle mode (2^orbit_cap unions).
  int orbit_cap = 24;
  // Worker pool.  The task decomposition is fixed up front, so reports
  // and statistics are identical for every worker count.
  bool parallel = false;
  int threads = 0;  // 0 = hardware concurrency
};

// "All premise orbits present forces at least one conclusion orbit
// present" — the shape shared by every propagation fact the search uses.
struct ImplicationRule {
  std::vector<OrbitLabel> premise;     // 1 or 2 labels
  std::vector<OrbitLabel> conclusion;  // 1 or 2 labels, disjoint from premise
  std::string origin;                  // "product", "triple-exchange", "power", "half-pairing"
};

struct SearchStats {
  std::uint64_t candidates_visited = 0;
  std::uint64_t pruned = 0;
  std::uint64_t forced = 0;
  std::uint64_t rule_conflicts = 0;
  std::uint64_t exchange_conflicts = 0;
  std::uint64_t wall_ms = 0;
};

struct FamilyEntry {
  Mask orbit_set = 0;                    // bit i = orbit ordinal i included
  std::vector<OrbitLabel> orbit_labels;  // sorted
  std::uint64_t basis_count = 0;
  bool uniform = false;
  bool codim_one = false;                // all orbits but one
  std::vector<Mask> subgroups;           // every H with family == f_{G-H}
  std::vector<std::string> subgroup_names;
};

struct ClassificationReport {
  std::string group;  // descriptor of the group searched
  int dim = 0;
  std::vector<Orbit> orbits;
  std::vector<FamilyEntry> families;  // sorted by (orbit count, labels)
  SearchStats stats;
};

// Every matroidal union of G-orbits of d-subsets, i.e. the G-fixed
// tropical Plücker vectors of dimension d over the boolean semifield.
ClassificationReport enumerate_fixed_plucker(const GroupTable& g, int d,
                                             const SearchOptions& options = {});

// Propagation facts for d = 2: each product gh with gh outside
// {g, g^-1, h, h^-1} yields "f_gh present forces f_g or f_h present".
std::vector<ImplicationRule> dim2_implication_rules(const GroupTable& g);

// Propagation facts for d = 3: pair exchanges
// "f_{g,h} and f_{g',h'} force f_{g,g'} or f_{g,h'}" over distinct
// non-identity g, h, g', h'; power rules "f_{g,g^k} forces f_{g,g^2}";
// for cyclic groups of even order 2k > 4 the pairing
// "f_{u,ku} iff f_{u,(k+1)u}" in both directions.
std::vector<ImplicationRule> dim3_implication_rules(const GroupTable& g);

// For cyclic groups: the d = 3 orbits f_{u,2u} over units u, which lie in
// every matroidal family.  Used to seed the pruned search.
std::vector<OrbitLabel> mandatory_orbits_dim3_cyclic(int n);

// f_{G-H} as a basis family candidate.
BasisFamily subgroup_complement_family(const GroupTable& g, Mask h, int d);

// One codimension-one candidate over Z_n: all 3-subsets minus the orbit
// f_{u,ku}.
struct CodimOneCase {
  int unit = 0;
  int k = 0;
  OrbitLabel removed;
  bool predicted_matroid = false;  // k avoids (n+1)/2 (odd n), n/2 and n/2+1 (even n)
  bool actual_matroid = false;
  std::optional<ExchangeWitness> witness;  // engaged iff !actual_matroid
};

// All cases for unit u and 3 <= k <= n-2 (k = 2 and k = n-1 name the
// mandatory orbit f_{u,2u} and are excluded).
std::vector<CodimOneCase> codim_one_families_cyclic(int n);

}  // namespace troprep
