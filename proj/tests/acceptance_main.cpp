// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion re-runs the relevant machinery from scratch and times it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "matroid_oracle.hpp"
#include "troprep/bits.hpp"
#include "troprep/group.hpp"
#include "troprep/io.hpp"
#include "troprep/matroid.hpp"
#include "troprep/orbit.hpp"
#include "troprep/search.hpp"
#include "troprep/theorems.hpp"

using namespace troprep;

namespace {

int failures = 0;
int criterion_no = 0;

void report(const std::string& what, bool ok, double ms, double limit_ms,
            const std::string& note = "") {
  ++criterion_no;
  const bool in_time = limit_ms <= 0 || ms <= limit_ms;
  const bool pass = ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %2d  %s (%.0f ms", pass ? "PASS" : "FAIL", criterion_no, what.c_str(), ms);
  if (limit_ms > 0) std::printf(", limit %.0f ms", limit_ms);
  std::printf(")%s%s\n", note.empty() ? "" : "  ", note.c_str());
  if (!ok) std::printf("      criterion body failed\n");
  if (!in_time) std::printf("      time limit exceeded\n");
}

double run_timed(const std::function<bool()>& body, bool& ok) {
  const auto t0 = std::chrono::steady_clock::now();
  ok = body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void criterion(const std::string& what, double limit_ms, const std::function<bool()>& body) {
  bool ok = false;
  double ms = 0;
  std::string note;
  try {
    ms = run_timed(body, ok);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  report(what, ok, ms, limit_ms, note);
}

bool check_passes(const std::string& id, const std::vector<GroupTable>& catalog) {
  TheoremCheck c = run_check(id, catalog);
  if (c.status != CheckStatus::pass) {
    std::printf("      %s: %s %s\n", c.id.c_str(), c.detail.c_str(),
                c.counterexample.c_str());
    return false;
  }
  return true;
}

bool families_agree(const ClassificationReport& a, const ClassificationReport& b) {
  if (a.families.size() != b.families.size()) return false;
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    if (a.families[i].orbit_set != b.families[i].orbit_set) return false;
    if (a.families[i].basis_count != b.families[i].basis_count) return false;
    if (a.families[i].subgroups != b.families[i].subgroups) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<GroupTable> catalog = default_catalog();

  criterion("Z_6 dim-3 classification matches the pinned family list", 1000, [&] {
    return check_passes("ex-Z6", catalog);
  });

  criterion("Z_7 dim-3 classification matches the pinned family list", 1000, [&] {
    return check_passes("ex-Z7", catalog);
  });

  criterion("S_3 dim-3 classification matches the pinned family list", 1000, [&] {
    return check_passes("ex-S3", catalog);
  });

  criterion("Q_8 dim-2 classification matches the pinned family list", 1000, [&] {
    return check_passes("ex-Q8", catalog);
  });

  criterion("dim-2 families are exactly the proper subgroup complements", 120000, [&] {
    return check_passes("thm-main", catalog);
  });

  criterion("every cyclic dim-3 family (n = 4..13) contains each f_{u,2u}", 600000, [&] {
    return check_passes("thm-3d", catalog);
  });

  criterion("single-orbit removals match the prediction for n = 5..13, both ways", 0, [&] {
    if (!check_passes("thm-3d2", catalog)) return false;
    // bidirectional at the case level: witnesses exactly where predicted
    for (int n = 6; n <= 13; ++n) {
      for (const CodimOneCase& c : codim_one_families_cyclic(n)) {
        if (c.predicted_matroid != c.actual_matroid) return false;
        if (c.witness.has_value() == c.actual_matroid) return false;
      }
    }
    return true;
  });

  criterion("some Z_13 dim-3 family excludes at least two orbits", 0, [&] {
    if (!check_passes("rem-Z13", catalog)) return false;
    ClassificationReport rep = enumerate_fixed_plucker(build_cyclic(13), 3);
    const int k = static_cast<int>(rep.orbits.size());
    for (const FamilyEntry& f : rep.families) {
      if (k - set_size(f.orbit_set) >= 2) return true;
    }
    return false;
  });

  criterion("pruned search equals exhaustive enumeration on every small case", 0, [&] {
    int cases = 0;
    for (const GroupTable& g : catalog) {
      for (int d = 2; d <= 3; ++d) {
        if (binomial(g.order(), d) == 0) continue;
        if (orbit_partition(g, d).size() > 16) continue;
        ClassificationReport pruned = enumerate_fixed_plucker(g, d);
        SearchOptions o;
        o.use_pruning = false;
        o.oracle_mode = true;
        ClassificationReport naive = enumerate_fixed_plucker(g, d, o);
        if (!families_agree(pruned, naive)) {
          std::printf("      mismatch at %s dim %d\n", g.descriptor().c_str(), d);
          return false;
        }
        ++cases;
      }
    }
    return cases == 34;
  });

  criterion("property suites: orbit identities, kernel oracle, strong exchange", 0, [&] {
    if (!check_passes("prop-orbit-1", catalog)) return false;
    if (!check_passes("prop-dim3orbit", catalog)) return false;
    // kernel vs independence-augmentation oracle on 1000 random families
    testing::SplitMix64 rng(0xacce91);
    int agreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(6));  // 3..8
      const int dmax = n < 4 ? n : 4;
      const int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dmax)));
      BasisFamily f = testing::random_family(rng, n, d);
      if (is_basis_family(f).matroid != testing::matroid_by_independence(f)) {
        std::printf("      oracle disagreement on trial %d\n", trial);
        return false;
      }
      ++agreements;
    }
    if (agreements != 1000) return false;
    // strong exchange on every family every feasible classification emits
    for (const GroupTable& g : catalog) {
      for (int d = 2; d <= 3; ++d) {
        if (binomial(g.order(), d) == 0) continue;
        if (orbit_partition(g, d).size() > static_cast<std::size_t>(kMaskBits)) continue;
        ClassificationReport rep = enumerate_fixed_plucker(g, d);
        for (const FamilyEntry& fam : rep.families) {
          std::vector<Mask> members;
          for (int o : bits(fam.orbit_set)) {
            const auto& om = rep.orbits[static_cast<std::size_t>(o)].members;
            members.insert(members.end(), om.begin(), om.end());
          }
          BasisFamily f = BasisFamily::from_members(g.order(), d, std::move(members));
          if (!check_strong_exchange(f).matroid) {
            std::printf("      strong exchange fails: %s dim %d\n", g.descriptor().c_str(), d);
            return false;
          }
        }
      }
    }
    return true;
  });

  criterion("byte-identical suite output across reruns and worker counts", 0, [&] {
    const std::string once = checks_json(run_all(catalog, 1));
    const std::string twice = checks_json(run_all(catalog, 1));
    const std::string wide = checks_json(run_all(catalog, 4));
    if (once != twice) {
      std::printf("      consecutive runs differ\n");
      return false;
    }
    if (once != wide) {
      std::printf("      worker counts change the output\n");
      return false;
    }
    // the same holds for individual classification documents
    for (const char* spec : {"Z:13", "D:6"}) {
      GroupTable g = parse_group_spec(spec);
      SearchOptions par;
      par.parallel = true;
      par.threads = 4;
      const std::string solo = classification_json(g, enumerate_fixed_plucker(g, 3));
      const std::string pooled = classification_json(g, enumerate_fixed_plucker(g, 3, par));
      if (solo != pooled) {
        std::printf("      classification differs for %s\n", spec);
        return false;
      }
    }
    return true;
  });

  std::printf("%d criteria: %d passed, %d failed\n", criterion_no, criterion_no - failures,
              failures);
  return failures == 0 ? 0 : 1;
}
