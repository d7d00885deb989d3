#include "troprep/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace troprep {

namespace {

std::uint16_t pair_key(const GroupTable& g, int diff) {
  return static_cast<std::uint16_t>(std::min(diff, g.inv(diff)));
}

// Cached d = 3 labels for {e, x, y}.
struct TripleLabels {
  int n;
  std::vector<OrbitLabel> tab;
  explicit TripleLabels(const GroupTable& g)
      : n(g.order()), tab(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    int e = g.identity();
    for (int x = 0; x < n; ++x) {
      if (x == e) continue;
      for (int y = 0; y < n; ++y) {
        if (y == e || y == x) continue;
        tab[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
            static_cast<std::size_t>(y)] = triple_label(g, bit(e) | bit(x) | bit(y));
      }
    }
  }
  const OrbitLabel& at(int x, int y) const {
    return tab[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(y)];
  }
};

struct RuleKey {
  std::vector<std::uint16_t> premise;
  std::vector<std::uint16_t> conclusion;
  bool operator<(const RuleKey& o) const {
    if (premise != o.premise) return premise < o.premise;
    return conclusion < o.conclusion;
  }
};

class RuleSink {
 public:
  void add(std::vector<OrbitLabel> premise, std::vector<OrbitLabel> conclusion,
           const char* origin) {
    std::sort(premise.begin(), premise.end());
    premise.erase(std::unique(premise.begin(), premise.end()), premise.end());
    std::sort(conclusion.begin(), conclusion.end());
    conclusion.erase(std::unique(conclusion.begin(), conclusion.end()), conclusion.end());
    for (const auto& c : conclusion) {
      if (std::find(premise.begin(), premise.end(), c) != premise.end()) return;
    }
    RuleKey key;
    for (const auto& l : premise) key.premise.insert(key.premise.end(), l.key.begin(), l.key.end());
    for (const auto& l : conclusion) {
      key.conclusion.insert(key.conclusion.end(), l.key.begin(), l.key.end());
    }
    if (!seen_.insert(key).second) return;
    rules_.push_back({std::move(premise), std::move(conclusion), origin});
  }
  std::vector<ImplicationRule> take() { return std::move(rules_); }

 private:
  std::set<RuleKey> seen_;
  std::vector<ImplicationRule> rules_;
};

int power(const GroupTable& g, int x, int k) {
  int r = g.identity();
  for (int i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

}  // namespace

std::vector<ImplicationRule> dim2_implication_rules(const GroupTable& g) {
  int n = g.order();
  if (n > kMaskBits) throw CapExceededError("implication rules require order <= 64");
  int e = g.identity();
  RuleSink sink;
  for (int a = 0; a < n; ++a) {
    if (a == e) continue;
    for (int b = 0; b < n; ++b) {
      if (b == e) continue;
      int c = g.mul(a, b);
      if (c == e) continue;
      std::uint16_t lc = pair_key(g, c), la = pair_key(g, a), lb = pair_key(g, b);
      if (lc == la || lc == lb) continue;  // f_ab already equals f_a or f_b
      sink.add({OrbitLabel{{lc}}}, {OrbitLabel{{la}}, OrbitLabel{{lb}}}, "product");
    }
  }
  return sink.take();
}

std::vector<ImplicationRule> dim3_implication_rules(const GroupTable& g) {
  int n = g.order();
  if (n > kMaskBits) throw CapExceededError("implication rules require order <= 64");
  int e = g.identity();
  RuleSink sink;
  if (n < 3) return sink.take();
  TripleLabels lbl(g);
  // Exchange between representatives {e,g,h} and {e,g',h'} with all four
  // translation parts distinct: some swap of h for a part of the other
  // member must stay in the family.
  for (int x = 0; x < n; ++x) {
    if (x == e) continue;
    for (int y = 0; y < n; ++y) {
      if (y == e || y == x) continue;
      for (int x2 = 0; x2 < n; ++x2) {
        if (x2 == e || x2 == x || x2 == y) continue;
        for (int y2 = 0; y2 < n; ++y2) {
          if (y2 == e || y2 == x || y2 == y || y2 == x2) continue;
          sink.add({lbl.at(x, y), lbl.at(x2, y2)}, {lbl.at(x, x2), lbl.at(x, y2)},
                   "triple-exchange");
        }
      }
    }
  }
  // Powers: the orbit of {e, g, g^k} forces the orbit of {e, g, g^2}.
  for (int x = 0; x < n; ++x) {
    if (x == e) continue;
    int m = g.element_order(x);
    if (m < 4) continue;
    const OrbitLabel& target = lbl.at(x, g.mul(x, x));
    for (int k = 3; k < m; ++k) {
      sink.add({lbl.at(x, power(g, x, k))}, {target}, "power");
    }
  }
  // Cyclic groups of even order 2k, k > 2: the orbits of {e, u, u^k} and
  // {e, u, u^{k+1}} appear together or not at all; record both directions.
  if (n >= 6 && n % 2 == 0 && g.cyclic_generator() >= 0) {
    for (int u = 0; u < n; ++u) {
      if (g.element_order(u) != n) continue;
      const OrbitLabel& l1 = lbl.at(u, power(g, u, n / 2));
      const OrbitLabel& l2 = lbl.at(u, power(g, u, n / 2 + 1));
      if (l1 == l2) continue;
      sink.add({l1}, {l2}, "half-pairing");
      sink.add({l2}, {l1}, "half-pairing");
    }
  }
  return sink.take();
}

std::vector<OrbitLabel> mandatory_orbits_dim3_cyclic(int n) {
  if (n < 4) throw std::invalid_argument("mandatory orbits need cyclic order >= 4");
  GroupTable g = build_cyclic(n);
  std::set<OrbitLabel> out;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    out.insert(triple_label(g, bit(0) | bit(u) | bit((2 * u) % n)));
  }
  return {out.begin(), out.end()};
}

BasisFamily subgroup_complement_family(const GroupTable& g, Mask h, int d) {
  if (!is_subgroup(g, h)) {
    throw GroupError("subgroup_complement_family: h is not a subgroup");
  }
  int n = g.order();
  Mask ground = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
  return BasisFamily::from_members(n, d, orbit_union(g, d, ground & ~h));
}

std::vector<CodimOneCase> codim_one_families_cyclic(int n) {
  if (n < 5) throw std::invalid_argument("codim-one sweep needs cyclic order >= 5");
  GroupTable g = build_cyclic(n);
  std::vector<Mask> universe = combinations(n, 3);
  std::vector<CodimOneCase> out;
  for (int u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    for (int k = 3; k <= n - 2; ++k) {
      CodimOneCase cs;
      cs.unit = u;
      cs.k = k;
      int ku = static_cast<int>((static_cast<long long>(k) * u) % n);
      Mask base = bit(0) | bit(u) | bit(ku);
      cs.removed = triple_label(g, base);
      std::vector<Mask> orbit;
      for (int a = 0; a < n; ++a) orbit.push_back(act(g, a, base));
      std::sort(orbit.begin(), orbit.end(), lex_less);
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      std::vector<Mask> members;
      std::set_difference(universe.begin(), universe.end(), orbit.begin(), orbit.end(),
                          std::back_inserter(members), lex_less);
      if (n % 2 == 1) {
        cs.predicted_matroid = k != (n + 1) / 2;
      } else {
        cs.predicted_matroid = k != n / 2 && k != n / 2 + 1;
      }
      ExchangeVerdict v = is_basis_family(BasisFamily::from_members(n, 3, std::move(members)));
      cs.actual_matroid = v.matroid;
      cs.witness = std::move(v.witness);
      out.push_back(std::move(cs));
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Search engine: in/out decisions over orbit ordinals with propagation
// over clauses "premise orbits all in => some conclusion orbit in".
// ---------------------------------------------------------------------

namespace {

struct Clause {
  Mask premise = 0;
  Mask conclusion = 0;
  bool from_rule = false;
};

struct SearchCore {
  int k = 0;
  Mask all = 0;
  std::vector<Clause> clauses;
  std::vector<std::vector<std::int32_t>> premise_watch;
  std::vector<std::vector<std::int32_t>> conclusion_watch;

  void index_watches() {
    premise_watch.assign(static_cast<std::size_t>(k), {});
    conclusion_watch.assign(static_cast<std::size_t>(k), {});
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
      for (int o : bits(clauses[ci].premise)) {
        premise_watch[static_cast<std::size_t>(o)].push_back(static_cast<std::int32_t>(ci));
      }
      for (int o : bits(clauses[ci].conclusion)) {
        conclusion_watch[static_cast<std::size_t>(o)].push_back(static_cast<std::int32_t>(ci));
      }
    }
  }
};

struct Worker {
  const SearchCore* core = nullptr;
  Mask in = 0;
  Mask out = 0;
  bool count_stats = true;
  std::vector<std::uint8_t> trail;
  SearchStats stats;
  std::vector<Mask> families;

  void set_orbit(int o, bool is_out) {
    (is_out ? out : in) |= bit(o);
    trail.push_back(static_cast<std::uint8_t>((o << 1) | (is_out ? 1 : 0)));
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      std::uint8_t rec = trail.back();
      trail.pop_back();
      Mask b = bit(rec >> 1);
      if (rec & 1) out &= ~b;
      else in &= ~b;
    }
  }

  // Assign one orbit and run unit propagation to fixpoint.  False means a
  // clause ran out of candidates, i.e. the current partial assignment
  // admits no matroidal completion.
  bool assign(int o, bool is_out) {
    std::size_t qi = trail.size();
    set_orbit(o, is_out);
    while (qi < trail.size()) {
      std::uint8_t rec = trail[qi++];
      int idx = rec >> 1;
      const auto& watch = (rec & 1) ? core->conclusion_watch[static_cast<std::size_t>(idx)]
                                    : core->premise_watch[static_cast<std::size_t>(idx)];
      for (std::int32_t ci : watch) {
        const Clause& c = core->clauses[static_cast<std::size_t>(ci)];
        if ((c.premise & in) != c.premise) continue;
        if (c.conclusion & in) continue;
        Mask open = c.conclusion & ~out;
        if (open == 0) {
          if (count_stats) {
            if (c.from_rule) ++stats.rule_conflicts;
            else ++stats.exchange_conflicts;
          }
          return false;
        }
        if ((open & (open - 1)) == 0) {
          if (count_stats) ++stats.forced;
          set_orbit(lowest(open), false);
        }
      }
    }
    return true;
  }

  void dfs() {
    Mask undecided = core->all & ~(in | out);
    if (undecided == 0) {
      if (in != 0) families.push_back(in);
      return;
    }
    int o = lowest(undecided);
    for (int pol = 0; pol < 2; ++pol) {  // in first, then out
      std::size_t mark = trail.size();
      ++stats.candidates_visited;
      if (assign(o, pol == 1)) dfs();
      else ++stats.pruned;
      undo(mark);
    }
  }
};

struct TaskOutcome {
  std::vector<Mask> families;
  SearchStats stats;
};

void accumulate(SearchStats& into, const SearchStats& from) {
  into.candidates_visited += from.candidates_visited;
  into.pruned += from.pruned;
  into.forced += from.forced;
  into.rule_conflicts += from.rule_conflicts;
  into.exchange_conflicts += from.exchange_conflicts;
}

// One task: apply a fixed in/out prefix over split[], then search the
// remainder.  An assignment shared by several tasks is counted only by
// the first task that makes it (suffix bits all zero), so totals match a
// single sequential walk of the same tree no matter how tasks are
// scheduled or how many workers run them.
TaskOutcome run_task(const Worker& root, const std::vector<int>& split, unsigned code) {
  Worker w = root;
  const int b = static_cast<int>(split.size());
  for (int j = 0; j < b; ++j) {
    int o = split[static_cast<std::size_t>(j)];
    bool want_out = (code >> (b - 1 - j)) & 1u;
    bool first_visitor = (code & ((1u << (b - 1 - j)) - 1u)) == 0;
    if (contains(w.in, o) || contains(w.out, o)) {
      // Decided by propagation: only the matching polarity's subtree is
      // real, and it is owned by the task that agrees with it.
      if (contains(w.out, o) != want_out) return {std::move(w.families), w.stats};
      continue;
    }
    w.count_stats = first_visitor;
    if (first_visitor) ++w.stats.candidates_visited;
    if (!w.assign(o, want_out)) {
      if (first_visitor) ++w.stats.pruned;
      return {std::move(w.families), w.stats};
    }
  }
  w.count_stats = true;
  w.dfs();
  return {std::move(w.families), w.stats};
}

std::vector<Mask> run_clause_search(const SearchCore& core, Worker root, int workers,
                                    SearchStats& stats) {
  root.trail.clear();
  root.stats = SearchStats{};
  root.families.clear();
  std::vector<int> split;
  for (int o : bits(core.all & ~(root.in | root.out))) {
    if (split.size() == 6) break;
    split.push_back(o);
  }
  const unsigned ntasks = 1u << split.size();
  std::vector<TaskOutcome> results(ntasks);
  std::atomic<unsigned> next{0};
  auto work = [&]() {
    for (;;) {
      unsigned t = next.fetch_add(1);
      if (t >= ntasks) break;
      results[t] = run_task(root, split, t);
    }
  };
  int nworkers = std::max(1, std::min(workers, static_cast<int>(ntasks)));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nworkers - 1));
  for (int i = 1; i < nworkers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<Mask> found;
  for (auto& r : results) {
    found.insert(found.end(), r.families.begin(), r.families.end());
    accumulate(stats, r.stats);
  }
  return found;
}

std::vector<Mask> run_oracle(const std::vector<Orbit>& orbits, int n, int d, int workers,
                             SearchStats& stats) {
  const int k = static_cast<int>(orbits.size());
  const std::uint64_t total = (Mask{1} << k) - 1;
  const std::uint64_t chunk = 4096;
  const std::uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<Mask>> results(nchunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::uint64_t t = next.fetch_add(1);
      if (t >= nchunks) break;
      std::uint64_t lo = t * chunk + 1;
      std::uint64_t hi = std::min(total, lo + chunk - 1);
      for (std::uint64_t m = lo; m <= hi; ++m) {
        std::vector<Mask> members;
        for (int o : bits(m)) {
          const auto& om = orbits[static_cast<std::size_t>(o)].members;
          members.insert(members.end(), om.begin(), om.end());
        }
        BasisFamily f = BasisFamily::from_members(n, d, std::move(members));
        if (is_basis_family(f).matroid) results[t].push_back(m);
      }
    }
  };
  int nworkers = workers;
  if (static_cast<std::uint64_t>(nworkers) > nchunks) nworkers = static_cast<int>(nchunks);
  if (nworkers < 1) nworkers = 1;
  std::vector<std::thread> pool;
  for (int i = 1; i < nworkers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  stats.candidates_visited += total;
  std::vector<Mask> found;
  for (auto& r : results) found.insert(found.end(), r.begin(), r.end());
  return found;
}

}  // namespace

ClassificationReport enumerate_fixed_plucker(const GroupTable& g, int d,
                                             const SearchOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  if (options.oracle_mode && options.use_pruning) {
    throw ContradictoryOptionsError(
        "oracle mode enumerates every union exhaustively; disable pruning");
  }
  ClassificationReport rep;
  rep.group = g.descriptor();
  rep.dim = d;
  rep.orbits = orbit_partition(g, d);
  const int k = static_cast<int>(rep.orbits.size());
  const int n = g.order();
  if (k > kMaskBits) {
    throw CapExceededError("orbit count " + std::to_string(k) + " exceeds the search cap 64");
  }
  // Mask{1} << k in the oracle needs k < kMaskBits even if someone raises the cap.
  const int oracle_cap = std::min(options.orbit_cap, kMaskBits - 1);
  if (options.oracle_mode && k > oracle_cap) {
    throw CapExceededError("oracle mode refuses " + std::to_string(k) +
                           " orbits (cap " + std::to_string(oracle_cap) + ")");
  }
  std::unordered_map<Mask, int> member_orbit;
  member_orbit.reserve(static_cast<std::size_t>(binomial(n, d)) * 2);
  for (int i = 0; i < k; ++i) {
    for (Mask m : rep.orbits[static_cast<std::size_t>(i)].members) member_orbit.emplace(m, i);
  }
  int workers = 1;
  if (options.parallel) {
    workers = options.threads > 0 ? options.threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
  }

  SearchStats stats;
  std::vector<Mask> found;
  if (options.oracle_mode) {
    found = run_oracle(rep.orbits, n, d, workers, stats);
  } else {
    SearchCore core;
    core.k = k;
    core.all = k == kMaskBits ? ~Mask{0} : bit(k) - 1;
    std::set<std::pair<Mask, Mask>> seen;
    auto add_clause = [&](Mask prem, Mask conc, bool from_rule) {
      if (conc & prem) return;  // satisfied whenever active
      if (!seen.insert({prem, conc}).second) return;
      core.clauses.push_back({prem, conc, from_rule});
    };
    std::map<OrbitLabel, int> ordinal_of;
    for (int i = 0; i < k; ++i) ordinal_of.emplace(rep.orbits[static_cast<std::size_t>(i)].label, i);
    if (options.use_pruning && (d == 2 || d == 3)) {
      auto rules = d == 2 ? dim2_implication_rules(g) : dim3_implication_rules(g);
      for (const auto& r : rules) {
        Mask prem = 0, conc = 0;
        for (const auto& l : r.premise) prem |= bit(ordinal_of.at(l));
        for (const auto& l : r.conclusion) conc |= bit(ordinal_of.at(l));
        add_clause(prem, conc, true);
      }
    }
    // Exchange clauses: by translation invariance it is enough to pin one
    // representative A per orbit and let B range over every member of the
    // partner orbit.  A union is matroidal exactly when it is nonempty
    // and violates none of these clauses.
    for (int p = 0; p < k; ++p) {
      Mask a = rep.orbits[static_cast<std::size_t>(p)].members.front();
      for (int q = 0; q < k; ++q) {
        for (Mask b : rep.orbits[static_cast<std::size_t>(q)].members) {
          if (b == a) continue;
          if (set_size(a & b) >= d - 1) continue;
          for (int x : bits(a & ~b)) {
            Mask base = a & ~bit(x);
            Mask conc = 0;
            for (int y : bits(b & ~a)) conc |= bit(member_orbit.at(base | bit(y)));
            add_clause(bit(p) | bit(q), conc, false);
          }
        }
      }
    }
    core.index_watches();

    Worker root;
    root.core = &core;
    bool seed_ok = true;
    if (options.use_pruning && d == 3 && n >= 4 && g.cyclic_generator() >= 0) {
      // Every matroidal family over a cyclic group contains the orbit of
      // {e, u, u^2} for each generator u; decide those up front.
      for (int u = 0; u < n && seed_ok; ++u) {
        if (g.element_order(u) != n) continue;
        OrbitLabel l = triple_label(g, bit(g.identity()) | bit(u) | bit(g.mul(u, u)));
        int o = ordinal_of.at(l);
        if (contains(root.in, o)) continue;
        if (!root.assign(o, false)) seed_ok = false;
      }
    }
    accumulate(stats, root.stats);
    if (seed_ok) found = run_clause_search(core, std::move(root), workers, stats);
  }

  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return lex_less(a, b);
  });

  // Which orbit sets are complements of subgroups?
  std::map<Mask, std::vector<Mask>> complement_subgroups;
  if (d == 2 || d == 3) {
    Mask ground = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
    for (Mask h : enumerate_subgroups(g)) {
      if (h == ground) continue;
      if (d == 3 && 2 * set_size(h) >= n) continue;  // index 2 leaves no valid triples
      Mask oset = 0;
      for (Mask m : orbit_union(g, d, ground & ~h)) oset |= bit(member_orbit.at(m));
      complement_subgroups[oset].push_back(h);
    }
  }

  const std::uint64_t full = binomial(n, d);
  for (Mask fm : found) {
    FamilyEntry fe;
    fe.orbit_set = fm;
    std::vector<Mask> members;
    for (int o : bits(fm)) {
      const Orbit& orb = rep.orbits[static_cast<std::size_t>(o)];
      fe.orbit_labels.push_back(orb.label);
      fe.basis_count += orb.members.size();
      members.insert(members.end(), orb.members.begin(), orb.members.end());
    }
    fe.uniform = fe.basis_count == full;
    fe.codim_one = set_size(fm) == k - 1;
    ExchangeVerdict v = is_basis_family(BasisFamily::from_members(n, d, std::move(members)));
    if (!v.matroid) {
      throw std::logic_error("internal error: search reported a non-matroidal union");
    }
    if (auto it = complement_subgroups.find(fm); it != complement_subgroups.end()) {
      fe.subgroups = it->second;
      for (Mask h : it->second) fe.subgroup_names.push_back(subgroup_name(g, h));
    }
    rep.families.push_back(std::move(fe));
  }
  rep.stats = stats;
  rep.stats.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  return rep;
}

}  // namespace troprep
