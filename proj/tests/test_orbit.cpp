#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "troprep/bits.hpp"
#include "troprep/group.hpp"
#include "troprep/orbit.hpp"

using namespace troprep;

namespace {

Mask mk(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

OrbitLabel key(std::initializer_list<int> xs) {
  OrbitLabel l;
  for (int x : xs) l.key.push_back(static_cast<std::uint16_t>(x));
  return l;
}

}  // namespace

TEST_CASE("left translation on subsets") {
  GroupTable z6 = build_cyclic(6);
  CHECK(act(z6, 2, mk({0, 1})) == mk({2, 3}));
  CHECK(act(z6, 5, mk({1, 2, 3})) == mk({0, 1, 2}));
  GroupTable d4 = build_dihedral(4);
  // σ·{e, ρ} = {σ, σρ}
  CHECK(act(d4, 4, mk({0, 1})) == mk({4, 5}));
  // action is a group action: (gh)·X = g·(h·X)
  for (int gidx = 0; gidx < 8; ++gidx) {
    for (int h = 0; h < 8; ++h) {
      CHECK(act(d4, d4.mul(gidx, h), mk({0, 3, 6})) ==
            act(d4, gidx, act(d4, h, mk({0, 3, 6}))));
    }
  }
}

TEST_CASE("pair labels") {
  GroupTable z6 = build_cyclic(6);
  CHECK(difference_label(z6, mk({0, 5})) == key({1}));  // 5 and 1 are inverse
  CHECK(difference_label(z6, mk({2, 4})) == key({2}));
  CHECK(difference_label(z6, mk({1, 4})) == key({3}));
  CHECK(difference_label(z6, mk({0, 5})).display(z6) == "f_1");

  GroupTable q8 = build_quaternion();
  CHECK(difference_label(q8, mk({2, 3})) == key({1}));  // {i,-i} has difference -1
  CHECK(difference_label(q8, mk({2, 3})).display(q8) == "f_{-1}");
  CHECK(difference_label(q8, mk({0, 2})).display(q8) == "f_i");

  CHECK_THROWS_AS(difference_label(z6, mk({0, 1, 2})), WrongCardinalityError);
}

TEST_CASE("triple labels and the six equivalent name pairs") {
  GroupTable z6 = build_cyclic(6);
  CHECK(triple_label(z6, mk({0, 1, 2})) == key({1, 2}));
  CHECK(triple_label(z6, mk({0, 2, 4})) == key({2, 4}));
  CHECK(triple_label(z6, mk({1, 3, 5})) == key({2, 4}));
  CHECK(triple_label(z6, mk({0, 1, 3})).display(z6) == "f_{1,3}");
  CHECK_THROWS_AS(triple_label(z6, mk({0, 1})), WrongCardinalityError);

  // {e, g, h} carries the same label under all six derived name pairs
  for (const char* spec : {"Z:12", "D:4", "Q8", "Z:2xZ:4", "S:3"}) {
    GroupTable g = parse_group_spec(spec);
    const int e = g.identity();
    for (int a = 0; a < g.order(); ++a) {
      if (a == e) continue;
      for (int b = 0; b < g.order(); ++b) {
        if (b == e || b == a) continue;
        const OrbitLabel l = triple_label(g, bit(e) | bit(a) | bit(b));
        const int ia = g.inv(a), ib = g.inv(b);
        CHECK(triple_label(g, bit(e) | bit(b) | bit(a)) == l);
        CHECK(triple_label(g, act(g, ia, bit(e) | bit(a) | bit(b))) == l);
        CHECK(triple_label(g, act(g, ib, bit(e) | bit(a) | bit(b))) == l);
      }
    }
  }
}

TEST_CASE("labels are constant on orbits and distinct across them") {
  for (const char* spec : {"Z:7", "Z:12", "D:4", "Q8", "S:3", "Z:2xZ:2"}) {
    GroupTable g = parse_group_spec(spec);
    for (int d = 2; d <= 3; ++d) {
      if (binomial(g.order(), d) == 0) continue;
      std::map<OrbitLabel, std::set<Mask>> classes;
      for (Mask m : combinations(g.order(), d)) {
        classes[orbit_label(g, d, m)].insert(m);
      }
      // each class is closed under the action and is a single orbit
      for (const auto& [label, members] : classes) {
        for (Mask m : members) {
          for (int a = 0; a < g.order(); ++a) {
            CHECK(members.count(act(g, a, m)) == 1);
          }
        }
        // transitivity: everything reachable from the first member
        std::set<Mask> reached;
        for (int a = 0; a < g.order(); ++a) reached.insert(act(g, a, *members.begin()));
        CHECK(reached == members);
      }
    }
  }
}

TEST_CASE("orbit partition: exact content for Z_6 in dimension 3") {
  GroupTable z6 = build_cyclic(6);
  std::vector<Orbit> orbits = orbit_partition(z6, 3);
  REQUIRE(orbits.size() == 4);
  CHECK(orbits[0].label == key({1, 2}));
  CHECK(orbits[1].label == key({1, 3}));
  CHECK(orbits[2].label == key({1, 4}));
  CHECK(orbits[3].label == key({2, 4}));
  CHECK(orbits[0].members == std::vector<Mask>{mk({0, 1, 2}), mk({0, 1, 5}), mk({0, 4, 5}),
                                               mk({1, 2, 3}), mk({2, 3, 4}), mk({3, 4, 5})});
  CHECK(orbits[1].members == std::vector<Mask>{mk({0, 1, 3}), mk({0, 2, 5}), mk({0, 3, 4}),
                                               mk({1, 2, 4}), mk({1, 4, 5}), mk({2, 3, 5})});
  CHECK(orbits[2].members == std::vector<Mask>{mk({0, 1, 4}), mk({0, 2, 3}), mk({0, 3, 5}),
                                               mk({1, 2, 5}), mk({1, 3, 4}), mk({2, 4, 5})});
  CHECK(orbits[3].members == std::vector<Mask>{mk({0, 2, 4}), mk({1, 3, 5})});
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    CHECK(orbits[i].index == static_cast<int>(i));
  }
}

TEST_CASE("orbit partition covers every d-subset exactly once") {
  const std::pair<const char*, std::pair<int, int>> table[] = {
      {"Z:4", {2, 1}},  {"Z:5", {2, 2}},  {"Z:6", {3, 4}},   {"Z:7", {3, 5}},
      {"Z:8", {4, 7}},  {"Z:9", {4, 10}}, {"Z:10", {5, 12}}, {"Z:11", {5, 15}},
      {"Z:12", {6, 19}}, {"Z:13", {6, 22}}, {"D:3", {4, 4}}, {"D:4", {6, 7}},
      {"D:5", {7, 12}}, {"D:6", {9, 19}}, {"Q8", {4, 7}},    {"S:3", {4, 4}},
      {"S:4", {16, 87}}, {"Z:2xZ:2", {3, 1}}, {"Z:2xZ:4", {5, 7}}};
  for (const auto& [spec, counts] : table) {
    GroupTable g = parse_group_spec(spec);
    for (int d = 2; d <= 3; ++d) {
      std::vector<Orbit> orbits = orbit_partition(g, d);
      const int expected = d == 2 ? counts.first : counts.second;
      CHECK(static_cast<int>(orbits.size()) == expected);
      std::set<Mask> seen;
      std::size_t total = 0;
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        const Orbit& o = orbits[i];
        CHECK(o.index == static_cast<int>(i));
        if (i > 0) CHECK(orbits[i - 1].label < o.label);
        CHECK(std::is_sorted(o.members.begin(), o.members.end(), lex_less));
        for (Mask m : o.members) {
          CHECK(orbit_label(g, d, m) == o.label);
          seen.insert(m);
        }
        total += o.members.size();
      }
      CHECK(total == binomial(g.order(), d));
      CHECK(seen.size() == total);
    }
  }
}

TEST_CASE("orbit sizes divide the group order") {
  for (const char* spec : {"Z:9", "Z:12", "D:6", "Q8", "S:3"}) {
    GroupTable g = parse_group_spec(spec);
    for (int d = 2; d <= 3; ++d) {
      for (const Orbit& o : orbit_partition(g, d)) {
        CHECK(static_cast<std::size_t>(g.order()) % o.size() == 0);
      }
    }
  }
}

TEST_CASE("generic label for other dimensions") {
  GroupTable z6 = build_cyclic(6);
  CHECK(orbit_label(z6, 4, mk({1, 2, 3, 4})) == key({0, 1, 2, 3}));
  CHECK(orbit_label(z6, 4, mk({0, 1, 3, 4})) == key({0, 1, 3, 4}));
  CHECK(orbit_label(z6, 1, mk({3})) == key({0}));
  CHECK(orbit_label(z6, 4, mk({0, 1, 2, 3})).display(z6) == "f_{0,1,2,3}");
  std::vector<Orbit> d4 = orbit_partition(z6, 4);
  std::size_t total = 0;
  for (const Orbit& o : d4) total += o.size();
  CHECK(total == binomial(6, 4));
  CHECK_THROWS_AS(orbit_label(z6, 3, mk({0, 1})), WrongCardinalityError);
}

TEST_CASE("orbit unions over element sets") {
  GroupTable z6 = build_cyclic(6);
  // S = {1, 5}: the 2-subsets with difference 1
  std::vector<Mask> u = orbit_union(z6, 2, mk({1, 5}));
  CHECK(u == std::vector<Mask>{mk({0, 1}), mk({0, 5}), mk({1, 2}), mk({2, 3}),
                               mk({3, 4}), mk({4, 5})});
  // S = complement of the subgroup {0, 3}: f_{1,2} together with f_{2,4}
  std::vector<Mask> s = orbit_union(z6, 3, mk({1, 2, 4, 5}));
  CHECK(s.size() == 8);
  std::vector<Orbit> orbits = orbit_partition(z6, 3);
  std::vector<Mask> expected = orbits[0].members;  // f_{1,2}
  expected.insert(expected.end(), orbits[3].members.begin(), orbits[3].members.end());
  std::sort(expected.begin(), expected.end(), lex_less);
  CHECK(s == expected);
  // full complement of the trivial subgroup: every 3-subset
  CHECK(orbit_union(z6, 3, mk({1, 2, 3, 4, 5})).size() == binomial(6, 3));

  CHECK_THROWS_AS(orbit_union(z6, 2, mk({0, 1})), WrongCardinalityError);
  CHECK_THROWS_AS(orbit_union(z6, 4, mk({1, 2})), UnsupportedDimensionError);
}

TEST_CASE("caps are enforced") {
  GroupTable s5 = build_symmetric(5);  // order 120
  CHECK_THROWS_AS(orbit_partition(s5, 2), CapExceededError);
  GroupTable z6 = build_cyclic(6);
  CHECK_THROWS_AS(orbit_partition(z6, 3, 10), CapExceededError);  // C(6,3)=20 > 10
  CHECK_THROWS_AS(orbit_partition(z6, 0), UnsupportedDimensionError);
  CHECK_THROWS_AS(orbit_partition(z6, 7), UnsupportedDimensionError);
}
