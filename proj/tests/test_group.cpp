#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "troprep/bits.hpp"
#include "troprep/group.hpp"

using namespace troprep;

namespace {

// every group axiom, brute force, independent of GroupTable::validate
void check_axioms(const GroupTable& g) {
  const int n = g.order();
  const int e = g.identity();
  for (int a = 0; a < n; ++a) {
    CHECK(g.mul(e, a) == a);
    CHECK(g.mul(a, e) == a);
    CHECK(g.mul(a, g.inv(a)) == e);
    CHECK(g.mul(g.inv(a), a) == e);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      }
    }
  }
}

// exhaustive subgroup listing over all subsets; only for tiny groups
std::vector<Mask> subgroups_by_force(const GroupTable& g) {
  const int n = g.order();
  std::vector<Mask> out;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    if (!contains(s, g.identity())) continue;
    bool closed = true;
    for (int a : bits(s)) {
      if (!contains(s, g.inv(a))) closed = false;
      for (int b : bits(s)) {
        if (!contains(s, g.mul(a, b))) closed = false;
      }
      if (!closed) break;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

std::vector<int> sorted_orders(const GroupTable& g, const std::vector<Mask>& subs) {
  (void)g;
  std::vector<int> orders;
  for (Mask h : subs) orders.push_back(set_size(h));
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("cyclic groups") {
  for (int n : {1, 2, 3, 6, 13}) {
    GroupTable g = build_cyclic(n);
    CHECK(g.order() == n);
    CHECK(g.descriptor() == "Z:" + std::to_string(n));
    check_axioms(g);
    CHECK(g.is_abelian());
    CHECK(g.cyclic_generator() >= 0);
    for (int a = 0; a < n; ++a) {
      CHECK(g.mul(a, 1 % n) == (a + 1) % n);
      CHECK(g.name(a) == std::to_string(a));
    }
  }
  GroupTable z12 = build_cyclic(12);
  const int expected_order[12] = {1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12};
  for (int a = 0; a < 12; ++a) CHECK(z12.element_order(a) == expected_order[a]);
  CHECK_THROWS_AS(build_cyclic(0), OrderCapError);
  CHECK_THROWS_AS(build_cyclic(100000), OrderCapError);
}

TEST_CASE("dihedral groups") {
  GroupTable d4 = build_dihedral(4);
  CHECK(d4.order() == 8);
  check_axioms(d4);
  CHECK(!d4.is_abelian());
  CHECK(d4.cyclic_generator() == -1);
  CHECK(d4.name(0) == "e");
  CHECK(d4.name(1) == "ρ");
  CHECK(d4.name(3) == "ρ^3");
  CHECK(d4.name(4) == "σ");
  CHECK(d4.name(7) == "σρ^3");
  // σ ρ σ = ρ^{-1}
  const int rho = 1, sigma = 4;
  CHECK(d4.mul(d4.mul(sigma, rho), sigma) == d4.inv(rho));
  CHECK(d4.element_order(sigma) == 2);
  CHECK(d4.element_order(rho) == 4);
  check_axioms(build_dihedral(1));  // order 2
  check_axioms(build_dihedral(6));
}

TEST_CASE("quaternion group") {
  GroupTable q = build_quaternion();
  CHECK(q.order() == 8);
  check_axioms(q);
  CHECK(!q.is_abelian());
  const int one = 0, minus = 1, i = 2, j = 4, k = 6;
  CHECK(q.identity() == one);
  CHECK(q.name(minus) == "-1");
  CHECK(q.name(i) == "i");
  CHECK(q.name(7) == "-k");
  CHECK(q.mul(i, i) == minus);
  CHECK(q.mul(j, j) == minus);
  CHECK(q.mul(k, k) == minus);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == q.inv(k));
  CHECK(q.element_order(minus) == 2);
  CHECK(q.element_order(i) == 4);
}

TEST_CASE("symmetric groups") {
  GroupTable s3 = build_symmetric(3);
  CHECK(s3.order() == 6);
  check_axioms(s3);
  CHECK(s3.name(0) == "123");
  CHECK(s3.name(5) == "321");
  CHECK(!s3.is_abelian());
  GroupTable s4 = build_symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(s4.identity() == 0);
  CHECK_THROWS_AS(build_symmetric(0), OrderCapError);
  CHECK_THROWS_AS(build_symmetric(7), OrderCapError);
}

TEST_CASE("direct products") {
  GroupTable z2z4 = direct_product(build_cyclic(2), build_cyclic(4));
  CHECK(z2z4.order() == 8);
  CHECK(z2z4.descriptor() == "Z:2xZ:4");
  check_axioms(z2z4);
  CHECK(z2z4.is_abelian());
  CHECK(z2z4.cyclic_generator() == -1);
  CHECK(z2z4.name(0) == "(0,0)");
  CHECK(z2z4.name(5) == "(1,1)");

  GroupTable z6 = direct_product(build_cyclic(2), build_cyclic(3));
  CHECK(z6.cyclic_generator() >= 0);  // Z_2 x Z_3 is cyclic of order 6

  CHECK_THROWS_AS(direct_product(build_cyclic(10), build_cyclic(10)), OrderCapError);
}

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("Z:6").order() == 6);
  CHECK(parse_group_spec("D:4").order() == 8);
  CHECK(parse_group_spec("Q8").descriptor() == "Q8");
  CHECK(parse_group_spec("S:4").order() == 24);
  CHECK(parse_group_spec("Z:2xZ:2xZ:2").order() == 8);
  CHECK(parse_group_spec("Z:2xQ8").order() == 16);

  CHECK_THROWS_AS(parse_group_spec(""), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("A:5"), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("Z:abc"), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("Z:"), GroupSpecError);
  CHECK_THROWS_AS(parse_group_spec("Z:65"), OrderCapError);      // default cap 64
  CHECK(parse_group_spec("Z:65", 128).order() == 65);            // raised cap
  CHECK_THROWS_AS(parse_group_spec("Z:8xZ:9"), OrderCapError);   // 72 > 64
  CHECK_THROWS_AS(parse_group_spec("file:/nonexistent/table"), GroupSpecError);
}

TEST_CASE("cayley table parsing") {
  std::istringstream good(
      "# Klein four group\n"
      "4\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n"
      "names: e a b ab\n");
  GroupTable g = read_cayley_stream(good);
  CHECK(g.order() == 4);
  CHECK(g.name(3) == "ab");
  CHECK(g.is_abelian());
  check_axioms(g);

  std::istringstream no_names("2\n0 1\n1 0\n");
  GroupTable h = read_cayley_stream(no_names);
  CHECK(h.name(0) == "g0");
  CHECK(h.name(1) == "g1");

  std::istringstream empty("");
  CHECK_THROWS_AS(read_cayley_stream(empty), GroupSpecError);
  std::istringstream junk("junk\n");
  CHECK_THROWS_AS(read_cayley_stream(junk), GroupSpecError);
  std::istringstream short_rows("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_cayley_stream(short_rows), GroupSpecError);
  std::istringstream ragged("2\n0 1\n1 0 0\n");
  CHECK_THROWS_AS(read_cayley_stream(ragged), GroupSpecError);
  std::istringstream wrong_names("2\n0 1\n1 0\nnames: only_one\n");
  CHECK_THROWS_AS(read_cayley_stream(wrong_names), GroupSpecError);
}

TEST_CASE("table validation names the offending entries") {
  // row 1 repeats 1: not a Latin square
  CHECK_THROWS_WITH_AS(GroupTable::from_cayley({{0, 1}, {1, 1}}),
                       "row 1 repeats value 1", NotLatinSquareError);
  // column repeat
  CHECK_THROWS_AS(GroupTable::from_cayley({{0, 1, 2}, {2, 0, 1}, {2, 1, 0}}),
                  NotLatinSquareError);
  // entry out of range
  CHECK_THROWS_AS(GroupTable::from_cayley({{0, 5}, {1, 0}}), NotLatinSquareError);
  // idempotent Latin square (x*x = x): no row is the identity row
  CHECK_THROWS_AS(GroupTable::from_cayley({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}),
                  NoIdentityError);
  // Latin square, two-sided identity and inverses, but no associativity
  CHECK_THROWS_WITH_AS(GroupTable::from_cayley({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 4, 0, 1, 3},
                                                {3, 2, 4, 0, 1},
                                                {4, 3, 1, 2, 0}}),
                       "associativity fails at triple (1,1,2)", NotAssociativeError);
  // Latin square with identity where element 2 has one-sided inverses only
  CHECK_THROWS_WITH_AS(GroupTable::from_cayley({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 1, 2, 0},
                                                {4, 2, 0, 1, 3}}),
                       "element 2 has no inverse", NoInverseError);
}

TEST_CASE("subgroup enumeration matches brute force on small groups") {
  for (const char* spec : {"Z:6", "Z:8", "D:4", "Q8", "Z:2xZ:2", "S:3"}) {
    GroupTable g = parse_group_spec(spec);
    std::vector<Mask> fast = enumerate_subgroups(g);
    std::vector<Mask> slow = subgroups_by_force(g);
    std::set<Mask> fast_set(fast.begin(), fast.end());
    std::set<Mask> slow_set(slow.begin(), slow.end());
    CHECK(fast_set == slow_set);
    CHECK(fast.size() == slow.size());
    // sorted by (order, index sequence)
    for (std::size_t i = 1; i < fast.size(); ++i) {
      const int s0 = set_size(fast[i - 1]), s1 = set_size(fast[i]);
      CHECK((s0 < s1 || (s0 == s1 && lex_less(fast[i - 1], fast[i]))));
    }
  }
}

TEST_CASE("subgroup counts for the named groups") {
  CHECK(sorted_orders(build_cyclic(12), enumerate_subgroups(build_cyclic(12))) ==
        std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(sorted_orders(build_quaternion(), enumerate_subgroups(build_quaternion())) ==
        std::vector<int>{1, 2, 4, 4, 4, 8});
  CHECK(sorted_orders(build_dihedral(4), enumerate_subgroups(build_dihedral(4))) ==
        std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4, 4, 8});
  // D_5: trivial, five reflections, the rotation subgroup, the whole group
  CHECK(sorted_orders(build_dihedral(5), enumerate_subgroups(build_dihedral(5))) ==
        std::vector<int>{1, 2, 2, 2, 2, 2, 5, 10});
  GroupTable klein = parse_group_spec("Z:2xZ:2");
  CHECK(sorted_orders(klein, enumerate_subgroups(klein)) ==
        std::vector<int>{1, 2, 2, 2, 4});
}

TEST_CASE("subgroup closure, membership, generators, names") {
  GroupTable d4 = build_dihedral(4);
  const Mask rotations = subgroup_closure(d4, bit(1));
  CHECK(rotations == (bit(0) | bit(1) | bit(2) | bit(3)));
  CHECK(is_subgroup(d4, rotations));
  CHECK(!is_subgroup(d4, bit(1) | bit(2)));  // no identity
  CHECK(!is_subgroup(d4, bit(0) | bit(1)));  // not closed

  CHECK(minimal_generators(d4, bit(0)).empty());
  CHECK(subgroup_name(d4, bit(0)) == "⟨e⟩");
  CHECK(subgroup_name(d4, rotations) == "⟨ρ⟩");
  const Mask klein = bit(0) | bit(2) | bit(4) | bit(6);  // {e, ρ^2, σ, σρ^2}
  CHECK(is_subgroup(d4, klein));
  CHECK(minimal_generators(d4, klein) == std::vector<int>{2, 4});
  CHECK(subgroup_name(d4, klein) == "⟨ρ^2,σ⟩");
  CHECK_THROWS_AS(minimal_generators(d4, bit(0) | bit(1)), GroupError);

  GroupTable z6 = build_cyclic(6);
  CHECK(subgroup_name(z6, bit(0)) == "⟨0⟩");
  CHECK(subgroup_name(z6, bit(0) | bit(2) | bit(4)) == "⟨2⟩");
  CHECK(subgroup_closure(z6, bit(5)) == (bit(0) | bit(1) | bit(2) | bit(3) | bit(4) | bit(5)));
}

TEST_CASE("subgroup machinery refuses tables above the mask width") {
  GroupTable s5 = build_symmetric(5);  // order 120: table fine, masks not
  CHECK(s5.order() == 120);
  CHECK_THROWS_AS(enumerate_subgroups(s5), OrderCapError);
  CHECK_THROWS_AS(subgroup_closure(s5, bit(1)), OrderCapError);
}
