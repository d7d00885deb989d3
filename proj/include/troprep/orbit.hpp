#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/bits.hpp"
#include "troprep/group.hpp"

namespace troprep {

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WrongCardinalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical name of a G-orbit of d-subsets under left translation.
//
// d = 2: the orbit of {a, ag} is f_g; the canonical key is
//        min(index(g), index(g^-1)), a single entry.
// d = 3: the orbit of {a, ag, ah} is f_{g,h}; the six ordered pairs
//        (g,h), (h,g), (g^-1, g^-1 h), (g^-1 h, g^-1), (h^-1, h^-1 g),
//        (h^-1 g, h^-1) name the same orbit, and the key is the
//        lexicographically least of them.
// other d: the key is the index sequence of the lexicographically least
//        member that contains the identity.
struct OrbitLabel {
  std::vector<std::uint16_t> key;

  bool operator==(const OrbitLabel& o) const { return key == o.key; }
  bool operator!=(const OrbitLabel& o) const { return key != o.key; }
  bool operator<(const OrbitLabel& o) const { return key < o.key; }

  // Display form, e.g. "f_3", "f_{1,2}", "f_{σρ}", "f_{0,1,2,4}".
  std::string display(const GroupTable& g) const;
};

struct Orbit {
  OrbitLabel label;
  std::vector<Mask> members;  // sorted by lex_less
  int index = 0;              // ordinal within the sorted partition
  std::size_t size() const { return members.size(); }
};

// Left translation g·X element-wise.
Mask act(const GroupTable& g, int elem, Mask subset);

// Canonical labels from a single member.
OrbitLabel difference_label(const GroupTable& g, Mask pair);    // d = 2
OrbitLabel triple_label(const GroupTable& g, Mask triple);      // d = 3
OrbitLabel orbit_label(const GroupTable& g, int d, Mask member);

inline constexpr std::uint64_t kDefaultUniverseCap = 1'000'000;

// Partition of all d-subsets of G into left-translation orbits, sorted by
// canonical label.  Requires order <= 64 and C(|G|, d) within the cap.
std::vector<Orbit> orbit_partition(const GroupTable& g, int d,
                                   std::uint64_t universe_cap = kDefaultUniverseCap);

// f_S for a set S of non-identity elements: for d = 2 the union of f_g
// over g in S, for d = 3 the union of f_{g,h} over pairs with g, h and
// g^-1 h all in S.  Members are returned sorted; other d are rejected.
std::vector<Mask> orbit_union(const GroupTable& g, int d, Mask s);

}  // namespace troprep
