#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/bits.hpp"

namespace troprep {

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Validation failures name the offending row or triple in the message.
struct NotLatinSquareError : GroupError {
  using GroupError::GroupError;
};
struct NoIdentityError : GroupError {
  using GroupError::GroupError;
};
struct NoInverseError : GroupError {
  using GroupError::GroupError;
};
struct NotAssociativeError : GroupError {
  using GroupError::GroupError;
};
struct OrderCapError : GroupError {
  using GroupError::GroupError;
};
// Malformed group spec strings / Cayley files.
struct GroupSpecError : GroupError {
  using GroupError::GroupError;
};

// A finite group as a validated multiplication table over element indices
// 0..n-1.  Construction checks the full group axioms (Latin square,
// two-sided identity, inverses, associativity) and fails loudly otherwise.
class GroupTable {
 public:
  // Tables themselves may go up to S_6; bitset-based operations
  // (subgroups, orbits, search) additionally require order <= 64.
  static constexpr int kTableCap = 720;

  GroupTable(std::vector<std::uint16_t> mul_flat, std::vector<std::string> names,
             std::string descriptor);

  // rows: raw[a][b] = index of a*b.  Empty names => "g0", "g1", ...
  static GroupTable from_cayley(const std::vector<std::vector<int>>& raw,
                                std::vector<std::string> names = {},
                                std::string descriptor = "cayley");

  int order() const { return n_; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::string& descriptor() const { return descriptor_; }

  int element_order(int a) const;
  bool is_abelian() const;
  // Index of some generator if the group is cyclic, else -1.
  int cyclic_generator() const;

 private:
  void validate() const;

  int n_ = 0;
  int identity_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::string> names_;
  std::string descriptor_;
};

// Standard constructions.  Element naming follows the usual presentations:
// cyclic groups use residues "0".."n-1", dihedral groups use e, ρ^i, σρ^i,
// the quaternion group uses ±1, ±i, ±j, ±k, and symmetric groups use
// one-line notation over 1..n.
GroupTable build_cyclic(int n);
GroupTable build_dihedral(int n);  // order 2n, n >= 1
GroupTable build_quaternion();     // Q_8
GroupTable build_symmetric(int n); // 1 <= n <= 6
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          int order_cap = kMaskBits);

// "Z:n", "D:n", "S:n", "Q8", direct products joined with "x"
// (e.g. "Z:2xZ:4"), or "file:PATH" for a Cayley table file.
GroupTable parse_group_spec(const std::string& spec, int order_cap = kMaskBits);

// Cayley table file: first line n, then n rows of n indices; an optional
// final line "names: a b c ..." assigns display names.
GroupTable read_cayley_stream(std::istream& in, std::string descriptor = "cayley");
GroupTable read_cayley_file(const std::string& path);

// ---- Subgroups (order <= 64; sets are element bit masks) ----

// Smallest subgroup containing seed (closure under product and inverse).
Mask subgroup_closure(const GroupTable& g, Mask seed);
bool is_subgroup(const GroupTable& g, Mask h);
// Every subgroup, sorted by (order, index sequence).
std::vector<Mask> enumerate_subgroups(const GroupTable& g);
// Index-least minimal generating set; empty for the trivial subgroup.
std::vector<int> minimal_generators(const GroupTable& g, Mask h);
// "⟨σ,ρ^2⟩" style display name; the trivial subgroup shows its identity.
std::string subgroup_name(const GroupTable& g, Mask h);

}  // namespace troprep
