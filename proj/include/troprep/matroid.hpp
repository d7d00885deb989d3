#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/bits.hpp"

namespace troprep {

// A candidate basis family: a set of d-subsets of {0..n-1}, held sorted by
// lex_less.  Whether it actually satisfies basis exchange is a separate
// question answered by is_basis_family below.
struct BasisFamily {
  int ground_size = 0;
  int d = 0;
  std::vector<Mask> members;

  static BasisFamily from_members(int ground_size, int d, std::vector<Mask> members);
  bool contains(Mask m) const;
  std::size_t size() const { return members.size(); }
};

// Concrete refutation of basis exchange: removing x from a admits no
// replacement from b \ a.  For the empty family, empty_family is set and
// the other fields are meaningless.
struct ExchangeWitness {
  Mask a = 0;
  Mask b = 0;
  int x = -1;
  std::vector<Mask> failed_candidates;  // a - x + y for each y in b \ a
  bool empty_family = false;

  std::string describe() const;  // index-set rendering, no group names
};

struct ExchangeVerdict {
  bool matroid = false;
  std::optional<ExchangeWitness> witness;  // engaged iff !matroid
};

struct NotAMatroidError : std::runtime_error {
  explicit NotAMatroidError(ExchangeWitness w)
      : std::runtime_error("family fails basis exchange: " + w.describe()),
        witness(std::move(w)) {}
  ExchangeWitness witness;
};

// Basis-exchange check.  Pairs (A, B) are scanned in lexicographic order
// of (A, B, x) over the sorted member list and the first failure is
// reported, so the witness is deterministic.  Pairs with |A∩B| = d-1 are
// skipped: there the single swap rebuilds B itself, which is present.
ExchangeVerdict is_basis_family(const BasisFamily& f);

// Symmetric (strong) exchange: some y works simultaneously for A-x+y and
// B-y+x.  For families of G-orbit unions this is a consequence of the
// plain exchange property; the check makes that observable.
ExchangeVerdict check_strong_exchange(const BasisFamily& f);

// A verified matroid: construction runs is_basis_family and throws
// NotAMatroidError (carrying the witness) if it fails.
class Matroid {
 public:
  explicit Matroid(BasisFamily f);

  const BasisFamily& bases() const { return family_; }
  int rank() const { return family_.d; }
  int rank(Mask s) const;  // max |m ∩ s| over bases m
  bool uniform() const;
  // Complements of the rank-(d-1) flats, sorted by lex_less.
  std::vector<Mask> cocircuits() const;

 private:
  BasisFamily family_;
};

// Convenience wrappers; each verifies the family first and throws
// NotAMatroidError when it is not a matroid.
int matroid_rank(const BasisFamily& f, Mask s);
std::vector<Mask> matroid_cocircuits(const BasisFamily& f);
bool is_uniform(const BasisFamily& f);

}  // namespace troprep
