#include "troprep/matroid.hpp"

#include <algorithm>

namespace troprep {

namespace {

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int x : bits(m)) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

}  // namespace

BasisFamily BasisFamily::from_members(int ground_size, int d, std::vector<Mask> members) {
  if (ground_size < 0 || ground_size > kMaskBits) {
    throw std::invalid_argument("ground size must be between 0 and 64");
  }
  if (d < 0 || d > ground_size) {
    throw std::invalid_argument("basis size must be between 0 and the ground size");
  }
  Mask ground = ground_size == kMaskBits ? ~Mask{0} : bit(ground_size) - 1;
  for (Mask m : members) {
    if ((m & ~ground) != 0) {
      throw std::invalid_argument("member " + mask_str(m) + " leaves the ground set");
    }
    if (set_size(m) != d) {
      throw std::invalid_argument("member " + mask_str(m) + " does not have " +
                                  std::to_string(d) + " elements");
    }
  }
  std::sort(members.begin(), members.end(), lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  BasisFamily f;
  f.ground_size = ground_size;
  f.d = d;
  f.members = std::move(members);
  return f;
}

bool BasisFamily::contains(Mask m) const {
  return std::binary_search(members.begin(), members.end(), m, lex_less);
}

std::string ExchangeWitness::describe() const {
  if (empty_family) return "family is empty";
  std::string s = "A=" + mask_str(a) + " B=" + mask_str(b) + " x=" + std::to_string(x) +
                  " missing:";
  for (Mask m : failed_candidates) s += " " + mask_str(m);
  return s;
}

ExchangeVerdict is_basis_family(const BasisFamily& f) {
  if (f.members.empty()) {
    ExchangeWitness w;
    w.empty_family = true;
    return {false, w};
  }
  const int d = f.d;
  for (Mask a : f.members) {
    for (Mask b : f.members) {
      if (a == b) continue;
      if (set_size(a & b) >= d - 1) continue;  // swap rebuilds b; always fine
      Mask only_a = a & ~b;
      Mask only_b = b & ~a;
      for (int x : bits(only_a)) {
        Mask base = a & ~bit(x);
        bool ok = false;
        for (int y : bits(only_b)) {
          if (f.contains(base | bit(y))) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          ExchangeWitness w;
          w.a = a;
          w.b = b;
          w.x = x;
          for (int y : bits(only_b)) w.failed_candidates.push_back(base | bit(y));
          return {false, w};
        }
      }
    }
  }
  return {true, std::nullopt};
}

ExchangeVerdict check_strong_exchange(const BasisFamily& f) {
  if (f.members.empty()) {
    ExchangeWitness w;
    w.empty_family = true;
    return {false, w};
  }
  for (Mask a : f.members) {
    for (Mask b : f.members) {
      if (a == b) continue;
      if (set_size(a & b) >= f.d - 1) continue;  // the single swap yields b and a
      Mask only_a = a & ~b;
      Mask only_b = b & ~a;
      for (int x : bits(only_a)) {
        Mask base_a = a & ~bit(x);
        bool ok = false;
        for (int y : bits(only_b)) {
          if (f.contains(base_a | bit(y)) && f.contains((b & ~bit(y)) | bit(x))) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          ExchangeWitness w;
          w.a = a;
          w.b = b;
          w.x = x;
          for (int y : bits(only_b)) w.failed_candidates.push_back(base_a | bit(y));
          return {false, w};
        }
      }
    }
  }
  return {true, std::nullopt};
}

Matroid::Matroid(BasisFamily f) : family_(std::move(f)) {
  ExchangeVerdict v = is_basis_family(family_);
  if (!v.matroid) throw NotAMatroidError(std::move(*v.witness));
}

int Matroid::rank(Mask s) const {
  int best = 0;
  for (Mask m : family_.members) best = std::max(best, set_size(m & s));
  return best;
}

bool Matroid::uniform() const {
  return family_.members.size() ==
         binomial(family_.ground_size, family_.d);
}

std::vector<Mask> Matroid::cocircuits() const {
  const int n = family_.ground_size;
  const int d = family_.d;
  // Rank-(d-1) flats: closures of independent (d-1)-subsets.  A set is
  // independent iff it extends to a basis, i.e. rank == its size.
  std::vector<Mask> flats;
  for (Mask s : combinations(n, d - 1)) {
    if (rank(s) != d - 1) continue;
    Mask cl = s;
    for (int e = 0; e < n; ++e) {
      if (contains(s, e)) continue;
      if (rank(s | bit(e)) == d - 1) cl |= bit(e);
    }
    flats.push_back(cl);
  }
  std::sort(flats.begin(), flats.end(), lex_less);
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  Mask ground = n == kMaskBits ? ~Mask{0} : bit(n) - 1;
  std::vector<Mask> cocircs;
  cocircs.reserve(flats.size());
  for (Mask fl : flats) cocircs.push_back(ground & ~fl);
  std::sort(cocircs.begin(), cocircs.end(), lex_less);
  return cocircs;
}

int matroid_rank(const BasisFamily& f, Mask s) { return Matroid(f).rank(s); }

std::vector<Mask> matroid_cocircuits(const BasisFamily& f) { return Matroid(f).cocircuits(); }

bool is_uniform(const BasisFamily& f) { return Matroid(f).uniform(); }

}  // namespace troprep
