#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace troprep {

// Element sets and d-subsets are bit masks over group element indices.
// All set-valued machinery in the library lives below 64 elements; group
// tables themselves may be larger (see GroupTable::kTableCap).
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr bool contains(Mask m, int i) { return (m >> i) & Mask{1}; }

constexpr int set_size(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

// Lexicographic order on the ascending index sequence of each mask, so
// {0,1,5} sorts before {0,2,3} even though its numeric value is larger.
// A strict prefix sorts before its extensions.
constexpr bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int i = std::countr_zero(a);
    int j = std::countr_zero(b);
    if (i != j) return i < j;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(set_size(m)));
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

// Iterate set bits: for (int e : bits(mask)) { ... }
class bits {
 public:
  explicit constexpr bits(Mask m) : m_(m) {}
  class iterator {
   public:
    explicit constexpr iterator(Mask m) : m_(m) {}
    constexpr int operator*() const { return std::countr_zero(m_); }
    constexpr iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return m_ != o.m_; }
   private:
    Mask m_;
  };
  constexpr iterator begin() const { return iterator(m_); }
  constexpr iterator end() const { return iterator(0); }
 private:
  Mask m_;
};

// C(n, k) for n <= 64; every such value fits in 64 bits.
constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiply/divide in an order that keeps intermediates integral.
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(acc);
}

// All d-subsets of {0..n-1} in lexicographic order of their index
// sequences (consistent with lex_less).
inline std::vector<Mask> combinations(int n, int d) {
  std::vector<Mask> out;
  if (d < 0 || d > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, d)));
  if (d == 0) {
    out.push_back(0);
    return out;
  }
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= bit(v);
    out.push_back(m);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

}  // namespace troprep
