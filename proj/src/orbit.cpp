#include "troprep/orbit.hpp"

#include <algorithm>
#include <unordered_map>

namespace troprep {

std::string OrbitLabel::display(const GroupTable& g) const {
  std::string body;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) body += ",";
    body += g.name(key[i]);
  }
  if (key.size() == 1 && body.size() == 1) return "f_" + body;
  return "f_{" + body + "}";
}

Mask act(const GroupTable& g, int elem, Mask subset) {
  Mask out = 0;
  for (int x : bits(subset)) out |= bit(g.mul(elem, x));
  return out;
}

OrbitLabel difference_label(const GroupTable& g, Mask pair) {
  if (set_size(pair) != 2) {
    throw WrongCardinalityError("difference_label expects a 2-subset");
  }
  auto e = elements_of(pair);
  int d1 = g.mul(g.inv(e[0]), e[1]);
  int d2 = g.inv(d1);
  return OrbitLabel{{static_cast<std::uint16_t>(std::min(d1, d2))}};
}

OrbitLabel triple_label(const GroupTable& g, Mask triple) {
  if (set_size(triple) != 3) {
    throw WrongCardinalityError("triple_label expects a 3-subset");
  }
  auto e = elements_of(triple);
  std::uint16_t best_g = 0, best_h = 0;
  bool first = true;
  // Translate each element to the identity; both orders of the other two
  // give one of the six equivalent (g, h) pairs.
  for (int base = 0; base < 3; ++base) {
    int binv = g.inv(e[static_cast<std::size_t>(base)]);
    int p = g.mul(binv, e[static_cast<std::size_t>((base + 1) % 3)]);
    int q = g.mul(binv, e[static_cast<std::size_t>((base + 2) % 3)]);
    for (int swap = 0; swap < 2; ++swap) {
      int a = swap ? q : p;
      int b = swap ? p : q;
      if (first || a < best_g || (a == best_g && b < best_h)) {
        best_g = static_cast<std::uint16_t>(a);
        best_h = static_cast<std::uint16_t>(b);
        first = false;
      }
    }
  }
  return OrbitLabel{{best_g, best_h}};
}

OrbitLabel orbit_label(const GroupTable& g, int d, Mask member) {
  if (set_size(member) != d) {
    throw WrongCardinalityError("orbit_label: member has wrong cardinality");
  }
  if (d == 2) return difference_label(g, member);
  if (d == 3) return triple_label(g, member);
  // Generic label: least member of the orbit containing the identity.
  Mask best = 0;
  bool first = true;
  for (int x : bits(member)) {
    Mask t = act(g, g.inv(x), member);  // x^-1 · member contains e
    if (first || lex_less(t, best)) {
      best = t;
      first = false;
    }
  }
  OrbitLabel lbl;
  for (int x : bits(best)) lbl.key.push_back(static_cast<std::uint16_t>(x));
  return lbl;
}

std::vector<Orbit> orbit_partition(const GroupTable& g, int d,
                                   std::uint64_t universe_cap) {
  int n = g.order();
  if (n > kMaskBits) {
    throw CapExceededError("orbit operations require group order <= 64");
  }
  if (d < 1 || d > n) {
    throw UnsupportedDimensionError("orbit dimension must satisfy 1 <= d <= |G|");
  }
  if (binomial(n, d) > universe_cap) {
    throw CapExceededError("d-subset universe C(" + std::to_string(n) + "," +
                           std::to_string(d) + ") exceeds cap");
  }
  std::vector<Mask> universe = combinations(n, d);
  std::unordered_map<Mask, char> seen;
  seen.reserve(universe.size() * 2);
  std::vector<Orbit> orbits;
  for (Mask start : universe) {
    if (seen.count(start)) continue;
    // Flood the orbit; left translation by every group element.
    std::vector<Mask> members;
    std::vector<Mask> queue = {start};
    seen.emplace(start, 1);
    while (!queue.empty()) {
      Mask cur = queue.back();
      queue.pop_back();
      members.push_back(cur);
      for (int a = 0; a < n; ++a) {
        Mask t = act(g, a, cur);
        if (seen.emplace(t, 1).second) queue.push_back(t);
      }
    }
    std::sort(members.begin(), members.end(), lex_less);
    Orbit o;
    o.label = orbit_label(g, d, members.front());
    o.members = std::move(members);
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.label < b.label; });
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    orbits[i].index = static_cast<int>(i);
  }
  return orbits;
}

std::vector<Mask> orbit_union(const GroupTable& g, int d, Mask s) {
  int n = g.order();
  if (n > kMaskBits) {
    throw CapExceededError("orbit operations require group order <= 64");
  }
  if (contains(s, g.identity())) {
    throw WrongCardinalityError("orbit_union: S must not contain the identity");
  }
  std::vector<Mask> out;
  if (d == 2) {
    for (int a = 0; a < n; ++a) {
      for (int gg : bits(s)) {
        Mask m = bit(a) | bit(g.mul(a, gg));
        out.push_back(m);
      }
    }
  } else if (d == 3) {
    for (int a = 0; a < n; ++a) {
      for (int gg : bits(s)) {
        for (int hh : bits(s)) {
          if (gg == hh) continue;
          if (!contains(s, g.mul(g.inv(gg), hh))) continue;
          out.push_back(bit(a) | bit(g.mul(a, gg)) | bit(g.mul(a, hh)));
        }
      }
    }
  } else {
    throw UnsupportedDimensionError("orbit_union is defined for d in {2, 3}");
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace troprep
