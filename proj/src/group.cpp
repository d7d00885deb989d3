#include "troprep/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace troprep {

namespace {

std::string default_name(int i) { return "g" + std::to_string(i); }

std::string power_name(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

GroupTable::GroupTable(std::vector<std::uint16_t> mul_flat,
                       std::vector<std::string> names, std::string descriptor)
    : mul_(std::move(mul_flat)), names_(std::move(names)),
      descriptor_(std::move(descriptor)) {
  std::size_t sz = mul_.size();
  int n = static_cast<int>(names_.size());
  if (n == 0 || static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != sz) {
    throw GroupSpecError("multiplication table is not square");
  }
  if (n > kTableCap) {
    throw OrderCapError("group order " + std::to_string(n) + " exceeds table cap " +
                        std::to_string(kTableCap));
  }
  n_ = n;
  validate();  // sets identity_ via const_cast-free two-phase: see below
  // validate() found the identity; recompute it here for the member.
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int a = 0; a < n_; ++a) {
      if (mul(e, a) != a || mul(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity_ = e;
      break;
    }
  }
  inv_.assign(static_cast<std::size_t>(n_), 0);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        inv_[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
}

void GroupTable::validate() const {
  // Entries in range + Latin square.
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> row(static_cast<std::size_t>(n_), false);
    std::vector<bool> col(static_cast<std::size_t>(n_), false);
    for (int b = 0; b < n_; ++b) {
      int rv = mul(a, b);
      int cv = mul(b, a);
      if (rv >= n_ || cv >= n_) {
        throw NotLatinSquareError("table entry out of range in row " + std::to_string(a));
      }
      if (row[static_cast<std::size_t>(rv)]) {
        throw NotLatinSquareError("row " + std::to_string(a) + " repeats value " +
                                  std::to_string(rv));
      }
      if (col[static_cast<std::size_t>(cv)]) {
        throw NotLatinSquareError("column " + std::to_string(a) + " repeats value " +
                                  std::to_string(cv));
      }
      row[static_cast<std::size_t>(rv)] = true;
      col[static_cast<std::size_t>(cv)] = true;
    }
  }
  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n_ && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n_; ++a) {
      if (mul(e, a) != a || mul(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) identity = e;
  }
  if (identity < 0) throw NoIdentityError("no two-sided identity element");
  // Inverses.
  for (int a = 0; a < n_; ++a) {
    bool ok = false;
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == identity && mul(b, a) == identity) {
        ok = true;
        break;
      }
    }
    if (!ok) throw NoInverseError("element " + std::to_string(a) + " has no inverse");
  }
  // Associativity, the O(n^3) way; fine at the orders we accept.
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n_; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw NotAssociativeError("associativity fails at triple (" + std::to_string(a) +
                                    "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

GroupTable GroupTable::from_cayley(const std::vector<std::vector<int>>& raw,
                                   std::vector<std::string> names,
                                   std::string descriptor) {
  std::size_t n = raw.size();
  if (n == 0) throw GroupSpecError("empty Cayley table");
  std::vector<std::uint16_t> flat;
  flat.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (raw[a].size() != n) {
      throw GroupSpecError("Cayley row " + std::to_string(a) + " has wrong length");
    }
    for (std::size_t b = 0; b < n; ++b) {
      int v = raw[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw NotLatinSquareError("table entry out of range in row " + std::to_string(a));
      }
      flat.push_back(static_cast<std::uint16_t>(v));
    }
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(default_name(static_cast<int>(i)));
  }
  if (names.size() != n) throw GroupSpecError("name list length does not match order");
  return GroupTable(std::move(flat), std::move(names), std::move(descriptor));
}

int GroupTable::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

int GroupTable::cyclic_generator() const {
  for (int a = 0; a < n_; ++a) {
    if (element_order(a) == n_) return a;
  }
  return -1;
}

GroupTable build_cyclic(int n) {
  if (n < 1 || n > GroupTable::kTableCap) {
    throw OrderCapError("cyclic order out of range: " + std::to_string(n));
  }
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    names[static_cast<std::size_t>(a)] = std::to_string(a);
    for (int b = 0; b < n; ++b) {
      flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(b)] = static_cast<std::uint16_t>((a + b) % n);
    }
  }
  return GroupTable(std::move(flat), std::move(names), "Z:" + std::to_string(n));
}

GroupTable build_dihedral(int n) {
  if (n < 1 || 2 * n > GroupTable::kTableCap) {
    throw OrderCapError("dihedral parameter out of range: " + std::to_string(n));
  }
  // Indices 0..n-1 are rotations ρ^i, n..2n-1 are reflections σρ^i, with
  // ρσ = σρ^{-1}.  Then ρ^i·σρ^j = σρ^{j-i} and σρ^i·σρ^j = ρ^{j-i}.
  int m = 2 * n;
  auto idx = [n](bool refl, int i) { return (refl ? n : 0) + ((i % n + n) % n); };
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  auto set = [&](int a, int b, int v) {
    flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) +
         static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(v);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      set(idx(false, i), idx(false, j), idx(false, i + j));
      set(idx(false, i), idx(true, j), idx(true, j - i));
      set(idx(true, i), idx(false, j), idx(true, i + j));
      set(idx(true, i), idx(true, j), idx(false, j - i));
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(m));
  names[0] = "e";
  for (int i = 1; i < n; ++i) names[static_cast<std::size_t>(i)] = power_name("ρ", i);
  names[static_cast<std::size_t>(n)] = "σ";
  for (int i = 1; i < n; ++i) {
    names[static_cast<std::size_t>(n + i)] = "σ" + power_name("ρ", i);
  }
  return GroupTable(std::move(flat), std::move(names), "D:" + std::to_string(n));
}

GroupTable build_quaternion() {
  // Indices: 1,-1,i,-i,j,-j,k,-k.  Encode as (axis, sign) with axis
  // 0:1, 1:i, 2:j, 3:k; products follow ij=k, jk=i, ki=j.
  auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
  auto axis_of = [](int x) { return x / 2; };
  auto sign_of = [](int x) { return x % 2 == 0 ? 1 : -1; };
  auto mul_axes = [](int a, int b, int& sign) -> int {
    // Returns axis of product of basis units, accumulating sign.
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;  // i^2 = j^2 = k^2 = -1
      return 0;
    }
    // The cyclic order (1,2,3) = (i,j,k) is positive.
    if ((a == 1 && b == 2)) return 3;
    if ((a == 2 && b == 3)) return 1;
    if ((a == 3 && b == 1)) return 2;
    sign = -sign;
    if (a == 2 && b == 1) return 3;
    if (a == 3 && b == 2) return 1;
    return 2;  // a == 1 && b == 3
  };
  std::vector<std::uint16_t> flat(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      int sign = sign_of(x) * sign_of(y);
      int axis = mul_axes(axis_of(x), axis_of(y), sign);
      flat[static_cast<std::size_t>(x) * 8 + static_cast<std::size_t>(y)] =
          static_cast<std::uint16_t>(enc(axis, sign));
    }
  }
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return GroupTable(std::move(flat), std::move(names), "Q8");
}

GroupTable build_symmetric(int n) {
  if (n < 1 || n > 6) {
    throw OrderCapError("symmetric group parameter out of range: " + std::to_string(n));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  int m = static_cast<int>(perms.size());
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      // (a∘b)(x) = a(b(x))
      for (int x = 0; x < n; ++x) {
        comp[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(a)]
                 [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)]
                                               [static_cast<std::size_t>(x)])];
      }
      flat[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) +
           static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(index.at(comp));
    }
  }
  std::vector<std::string> names;
  names.reserve(perms.size());
  for (const auto& q : perms) {
    std::string s;
    for (int v : q) s += std::to_string(v + 1);
    names.push_back(s);
  }
  return GroupTable(std::move(flat), std::move(names), "S:" + std::to_string(n));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, int order_cap) {
  long long m = static_cast<long long>(a.order()) * b.order();
  if (m > order_cap) {
    throw OrderCapError("product order " + std::to_string(m) + " exceeds cap " +
                        std::to_string(order_cap));
  }
  int n = static_cast<int>(m);
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::uint16_t> flat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int x1 = 0; x1 < a.order(); ++x1) {
    for (int y1 = 0; y1 < b.order(); ++y1) {
      int p = enc(x1, y1);
      names[static_cast<std::size_t>(p)] = "(" + a.name(x1) + "," + b.name(y1) + ")";
      for (int x2 = 0; x2 < a.order(); ++x2) {
        for (int y2 = 0; y2 < b.order(); ++y2) {
          flat[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(enc(x2, y2))] =
              static_cast<std::uint16_t>(enc(a.mul(x1, x2), b.mul(y1, y2)));
        }
      }
    }
  }
  return GroupTable(std::move(flat), std::move(names),
                    a.descriptor() + "x" + b.descriptor());
}

namespace {

GroupTable parse_atom(const std::string& atom, int order_cap) {
  auto need_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw GroupSpecError("bad numeric parameter in group spec: '" + atom + "'");
    }
    return std::stoi(s);
  };
  GroupTable g = [&]() {
    if (atom == "Q8") return build_quaternion();
    if (atom.rfind("Z:", 0) == 0) return build_cyclic(need_int(atom.substr(2)));
    if (atom.rfind("D:", 0) == 0) return build_dihedral(need_int(atom.substr(2)));
    if (atom.rfind("S:", 0) == 0) return build_symmetric(need_int(atom.substr(2)));
    throw GroupSpecError("unknown group spec atom: '" + atom + "'");
  }();
  if (g.order() > order_cap) {
    throw OrderCapError("group order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(order_cap));
  }
  return g;
}

}  // namespace

GroupTable parse_group_spec(const std::string& spec, int order_cap) {
  if (spec.empty()) throw GroupSpecError("empty group spec");
  if (spec.rfind("file:", 0) == 0) {
    GroupTable g = read_cayley_file(spec.substr(5));
    if (g.order() > order_cap) {
      throw OrderCapError("group order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(order_cap));
    }
    return g;
  }
  std::vector<std::string> atoms;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      atoms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  atoms.push_back(cur);
  GroupTable g = parse_atom(atoms[0], order_cap);
  for (std::size_t i = 1; i < atoms.size(); ++i) {
    g = direct_product(g, parse_atom(atoms[i], order_cap), order_cap);
  }
  return g;
}

GroupTable read_cayley_stream(std::istream& in, std::string descriptor) {
  std::string line;
  int n = -1;
  std::vector<std::vector<int>> rows;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    // Strip comments and blank lines.
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "names:") {
      std::string w;
      while (ls >> w) names.push_back(w);
      continue;
    }
    if (n < 0) {
      try {
        n = std::stoi(first);
      } catch (const std::exception&) {
        throw GroupSpecError("Cayley file must start with the group order");
      }
      if (n < 1) throw GroupSpecError("Cayley order must be positive");
      continue;
    }
    std::vector<int> row;
    row.push_back(std::stoi(first));
    int v = 0;
    while (ls >> v) row.push_back(v);
    rows.push_back(std::move(row));
  }
  if (n < 0) throw GroupSpecError("empty Cayley file");
  if (static_cast<int>(rows.size()) != n) {
    throw GroupSpecError("Cayley file has " + std::to_string(rows.size()) +
                         " rows, expected " + std::to_string(n));
  }
  return GroupTable::from_cayley(rows, std::move(names), std::move(descriptor));
}

GroupTable read_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GroupSpecError("cannot open Cayley file: " + path);
  return read_cayley_stream(in, "file:" + path);
}

Mask subgroup_closure(const GroupTable& g, Mask seed) {
  if (g.order() > kMaskBits) {
    throw OrderCapError("subgroup operations require order <= 64");
  }
  Mask h = seed | bit(g.identity());
  // Close under products; finite group closure under products includes
  // inverses automatically.
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : bits(h)) {
      for (int b : bits(h)) {
        int p = g.mul(a, b);
        if (!contains(h, p)) {
          h |= bit(p);
          grew = true;
        }
      }
    }
  }
  return h;
}

bool is_subgroup(const GroupTable& g, Mask h) {
  if (g.order() > kMaskBits) {
    throw OrderCapError("subgroup operations require order <= 64");
  }
  if (!contains(h, g.identity())) return false;
  for (int a : bits(h)) {
    for (int b : bits(h)) {
      if (!contains(h, g.mul(a, b))) return false;
    }
  }
  return true;
}

std::vector<Mask> enumerate_subgroups(const GroupTable& g) {
  if (g.order() > kMaskBits) {
    throw OrderCapError("subgroup operations require order <= 64");
  }
  // Grow the closed-set family: start from cyclic subgroups, then extend
  // each known subgroup by one outside generator until nothing new appears.
  std::vector<Mask> found;
  auto add = [&](Mask h) {
    if (std::find(found.begin(), found.end(), h) == found.end()) {
      found.push_back(h);
      return true;
    }
    return false;
  };
  add(subgroup_closure(g, bit(g.identity())));
  for (int a = 0; a < g.order(); ++a) add(subgroup_closure(g, bit(a)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot = found;
    for (Mask h : snapshot) {
      for (int a = 0; a < g.order(); ++a) {
        if (contains(h, a)) continue;
        if (add(subgroup_closure(g, h | bit(a)))) grew = true;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return lex_less(a, b);
  });
  return found;
}

std::vector<int> minimal_generators(const GroupTable& g, Mask h) {
  if (!is_subgroup(g, h)) {
    throw GroupError("minimal_generators: not a subgroup");
  }
  if (h == bit(g.identity())) return {};
  std::vector<int> elems = elements_of(h & ~bit(g.identity()));
  int m = static_cast<int>(elems.size());
  for (int k = 1; k <= m; ++k) {
    // Index-lex order over k-element generator candidates.
    for (Mask pick : combinations(m, k)) {
      Mask seed = 0;
      std::vector<int> gens;
      for (int i : bits(pick)) {
        seed |= bit(elems[static_cast<std::size_t>(i)]);
        gens.push_back(elems[static_cast<std::size_t>(i)]);
      }
      if (subgroup_closure(g, seed) == h) return gens;
    }
  }
  return elems;  // unreachable: the full element list always generates
}

std::string subgroup_name(const GroupTable& g, Mask h) {
  std::vector<int> gens = minimal_generators(g, h);
  if (gens.empty()) return "⟨" + g.name(g.identity()) + "⟩";
  std::string s = "⟨";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += g.name(gens[i]);
  }
  return s + "⟩";
}

}  // namespace troprep
