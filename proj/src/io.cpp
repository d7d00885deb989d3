#include "troprep/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace troprep {
namespace {

using nlohmann::json;

std::string member_names(const GroupTable& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int e : bits(m)) {
    if (!first) out += ",";
    out += g.name(e);
    first = false;
  }
  return out + "}";
}

json name_array(const GroupTable& g, Mask m) {
  json a = json::array();
  for (int e : bits(m)) a.push_back(g.name(e));
  return a;
}

json index_array(Mask m) {
  json a = json::array();
  for (int e : bits(m)) a.push_back(e);
  return a;
}

std::string family_display(const GroupTable& g, const FamilyEntry& f) {
  std::string out;
  for (std::size_t i = 0; i < f.orbit_labels.size(); ++i) {
    if (i) out += " ∪ ";
    out += f.orbit_labels[i].display(g);
  }
  return out;
}

json stats_json(const SearchStats& s, bool timings) {
  return json{{"candidates_visited", s.candidates_visited},
              {"pruned", s.pruned},
              {"wall_ms", timings ? s.wall_ms : 0}};
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string classification_text(const GroupTable& g, const ClassificationReport& r,
                                bool timings) {
  std::ostringstream out;
  out << "group " << r.group << "  dim " << r.dim << "\n";
  out << "orbits (" << r.orbits.size() << "):\n";
  for (const auto& o : r.orbits)
    out << "  " << o.label.display(g) << "  size " << o.size() << "\n";
  out << "families (" << r.families.size() << "):\n";
  for (const auto& f : r.families) {
    out << "  " << family_display(g, f) << "  bases " << f.basis_count;
    if (f.uniform) out << "  uniform";
    if (f.codim_one) out << "  codim-1";
    for (const auto& name : f.subgroup_names) out << "  = f_{G-" << name << "}";
    out << "\n";
  }
  const auto& s = r.stats;
  out << "stats: visited " << s.candidates_visited << ", pruned " << s.pruned
      << ", forced " << s.forced;
  if (timings) out << ", wall " << s.wall_ms << " ms";
  out << "\n";
  return out.str();
}

std::string classification_json(const GroupTable& g, const ClassificationReport& r,
                                bool timings) {
  json orbits = json::array();
  for (const auto& o : r.orbits)
    orbits.push_back(json{{"label", o.label.display(g)}, {"size", o.size()}});
  json families = json::array();
  for (const auto& f : r.families) {
    json labels = json::array();
    for (const auto& l : f.orbit_labels) labels.push_back(l.display(g));
    families.push_back(json{
        {"orbit_labels", labels},
        {"basis_count", f.basis_count},
        {"uniform", f.uniform},
        {"subgroup_complement",
         f.subgroup_names.empty() ? json(nullptr) : json(f.subgroup_names.front())},
        {"codim_one", f.codim_one}});
  }
  json doc{{"group", r.group},
           {"dim", r.dim},
           {"orbits", orbits},
           {"families", families},
           {"stats", stats_json(r.stats, timings)}};
  return doc.dump(2) + "\n";
}

std::string orbits_text(const GroupTable& g, int d, const std::vector<Orbit>& orbits) {
  std::ostringstream out;
  out << "group " << g.descriptor() << "  dim " << d << "  orbits " << orbits.size()
      << "\n";
  for (const auto& o : orbits) {
    out << o.label.display(g) << "  " << o.size() << " ";
    for (Mask m : o.members) out << " " << member_names(g, m);
    out << "\n";
  }
  return out.str();
}

std::string orbits_json(const GroupTable& g, int d, const std::vector<Orbit>& orbits) {
  json arr = json::array();
  for (const auto& o : orbits) {
    json members = json::array();
    for (Mask m : o.members) members.push_back(name_array(g, m));
    arr.push_back(json{{"label", o.label.display(g)},
                       {"size", o.size()},
                       {"members", members}});
  }
  json doc{{"group", g.descriptor()}, {"dim", d}, {"orbits", arr}};
  return doc.dump(2) + "\n";
}

std::string family_document(const BasisFamily& f) {
  json members = json::array();
  for (Mask m : f.members) members.push_back(index_array(m));
  json doc{{"ground_size", f.ground_size}, {"d", f.d}, {"members", members}};
  return doc.dump(2) + "\n";
}

BasisFamily parse_family_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DocumentError(std::string("family document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ground_size") || !doc.contains("d") ||
      !doc.contains("members") || !doc["ground_size"].is_number_integer() ||
      !doc["d"].is_number_integer() || !doc["members"].is_array())
    throw DocumentError("family document needs integer ground_size and d plus a members array");
  std::vector<Mask> members;
  for (const auto& entry : doc["members"]) {
    if (!entry.is_array()) throw DocumentError("family members must be index arrays");
    Mask m = 0;
    for (const auto& idx : entry) {
      if (!idx.is_number_integer() || idx.get<int>() < 0 || idx.get<int>() >= kMaskBits)
        throw DocumentError("family member indices must lie in 0..63");
      m |= bit(idx.get<int>());
    }
    members.push_back(m);
  }
  try {
    return BasisFamily::from_members(doc["ground_size"].get<int>(), doc["d"].get<int>(),
                                     std::move(members));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

std::string verdict_text(const BasisFamily& f, const ExchangeVerdict& v) {
  std::ostringstream out;
  out << "family: ground " << f.ground_size << ", d " << f.d << ", " << f.members.size()
      << " members\n";
  if (v.matroid) {
    out << "matroid: yes\n";
  } else {
    out << "matroid: no\n";
    out << "witness: " << v.witness->describe() << "\n";
  }
  return out.str();
}

std::string verdict_json(const BasisFamily& f, const ExchangeVerdict& v) {
  json doc{{"ground_size", f.ground_size},
           {"d", f.d},
           {"member_count", f.members.size()},
           {"matroid", v.matroid}};
  if (v.matroid) {
    doc["witness"] = nullptr;
  } else {
    const auto& w = *v.witness;
    json failed = json::array();
    for (Mask m : w.failed_candidates) failed.push_back(index_array(m));
    doc["witness"] = json{{"empty_family", w.empty_family},
                          {"a", index_array(w.a)},
                          {"b", index_array(w.b)},
                          {"x", w.x},
                          {"failed_candidates", failed}};
  }
  return doc.dump(2) + "\n";
}

std::string checks_text(const std::vector<TheoremCheck>& checks) {
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.id.size());
  std::ostringstream out;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : checks) {
    out << c.id << std::string(width - c.id.size() + 2, ' ') << status_word(c.status);
    if (!c.scope.empty() || !c.detail.empty()) {
      out << "  [" << c.scope << "]";
      if (!c.detail.empty()) out << " " << c.detail;
    }
    out << "\n";
    if (c.status == CheckStatus::fail && !c.counterexample.empty())
      out << "  counterexample: " << c.counterexample << "\n";
    switch (c.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::skipped: ++skipped; break;
    }
  }
  out << checks.size() << " checks: " << pass << " passed, " << fail << " failed, "
      << skipped << " skipped\n";
  return out.str();
}

std::string checks_json(const std::vector<TheoremCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json entry{{"id", c.id},
               {"status", c.status == CheckStatus::pass     ? "pass"
                          : c.status == CheckStatus::fail   ? "fail"
                                                            : "skipped"},
               {"scope", c.scope},
               {"detail", c.detail}};
    entry["counterexample"] =
        c.counterexample.empty() ? json(nullptr) : json::parse(c.counterexample);
    arr.push_back(entry);
  }
  return json{{"checks", arr}}.dump(2) + "\n";
}

std::string subgroups_text(const GroupTable& g) {
  auto subs = enumerate_subgroups(g);
  std::ostringstream out;
  out << "group " << g.descriptor() << "  order " << g.order() << "  subgroups "
      << subs.size() << "\n";
  for (Mask h : subs)
    out << "  " << subgroup_name(g, h) << "  order " << set_size(h) << "  "
        << member_names(g, h) << "\n";
  return out.str();
}

std::string subgroups_json(const GroupTable& g) {
  json arr = json::array();
  for (Mask h : enumerate_subgroups(g))
    arr.push_back(json{{"name", subgroup_name(g, h)},
                       {"order", set_size(h)},
                       {"elements", name_array(g, h)}});
  json doc{{"group", g.descriptor()}, {"order", g.order()}, {"subgroups", arr}};
  return doc.dump(2) + "\n";
}

}  // namespace troprep
