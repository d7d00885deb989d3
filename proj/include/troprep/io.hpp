#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "troprep/group.hpp"
#include "troprep/matroid.hpp"
#include "troprep/orbit.hpp"
#include "troprep/search.hpp"
#include "troprep/theorems.hpp"

namespace troprep {

// Malformed structured documents (family files, bad JSON).
struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Classification report.  Timings default to zero so identical inputs
// produce byte-identical documents; pass timings = true to emit wall time.
std::string classification_text(const GroupTable& g, const ClassificationReport& r,
                                bool timings = false);
std::string classification_json(const GroupTable& g, const ClassificationReport& r,
                                bool timings = false);

// Orbit dump: one orbit per line — label, size, members as element-name sets.
std::string orbits_text(const GroupTable& g, int d, const std::vector<Orbit>& orbits);
std::string orbits_json(const GroupTable& g, int d, const std::vector<Orbit>& orbits);

// Family exchange document: {"ground_size", "d", "members"} with members as
// sorted index lists.
std::string family_document(const BasisFamily& f);
BasisFamily parse_family_document(const std::string& text);

// Exchange verdict for one family.
std::string verdict_text(const BasisFamily& f, const ExchangeVerdict& v);
std::string verdict_json(const BasisFamily& f, const ExchangeVerdict& v);

// Theorem suite results.
std::string checks_text(const std::vector<TheoremCheck>& checks);
std::string checks_json(const std::vector<TheoremCheck>& checks);

// Subgroup survey.
std::string subgroups_text(const GroupTable& g);
std::string subgroups_json(const GroupTable& g);

}  // namespace troprep
