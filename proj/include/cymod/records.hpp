#pragma once

// Machine-readable records (JSON) for reports, ledgers, candidates and
// match reports. from_json(to_json(x)) == x for each type.

#include <json.hpp>

#include "cymod/formmatch.hpp"
#include "cymod/search.hpp"

namespace cymod {

using nlohmann::json;

void to_json(json& j, const DefectReport& r);
void from_json(const json& j, DefectReport& r);

void to_json(json& j, const TraceRecord& r);
void from_json(const json& j, TraceRecord& r);

void to_json(json& j, const Candidate& c);
Candidate candidate_from_json(const json& j);

void to_json(json& j, const EntryMatch& m);
void from_json(const json& j, EntryMatch& m);
void to_json(json& j, const MatchReport& m);
void from_json(const json& j, MatchReport& m);

bool same_candidate(const Candidate& a, const Candidate& b);

}  // namespace cymod

// BasePoint has no default constructor.
template <>
struct nlohmann::adl_serializer<cymod::BasePoint> {
  static cymod::BasePoint from_json(const json& j) { return cymod::BasePoint::parse(j.get<std::string>()); }
  static void to_json(json& j, const cymod::BasePoint& p) { j = p.to_string(); }
};
