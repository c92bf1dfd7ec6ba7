#include "cymod/records.hpp"

namespace cymod {

namespace {

json points(const std::vector<BasePoint>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(p);
  return a;
}

std::vector<BasePoint> points_from(const json& j) {
  std::vector<BasePoint> out;
  for (const auto& e : j) out.push_back(e.get<BasePoint>());
  return out;
}

json opt_rational(const std::optional<Rational>& r) { return r ? json(r->to_string()) : json(nullptr); }
std::optional<Rational> opt_rational_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Rational::parse(j.get<std::string>());
}

MatchVerdict verdict_from(const std::string& s) {
  for (auto v : {MatchVerdict::Consistent, MatchVerdict::Refuted, MatchVerdict::Insufficient})
    if (match_verdict_name(v) == s) return v;
  throw Error(ErrorKind::ParseError, "unknown verdict '" + s + "'");
}

}  // namespace

void to_json(json& j, const DefectReport& r) {
  json tilde = json::array();
  for (const auto& f : r.tilde_fibres)
    tilde.push_back({{"t", f.t}, {"gamma", f.gamma}, {"side", f.singular_side == Side::Left ? "left" : "right"}});
  json common = json::array();
  for (const auto& [t, m, mp] : r.common_fibres) common.push_back({{"t", t}, {"m", m}, {"m_prime", mp}});
  j = {{"S", points(r.S)},
       {"S_prime", points(r.S_prime)},
       {"S_common", points(r.S_common)},
       {"S_tilde", points(r.S_tilde)},
       {"d", r.d},
       {"pic_rank", r.pic_rank},
       {"delta", r.delta},
       {"h12", r.h12},
       {"dim_U", r.dim_U},
       {"tilde_fibres", tilde},
       {"common_fibres", common},
       {"warnings", r.warnings}};
}

void from_json(const json& j, DefectReport& r) {
  r = DefectReport{};
  r.S = points_from(j.at("S"));
  r.S_prime = points_from(j.at("S_prime"));
  r.S_common = points_from(j.at("S_common"));
  r.S_tilde = points_from(j.at("S_tilde"));
  r.d = j.at("d");
  r.pic_rank = j.at("pic_rank");
  r.delta = j.at("delta");
  r.h12 = j.at("h12");
  r.dim_U = j.at("dim_U");
  for (const auto& f : j.at("tilde_fibres"))
    r.tilde_fibres.push_back(
        {f.at("t").get<BasePoint>(), f.at("gamma").get<int>(), f.at("side") == "left" ? Side::Left : Side::Right});
  for (const auto& f : j.at("common_fibres"))
    r.common_fibres.emplace_back(f.at("t").get<BasePoint>(), f.at("m").get<int>(), f.at("m_prime").get<int>());
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

void to_json(json& j, const TraceRecord& r) {
  j = {{"p", r.p},   {"W", r.W},         {"nodes", r.nodes},           {"What", r.What},
       {"T2", r.T2}, {"h11", r.h11},     {"correction", r.correction}, {"apU", r.apU}};
}

void from_json(const json& j, TraceRecord& r) {
  r.p = j.at("p");
  r.W = j.at("W");
  r.nodes = j.at("nodes");
  r.What = j.at("What");
  r.T2 = j.at("T2");
  r.h11 = j.at("h11");
  r.correction = j.at("correction");
  r.apU = j.at("apU");
}

void to_json(json& j, const Candidate& c) {
  j = {{"product", c.product.to_string()},
       {"report", c.report},
       {"alpha2", opt_rational(c.alpha2)},
       {"gamma2", opt_rational(c.gamma2)},
       {"alpha", opt_rational(c.alpha)},
       {"note", c.note}};
}

Candidate candidate_from_json(const json& j) {
  return Candidate{ProductSpec::parse(j.at("product").get<std::string>()), j.at("report").get<DefectReport>(),
                   opt_rational_from(j.at("alpha2")), opt_rational_from(j.at("gamma2")),
                   opt_rational_from(j.at("alpha")), j.at("note").get<std::string>()};
}

bool same_candidate(const Candidate& a, const Candidate& b) {
  return a.product.to_string() == b.product.to_string() && a.report == b.report && a.alpha2 == b.alpha2 &&
         a.gamma2 == b.gamma2 && a.alpha == b.alpha && a.note == b.note;
}

void to_json(json& j, const EntryMatch& m) {
  json skipped = json::array();
  for (const auto& [p, why] : m.skipped) skipped.push_back({{"p", p}, {"reason", why}});
  json mism = json::array();
  for (const auto& x : m.mismatches) mism.push_back({{"p", x.p}, {"expected", x.expected}, {"observed", x.observed}});
  j = {{"level", m.level},       {"weight", m.weight},     {"label", m.label},
       {"compared", m.compared}, {"agreeing", m.agreeing}, {"skipped", skipped},
       {"mismatches", mism},     {"verdict", std::string(match_verdict_name(m.verdict))}};
}

void from_json(const json& j, EntryMatch& m) {
  m = EntryMatch{};
  m.level = j.at("level");
  m.weight = j.at("weight");
  m.label = j.at("label");
  m.compared = j.at("compared").get<std::vector<i64>>();
  m.agreeing = j.at("agreeing").get<std::vector<i64>>();
  for (const auto& s : j.at("skipped")) m.skipped.emplace_back(s.at("p").get<i64>(), s.at("reason").get<std::string>());
  for (const auto& x : j.at("mismatches"))
    m.mismatches.push_back({x.at("p").get<i64>(), x.at("expected").get<i64>(), x.at("observed").get<i64>()});
  m.verdict = verdict_from(j.at("verdict").get<std::string>());
}

void to_json(json& j, const MatchReport& m) { j = {{"candidates", m.candidates}}; }
void from_json(const json& j, MatchReport& m) { m.candidates = j.at("candidates").get<std::vector<EntryMatch>>(); }

}  // namespace cymod
