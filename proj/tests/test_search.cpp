#include <doctest.h>

#include <algorithm>
#include <set>

#include "cymod/search.hpp"
#include "cymod/tables.hpp"
#include "helpers.hpp"

using namespace cymod;
using namespace testing_util;

namespace {

using Triple = std::tuple<Rational, Rational, Moebius>;

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<BasePoint> locs(const FibrationSpec& s) {
  std::vector<BasePoint> out;
  for (const auto& f : singular_locus(s)) out.push_back(f.location);
  return out;
}

int preimage_hits(const Moebius& M, const std::vector<BasePoint>& S, const std::vector<BasePoint>& Sp) {
  int n = 0;
  for (const auto& a : S) n += std::find(Sp.begin(), Sp.end(), M.apply(a)) != Sp.end();
  return n;
}

void check_candidate(const Candidate& c) {
  CAPTURE(c.product.to_string());
  auto fresh = analyze(c.product);
  CHECK(fresh == c.report);
  CHECK(c.report.delta == 0);
  CHECK(schoen_h12(c.report) == c.report.h12);
  CHECK(delta_from_hodge(c.report) == c.report.delta);
  CHECK(c.report.dim_U == 2);
}

std::set<std::string> twists_of(const std::vector<Candidate>& rows) {
  std::set<std::string> out;
  for (const auto& c : rows) out.insert(c.product.right.twist().to_string());
  return out;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("align_sets") {
    auto S = locs(FibrationSpec(Family::abg(1, 289, 289)));
    auto S6 = locs(FibrationSpec(Family::abg(1, 1, 1)));
    auto maps = align_sets(S, S6, 4);
    CHECK(std::find(maps.begin(), maps.end(), Moebius(1, -1, 1, -1089)) != maps.end());
    for (const auto& M : maps) CHECK(preimage_hits(M, S, S6) == 4);
    std::set<std::string> distinct;
    for (const auto& M : maps) distinct.insert(M.to_string());
    CHECK(distinct.size() == maps.size());

    // identity and the S3 symmetries of {oo,0,1} on the self pair
    auto self = align_sets(S6, S6, 4);
    CHECK(std::find(self.begin(), self.end(), Moebius()) != self.end());
    for (const auto& M : self) CHECK(preimage_hits(M, S6, S6) == 4);
  }

  TEST_CASE("case A reproduces the rigid parameter triples") {
    auto res = case_a_search();
    std::set<std::tuple<std::string, std::string, std::string>> got, want;
    for (const auto& c : res.rows) {
      REQUIRE(c.alpha2);
      REQUIRE(c.gamma2);
      got.emplace(c.alpha2->to_string(), c.gamma2->to_string(), c.product.right.twist().to_string());
      check_candidate(c);
      CHECK(c.report.h12 == 0);
    }
    auto add = [&](Rational a, Rational g, Moebius m) { want.emplace(a.to_string(), g.to_string(), m.to_string()); };
    add(R(-1, 8), R(-1, 8), Moebius(-1, 1, 0, 1));
    add(R(1, 64), R(1, 64), Moebius(-16, 25, 0, 16));
    add(R(1, 9), R(4), Moebius(9, 0, 0, 1));
    add(R(1, 2), R(1, 2), Moebius(0, 1, 1, 0));
    add(R(9, 4), R(9, 4), Moebius(0, 16, 1, 0));
    CHECK(got == want);
    int flagged = 0;
    for (const auto& c : res.rows) flagged += c.note.find("1:1:1:4:4:9") != std::string::npos;
    CHECK(flagged == 1);
    for (const auto& c : res.all_maps) check_candidate(c);
  }

  TEST_CASE("case B reproduces the alpha values and twists") {
    auto res = case_b_search();
    REQUIRE(res.equations.size() == 3);
    CHECK(res.equations[0].rational_roots.empty());
    std::set<Rational> alphas(res.alphas.begin(), res.alphas.end());
    CHECK(alphas == std::set<Rational>{R(17), R(5, 4), R(7, 9), R(1, 4)});
    CHECK(res.alphas.size() == 4);
    for (const auto& eq : res.equations)
      for (const auto& r : eq.rational_roots) CHECK(eq.poly(r).is_zero());
    auto twists = twists_of(res.rows);
    for (const auto& row : load_table(table_path(2))) {
      auto spec = ProductSpec::parse(row.product);
      CAPTURE(row.line);
      CHECK(twists.count(spec.right.twist().to_string()));
    }
    for (const auto& c : res.rows) {
      check_candidate(c);
      REQUIRE(c.alpha);
      CHECK(alphas.count(*c.alpha));
      CHECK(c.product.left.family() == Family::abg(1, *c.alpha * *c.alpha, *c.alpha * *c.alpha));
    }
  }

  TEST_CASE("case C on the Gamma1(6) self pair") {
    auto res = case_c_search(Family::abg(1, 1, 1), Family::abg(1, 1, 1));
    CHECK(res.rows.size() == 50);
    CHECK(res.rigid_classes == 4);
    for (const auto& c : res.rows) check_candidate(c);

    // maps permuting {0, 1, 9}
    const std::set<BasePoint> special = {BasePoint::of(R(0)), BasePoint::of(R(1)), BasePoint::of(R(9))};
    std::set<std::string> permuting;
    for (const auto& c : res.rows) {
      const Moebius& M = c.product.right.twist();
      std::set<BasePoint> image;
      for (const auto& t : special) image.insert(M.apply(t));
      if (image == special && !(M == Moebius())) {
        permuting.insert(M.to_string());
        CHECK(c.report.h12 == 10);
      }
    }
    std::set<std::string> want;
    for (const auto& M : {Moebius(9, -81, 73, -81), Moebius(81, -81, 73, -9), Moebius(81, -81, 17, -81), Moebius(9, 0, 10, -9), Moebius(-1, 9, 7, 1)})
      want.insert(M.to_string());
    CHECK(permuting == want);

    // duplicate classes pair a map with its inverse
    for (const auto& cls : res.duplicate_classes) {
      REQUIRE(cls.size() >= 2);
      const Moebius& a = res.rows[cls[0]].product.right.twist();
      bool has_inverse = false;
      for (auto i : cls) has_inverse = has_inverse || res.rows[i].product.right.twist() == a.inverse();
      CHECK(has_inverse);
    }
    std::set<std::string> rigid;
    for (const auto& c : res.rows)
      if (c.report.h12 == 0) rigid.insert(c.product.right.twist().to_string());
    CHECK(rigid.size() == 5);
  }

  TEST_CASE("case C words") {
    auto words = case_c_words();
    CHECK(words.size() == 60);
    for (const auto& w : words) {
      CHECK(w.M.det() != Integer(0));
    }
  }

  TEST_CASE("case C on a Beauville pair uses three common locations") {
    auto res = case_c_search(Family::beauville(BeauvilleLabel::Gamma1_4_Gamma2), Family::abg(1, 1, 1));
    CHECK(res.words == 0);
    for (const auto& c : res.rows) {
      check_candidate(c);
      CHECK(c.report.S_common.size() == 3);
    }
  }

  TEST_CASE("isogenous case") {
    auto iso = ProductSpec::parse("beauville(gamma0_8_gamma1_4) x beauville(gamma0_8_gamma1_4)@[[1,-1],[1,1]]; isogenous");
    CHECK(isogenous_case_check(iso));
    auto r = analyze(iso);
    CHECK(r.delta == 0);
    CHECK(r.h12 == 0);
    CHECK(!isogenous_case_check(ProductSpec::parse("abg(1,1,16) x abg(4,4,4)")));
  }
}
