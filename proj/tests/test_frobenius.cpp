#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cymod/frobenius.hpp"
#include "cymod/tables.hpp"
#include "helpers.hpp"

using namespace cymod;
using namespace testing_util;

namespace {

ProductSpec P(const char* s) { return ProductSpec::parse(s); }

std::vector<FibrationSpec> catalogued() {
  std::vector<FibrationSpec> out;
  for (auto l : all_beauville_labels()) out.emplace_back(Family::beauville(l));
  out.emplace_back(Family::abg(1, 1, 1));
  return out;
}

i64 reduce_rational(const Rational& c, i64 p) {
  i64 d = c.den().mod(p);
  REQUIRE(d != 0);
  return mod_mul(c.num().mod(p), mod_inv(d, p), p);
}

// Zeros of a ternary cubic over F_p, counted chart by chart:
// z = 1, then (x : 1 : 0), then (1 : 0 : 0).
i64 affine_chart_count(const RatForm& f, i64 p) {
  std::vector<std::tuple<int, int, int, i64>> terms;
  f.for_each([&](int i, int j, int k, const Rational& c) {
    if (!c.is_zero()) terms.emplace_back(i, j, k, reduce_rational(c, p));
  });
  auto eval = [&](i64 x, i64 y, i64 z) {
    i64 s = 0;
    for (const auto& [i, j, k, c] : terms) s = mod_add(s, mod_mul(c, mod_mul(mod_pow(x, i, p), mod_mul(mod_pow(y, j, p), mod_pow(z, k, p), p), p), p), p);
    return s;
  };
  i64 n = 0;
  for (i64 x = 0; x < p; ++x)
    for (i64 y = 0; y < p; ++y) n += eval(x, y, 1) == 0;
  for (i64 x = 0; x < p; ++x) n += eval(x, 1, 0) == 0;
  n += eval(1, 0, 0) == 0;
  return n;
}

std::vector<ProductSpec> table_products() {
  std::vector<ProductSpec> out;
  for (int n = 1; n <= 4; ++n)
    for (const auto& row : load_table(table_path(n))) out.push_back(ProductSpec::parse(row.product));
  return out;
}

}  // namespace

TEST_SUITE("frobenius") {
  TEST_CASE("count_cubic examples") {
    CHECK(count_cubic(CubicModP::reduce(rat_monomial(3, 0, 0) + rat_monomial(0, 3, 0) + rat_monomial(0, 0, 3), 2)) == 3);
    for (i64 p : {2, 3, 5, 7, 11, 13}) CHECK(count_cubic(CubicModP::reduce(rat_monomial(1, 1, 1), p)) == 3 * p);
    i64 n = count_cubic(fibre_cubic(FibrationSpec(Family::abg(1, 1, 1)), 2, 5));
    CHECK(std::abs(5 + 1 - n) <= 4);
  }

  TEST_CASE("count_cubic agrees with an affine-chart oracle on 20 random good fibres") {
    auto fams = catalogued();
    for (auto extra : {Family::abg(1, 289, 289), Family::abg(1, -3, -3), Family::abg(1, 9, 9)}) fams.emplace_back(extra);
    const std::vector<i64> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    int done = 0;
    while (done < 20) {
      const auto& spec = fams[uniform(0, long(fams.size()) - 1)];
      i64 p = primes[uniform(0, long(primes.size()) - 1)];
      i64 t = uniform(0, p - 1);
      RatForm member = member_form(spec.family(), ProjPoint<Rational>::finite(Rational(t)));
      bool integral = true;
      member.for_each([&](int, int, int, const Rational& c) { integral = integral && c.den().mod(p) != 0; });
      if (!integral) continue;
      CubicModP g = fibre_cubic(spec, t, p);
      if (g.is_zero() || !g.singular_points().empty()) continue;
      CAPTURE(spec.to_string());
      CAPTURE(p);
      CAPTURE(t);
      CHECK(count_cubic(g) == affine_chart_count(member, p));
      ++done;
    }
  }

  TEST_CASE("elliptic traces") {
    CHECK(ap_elliptic(FibrationSpec(Family::beauville(BeauvilleLabel::Gamma3)), ProjPoint<Rational>::finite(Rational(0)), 2) == 0);
    // every good fibre over F_2 obeys Hasse; the others are refused
    for (const auto& spec : catalogued())
      for (i64 t = 2; t < 12; ++t) {
        if (t == 9) continue;
        std::optional<i64> a;
        try {
          a = ap_elliptic(spec, ProjPoint<Rational>::finite(Rational(t)), 2);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::BadPrime);
        }
        if (a) CHECK(std::abs(*a) <= 2);
      }
  }

  TEST_CASE("Hasse bound on every smooth local trace, all catalogued families, p < 100") {
    for (const auto& spec : catalogued()) {
      for (i64 p : primes_up_to(100)) {
        std::optional<FibrationModP> fm;
        try {
          fm.emplace(spec, p);
        } catch (const Error&) {
          continue;  // bad reduction
        }
        for (const auto& lt : fm->all()) {
          CAPTURE(spec.to_string());
          CAPTURE(p);
          CAPTURE(lt.t);
          if (!lt.multiplicative) {
            CHECK(lt.a * lt.a <= 4 * p);
            CHECK(lt.fibre_count == p + 1 - lt.a);
          } else {
            CHECK((lt.a == 1 || lt.a == -1));
            CHECK(lt.fixed_components >= 0);
            CHECK(lt.fixed_components <= lt.m);
            CHECK(lt.fibre_count == 1 - lt.a + p * lt.fixed_components);
          }
        }
      }
    }
  }

  TEST_CASE("nodal fibres: split and non-split counts") {
    // I_1 at t = 9 of E(1:1:1), branch field Q(sqrt(-3))
    FibrationSpec spec(Family::abg(1, 1, 1));
    bool saw_split = false, saw_nonsplit = false;
    for (i64 p : primes_up_to(100)) {
      if (p <= 3) continue;
      auto lt = local_trace(spec, 9 % p, p);
      REQUIRE(lt.multiplicative);
      REQUIRE(lt.m == 1);
      CHECK(lt.a == kronecker(Integer(-3), p));
      CHECK(lt.fibre_count == (lt.a == 1 ? p : p + 2));
      (lt.a == 1 ? saw_split : saw_nonsplit) = true;
    }
    CHECK(saw_split);
    CHECK(saw_nonsplit);
    // coordinate triangle at infinity
    auto lt = local_trace(spec, 7, 7);
    CHECK(lt.m == 6);
    CHECK(lt.a == 1);
    CHECK(lt.fibre_count == 6 * 7);
  }

  TEST_CASE("hodge model") {
    // t -> 1/t pairs I_6 with I_2 at oo and 0, I_3 with I_3 at 1
    auto h = hodge_model(analyze(P("abg(1,1,1) x abg(1,1,1)@[[0,1],[1,0]]")));
    CHECK(h.h12 == 0);
    CHECK(h.h11 == 6 * 2 + 2 * 6 + 3 * 3);
    CHECK(h.euler == 2 * (h.h11 - h.h12));
    h = hodge_model(analyze(P("abg(1,1,1) x abg(1,1,1)@[[9,0],[0,1]]")));
    CHECK(h.h12 == 2);
    CHECK(h.h11 == 45);
    CHECK(h.euler == 2 * (45 - 2));
    auto self = analyze(P("abg(1,1,1) x abg(1,1,1); isogenous"));
    int nodes = 0;
    for (const auto& [t, m, n] : self.common_fibres) nodes += m * n;
    CHECK(nodes == 36 + 4 + 9 + 1);
  }

  TEST_CASE("quoted traces of the level-32 and level-16 products") {
    auto l32 = P("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]");
    CHECK(extract_apU(l32, 5).apU == -10);
    CHECK(extract_apU(l32, 7).apU == -16);
    CHECK(extract_apU(l32, 11).apU == 40);
    auto l16 = P("beauville(gamma0_8_gamma1_4) x beauville(gamma0_8_gamma1_4)@[[1,-1],[1,1]]; isogenous");
    CHECK(extract_apU(l16, 3).apU == 4);
    CHECK(extract_apU(l16, 5).apU == -2);
    CHECK(extract_apU(l16, 7).apU == -24);
    CHECK(extract_apU(l16, 11).apU == 44);
  }

  TEST_CASE("bad primes are skipped with a reason") {
    auto outcomes = extract_range(P("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]"), 14, 1);
    REQUIRE(outcomes.size() == 6);
    CHECK(outcomes[0].p == 2);
    CHECK(!outcomes[0].record);
    CHECK(!outcomes[0].skipped.empty());
    CHECK(!outcomes[1].record);  // p = 3 collides two singular locations
    for (size_t i = 2; i < outcomes.size(); ++i) CHECK(outcomes[i].record);
    CHECK_THROWS_AS(extract_apU(P("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]"), 2), Error);
  }

  TEST_CASE("ledger invariants on every table product, p < 100") {
    auto products = table_products();
    products.push_back(P("beauville(gamma0_8_gamma1_4) x beauville(gamma0_8_gamma1_4)@[[1,-1],[1,1]]; isogenous"));
    for (const auto& spec : products) {
      auto r = analyze(spec);
      for (const auto& o : extract_range(spec, 100)) {
        if (!o.record) continue;
        const auto& rec = *o.record;
        CAPTURE(spec.to_string());
        CAPTURE(rec.p);
        const double p = double(rec.p);
        CHECK(std::abs(double(rec.apU)) <= 2 * std::pow(p, 1.5));
        CHECK(rec.What == rec.W + rec.p * rec.nodes);
        CHECK(rec.apU == 1 + rec.p * rec.p * rec.p + (rec.p + rec.p * rec.p) * rec.T2 - rec.What - rec.p * rec.correction);
        if (r.h12 == 0) CHECK(rec.correction == 0);
      }
    }
  }

  TEST_CASE("determinism") {
    auto spec = P("abg(1,1,1) x abg(1,1,1)@[[9,0],[0,1]]");
    CHECK(extract_apU(spec, 13) == extract_apU(spec, 13));
    auto a = extract_range(spec, 40, 1), b = extract_range(spec, 40, 4);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].p == b[i].p);
      CHECK(a[i].record == b[i].record);
      CHECK(a[i].skipped == b[i].skipped);
    }
    // counting does not depend on which side is called left
    auto swapped = P("abg(1,1,1)@[[9,0],[0,1]] x abg(1,1,1)");
    CHECK(count_product(spec, 13).W == count_product(swapped, 13).W);
    CHECK(count_product(spec, 13).nodes == count_product(swapped, 13).nodes);
  }

  TEST_CASE("ledger TSV and cache") {
    TraceRecord r{17, 5000, 12, 5204, 3, 3, 0, -8};
    CHECK(parse_tsv(to_tsv(r)) == r);
    std::stringstream ss;
    ss << ledger_header() << "\n" << to_tsv(r) << "\n# comment\n" << to_tsv(TraceRecord{19, 1, 2, 39, 0, 0, 0, 4}) << "\n";
    auto v = read_ledger(ss);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == r);
    CHECK_THROWS_AS(parse_tsv("1\t2\t3"), Error);

    auto path = (std::filesystem::temp_directory_path() / "cymod_cache_test.tsv").string();
    std::filesystem::remove(path);
    auto spec = P("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]");
    {
      LedgerCache cache(path);
      CHECK(!cache.find(spec.to_string(), 5));
      auto first = extract_range(spec, 12, 2, &cache);
      CHECK(cache.find(spec.to_string(), 5));
    }
    LedgerCache reloaded(path);
    auto hit = reloaded.find(spec.to_string(), 7);
    REQUIRE(hit);
    CHECK(*hit == extract_apU(spec, 7));
    std::filesystem::remove(path);
  }
}
