#include <doctest.h>

#include <cmath>
#include <set>

#include "cymod/poly.hpp"
#include "cymod/projective.hpp"
#include "helpers.hpp"

using namespace cymod;
using namespace testing_util;

TEST_SUITE("projq") {
  TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.num() == Integer(-3));
    CHECK(r.den() == Integer(2));
    CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  }

  TEST_CASE("quadratic arithmetic stays in its field and matches floating evaluation") {
    for (int i = 0; i < 200; ++i) {
      long d = std::vector<long>{-3, -2, -1, 2, 3, 5, 7}[uniform(0, 6)];
      QuadElem x(random_rational(), random_rational(), d), y(random_rational(), random_rational(), d);
      auto f = [&](const QuadElem& q) { return q.a().to_double() + q.b().to_double() * std::sqrt(double(d)); };
      CHECK((x * y).d() == d);
      if (d > 0) {
        CHECK(std::abs(f(x * y) - f(x) * f(y)) < 1e-9 * (1 + std::abs(f(x) * f(y))));
        CHECK(std::abs(f(x + y) - (f(x) + f(y))) < 1e-9 * (1 + std::abs(f(x) + f(y))));
        if (!y.is_zero()) CHECK(std::abs(f(x / y) - f(x) / f(y)) < 1e-9 * (1 + std::abs(f(x) / f(y))));
      }
    }
    QuadElem a(1, 1, 5), b(1, 1, -3);
    CHECK_THROWS_AS(a + b, Error);
  }

  TEST_CASE("projective points are canonical") {
    ProjPoint<Rational> p(Rational(4), Rational(2));
    CHECK(p == rp(2));
    CHECK(ProjPoint<Rational>(Rational(-3), Rational(0)) == rinf());
    CHECK_THROWS_AS(ProjPoint<Rational>(Rational(0), Rational(0)), Error);
    CHECK(BasePoint::parse("oo").is_infinity());
    CHECK(BasePoint::parse("(1/2+3/2*sqrt(-3))").field() == -3);
    BasePoint q = BasePoint::of(QuadElem(Rational(-11, 2), Rational(5, 2), 5));
    CHECK(BasePoint::parse(q.to_string()) == q);
  }

  TEST_CASE("moebius apply") {
    Moebius m(9, 0, 10, -9);
    CHECK(m.apply(rp(1)) == rp(9));
    CHECK(m.apply(rinf()) == rp(9, 10));
    for (long v : {-3L, 0L, 7L}) CHECK(Moebius().apply(rp(v)) == rp(v));
    CHECK(Moebius().apply(rinf()) == rinf());
  }

  TEST_CASE("moebius canonical form, compose, invert") {
    CHECK(Moebius(2, 4, 6, 8) == Moebius(1, 2, 3, 4));
    CHECK(Moebius(-2, 4, 6, 8) == Moebius(1, -2, -3, -4));
    CHECK(Moebius(0, -1, 1, 0) == Moebius(0, 1, -1, 0));
    CHECK_THROWS_AS(Moebius(1, 2, 2, 4), Error);
    CHECK(Moebius().inverse() == Moebius());
    CHECK(Moebius(0, 1, 1, 0) * Moebius(-1, 1, 0, 1) == Moebius(0, 1, -1, 1));
    for (int i = 0; i < 200; ++i) {
      Moebius m = random_moebius(), n = random_moebius();
      CHECK(m * m.inverse() == Moebius());
      auto t = ProjPoint<Rational>::finite(random_rational());
      CHECK((m * n).apply(t) == m.apply(n.apply(t)));
      CHECK(m.inverse().apply(m.apply(t)) == t);
      // scaling does not change the action
      Moebius scaled(m(0, 0) * Integer(3), m(0, 1) * Integer(3), m(1, 0) * Integer(3), m(1, 1) * Integer(3));
      CHECK(scaled == m);
    }
    CHECK(Moebius::parse("[[9,0],[10,-9]]") == Moebius(9, 0, 10, -9));
    CHECK(Moebius::parse(Moebius(81, -25, 0, 56).to_string()) == Moebius(81, -25, 0, 56));
    CHECK_THROWS_AS(Moebius::parse("[[1,2],[3]]"), Error);
  }

  TEST_CASE("cross ratio") {
    CHECK(cross_ratio(rinf(), rp(0), rp(1), rp(9)) == Rational(9));
    CHECK_THROWS_AS(cross_ratio(rp(0), rp(1), rp(1), rp(9)), Error);
    Moebius m(2, 3, 0, 1);
    CHECK(cross_ratio(m.apply(rinf()), m.apply(rp(0)), m.apply(rp(1)), m.apply(rp(9))) == Rational(9));
    // (0,1,oo,lambda) = (lambda-1)/lambda
    Rational lam(Integer(7), Integer(3));
    CHECK(cross_ratio(rp(0), rp(1), rinf(), ProjPoint<Rational>::finite(lam)) == (lam - Rational(1)) / lam);
  }

  TEST_CASE("cross ratio is Moebius invariant on random inputs") {
    int done = 0;
    while (done < 1000) {
      std::set<Rational> vals;
      while (vals.size() < 4) vals.insert(random_rational(30));
      std::vector<ProjPoint<Rational>> pts;
      for (const auto& v : vals) pts.push_back(ProjPoint<Rational>::finite(v));
      if (uniform(0, 3) == 0) pts[uniform(0, 3)] = rinf();
      Moebius m = random_moebius();
      Rational before = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
      Rational after = cross_ratio(m.apply(pts[0]), m.apply(pts[1]), m.apply(pts[2]), m.apply(pts[3]));
      CHECK(before == after);
      CHECK(!before.is_zero());
      CHECK(before != Rational(1));
      ++done;
    }
  }

  TEST_CASE("j of lambda") {
    CHECK(j_of_lambda(Rational(9)) == Rational(Integer(389017), Integer(5184)));
    CHECK(Rational(Integer(389017), Integer(5184)) == pow(Rational(73), 3) / (Rational(64) * Rational(81)));
    CHECK(j_of_lambda(Rational(-1)) == Rational(Integer(27), Integer(4)));
    CHECK(j_of_lambda(Rational(2)) == Rational(Integer(27), Integer(4)));
    CHECK(j_of_lambda(Rational(Integer(1), Integer(2))) == Rational(Integer(27), Integer(4)));
    CHECK_THROWS_AS(j_of_lambda(Rational(0)), Error);
    CHECK_THROWS_AS(j_of_lambda(Rational(1)), Error);
  }

  TEST_CASE("j is S3 invariant on random inputs") {
    const Rational one(1);
    for (int i = 0; i < 1000; ++i) {
      Rational l = random_rational(40);
      if (l.is_zero() || l == one) continue;
      Rational j = j_of_lambda(l);
      CHECK(j_of_lambda(one / l) == j);
      CHECK(j_of_lambda(one - l) == j);
      CHECK(j_of_lambda(l / (l - one)) == j);
      CHECK(j_of_lambda(one - one / l) == j);
      CHECK(j_of_lambda(one / (one - l)) == j);
    }
  }

  TEST_CASE("j of four points is S4 invariant on random inputs") {
    std::vector<ProjPoint<Rational>> base = {rinf(), rp(0), rp(1), rp(9)};
    std::vector<int> idx = {0, 1, 2, 3};
    do {
      CHECK(j_of_points(base[idx[0]], base[idx[1]], base[idx[2]], base[idx[3]]) ==
            Rational(Integer(389017), Integer(5184)));
    } while (std::next_permutation(idx.begin(), idx.end()));

    for (int i = 0; i < 1000; ++i) {
      std::set<Rational> vals;
      while (vals.size() < 4) vals.insert(random_rational(30));
      std::vector<ProjPoint<Rational>> p;
      for (const auto& v : vals) p.push_back(ProjPoint<Rational>::finite(v));
      std::vector<int> perm = {0, 1, 2, 3};
      std::shuffle(perm.begin(), perm.end(), rng());
      CHECK(j_of_points(p[0], p[1], p[2], p[3]) == j_of_points(p[perm[0]], p[perm[1]], p[perm[2]], p[perm[3]]));
    }
  }

  TEST_CASE("rational roots substitute to zero") {
    // (x - 17)(x + 5/4)(9x - 7)(x^2 + 1)
    Poly f = Poly::root(Rational(17)) * Poly::root(Rational(Integer(-5), Integer(4))) *
             Poly({Rational(-7), Rational(9)}) * Poly({Rational(1), Rational(0), Rational(1)});
    auto roots = rational_roots(f);
    CHECK(roots.size() == 3);
    for (const auto& r : roots) CHECK(f(r).is_zero());
  }
}
