#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cymod/formmatch.hpp"
#include "cymod/tables.hpp"
#include "helpers.hpp"

using namespace cymod;
using namespace testing_util;

namespace {

std::vector<NewformEntry> seed_db() { return load_db(std::string(CYMOD_DATA_DIR) + "/forms.txt"); }

const NewformEntry& entry(const std::vector<NewformEntry>& db, i64 level, const std::string& label = "a") {
  auto it = std::find_if(db.begin(), db.end(), [&](const auto& e) { return e.level == level && e.label == label; });
  REQUIRE(it != db.end());
  return *it;
}

const EntryMatch& find_match(const MatchReport& r, i64 level, const std::string& label = "a") {
  auto it = std::find_if(r.candidates.begin(), r.candidates.end(), [&](const auto& m) { return m.level == level && m.label == label; });
  REQUIRE(it != r.candidates.end());
  return *it;
}

const std::map<i64, i64> level32 = {{3, -8}, {5, -10}, {7, -16}, {11, 40}};

}  // namespace

TEST_SUITE("formmatch") {
  TEST_CASE("parsing") {
    std::istringstream in("# seed\n32 4 a : 1 0 -8 0 -10 0 -16 0 37 0 40\n90 4 a : 1 -2 0\n90 4 b : 1 -2 ? 4\n");
    auto db = parse_db(in);
    REQUIRE(db.size() == 3);
    CHECK(db[0].a(3) == -8);
    CHECK(db[0].a(11) == 40);
    CHECK(!db[0].a(13));
    CHECK(db[1].label != db[2].label);
    CHECK(!db[2].a(3));
    CHECK(db[2].a(4) == 4);
    std::istringstream back(db[0].to_line());
    CHECK(parse_db(back).at(0) == db[0]);

    std::istringstream bad_a1("32 4 a : 2 0 -8\n");
    CHECK_THROWS_AS(parse_db(bad_a1), Error);
    std::istringstream dup("32 4 a : 1 0\n32 4 a : 1 0\n");
    CHECK_THROWS_AS(parse_db(dup), Error);
    std::istringstream junk("32 4 a 1 0\n");
    CHECK_THROWS_AS(parse_db(junk), Error);
    std::istringstream weight("32 3 a : 1\n");
    CHECK_THROWS_AS(parse_db(weight), Error);
  }

  TEST_CASE("seed database") {
    auto db = seed_db();
    CHECK(entry(db, 32).a(3) == -8);
    CHECK(entry(db, 90, "a").a(5) == -5);
    CHECK(entry(db, 90, "b").a(5) == 5);
    CHECK(entry(db, 35).a(2) == 1);
  }

  TEST_CASE("level-32 sequence is consistent") {
    auto db = seed_db();
    auto r = match_sequence(level32, db, {});
    const auto& m = find_match(r, 32);
    CHECK(m.verdict == MatchVerdict::Consistent);
    CHECK(m.agreeing.size() == 4);
    CHECK(r.candidates.front().level == 32);

    // p = 3 marked bad leaves three agreeing primes
    auto r3 = match_sequence(level32, db, {3});
    CHECK(find_match(r3, 32).agreeing == std::vector<i64>{5, 7, 11});
    CHECK(find_match(r3, 32).verdict == MatchVerdict::Consistent);
  }

  TEST_CASE("level-35 skips primes dividing the level") {
    auto db = seed_db();
    auto r = match_sequence({{2, 1}, {3, -8}, {5, 3}, {7, 100}, {11, 0}}, db, {});
    const auto& m = find_match(r, 35);
    CHECK(m.compared == std::vector<i64>{2, 3});
    CHECK(m.verdict != MatchVerdict::Refuted);
    for (const auto& [p, why] : m.skipped)
      if (p == 5 || p == 7) CHECK(why == "divides level");
  }

  TEST_CASE("a perturbed trace refutes") {
    auto db = seed_db();
    for (auto [p, a] : level32) {
      auto bumped = level32;
      bumped[p] = a + 1;
      auto r = match_sequence(bumped, db, {});
      const auto& m = find_match(r, 32);
      CHECK(m.verdict == MatchVerdict::Refuted);
      REQUIRE(m.mismatches.size() == 1);
      CHECK(m.mismatches[0] == Mismatch{p, a, a + 1});
    }
  }

  TEST_CASE("verdicts are monotone in the prime set") {
    auto db = seed_db();
    std::map<i64, i64> seq = {{3, -8}, {5, -10}, {7, -16}, {11, 41}};
    for (i64 cut : {5, 7, 11, 13}) {
      std::map<i64, i64> prefix;
      for (auto [p, a] : seq)
        if (p < cut) prefix[p] = a;
      MatchReport r;
      try {
        r = match_sequence(prefix, db, {});
      } catch (const Error&) {
        continue;
      }
      auto v = find_match(r, 32).verdict;
      if (cut <= 11) CHECK(v != MatchVerdict::Refuted);
      else CHECK(v == MatchVerdict::Refuted);
    }
  }

  TEST_CASE("ranking does not depend on database order") {
    auto db = seed_db();
    auto a = match_sequence(level32, db, {});
    std::reverse(db.begin(), db.end());
    auto b = match_sequence(level32, db, {});
    CHECK(a == b);
    for (size_t i = 1; i < a.candidates.size(); ++i) CHECK(a.candidates[i - 1].agreeing.size() >= a.candidates[i].agreeing.size());
  }

  TEST_CASE("consistent verdicts never compare bad primes or level divisors") {
    auto db = seed_db();
    std::map<i64, i64> seq;
    for (i64 p : primes_up_to(50)) seq[p] = (p * 7) % 5 - 2;
    auto r = match_sequence(seq, db, {7, 11});
    for (const auto& m : r.candidates)
      for (i64 p : m.compared) {
        CHECK(m.level % p != 0);
        CHECK(p != 7);
        CHECK(p != 11);
      }
  }

  TEST_CASE("too few comparable primes") { CHECK_THROWS_AS(match_sequence({{3, -8}}, seed_db(), {}), Error); }

  TEST_CASE("match against an extracted ledger") {
    auto spec = ProductSpec::parse("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]");
    std::vector<TraceRecord> recs;
    for (const auto& o : extract_range(spec, 12))
      if (o.record) recs.push_back(*o.record);
    auto r = match(recs, seed_db(), bad_prime_set(spec));
    const auto& m = find_match(r, 32);
    CHECK(m.verdict == MatchVerdict::Consistent);
    CHECK(m.agreeing == std::vector<i64>{5, 7, 11});
  }

  TEST_CASE("Hecke relations on stored coefficients") {
    auto db = seed_db();
    CHECK(entry(db, 32).a(9) == 37);
    CHECK(37 == (-8) * (-8) - 27);
    i64 bad = 0;
    for (const auto& e : db) {
      CAPTURE(e.to_line());
      CHECK(multiplicativity_check(e, &bad));
    }
    // 3 | 480, so a_9 = a_3^2
    CHECK(entry(db, 480).a(9) == 9);
    NewformEntry broken = entry(db, 32);
    broken.coeffs[9] = 36;
    CHECK(!multiplicativity_check(broken, &bad));
    CHECK(bad == 9);
    NewformEntry product_broken = entry(db, 90, "a");
    product_broken.coeffs[10] = 11;
    CHECK(!multiplicativity_check(product_broken, &bad));
    CHECK(bad == 10);
    NewformEntry sparse = entry(db, 10);
    CHECK(!sparse.a(6));
    CHECK(multiplicativity_check(sparse));
  }

  TEST_CASE("fixture tables") {
    auto rows = load_table(table_path(2));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].level == 17);
    CHECK(rows[0].h12 == 1);
    auto path = (std::filesystem::temp_directory_path() / "cymod_bad_table.txt").string();
    std::ofstream(path) << "17 | 1 | a\n";
    CHECK_THROWS_AS(load_table(path), Error);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify a row") {
    auto db = seed_db();
    auto rows = load_table(table_path(1));
    auto res = verify_row(rows[0], db, 40, 1, nullptr);
    CHECK(res.status == RowStatus::Pass);
    REQUIRE(res.match);
    CHECK(res.match->verdict == MatchVerdict::Consistent);
    TableRow wrong = rows[0];
    wrong.h12 = 3;
    CHECK(verify_row(wrong, db, 40, 1, nullptr).status == RowStatus::Fail);
  }
}
