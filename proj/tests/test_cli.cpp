#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "cymod/records.hpp"
#include "helpers.hpp"

using namespace cymod;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CYMOD_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_SUITE("records") {
  TEST_CASE("defect report round trip") {
    auto r = analyze(ProductSpec::parse("abg(1,1,1) x abg(1,1,1)@[[9,0],[0,1]]"));
    json j = r;
    CHECK(j.get<DefectReport>() == r);
    CHECK(json::parse(j.dump()).get<DefectReport>() == r);
    CHECK(j["h12"] == 2);
  }

  TEST_CASE("trace record round trip") {
    auto rec = extract_apU(ProductSpec::parse("abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]"), 7);
    json j = rec;
    CHECK(j.get<TraceRecord>() == rec);
    CHECK(j["apU"] == -16);
  }

  TEST_CASE("candidate and match report round trip") {
    auto res = case_a_search();
    for (const auto& c : res.rows) {
      json j = c;
      CHECK(same_candidate(candidate_from_json(json::parse(j.dump())), c));
    }
    std::istringstream db("32 4 a : 1 0 -8 0 -10 0 -16 0 37 0 40\n17 4 a : 1 -3 -8\n");
    auto m = match_sequence({{3, -8}, {5, -10}, {7, -16}, {11, 40}}, parse_db(db), {});
    json j = m;
    CHECK(json::parse(j.dump()).get<MatchReport>() == m);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("analyze") {
    auto r = run("analyze 'abg(1,1,16) x abg(4,4,4)' --no-traces");
    CHECK(r.code == 0);
    CHECK(r.out.find("delta = 0") != std::string::npos);
    CHECK(r.out.find("h12 = 1") != std::string::npos);
    r = run("--output records analyze 'abg(1,1,1) x abg(1,1,1)@[[9,0],[0,1]]' --no-traces");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["report"]["h12"] == 2);
    CHECK(j["report"]["delta"] == 0);
  }

  TEST_CASE("usage and input errors") {
    CHECK(run("").code == 2);
    CHECK(run("analyze 'abg(1,1) x abg(1,1,1)'").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("count 'abg(1,1,1) x abg(1,1,1)' --primes 1").code == 2);
  }

  TEST_CASE("count emits a ledger with skipped primes") {
    auto r = run("count 'abg(1,-1/8,-1/8) x abg(1,-1/8,-1/8)@[[-1,1],[0,1]]' --primes 12");
    CHECK(r.code == 0);
    CHECK(r.out.find("# 2 skipped") != std::string::npos);
    std::istringstream in(r.out);
    auto ledger = read_ledger(in);
    REQUIRE(ledger.size() == 3);
    CHECK(ledger[0].p == 5);
    CHECK(ledger[0].apU == -10);
  }

  TEST_CASE("match exit codes") {
    auto good = temp_file("cymod_cli_good.tsv", ledger_header() + "\n" + to_tsv({3, 0, 0, 0, 0, 0, 0, -8}) + "\n" +
                                                    to_tsv({5, 0, 0, 0, 0, 0, 0, -10}) + "\n" + to_tsv({7, 0, 0, 0, 0, 0, 0, -16}) + "\n");
    auto r = run("match --traces " + good);
    CHECK(r.code == 0);
    CHECK(r.out.find("32") != std::string::npos);
    auto bad = temp_file("cymod_cli_bad.tsv", ledger_header() + "\n" + to_tsv({3, 0, 0, 0, 0, 0, 0, 1000}) + "\n" +
                                                  to_tsv({5, 0, 0, 0, 0, 0, 0, 1000}) + "\n" + to_tsv({7, 0, 0, 0, 0, 0, 0, 1000}) + "\n" +
                                                  to_tsv({11, 0, 0, 0, 0, 0, 0, 1000}) + "\n");
    CHECK(run("match --traces " + bad).code == 1);
    CHECK(run("match --traces /nonexistent/ledger.tsv").code != 0);
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
  }

  TEST_CASE("search and catalog") {
    auto r = run("search --case A");
    CHECK(r.code == 0);
    CHECK(r.out.find("abg(1,9/4,9/4)") != std::string::npos);
    r = run("--output records search --case B");
    CHECK(r.code == 0);
    CHECK(r.out.find("no rational solutions") != std::string::npos);
    r = run("catalog");
    CHECK(r.code == 0);
    CHECK(r.out.find("gamma0_9_gamma1_3") != std::string::npos);
  }

  TEST_CASE("catalog aliases") {
    auto path = temp_file("cymod_aliases.txt", "# aliases\nsix = abg(1,1,1)\nninet = abg(1,1,1)@[[9,0],[0,1]]\n");
    auto r = run("--catalog " + path + " analyze 'six x ninet' --no-traces");
    CHECK(r.code == 0);
    CHECK(r.out.find("h12 = 2") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("verify a fixture table") {
    auto r = run("verify --table 1 --primes 40");
    CHECK(r.code == 0);
    CHECK(r.out.find("480") != std::string::npos);
    CHECK(run("verify --table 9").code != 0);
  }
}
