#include "dispatch.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lpcoh/json_io.hpp"
#include "lpcoh/strip.hpp"

using lpcoh::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = lpcoh::cli::dispatch(std::vector<std::string>(args), out, err);
  return RunResult{code, out.str(), err.str()};
}

json result_of(const RunResult& r) {
  json envelope = json::parse(r.out);
  REQUIRE(envelope.contains("schema_version"));
  REQUIRE(envelope["schema_version"] == 1);
  REQUIRE(envelope.contains("command"));
  REQUIRE(envelope.contains("warnings"));
  return envelope["result"];
}

}  // namespace

TEST_CASE("query: lower-tail vanishing of SL(4,R) at p=2, k=2") {
  RunResult r = run({"query", "SL(4,R)", "--p", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VanishesUnreduced") != std::string::npos);
  CHECK(r.out.find("lower-tail") != std::string::npos);
}

TEST_CASE("good-roots: E8 has none") {
  RunResult r = run({"good-roots", "E8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("none") != std::string::npos);
}

TEST_CASE("strip: SO(1,5) degenerates to the hyperbolic line of width 2") {
  RunResult r = run({"strip", "SO(1,5)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d-1 = dim N = 4") != std::string::npos);
  CHECK(r.out.find("D = dim X = 5") != std::string::npos);
  CHECK(r.out.find("width D-d+2 = 2") != std::string::npos);
}

TEST_CASE("strip honors --gamma") {
  RunResult r = run({"strip", "SO(5,5)", "--gamma", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chosen good root: alpha_1") != std::string::npos);
  CHECK(r.out.find("d-1 = dim N = 8") != std::string::npos);
}

TEST_CASE("roots: JSON dump round-trips the schema") {
  RunResult r = run({"--format", "json", "roots", "BC2", "--full"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  CHECK(payload["type"] == "BC2");
  CHECK(payload["rank"] == 2);
  CHECK(payload["count"] == 6);
  REQUIRE(payload.contains("positive"));
  CHECK(payload["positive"].size() == 6);
  for (const json& root : payload["positive"]) {
    CHECK(root.contains("ambient"));
    CHECK(root.contains("coeffs"));
    CHECK(root.contains("sq_length"));
  }
}

TEST_CASE("strip: JSON payload parses back to the same report") {
  RunResult r = run({"--format", "json", "strip", "E7^7"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  lpcoh::StripReport report = lpcoh::strip_report_from_json(payload);
  CHECK(lpcoh::to_json(report) == payload);
  CHECK(payload["d_minus_1"] == 27);
  CHECK(payload["D"] == 70);
  CHECK(payload["width"] == 44);
}

TEST_CASE("query: JSON payload parses back to the same status") {
  RunResult r = run({"--format", "json", "query", "SU(3,3)", "--p", "100", "--k", "1"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  CHECK(payload["verdict"] == "VanishesUnreduced");
  CHECK(payload["reason"] == "degree-one-corollary");
  lpcoh::CohomologyStatus st = lpcoh::cohomology_status_from_json(payload);
  json again = lpcoh::to_json(st);
  CHECK(again["verdict"] == payload["verdict"]);
  CHECK(again["reason"] == payload["reason"]);
}

TEST_CASE("good-roots: JSON payload parses back to the same report") {
  RunResult r = run({"--format", "json", "good-roots", "E7"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  lpcoh::GoodRootReport report = lpcoh::good_root_report_from_json(payload);
  CHECK(lpcoh::to_json(report) == payload);
  CHECK(report.good_roots == std::vector<int>{7});
  CHECK(report.per_root_max_coeff.at(4) == 4);
}

TEST_CASE("classify: JSON entries carry the catalog fields") {
  RunResult r = run({"--format", "json", "classify", "--max-rank", "3"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  CHECK(payload["max_rank"] == 3);
  bool saw_e73 = false;
  for (const json& entry : payload["entries"]) {
    CHECK(entry.contains("group"));
    CHECK(entry.contains("cartan"));
    CHECK(entry.contains("rank"));
    CHECK(entry.contains("admissible"));
    CHECK(entry.contains("good_roots"));
    if (entry["rep"] == "E7^3") {
      saw_e73 = true;
      CHECK(entry["admissible"] == true);
      CHECK(entry["relative"] == "C3");
      CHECK(entry["good_roots"] == json::array({3}));
    }
  }
  CHECK(saw_e73);
}

TEST_CASE("hyp subcommand") {
  RunResult r = run({"hyp", "--d", "3", "--p", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("zero=false") != std::string::npos);
  CHECK(r.out.find("hausdorff=false") != std::string::npos);

  RunResult rj = run({"--format", "json", "hyp", "--d", "4", "--p", "2", "--k", "2"});
  REQUIRE(rj.code == 0);
  json payload = result_of(rj);
  lpcoh::HypStatus st = lpcoh::hyp_status_from_json(payload);
  CHECK_FALSE(st.zero);
  CHECK(st.hausdorff);
}

TEST_CASE("scan covers every degree up to D") {
  RunResult r = run({"--format", "json", "scan", "SL(4,R)", "--p", "2"});
  REQUIRE(r.code == 0);
  json payload = result_of(r);
  CHECK(payload["D"] == 9);
  REQUIRE(payload["statuses"].size() == 10);
  CHECK(payload["statuses"][0]["reason"] == "degree-zero");
  CHECK(payload["statuses"][7]["verdict"] == "VanishesReducedOnly");
  CHECK(payload["statuses"][9]["reason"] == "degree-geq-D");
}

TEST_CASE("classify text output flags non-admissible rows") {
  RunResult r = run({"classify", "--max-rank", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("admissible     SU(2,2)") != std::string::npos);
  CHECK(r.out.find("non-admissible SU(2,q) q>2") != std::string::npos);
  CHECK(r.out.find("non-admissible G2^2") != std::string::npos);
}

TEST_CASE("tables --check passes on a clean build") {
  RunResult r = run({"tables", "--check"});
  CHECK(r.code == 0);
  CHECK(r.err.find("every cell matches") != std::string::npos);
}

TEST_CASE("tables renders csv and json") {
  RunResult csv = run({"tables", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("table,group,", 0) == 0);

  RunResult js = run({"tables", "--format", "json"});
  CHECK(js.code == 0);
  json envelope = json::parse(js.out);
  CHECK(envelope["result"].size() == 17);
  // the proportion-column note rides along as a warning
  bool found = false;
  for (const json& w : envelope["warnings"])
    if (w.get<std::string>().find("(d-2)/D") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("db --dump round-trips through --load") {
  RunResult dump = run({"db", "--dump"});
  REQUIRE(dump.code == 0);
  json parsed = json::parse(dump.out);
  CHECK(parsed.is_array());
  CHECK(parsed.size() == 25);

  std::string path = "lpcoh_db_test.json";
  {
    std::ofstream f(path);
    f << dump.out;
  }
  RunResult load = run({"db", "--load", path});
  CHECK(load.code == 0);
  CHECK(load.out.find("database valid") != std::string::npos);

  // corrupt it: drop a rule
  parsed.erase(parsed.begin());
  {
    std::ofstream f(path);
    f << parsed.dump();
  }
  RunResult bad = run({"db", "--load", path});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("InvalidDatabase") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("domain errors exit 1 with the error name") {
  RunResult r = run({"strip", "SU(2,3)"});
  CHECK(r.code == 1);
  CHECK(r.err.find("NotAdmissible") != std::string::npos);

  RunResult p = run({"strip", "XX(2)"});
  CHECK(p.code == 1);
  CHECK(p.err.find("ParseError") != std::string::npos);

  RunResult c = run({"strip", "SO(0,5)"});
  CHECK(c.code == 1);
  CHECK(c.err.find("CompactGroup") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hyp", "--d", "3"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"db"}).code == 2);
  CHECK(run({"db", "--dump", "--load", "x.json"}).code == 2);
}

TEST_CASE("isogeny warnings surface as notes") {
  RunResult r = run({"strip", "SO(1,2)"});
  CHECK(r.code == 0);
  CHECK(r.err.find("note:") != std::string::npos);
  RunResult quiet = run({"--quiet", "strip", "SO(1,2)"});
  CHECK(quiet.err.empty());
}
