#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrw/cli.hpp"
#include "rrw/identities.hpp"
#include "rrw/report_json.hpp"

using namespace rrw;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const RunConfig& c) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string golden(const char* name) { return slurp(std::string(RRW_SOURCE_DIR) + "/tests/golden/" + name); }

std::filesystem::path scratch_file(const char* name) { return std::filesystem::temp_directory_path() / name; }

RunConfig table(const char* id, int n, std::optional<int> m = std::nullopt, const char* sig = nullptr) {
  RunConfig c;
  c.command = Command::table;
  c.id = id;
  c.n = n;
  c.param = m;
  if (sig) c.signature = sig;
  return c;
}

}  // namespace

TEST_CASE("verify all at order 60") {
  RunConfig c;
  c.command = Command::verify;
  c.order = 60;
  const auto r = call(c);
  CHECK(r.code == exit_code::ok);
  CHECK(r.err.empty());

  std::size_t instances = 0;
  for (const auto& e : catalog()) instances += e.parameter ? e.sweep().size() : 1;
  std::istringstream lines(r.out);
  std::string line;
  std::size_t pass = 0;
  while (std::getline(lines, line)) pass += line.rfind("PASS ", 0) == 0 ? 1 : 0;
  CHECK(pass == instances);
  CHECK(r.out.find(std::to_string(instances) + " passed, 0 failed\n") != std::string::npos);
  // entries with explicit terms past q^60 are raised to their own floor
  CHECK(r.out.find("PASS twvx14thm order=80\n") != std::string::npos);
}

TEST_CASE("verify JSON parses back into reports") {
  RunConfig c;
  c.command = Command::verify;
  c.id = "partM";
  c.order = 40;
  c.format = Format::json;
  const auto r = call(c);
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("failed") == 0);
  const auto& reports = j.at("reports");
  CHECK(reports.size() == catalog_entry("partM").sweep().size());
  for (const auto& item : reports) {
    const auto back = item.get<VerificationReport>();
    CHECK(back.passed);
    CHECK(back.order == 40);
    CHECK(nlohmann::json(back) == item);
  }
}

TEST_CASE("usage errors happen before any computation") {
  RunConfig c;
  c.command = Command::verify;
  c.id = "nope";
  auto r = call(c);
  CHECK(r.code == exit_code::usage);
  CHECK(r.out.empty());
  CHECK(r.err.find("nope") != std::string::npos);

  c.id = "twopartM";
  c.param = 3;
  CHECK(call(c).code == exit_code::usage);

  c.id = "RR1";
  c.param.reset();
  c.order = 29;
  CHECK(call(c).code == exit_code::usage);

  c.order = 60;
  c.format = Format::csv;
  CHECK(call(c).code == exit_code::usage);

  CHECK(call(table("nosuch", 10)).code == exit_code::usage);
  CHECK(call(table("generalminithm", 22, 2, "(1,1)")).code == exit_code::usage);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("RRW_ORDER sets the default order") {
  ::setenv(kOrderEnv, "45", 1);
  CHECK(default_order() == 45);
  RunConfig c;
  c.command = Command::verify;
  c.id = "RR2";
  CHECK(call(c).out.find("order=45") != std::string::npos);
  ::setenv(kOrderEnv, "sixty", 1);
  CHECK(call(c).code == exit_code::usage);
  ::setenv(kOrderEnv, "12", 1);
  CHECK(call(c).code == exit_code::usage);
  ::unsetenv(kOrderEnv);
  CHECK(default_order() == kDefaultOrder);
}

TEST_CASE("enumerate") {
  RunConfig c;
  c.command = Command::enumerate;
  c.class_name = "diff2_star";
  c.n = 0;
  auto r = call(c);
  CHECK(r.code == 0);
  CHECK(r.out == "()\n");

  c.class_name = "congruence";
  c.residues = {1, 4};
  c.n = 6;
  CHECK(call(c).out == "(6)\n(4,1^2)\n(1^6)\n");
  c.format = Format::csv;
  CHECK(call(c).out == "partition\n\"6\"\n\"4,1^2\"\n\"1^6\"\n");
  c.format = Format::json;
  const auto j = nlohmann::json::parse(call(c).out);
  CHECK(j.at("count") == 3);

  c.class_name = "odd";
  CHECK(call(c).code == exit_code::usage);
  c.class_name = "congruence";
  c.residues.clear();
  CHECK(call(c).code == exit_code::usage);
}

TEST_CASE("tables match the golden files") {
  CHECK(call(table("generalminithm", 22, 2, "(2)")).out == golden("generalminithm_M2_n22_k2.txt"));
  CHECK(call(table("generalmini14thm", 23, 3, "(3)")).out == golden("generalmini14thm_M3_n23_k3.txt"));
  CHECK(call(table("firstbigcomb", 22)).out == golden("firstbigcomb_n22.txt"));
  const auto big = call(table("bigcomb", 19));
  CHECK(big.code == 0);
  CHECK(big.out == golden("bigcomb_n19.txt"));
  auto csv = table("bigcomb", 19);
  csv.format = Format::csv;
  CHECK(call(csv).out == golden("bigcomb_n19.csv"));
}

TEST_CASE("a table with non-singleton classes is refused with its counts") {
  const auto r = call(table("generalminithm", 22, 2));
  CHECK(r.code == exit_code::failure);
  CHECK(r.out.empty());
  CHECK(r.err.find("(2) 5") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  auto c = table("firstbigcomb", 22);
  c.format = Format::json;
  CHECK(call(c).out == call(c).out);
  RunConfig rc;
  rc.command = Command::refine_check;
  rc.n_max = 20;
  CHECK(call(rc).out == call(rc).out);
}

TEST_CASE("refine-check") {
  RunConfig c;
  c.command = Command::refine_check;
  c.id = "firstbigcomb";
  auto r = call(c);
  CHECK(r.code == 0);
  CHECK(r.out == "PASS firstbigcomb n=0..40\n1 passed, 0 failed\n");
  c.id = "spec2";
  CHECK(call(c).out.rfind("PASS spec2 n=27..40\n", 0) == 0);
  c.id = "general2partcor";
  c.param = 7;
  c.format = Format::json;
  const auto j = nlohmann::json::parse(call(c).out);
  CHECK(j.at("reports").at(0).at("status") == "pass");
}

TEST_CASE("discover") {
  RunConfig c;
  c.command = Command::discover;
  c.problem = std::string(RRW_SOURCE_DIR) + "/problems/miniprop.txt";
  auto r = call(c);
  CHECK(r.code == 0);
  CHECK(r.out.find("N2 = t + q\n") != std::string::npos);

  c.problem = "/nonexistent.txt";
  CHECK(call(c).code != 0);

  const auto bad = scratch_file("rrw_inconsistent.txt");
  std::ofstream(bad) << "target RR2\nfixed RR2 tail\nfixed term shift=0 numerator=1\n";
  c.problem = bad.string();
  r = call(c);
  CHECK(r.code == exit_code::failure);
  CHECK(r.out.find("inconsistent") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("overflow has its own exit code") {
  const auto big = scratch_file("rrw_overflow.txt");
  std::ofstream(big) << "target RR2\nfixed term shift=0 numerator=9223372036854775807 denominator=q\n"
                     << "fixed term shift=0 numerator=9223372036854775807 denominator=q\n";
  RunConfig c;
  c.command = Command::discover;
  c.problem = big.string();
  const auto r = call(c);
  CHECK(r.code == exit_code::overflow);
  CHECK(r.err.find("overflow") != std::string::npos);
  std::filesystem::remove(big);
}

TEST_CASE("output file") {
  const auto path = scratch_file("rrw_table.txt");
  auto c = table("bigcomb", 19);
  c.output = path.string();
  const auto r = call(c);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path.string()) == golden("bigcomb_n19.txt"));
  std::filesystem::remove(path);
}
