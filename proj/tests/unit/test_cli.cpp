#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "eopart/cli.hpp"
#include "eopart/json_io.hpp"

using namespace eopart;
using namespace eopart::cli;

namespace {

struct Result {
  VerdictSummary summary;
  std::string out;
};

Result run_config(const RunConfig& config) {
  std::ostringstream os;
  Result r;
  r.summary = run(config, os);
  r.out = os.str();
  return r;
}

RunConfig make(Command command, OutputFormat format = OutputFormat::Table) {
  RunConfig c;
  c.command = command;
  c.format = format;
  return c;
}

}  // namespace

TEST_CASE("list reproduces the G_1(9) set") {
  auto c = make(Command::List);
  c.family = Family::G;
  c.i = 1;
  c.n = 9;
  const auto r = run_config(c);
  CHECK(r.out == "9\n8+1\n7+2\n6+3\n5+3+1\n");
  CHECK(r.summary.ok());
}

TEST_CASE("identity-check at max-n 0") {
  auto c = make(Command::IdentityCheck, OutputFormat::Csv);
  c.max_n = 0;
  const auto r = run_config(c);
  CHECK(r.summary.attempted == 2);
  CHECK(r.summary.passed == 2);
  CHECK(r.out == "n,i,H,G,Gprime\n0,1,1,1,1\n0,2,1,1,1\n");
}

TEST_CASE("identity-check refined run passes") {
  auto c = make(Command::IdentityCheck);
  c.max_n = 12;
  c.refined = true;
  const auto r = run_config(c);
  CHECK(r.summary.ok());
  CHECK(r.summary.attempted > 26);
  CHECK(r.out.find("refined:") != std::string::npos);
}

TEST_CASE("json payloads re-serialize byte for byte and are deterministic") {
  std::vector<RunConfig> configs;
  {
    auto c = make(Command::List, OutputFormat::Json);
    c.family = Family::Gprime;
    c.i = 1;
    c.n = 9;
    configs.push_back(c);
  }
  {
    auto c = make(Command::IdentityCheck, OutputFormat::Json);
    c.max_n = 6;
    c.refined = true;
    configs.push_back(c);
  }
  {
    auto c = make(Command::Count, OutputFormat::Json);
    c.n = 9;
    configs.push_back(c);
  }
  {
    auto c = make(Command::RecurrenceCheck, OutputFormat::Json);
    c.max_n = 10;
    c.max_r = 2;
    c.max_s = 2;
    configs.push_back(c);
  }
  {
    auto c = make(Command::BijectionCheck, OutputFormat::Json);
    c.r = 1;
    c.s = 1;
    c.n = 9;
    configs.push_back(c);
  }
  {
    auto c = make(Command::BijectionCheck, OutputFormat::Json);
    c.max_n = 5;
    configs.push_back(c);
  }
  {
    auto c = make(Command::Series, OutputFormat::Json);
    c.i = 2;
    c.max_n = 20;
    configs.push_back(c);
  }
  {
    auto c = make(Command::Table, OutputFormat::Json);
    c.i = 1;
    c.max_n = 6;
    configs.push_back(c);
  }
  for (const auto& c : configs) {
    const auto first = run_config(c).out;
    CHECK(first == run_config(c).out);
    CHECK(nlohmann::json::parse(first).dump() + "\n" == first);
  }
}

TEST_CASE("csv payloads re-serialize byte for byte") {
  auto c = make(Command::Series, OutputFormat::Csv);
  c.i = 1;
  c.max_n = 12;
  const auto out = run_config(c).out;
  std::istringstream in(out);
  std::string line;
  std::string rebuilt;
  std::getline(in, line);
  CHECK(line == "n,coefficient");
  rebuilt += line + "\n";
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    rebuilt += std::to_string(std::stoll(line.substr(0, comma))) + "," +
               std::to_string(std::stoll(line.substr(comma + 1))) + "\n";
  }
  CHECK(rebuilt == out);
  CHECK(out.find("\n9,5\n") != std::string::npos);
}

TEST_CASE("count output") {
  auto c = make(Command::Count);
  c.family = Family::H;
  c.i = 1;
  c.n = 9;
  c.r = 1;
  c.s = 1;
  CHECK(run_config(c).out == "H_1(r=1, s=1, n=9) = 3\n");
  c.r.reset();
  c.s.reset();
  CHECK(run_config(c).out == "H_1(9) = 5\n");
}

TEST_CASE("single audit serialization") {
  auto c = make(Command::BijectionCheck, OutputFormat::Json);
  c.r = 1;
  c.s = 1;
  c.n = 9;
  c.transform = "G-EvenMin";
  const auto r = run_config(c);
  const auto j = nlohmann::json::parse(r.out);
  const auto& a = j["audits"][0];
  CHECK(a["case"] == "G-EvenMin");
  CHECK(a["verdict"] == "bijective");
  CHECK(a["source_key"] == nlohmann::json{{"i", 1}, {"r", 1}, {"s", 1}, {"n", 9}});
  CHECK(a["target_key"] == nlohmann::json{{"i", 1}, {"r", 0}, {"s", 1}, {"n", 3}});
  CHECK(a["mapping"] == nlohmann::json::parse("[[[7,2],[3]]]"));
  CHECK(a["witnesses"].empty());
}

TEST_CASE("recurrence-check and bijection-check sweeps pass") {
  auto rc = make(Command::RecurrenceCheck);
  rc.max_n = 12;
  rc.max_r = 3;
  rc.max_s = 3;
  CHECK(run_config(rc).summary.ok());
  auto bc = make(Command::BijectionCheck);
  bc.max_n = 8;
  const auto r = run_config(bc);
  CHECK(r.summary.ok());
  CHECK(r.summary.attempted > 0);
}

TEST_CASE("usage errors") {
  auto c = make(Command::List);
  CHECK_THROWS_AS(run_config(c), UsageError);
  c.family = Family::H;
  CHECK_THROWS_AS(run_config(c), UsageError);
  c.i = 3;
  c.n = 4;
  CHECK_THROWS_AS(run_config(c), UsageError);

  auto count = make(Command::Count);
  count.n = 4;
  count.r = 1;
  CHECK_THROWS_AS(run_config(count), UsageError);
  count.s = 1;
  count.family = Family::Gprime;
  CHECK_THROWS_AS(run_config(count), UsageError);

  auto bc = make(Command::BijectionCheck);
  bc.transform = "H-Sideways";
  CHECK_THROWS_AS(run_config(bc), UsageError);
}

TEST_CASE("summary line") {
  VerdictSummary s{3, 2, std::string("boom"), 0.5};
  CHECK_FALSE(s.ok());
  CHECK(summary_line(s) == "2/3 checks passed; first failure: boom (0.500 s)");
}

TEST_CASE("partition json") {
  nlohmann::json j = Partition({5, 3, 1});
  CHECK(j.dump() == "[5,3,1]");
  CHECK(j.get<Partition>() == Partition({5, 3, 1}));
  CHECK(nlohmann::json::array().get<Partition>() == Partition());
  CHECK_THROWS_AS((void)nlohmann::json::parse("[1,3]").get<Partition>(), std::invalid_argument);
  CHECK_THROWS_AS((void)nlohmann::json::parse("[1.5]").get<Partition>(), std::invalid_argument);
  CHECK_THROWS_AS((void)nlohmann::json::parse("{}").get<Partition>(), std::invalid_argument);
}
