// Acceptance suite. Runs every exit criterion at its stated tolerance (all
// exact) and runtime bound, printing one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eopart/bijections.hpp"
#include "eopart/classes.hpp"
#include "eopart/cli.hpp"
#include "eopart/partition.hpp"
#include "eopart/qseries.hpp"
#include "eopart/recurrence.hpp"

using namespace eopart;

namespace {

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_seconds;
  // Returns an empty string on success, otherwise the first failure.
  std::function<std::string()> body;
};

template <typename... Args>
std::string describe(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

std::string n9_example_sets() {
  struct Expected {
    Family family;
    int i;
    const char* text;
    std::size_t count;
  };
  const std::vector<Expected> expected = {
      {Family::G, 1, "9\n8+1\n7+2\n6+3\n5+3+1\n", 5},
      {Family::Gprime, 1, "9\n7+1+1\n4+4+1\n4+1+1+1+1+1\n1+1+1+1+1+1+1+1+1\n", 5},
      {Family::G, 2, "9\n6+3\n", 2},
      {Family::Gprime, 2, "5+4\n3+3+3\n", 2},
      {Family::H, 1, "9\n8+1\n6+3\n5+4\n5+3+1\n", 5},
      {Family::H, 2, "9\n6+3\n", 2},
  };
  for (const auto& e : expected) {
    cli::RunConfig config;
    config.command = cli::Command::List;
    config.family = e.family;
    config.i = e.i;
    config.n = 9;
    std::ostringstream out;
    (void)cli::run(config, out);
    const std::string text = out.str();
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
    if (text != e.text || lines != e.count)
      return describe(family_name(e.family), "_", e.i, "(9) listed as:\n", text);
    if (count_total(e.family, FamilyIndex(e.i), 9) != e.count)
      return describe(family_name(e.family), "_", e.i, "(9) count mismatch");
  }
  return {};
}

std::string refined_identity() {
  for (int i : {1, 2})
    for (std::int64_t n = 0; n <= 40; ++n) {
      const RefinedTable h(Family::H, FamilyIndex(i), n);
      const RefinedTable g(Family::G, FamilyIndex(i), n);
      for (std::int64_t r = 0; r <= n; ++r)
        for (std::int64_t s = 0; s <= n; ++s)
          if (h.at(r, s) != g.at(r, s))
            return describe("H != G at i=", i, " r=", r, " s=", s, " n=", n, ": ", h.at(r, s),
                            " vs ", g.at(r, s));
    }
  return {};
}

std::string corollary() {
  for (int i : {1, 2})
    for (std::int64_t n = 0; n <= 40; ++n) {
      const FamilyIndex fi(i);
      const Count h = count_total(Family::H, fi, n);
      const Count g = count_total(Family::G, fi, n);
      const Count gp = count_total(Family::Gprime, fi, n);
      if (h != g || g != gp)
        return describe("totals differ at i=", i, " n=", n, ": ", h, " ", g, " ", gp);
    }
  CountTable memo;
  for (int i : {1, 2}) {
    const auto series = gprime_series(FamilyIndex(i), 201);
    for (std::int64_t n = 0; n <= 200; ++n) {
      const Count h = h_total_from_recurrence(FamilyIndex(i), n, memo);
      if (static_cast<Count>(series[static_cast<std::size_t>(n)]) != h)
        return describe("series vs recurrence at i=", i, " n=", n, ": ",
                        series[static_cast<std::size_t>(n)], " vs ", h);
    }
  }
  return {};
}

std::string system_satisfaction() {
  const GridBounds grid{6, 6, 30};
  for (Family f : {Family::H, Family::G}) {
    BruteForceCounter counter(f);
    const auto report = check_system([&](const RefinedKey& k) { return counter(k); }, grid);
    if (!report.verdict()) {
      const auto& v = report.violations.front();
      return describe(family_name(f), " violates equation ", v.equation, " at i=",
                      v.key.i.value(), " r=", v.key.r, " s=", v.key.s, " n=", v.key.n);
    }
  }
  BruteForceCounter counter(Family::G);
  const auto mutated = check_system([&](const RefinedKey& k) { return counter(k); }, grid,
                                    SystemMutation::kEvenMinOffset);
  if (mutated.violations.empty()) return "mutated system produced no violation";
  return {};
}

std::string recurrence_oracle() {
  const GridBounds grid{8, 8, 30};
  BruteForceCounter brute(Family::H);
  CountTable memo;
  for (int i : {1, 2})
    for (std::int64_t r = 0; r <= grid.max_r; ++r)
      for (std::int64_t s = 0; s <= grid.max_s; ++s)
        for (std::int64_t n = 0; n <= grid.max_n; ++n) {
          const CountKey key{FamilyIndex(i), r, s, n};
          if (h_recurrence(key, memo) != brute(key))
            return describe("recurrence differs from brute force at i=", i, " r=", r, " s=", s,
                            " n=", n);
        }
  if (!verify_uniqueness(grid)) return "bottom-up tabulation differs from memoized recursion";
  return {};
}

std::string bijection_audits() {
  for (const auto& tc : all_transform_cases())
    for (std::int64_t n = 0; n <= 25; ++n)
      for (std::int64_t r = 0; r <= n; ++r)
        for (std::int64_t s = 0; s <= n; ++s) {
          const auto a = audit(tc, r, s, n);
          if (a.verdict != AuditVerdict::Bijective)
            return describe(case_name(tc), " is ", verdict_name(a.verdict), " at r=", r, " s=", s,
                            " n=", n);
          for (const auto& [lambda, mu] : a.mapping)
            if (backward(tc, mu, r, s) != lambda)
              return describe(case_name(tc), " round trip fails for ", lambda.to_string());
        }
  for (Family f : {Family::H, Family::G})
    for (std::int64_t n = 0; n <= 25; ++n)
      for (std::int64_t r = 0; r <= n; ++r)
        for (std::int64_t s = 0; s <= n; ++s)
          if (!case_split_check(f, r, s, n))
            return describe("case split fails for ", family_name(f), " at r=", r, " s=", s,
                            " n=", n);
  return {};
}

std::string plumbing_oracles() {
  for (std::int64_t n = 0; n <= 60; ++n) {
    Count c = 0;
    for (PartitionStream stream(n); stream.next();) ++c;
    if (c != partition_count_oracle(n))
      return describe("enumeration of ", n, " yields ", c, " partitions");
  }
  const auto euler = euler_product(201);
  for (std::int64_t n = 0; n <= 200; ++n)
    if (static_cast<Count>(euler[static_cast<std::size_t>(n)]) != partition_count_oracle(n))
      return describe("Euler product coefficient differs at n=", n);
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "n = 9 example sets and counts reproduced verbatim", 1.0, n9_example_sets},
      {"AC2", "refined H = G for i in {1,2}, n <= 40, r,s <= n", 120.0, refined_identity},
      {"AC3", "H = G = Gprime totals for n <= 40; series = recurrence H for n <= 200", 30.0,
       corollary},
      {"AC4", "recurrence system holds for brute-force H and G on r,s <= 6, n <= 30; mutation caught",
       60.0, system_satisfaction},
      {"AC5", "recurrence = brute-force H and bottom-up = top-down on r,s <= 8, n <= 30", 30.0,
       recurrence_oracle},
      {"AC6", "six audits bijective, round trips and case splits for n <= 25", 60.0,
       bijection_audits},
      {"AC7", "enumeration = p(n) for n <= 60; Euler product = p(n) for n <= 200", 30.0,
       plumbing_oracles},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = c.body();
    } catch (const std::exception& e) {
      failure = describe("exception: ", e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > c.time_limit_seconds)
      failure = describe("took ", seconds, " s, limit ", c.time_limit_seconds, " s");
    const bool ok = failure.empty();
    failures += ok ? 0 : 1;
    std::printf("[%s] %s %s (%.3f s)\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds);
    if (!ok) std::printf("       %s\n", failure.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
