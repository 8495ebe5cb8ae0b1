#include "eopart/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "eopart/bijections.hpp"
#include "eopart/json_io.hpp"
#include "eopart/qseries.hpp"
#include "eopart/recurrence.hpp"

namespace eopart::cli {

namespace {

using nlohmann::json;

class Tally {
 public:
  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++summary_.attempted;
    if (ok) {
      ++summary_.passed;
    } else if (!summary_.first_failure) {
      summary_.first_failure = describe();
    }
  }
  template <typename Describe>
  void record_many(std::size_t attempted, std::size_t failed, Describe&& describe) {
    summary_.attempted += attempted;
    summary_.passed += attempted - failed;
    if (failed > 0 && !summary_.first_failure) summary_.first_failure = describe();
  }
  VerdictSummary& summary() { return summary_; }

 private:
  VerdictSummary summary_;
};

std::vector<FamilyIndex> requested_indices(const RunConfig& c) {
  if (c.i) return {FamilyIndex(*c.i)};
  return {FamilyIndex(1), FamilyIndex(2)};
}

FamilyIndex required_index(const RunConfig& c, const char* command) {
  if (!c.i) throw UsageError(std::string(command) + " requires --i");
  return FamilyIndex(*c.i);
}

std::int64_t required_n(const RunConfig& c, const char* command) {
  if (!c.n) throw UsageError(std::string(command) + " requires --n");
  return *c.n;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string key_text(int i, std::int64_t r, std::int64_t s, std::int64_t n) {
  std::ostringstream os;
  os << "(i=" << i << ", r=" << r << ", s=" << s << ", n=" << n << ')';
  return os.str();
}

// count ---------------------------------------------------------------------

void run_count(const RunConfig& c, std::ostream& out) {
  const std::int64_t n = required_n(c, "count");
  const bool refined = c.r.has_value() || c.s.has_value();
  if (refined && !(c.r && c.s)) throw UsageError("count needs both --r and --s for a refined key");
  std::vector<Family> families;
  if (c.family) {
    families = {*c.family};
  } else {
    families = refined ? std::vector{Family::H, Family::G}
                       : std::vector{Family::H, Family::G, Family::Gprime};
  }
  if (refined && c.family == Family::Gprime)
    throw UsageError("refined counts are defined for G and H only");

  json results = json::array();
  std::ostringstream csv;
  csv << "class,i,r,s,n,value\n";
  for (Family f : families) {
    for (FamilyIndex i : requested_indices(c)) {
      const Count value = refined ? count_refined(f, {i, *c.r, *c.s, n}) : count_total(f, i, n);
      json row = {{"class", family_name(f)}, {"i", i.value()}, {"n", n}, {"value", value}};
      if (refined) {
        row["r"] = *c.r;
        row["s"] = *c.s;
      }
      results.push_back(row);
      csv << family_name(f) << ',' << i.value() << ','
          << (refined ? std::to_string(*c.r) : "") << ',' << (refined ? std::to_string(*c.s) : "")
          << ',' << n << ',' << value << '\n';
      if (c.format == OutputFormat::Table) {
        out << family_name(f) << '_' << i.value() << '(';
        if (refined) out << "r=" << *c.r << ", s=" << *c.s << ", n=";
        out << n << ") = " << value << '\n';
      }
    }
  }
  if (c.format == OutputFormat::Json) emit_json(out, {{"command", "count"}, {"results", results}});
  if (c.format == OutputFormat::Csv) out << csv.str();
}

// identity-check ------------------------------------------------------------

void run_identity_check(const RunConfig& c, std::ostream& out, Tally& tally) {
  if (c.max_n < 0) throw UsageError("--max-n must be >= 0");
  json rows = json::array();
  json refined_violations = json::array();
  std::size_t refined_checks = 0;
  std::size_t refined_passed = 0;
  if (c.format == OutputFormat::Table)
    out << std::setw(4) << "n" << std::setw(3) << "i" << std::setw(12) << "H" << std::setw(12)
        << "G" << std::setw(12) << "Gprime" << "  ok\n";
  if (c.format == OutputFormat::Csv) out << "n,i,H,G,Gprime\n";

  for (std::int64_t n = 0; n <= c.max_n; ++n) {
    for (FamilyIndex i : requested_indices(c)) {
      const RefinedTable h(Family::H, i, n);
      const RefinedTable g(Family::G, i, n);
      const Count gp = count_total(Family::Gprime, i, n);
      const bool ok = h.total() == g.total() && g.total() == gp;
      tally.record(ok, [&] {
        std::ostringstream os;
        os << "totals differ at i=" << i.value() << ", n=" << n << ": H=" << h.total()
           << " G=" << g.total() << " Gprime=" << gp;
        return os.str();
      });
      rows.push_back({{"n", n}, {"i", i.value()}, {"H", h.total()}, {"G", g.total()},
                      {"Gprime", gp}, {"ok", ok}});
      if (c.format == OutputFormat::Table)
        out << std::setw(4) << n << std::setw(3) << i.value() << std::setw(12) << h.total()
            << std::setw(12) << g.total() << std::setw(12) << gp << "  " << (ok ? "yes" : "NO")
            << '\n';
      if (c.format == OutputFormat::Csv)
        out << n << ',' << i.value() << ',' << h.total() << ',' << g.total() << ',' << gp << '\n';

      if (!c.refined) continue;
      for (std::int64_t r = 0; r <= n; ++r) {
        for (std::int64_t s = 0; s <= n; ++s) {
          const bool same = h.at(r, s) == g.at(r, s);
          ++refined_checks;
          refined_passed += same ? 1 : 0;
          if (!same)
            refined_violations.push_back({{"i", i.value()}, {"r", r}, {"s", s}, {"n", n},
                                          {"H", h.at(r, s)}, {"G", g.at(r, s)}});
          tally.record(same, [&] {
            std::ostringstream os;
            os << "refined H != G at " << key_text(i.value(), r, s, n) << ": " << h.at(r, s)
               << " vs " << g.at(r, s);
            return os.str();
          });
        }
      }
    }
  }
  if (c.format == OutputFormat::Table && c.refined)
    out << "refined: " << refined_passed << '/' << refined_checks << " (i,r,s,n) keys agree\n";
  if (c.format == OutputFormat::Json) {
    json j = {{"command", "identity-check"}, {"max_n", c.max_n}, {"refined", c.refined},
              {"rows", rows}};
    if (c.refined) {
      j["refined_checks"] = refined_checks;
      j["refined_violations"] = refined_violations;
    }
    emit_json(out, j);
  }
}

// recurrence-check ----------------------------------------------------------

json violations_json(const SystemReport& report) {
  json out = json::array();
  for (const auto& v : report.violations)
    out.push_back({{"equation", v.equation}, {"i", v.key.i.value()}, {"r", v.key.r},
                   {"s", v.key.s}, {"n", v.key.n}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return out;
}

void run_recurrence_check(const RunConfig& c, std::ostream& out, Tally& tally) {
  const GridBounds bounds{c.max_r.value_or(6), c.max_s.value_or(6), c.max_n};
  if (bounds.max_r < 0 || bounds.max_s < 0 || bounds.max_n < 0)
    throw UsageError("grid bounds must be >= 0");

  json systems = json::object();
  for (Family f : {Family::H, Family::G}) {
    BruteForceCounter counter(f);
    const auto report = check_system([&counter](const RefinedKey& k) { return counter(k); }, bounds);
    tally.record_many(report.evaluations, report.violations.size(), [&] {
        const auto& v = report.violations.front();
        std::ostringstream os;
        os << "equation " << v.equation << " fails for " << family_name(f) << " at "
           << key_text(v.key.i.value(), v.key.r, v.key.s, v.key.n) << ": " << v.lhs
           << " != " << v.rhs;
        return os.str();
      });
    systems[std::string(family_name(f))] = {{"evaluations", report.evaluations},
                                            {"violations", violations_json(report)},
                                            {"verdict", report.verdict()}};
    if (c.format == OutputFormat::Table)
      out << "check_system(" << family_name(f) << "): " << report.evaluations << " equations, "
          << report.violations.size() << " violations\n";
  }
  const bool unique = verify_uniqueness(bounds);
  tally.record(unique, [] { return std::string("bottom-up tabulation differs from memoized recursion"); });
  if (c.format == OutputFormat::Table)
    out << "verify_uniqueness: " << (unique ? "true" : "false") << '\n';
  if (c.format == OutputFormat::Json)
    emit_json(out, {{"command", "recurrence-check"},
                    {"bounds", {{"max_r", bounds.max_r}, {"max_s", bounds.max_s}, {"max_n", bounds.max_n}}},
                    {"systems", systems},
                    {"uniqueness", unique}});
  if (c.format == OutputFormat::Csv) {
    out << "check,evaluations,violations\n";
    for (const char* name : {"H", "G"})
      out << "system_" << name << ',' << systems[name]["evaluations"].get<std::size_t>() << ','
          << systems[name]["violations"].size() << '\n';
    out << "uniqueness,1," << (unique ? 0 : 1) << '\n';
  }
}

// bijection-check -----------------------------------------------------------

std::vector<TransformCase> requested_cases(const RunConfig& c) {
  if (!c.transform) return all_transform_cases();
  for (const auto& tc : all_transform_cases())
    if (case_name(tc) == *c.transform) return {tc};
  throw UsageError("unknown transformation '" + *c.transform + "'");
}

void run_single_audit(const RunConfig& c, std::ostream& out, Tally& tally) {
  if (!(c.r && c.s)) throw UsageError("a single audit needs --r, --s and --n");
  json audits = json::array();
  for (const auto& tc : requested_cases(c)) {
    const auto a = audit(tc, *c.r, *c.s, *c.n);
    tally.record(a.verdict == AuditVerdict::Bijective, [&] {
      return case_name(tc) + " is " + std::string(verdict_name(a.verdict)) + " at " +
             key_text(a.source.i, a.source.r, a.source.s, a.source.n);
    });
    audits.push_back(audit_to_json(a));
    if (c.format == OutputFormat::Table) {
      out << case_name(tc) << ' ' << key_text(a.source.i, a.source.r, a.source.s, a.source.n)
          << " -> " << key_text(a.target.i, a.target.r, a.target.s, a.target.n) << ": "
          << verdict_name(a.verdict) << '\n';
      for (const auto& [from, to] : a.mapping)
        out << "  " << from.to_string() << " -> " << to.to_string() << '\n';
    }
    if (c.format == OutputFormat::Csv) {
      if (audits.size() == 1) out << "case,input,output\n";
      for (const auto& [from, to] : a.mapping)
        out << case_name(tc) << ',' << from.to_string() << ',' << to.to_string() << '\n';
    }
  }
  if (c.format == OutputFormat::Json)
    emit_json(out, {{"command", "bijection-check"}, {"audits", audits}});
}

void run_bijection_sweep(const RunConfig& c, std::ostream& out, Tally& tally) {
  if (c.max_n < 0) throw UsageError("--max-n must be >= 0");
  json cases = json::array();
  json failures = json::array();
  if (c.format == OutputFormat::Csv) out << "check,attempted,passed\n";
  for (const auto& tc : requested_cases(c)) {
    std::size_t audits = 0, bijective = 0, round_trips = 0, round_trips_ok = 0;
    for (std::int64_t n = 0; n <= c.max_n; ++n) {
      for (std::int64_t r = 0; r <= n; ++r) {
        for (std::int64_t s = 0; s <= n; ++s) {
          const auto a = audit(tc, r, s, n);
          const bool ok = a.verdict == AuditVerdict::Bijective;
          ++audits;
          bijective += ok ? 1 : 0;
          if (!ok) failures.push_back(audit_to_json(a));
          tally.record(ok, [&] {
            return case_name(tc) + " is " + std::string(verdict_name(a.verdict)) + " at " +
                   key_text(a.source.i, r, s, n);
          });
          for (const auto& [lambda, mu] : a.mapping) {
            bool back = false;
            try {
              back = backward(tc, mu, r, s) == lambda;
            } catch (const PreconditionError&) {
            }
            ++round_trips;
            round_trips_ok += back ? 1 : 0;
            tally.record(back, [&] {
              return case_name(tc) + " round trip fails for " + lambda.to_string();
            });
          }
        }
      }
    }
    cases.push_back({{"case", case_name(tc)}, {"audits", audits}, {"bijective", bijective},
                     {"round_trips", round_trips}, {"round_trips_ok", round_trips_ok}});
    if (c.format == OutputFormat::Table)
      out << std::left << std::setw(10) << case_name(tc) << std::right << ' ' << bijective << '/'
          << audits << " keys bijective, " << round_trips_ok << '/' << round_trips
          << " round trips\n";
    if (c.format == OutputFormat::Csv)
      out << case_name(tc) << ',' << audits << ',' << bijective << '\n'
          << case_name(tc) << "-round-trip," << round_trips << ',' << round_trips_ok << '\n';
  }

  json splits = json::array();
  for (Family f : {Family::H, Family::G}) {
    std::size_t keys = 0, good = 0;
    for (std::int64_t n = 0; n <= c.max_n; ++n)
      for (std::int64_t r = 0; r <= n; ++r)
        for (std::int64_t s = 0; s <= n; ++s) {
          const bool ok = case_split_check(f, r, s, n);
          ++keys;
          good += ok ? 1 : 0;
          tally.record(ok, [&] {
            return "case split fails for " + std::string(family_name(f)) + " at " +
                   key_text(1, r, s, n);
          });
        }
    splits.push_back({{"family", family_name(f)}, {"keys", keys}, {"passed", good}});
    if (c.format == OutputFormat::Table)
      out << "case_split(" << family_name(f) << ") " << good << '/' << keys << " keys\n";
    if (c.format == OutputFormat::Csv)
      out << "case-split-" << family_name(f) << ',' << keys << ',' << good << '\n';
  }
  if (c.format == OutputFormat::Json)
    emit_json(out, {{"command", "bijection-check"}, {"max_n", c.max_n}, {"cases", cases},
                    {"case_split", splits}, {"failures", failures}});
}

// series / list / table -----------------------------------------------------

void run_series(const RunConfig& c, std::ostream& out) {
  const FamilyIndex i = required_index(c, "series");
  if (c.max_n < 0) throw UsageError("--max-n must be >= 0");
  const std::size_t order = c.order.value_or(static_cast<std::size_t>(c.max_n) + 1);
  if (order < 1) throw UsageError("--order must be >= 1");
  const auto series = gprime_series(i, order);
  if (c.format == OutputFormat::Json) {
    json coeffs = json::array();
    for (auto v : series.coefficients()) coeffs.push_back(v);
    emit_json(out, {{"command", "series"}, {"i", i.value()}, {"order", order},
                    {"coefficients", coeffs}});
    return;
  }
  const char sep = c.format == OutputFormat::Csv ? ',' : ' ';
  out << "n" << sep << "coefficient\n";
  for (std::size_t k = 0; k < order; ++k) out << k << sep << series[k] << '\n';
}

void run_list(const RunConfig& c, std::ostream& out) {
  if (!c.family) throw UsageError("list requires --class");
  const FamilyIndex i = required_index(c, "list");
  const std::int64_t n = required_n(c, "list");
  if (c.r.has_value() != c.s.has_value()) throw UsageError("list needs both --r and --s or neither");
  const auto found = members(*c.family, i, n, c.r, c.s);
  switch (c.format) {
    case OutputFormat::Table:
      for (const auto& p : found) out << p.to_string() << '\n';
      break;
    case OutputFormat::Csv:
      out << "partition\n";
      for (const auto& p : found) out << p.to_string() << '\n';
      break;
    case OutputFormat::Json: {
      json j = {{"command", "list"}, {"class", family_name(*c.family)}, {"i", i.value()},
                {"n", n}, {"count", found.size()}, {"partitions", found}};
      if (c.r) {
        j["r"] = *c.r;
        j["s"] = *c.s;
      }
      emit_json(out, j);
      break;
    }
  }
}

void run_table(const RunConfig& c, std::ostream& out) {
  const GridBounds bounds{c.max_r.value_or(c.max_n), c.max_s.value_or(c.max_n), c.max_n};
  if (bounds.max_r < 0 || bounds.max_s < 0 || bounds.max_n < 0)
    throw UsageError("grid bounds must be >= 0");
  CountTable memo;
  json rows = json::array();
  const char sep = c.format == OutputFormat::Csv ? ',' : ' ';
  if (c.format != OutputFormat::Json) out << "i" << sep << "r" << sep << "s" << sep << "n" << sep << "value\n";
  for (FamilyIndex i : requested_indices(c))
    for (std::int64_t r = 0; r <= bounds.max_r; ++r)
      for (std::int64_t s = 0; s <= bounds.max_s; ++s)
        for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
          const Count v = h_recurrence({i, r, s, n}, memo);
          if (c.format == OutputFormat::Json)
            rows.push_back({{"i", i.value()}, {"r", r}, {"s", s}, {"n", n}, {"value", v}});
          else
            out << i.value() << sep << r << sep << s << sep << n << sep << v << '\n';
        }
  if (c.format == OutputFormat::Json) emit_json(out, {{"command", "table"}, {"rows", rows}});
}

}  // namespace

VerdictSummary run(const RunConfig& config, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  Tally tally;
  try {
    switch (config.command) {
      case Command::Count: run_count(config, out); break;
      case Command::IdentityCheck: run_identity_check(config, out, tally); break;
      case Command::RecurrenceCheck: run_recurrence_check(config, out, tally); break;
      case Command::BijectionCheck:
        if (config.n)
          run_single_audit(config, out, tally);
        else
          run_bijection_sweep(config, out, tally);
        break;
      case Command::Series: run_series(config, out); break;
      case Command::List: run_list(config, out); break;
      case Command::Table: run_table(config, out); break;
    }
  } catch (const CountOverflow&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto& summary = tally.summary();
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

std::string summary_line(const VerdictSummary& summary) {
  std::ostringstream os;
  os << summary.passed << '/' << summary.attempted << " checks passed";
  if (summary.first_failure) os << "; first failure: " << *summary.first_failure;
  os << " (" << std::fixed << std::setprecision(3) << summary.wall_seconds << " s)";
  return os.str();
}

}  // namespace eopart::cli
