// eopart: counters, identity checks and proof audits for the even/odd
// companion of the Gollnitz-Gordon identities.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "eopart/cli.hpp"

namespace {

using eopart::cli::Command;
using eopart::cli::OutputFormat;
using eopart::cli::RunConfig;

const std::map<std::string, OutputFormat> kFormats = {
    {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};

struct Options {
  std::string family;
  int i = 0;
  std::int64_t r = 0, s = 0, n = 0, max_n = 0, max_r = 0, max_s = 0;
  std::size_t order = 0;
  std::string transform;
  std::string output;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition identity checker for the Gollnitz-Gordon even/odd companion"};
  app.require_subcommand(1);

  RunConfig config;
  Options opt;
  bool seedless = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    sub->add_option("--output,-o", opt.output, "Write the payload to a file");
    sub->add_flag("--seedless", seedless, "Deterministic run (the only mode)");
  };
  auto family_option = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--class", opt.family, "Partition class: G, Gprime or H")
                  ->check(CLI::IsMember({"G", "Gprime", "H"}));
    if (required) o->required();
  };
  auto index_option = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--i", opt.i, "Family index")->check(CLI::Range(1, 2));
    if (required) o->required();
  };

  auto* count = app.add_subcommand("count", "Total or refined class counts");
  family_option(count, false);
  index_option(count, false);
  count->add_option("--n", opt.n, "Weight")->required();
  count->add_option("--r", opt.r, "Number of even parts");
  count->add_option("--s", opt.s, "Number of odd parts");

  auto* identity = app.add_subcommand("identity-check", "Compare H, G and Gprime counts");
  identity->add_option("--max-n", opt.max_n, "Largest weight")->required()->check(CLI::NonNegativeNumber);
  identity->add_flag("--refined", config.refined, "Also compare every refined (r, s) count");
  index_option(identity, false);

  auto* recurrence = app.add_subcommand("recurrence-check", "Check the recurrence system on a grid");
  recurrence->add_option("--max-n", opt.max_n, "Largest weight")->default_val(30);
  recurrence->add_option("--max-r", opt.max_r, "Largest even-part count")->default_val(6);
  recurrence->add_option("--max-s", opt.max_s, "Largest odd-part count")->default_val(6);

  auto* bijection = app.add_subcommand("bijection-check", "Audit the proof transformations");
  bijection->add_option("--max-n", opt.max_n, "Sweep every key up to this weight")->default_val(25);
  bijection->add_option("--case", opt.transform, "Only this transformation, e.g. G-EvenMin");
  bijection->add_option("--n", opt.n, "Audit a single key (with --r and --s)");
  bijection->add_option("--r", opt.r, "Even-part count of the single key");
  bijection->add_option("--s", opt.s, "Odd-part count of the single key");

  auto* series = app.add_subcommand("series", "Coefficients of the mod-8 product series");
  index_option(series, true);
  series->add_option("--max-n", opt.max_n, "Largest exponent")->default_val(30);
  series->add_option("--order", opt.order, "Truncation order (default max-n + 1)");

  auto* list = app.add_subcommand("list", "List the members of a class");
  family_option(list, true);
  index_option(list, true);
  list->add_option("--n", opt.n, "Weight")->required();
  list->add_option("--r", opt.r, "Number of even parts");
  list->add_option("--s", opt.s, "Number of odd parts");

  auto* table = app.add_subcommand("table", "Values of the recurrence H_i(r, s, n)");
  index_option(table, false);
  table->add_option("--max-n", opt.max_n, "Largest weight")->required();
  table->add_option("--max-r", opt.max_r, "Largest even-part count");
  table->add_option("--max-s", opt.max_s, "Largest odd-part count");

  const std::map<CLI::App*, Command> commands = {
      {count, Command::Count},          {identity, Command::IdentityCheck},
      {recurrence, Command::RecurrenceCheck}, {bijection, Command::BijectionCheck},
      {series, Command::Series},        {list, Command::List},
      {table, Command::Table}};
  for (const auto& [sub, _] : commands) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : eopart::cli::kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.command = commands.at(sub);
  auto given = [&](const char* name) {
    const auto* o = sub->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--class")) config.family = eopart::parse_family(opt.family);
  if (given("--i")) config.i = opt.i;
  if (given("--r")) config.r = opt.r;
  if (given("--s")) config.s = opt.s;
  if (given("--n")) config.n = opt.n;
  if (sub->get_option_no_throw("--max-n")) config.max_n = opt.max_n;
  if (sub->get_option_no_throw("--max-r") && (given("--max-r") || config.command == Command::RecurrenceCheck))
    config.max_r = opt.max_r;
  if (sub->get_option_no_throw("--max-s") && (given("--max-s") || config.command == Command::RecurrenceCheck))
    config.max_s = opt.max_s;
  if (given("--order")) config.order = opt.order;
  if (given("--case")) config.transform = opt.transform;
  if (given("--output")) config.output = opt.output;

  try {
    eopart::cli::VerdictSummary summary;
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file) {
        std::cerr << "error: cannot open " << *config.output << '\n';
        return eopart::cli::kExitIo;
      }
      summary = eopart::cli::run(config, file);
    } else {
      summary = eopart::cli::run(config, std::cout);
    }
    std::cerr << eopart::cli::summary_line(summary) << '\n';
    return summary.ok() ? eopart::cli::kExitOk : eopart::cli::kExitCheckFailed;
  } catch (const eopart::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return eopart::cli::kExitUsage;
  } catch (const eopart::CountOverflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return eopart::cli::kExitOverflow;
  }
}
