// hcc: centers of groupoid-enriched categories from a JSON fixture.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hcc/fixture.hpp"
#include "hcc/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kBudget = 3, kInconsistent = 4 };

int exit_code(hcc::ErrorKind k) {
  switch (k) {
    case hcc::ErrorKind::BudgetExceeded: return kBudget;
    case hcc::ErrorKind::InconsistencyDetected:
    case hcc::ErrorKind::NotCommutative:
    case hcc::ErrorKind::NotWellDefined:
    case hcc::ErrorKind::SplittingMismatch: return kInconsistent;
    default: return kValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strict, homotopy and coherent centers of groupoid-enriched categories"};
  app.require_subcommand(1, 1);

  hcc::ReportOptions opts;
  std::string fixture;
  std::string output;
  std::uint64_t budget = 0;
  unsigned threads = 1;
  std::string only;

  for (const auto& name : hcc::command_names()) {
    auto* sub = app.add_subcommand(name, "run '" + name + "' on every category of the fixture");
    sub->add_option("fixture", fixture, "fixture file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--smax", opts.smax, "highest cosimplicial level")->check(CLI::Range(2, 6))->default_val(3);
    sub->add_option("--budget", budget, "cap on every search budget");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u))->default_val(1);
    sub->add_flag("--verbose-cocycles", opts.verbose_cocycles, "print Φ¹ data and generating cocycles");
    sub->add_option("--category", only, "restrict to one category label");
    sub->add_option("-o,--output", output, "write the report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (budget > 0) {
    opts.budget.hom_candidates = budget;
    opts.budget.families = budget;
    opts.budget.groupoid_cells = budget;
    opts.budget.center_objects = budget;
  }
  opts.budget.threads = threads;

  try {
    hcc::Fixture fx = hcc::parse_fixture(fixture, opts.budget);
    if (!only.empty()) {
      auto it = fx.categories.find(only);
      if (it == fx.categories.end()) {
        std::cerr << "error: no category '" << only << "'\n";
        return kValidation;
      }
      auto keep = *it;
      fx.categories.clear();
      fx.categories.insert(std::move(keep));
    }
    hcc::CommandResult r = hcc::run_command(command, fx, opts);
    const std::string text = r.document.dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output);
      if (!out) {
        std::cerr << "error: cannot write '" << output << "'\n";
        return kValidation;
      }
      out << text;
    }
    if (!r.consistent) {
      std::cerr << "error: spectral and exact computations disagree\n";
      return kInconsistent;
    }
    return kOk;
  } catch (const hcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}
