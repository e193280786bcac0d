#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <omp.h>

#include "filtreg/bounds.hpp"
#include "filtreg/errors.hpp"
#include "filtreg/experiment.hpp"
#include "filtreg/groebner.hpp"

namespace {

using namespace filtreg;

int emit(const std::vector<InvariantReport>& reports, const std::string& format, const std::string& out, bool timings,
         bool single) {
  EmitOptions opt;
  opt.timings = timings;
  const std::string text =
      format == "csv" ? to_csv(reports) : (single ? to_json(reports.front(), opt) : to_json(reports, opt));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  for (const auto& r : reports)
    if (r.error) std::cerr << r.config.name << ": " << r.error->stage << ": " << r.error->kind << ": " << r.error->message << "\n";
  return exit_code(reports);
}

std::map<std::string, BigInt> parse_args(const std::string& text) {
  std::map<std::string, BigInt> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected k=v, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = BigInt(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item.substr(eq + 1) + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

BigInt evaluate_bound(const std::string& id, const std::map<std::string, BigInt>& a) {
  const auto get = [&](const char* k) -> const BigInt& {
    auto it = a.find(k);
    if (it == a.end()) throw ParseError(std::string("missing argument ") + k);
    return it->second;
  };
  const auto small = [&](const char* k) { return get(k).convert_to<int>(); };
  if (id == "A3") return bound_assoc_graded(small("d"), get("D"), get("r"));
  if (id == "Hilb") return bound_hilbert_coeff(small("i"), small("d"), get("D"), get("r"));
  if (id == "B3") return bound_graded_hdeg(small("d"), get("lAI"), get("hdegM"), get("r"));
  if (id == "B4") return bound_corollary(small("d"), get("lAI"));
  if (id == "B5")
    return bound_graded_regM(small("d"), get("lAI"), get("muM"), get("regM"), get("iM"), small("n"), get("r"));
  if (id == "C3") return bound_equigenerated(small("d"), get("lMQM"), get("r"), get("regM"), get("iM"), get("delta"));
  if (id == "F1") return bound_fiber(small("d"), get("D"), get("r"), FiberMode::A0);
  if (id == "F2.e0") return bound_fiber(small("d"), get("D"), get("r"), FiberMode::E0);
  if (id == "F2.ei") return bound_fiber(small("d"), get("D"), get("r"), FiberMode::Ei, small("i"));
  if (id == "F3") return bound_fiber(small("d"), get("D"), get("r"), FiberMode::Reg);
  if (id == "F4") return bound_fiber_classical(small("d"), get("D"));
  if (id == "FiberGraded") return bound_fiber_graded(small("d"), get("lAI"), get("hdegIM"), get("r"));
  if (id == "A5") return bound_hs_binomial(small("n"), small("d"), get("value"));
  throw ParseError("unknown bound '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of associated graded modules and fiber cones of good filtrations"};
  app.require_subcommand(1);

  std::string config_path, out, format = "json", filter, bound_id, bound_args;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool no_timings = false, profile = false;

  auto* run = app.add_subcommand("run", "Run one configuration");
  run->add_option("--config", config_path, "Configuration file")->required();
  run->add_option("--seed", seed, "Override the configured seed");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--out", out, "Write the report here instead of stdout");
  run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  run->add_flag("--no-timings", no_timings, "Omit stage timings");
  run->add_flag("--profile", profile, "Print Groebner basis statistics to stderr");

  auto* corpus = app.add_subcommand("corpus", "Run the built-in corpus");
  corpus->add_option("--filter", filter, "Only entries carrying this tag");
  corpus->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  corpus->add_option("--out", out, "Write the report here instead of stdout");
  corpus->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  corpus->add_flag("--no-timings", no_timings, "Omit stage timings");

  auto* bound = app.add_subcommand("bound", "Evaluate one bound formula");
  bound->add_option("id", bound_id, "A3, Hilb, B3, B4, B5, C3, F1, F2.e0, F2.ei, F3, F4, FiberGraded or A5")->required();
  bound->add_option("--args", bound_args, "Comma separated k=v pairs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      ExperimentConfig cfg = load_config(config_path);
      if (seed) cfg.seed = *seed;
      omp_set_num_threads(jobs);
      reset_gb_stats();
      std::vector<InvariantReport> reports{run_experiment(cfg)};
      if (profile) {
        const auto& s = gb_stats();
        std::cerr << "groebner: bases " << s.bases.load() << ", pairs " << s.pairs.load() << ", reductions " << s.reductions.load() << "\n";
      }
      return emit(reports, format, out, !no_timings, true);
    }
    if (*corpus) return emit(run_corpus(builtin_corpus(), filter, jobs), format, out, !no_timings, false);
    if (*bound) {
      std::cout << to_decimal(evaluate_bound(bound_id, parse_args(bound_args))) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return e.is_configuration_error() ? 2 : 3;
  }
  return 0;
}
