#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "closure/dataset.hpp"
#include "closure/evaluation.hpp"
#include "closure/report.hpp"
#include "closure/synthetic.hpp"

namespace closure::cli {

namespace {

struct Options {
  std::string data_dir;
  std::string name;
  std::size_t k = 3;
  double train_frac = 0.8;
  std::vector<double> fracs{0.5, 0.6, 0.7, 0.8};
  std::string methods = "all";
  std::string output;
  std::string format = "csv";
  std::size_t max_candidates = kDefaultMaxCandidates;
  unsigned threads = 0;

  std::uint64_t seed = 1;
  std::size_t nodes = 10;
  std::size_t interactions = 50;
  std::size_t max_order = 4;
  std::string out_dir;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string valid_method_list() {
  std::string s;
  for (Method m : kAllMethods) {
    if (!s.empty()) s += ',';
    s += method_name(m);
  }
  return s;
}

std::vector<Method> parse_methods(const std::string& spec) {
  if (spec == "all") return {kAllMethods.begin(), kAllMethods.end()};
  std::vector<Method> methods;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto m = parse_method(token);
    if (!m) {
      throw UsageError("--methods: unknown method '" + token + "' (valid: all," +
                       valid_method_list() + ")");
    }
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  if (methods.empty()) throw UsageError("--methods: no methods given");
  return methods;
}

const CLI::Validator kOpenUnitInterval(
    [](std::string& s) -> std::string {
      double v = 0;
      try {
        v = std::stod(s);
      } catch (...) {
        return "not a number: " + s;
      }
      if (!(v > 0.0 && v < 1.0)) return "value " + s + " not in (0, 1)";
      return {};
    },
    "in (0,1)");

// Writes either to the requested file or to `fallback`.
template <typename Fn>
void emit(const Options& opt, std::ostream& fallback, Fn&& write) {
  if (opt.output.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  if (!file) throw LoadError("--output: cannot open '" + opt.output + "' for writing");
  write(file);
  if (!file) throw LoadError("--output: write to '" + opt.output + "' failed");
}

void add_dataset_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--data", opt.data_dir, "Directory holding <name>-{nverts,simplices,times}.txt")
      ->required()
      ->check(CLI::ExistingDirectory);
  cmd->add_option("--name", opt.name, "Dataset file prefix")->required();
  cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--output,-o", opt.output, "Write the report here instead of standard output");
  cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

void add_eval_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--k", opt.k, "Simplex order to predict")->check(CLI::IsMember({3, 4}));
  cmd->add_option("--methods", opt.methods, "Comma-separated methods or 'all'");
  cmd->add_option("--max-candidates", opt.max_candidates,
                  "Abort when the candidate set grows beyond this size");
}

void write_reports(const Options& opt, std::ostream& out, const std::vector<EvalReport>& reports) {
  emit(opt, out, [&](std::ostream& os) {
    if (opt.format == "json") {
      write_json(os, reports);
    } else {
      write_csv(os, reports);
    }
  });
}

EvalConfig eval_config(const Options& opt, const std::vector<Method>& methods) {
  EvalConfig config;
  config.k = opt.k;
  config.train_fraction = opt.train_frac;
  config.methods = methods;
  config.max_candidates = opt.max_candidates;
  config.threads = opt.threads;
  return config;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Simplicial closure prediction on timestamped simplex datasets", "closure-lp"};
  app.require_subcommand(1);

  auto* stats = app.add_subcommand("stats", "Print node, skeleton-edge and simplex counts");
  add_dataset_flags(stats, opt);

  auto* predict = app.add_subcommand("predict", "Evaluate methods at one training fraction");
  add_dataset_flags(predict, opt);
  add_eval_flags(predict, opt);
  predict->add_option("--train-frac", opt.train_frac, "Training fraction p")
      ->check(kOpenUnitInterval);

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate methods over several training fractions");
  add_dataset_flags(sweep_cmd, opt);
  add_eval_flags(sweep_cmd, opt);
  sweep_cmd->add_option("--fracs", opt.fracs, "Training fractions")
      ->delimiter(',')
      ->check(kOpenUnitInterval);

  auto* synth = app.add_subcommand("synth", "Write a reproducible random dataset");
  synth->add_option("--seed", opt.seed, "Random seed");
  synth->add_option("--nodes", opt.nodes, "Node universe size")->check(CLI::PositiveNumber);
  synth->add_option("--interactions", opt.interactions, "Number of interactions");
  synth->add_option("--max-order", opt.max_order, "Largest interaction size")
      ->check(CLI::Range(2, static_cast<int>(kMaxSimplexOrder)));
  synth->add_option("--out", opt.out_dir, "Output directory")->required();
  synth->add_option("--name", opt.name, "Dataset file prefix")->required();

  std::vector<Method> methods;
  try {
    app.parse(argc, argv);
    if (predict->parsed() || sweep_cmd->parsed()) methods = parse_methods(opt.methods);
    if (synth->parsed() && opt.nodes < opt.max_order) {
      throw UsageError("--nodes must be at least --max-order");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "closure-lp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "closure-lp: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (stats->parsed()) {
      const auto ds = load_dataset(opt.data_dir, opt.name);
      const auto record = dataset_stats(ds, opt.threads);
      emit(opt, out, [&](std::ostream& os) {
        if (opt.format == "json") {
          write_stats_json(os, ds.name, record);
        } else {
          write_stats_csv(os, record);
        }
      });
    } else if (predict->parsed()) {
      const auto ds = load_dataset(opt.data_dir, opt.name);
      write_reports(opt, out, {evaluate(ds, eval_config(opt, methods))});
    } else if (sweep_cmd->parsed()) {
      const auto ds = load_dataset(opt.data_dir, opt.name);
      write_reports(opt, out, sweep(ds, eval_config(opt, methods), opt.fracs));
    } else if (synth->parsed()) {
      SyntheticParams params{opt.seed, opt.nodes, opt.interactions, opt.max_order};
      auto ds = generate_synthetic(params);
      ds.name = opt.name;
      write_dataset(opt.out_dir, ds);
    }
  } catch (const LoadError& e) {
    err << "closure-lp: " << e.what() << '\n';
    return kExitData;
  } catch (const EvalError& e) {
    err << "closure-lp: " << opt.name << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "closure-lp: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace closure::cli
