#include "tnet/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include "tnet/bench.hpp"
#include "tnet/config.hpp"
#include "tnet/csv.hpp"
#include "tnet/scenario.hpp"
#include "tnet/verify.hpp"

namespace tnet {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or to `out` when the path is "-".
void emit_csv(const std::string& path, const std::vector<Record>& records, std::ostream& out) {
  if (path == "-") {
    write_csv(out, records);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  write_csv(file, records);
  if (!file.flush()) throw IoError("write to '" + path + "' failed");
}

void emit_state(const std::string& path, const MaterialState& state, const MaterialSpec& spec) {
  if (path.empty()) return;
  const std::vector<std::uint8_t> bytes = serialize(state, spec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!file.flush()) throw IoError("write to '" + path + "' failed");
}

TangentMode parse_tangent(const std::string& s) {
  return s == "algorithmic" ? TangentMode::Algorithmic : TangentMode::Frozen;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transient-network viscoelasticity at a material point"};
  app.require_subcommand(1);

  std::string config_path, csv_path = "-", state_path;
  auto* run = app.add_subcommand("run", "Run a load program described by a JSON file");
  run->add_option("config", config_path, "Program file")->required();
  run->add_option("-o,--output", csv_path, "CSV output file ('-' for standard output)");
  run->add_option("--state", state_path, "Write the final binary material state here");

  std::string scenario_name, tangent = "frozen";
  ScenarioOptions sopts;
  double k = -1.0, temperature = -1.0;
  auto* scenario = app.add_subcommand("scenario", "Run a built-in scenario and print its summary values");
  scenario->add_option("name", scenario_name, "Scenario name (see 'list')")->required();
  scenario->add_option("-o,--output", csv_path, "CSV output file ('-' for standard output)");
  scenario->add_option("--k", k, "Rate of the transient network");
  scenario->add_option("--variant", sopts.variant, "ogden-foam-cyclic transient sign: plus or minus");
  scenario->add_option("--temperature", temperature, "arrhenius-relax hold temperature in K");
  scenario->add_option("--refinement", sopts.refinement, "Substep multiplier")->check(CLI::PositiveNumber);
  scenario->add_option("--tangent", tangent, "Newton tangent")->check(CLI::IsMember({"frozen", "algorithmic"}));

  app.add_subcommand("list", "List the built-in scenarios");
  app.add_subcommand("verify", "Run the built-in consistency checks");

  std::vector<std::size_t> sizes{100, 1000, 10000};
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Compare the recurrence with naive history re-summation");
  bench_cmd->add_option("--sizes", sizes, "History lengths")->delimiter(',');
  bench_cmd->add_option("--repeats", repeats, "Timing repeats, fastest kept")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("run")) {
      const RunConfig c = parse_config(read_file(config_path));
      PointDriver d(c.material, c.options, c.initial_temperature);
      int status = kExitOk;
      try {
        for (const LoadStep& step : c.program) d.apply(step);
      } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        status = kExitNoConvergence;  // the records up to the failure are still written
      }
      emit_csv(csv_path, d.records(), out);
      if (status == kExitOk) emit_state(state_path, d.state(), c.material);
      return status;
    }

    if (app.got_subcommand("scenario")) {
      if (k >= 0.0) sopts.k = k;
      else if (scenario->count("--k")) throw std::invalid_argument("--k must be >= 0");
      if (scenario->count("--temperature")) sopts.temperature = temperature;
      sopts.driver.tangent = parse_tangent(tangent);
      const std::string unit = scenario_unit(scenario_name);
      const ProgramResult r = run_scenario(scenario_name, sopts);
      if (scenario->count("-o")) emit_csv(csv_path, r.records, out);
      std::ostream& summary = csv_path == "-" && scenario->count("-o") ? err : out;
      summary << "scenario " << scenario_name << " (time unit " << unit << ")\n";
      for (const auto& [name, value] : r.readouts) summary << name << " = " << format(value) << "\n";
      return kExitOk;
    }

    if (app.got_subcommand("list")) {
      for (const std::string& n : scenario_names()) out << n << "\n";
      return kExitOk;
    }

    if (app.got_subcommand("verify")) {
      bool ok = true;
      for (const CheckResult& c : self_check()) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst " << format(c.measured) << ", limit "
            << format(c.limit) << ")\n";
        ok = ok && c.passed;
      }
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (app.got_subcommand("bench")) {
      out << "steps,recurrence_s_per_step,naive_s_per_step,recurrence_bytes,naive_bytes,max_rel_diff\n";
      for (const BenchRow& r : bench(sizes, default_bench_material(), repeats))
        out << r.steps << ',' << format(r.recurrence_seconds_per_step) << ','
            << format(r.naive_seconds_per_step) << ',' << r.recurrence_bytes << ',' << r.naive_bytes << ','
            << format(r.max_relative_difference) << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tnet
