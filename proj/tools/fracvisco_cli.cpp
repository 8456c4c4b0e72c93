// Command-line front end: figure CSVs, Mittag-Leffler evaluation, relaxation
// solutions, viscoelastic model reports and hereditary responses.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracvisco/csv.hpp"
#include "fracvisco/errors.hpp"
#include "fracvisco/figures.hpp"
#include "fracvisco/mittag_leffler.hpp"
#include "fracvisco/relaxation.hpp"
#include "fracvisco/signal.hpp"
#include "fracvisco/viscoelastic.hpp"

namespace fs = std::filesystem;
using namespace fracvisco;

namespace {

// Argument combinations CLI11 cannot check on its own; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const csv::Table& table, const std::string& out_path) {
  if (out_path.empty()) {
    csv::write(std::cout, table);
  } else {
    csv::write_file(out_path, table);
  }
}

std::vector<double> grid_from(double lo, double hi, std::size_t n, bool log_spaced) {
  if (n == 0) throw UsageError("grid needs at least one point");
  if (!log_spaced) return linspace(lo, hi, n);
  if (!(lo > 0.0 && hi > 0.0)) throw Error(ErrorKind::InvalidSignal, "log grid needs positive bounds");
  return logspace(std::log10(lo), std::log10(hi), n);
}

// --- figure -------------------------------------------------------------

struct FigureArgs {
  std::string id;
  std::string out_dir = ".";
};

void run_figure(const FigureArgs& args) {
  const auto id = figures::figure_from_string(args.id);
  if (!id) throw Error(ErrorKind::InvalidSignal, "unknown figure '" + args.id + "'");
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec || !fs::is_directory(args.out_dir)) {
    throw Error(ErrorKind::IoFailure, "cannot use output directory '" + args.out_dir + "'");
  }
  for (const auto& [name, table] : figures::figure_tables(*id)) {
    const auto path = (fs::path(args.out_dir) / name).string();
    csv::write_file(path, table);
    std::cout << path << '\n';
  }
}

// --- eval ---------------------------------------------------------------

struct EvalArgs {
  double mu = 1.0;
  std::optional<double> nu;
  std::optional<double> z;
  double z_min = 0.0, z_max = 0.0;
  std::size_t count = 0;
};

void run_eval(const EvalArgs& args) {
  std::vector<double> zs;
  if (args.z) {
    zs.push_back(*args.z);
  } else if (args.count > 0) {
    zs = linspace(args.z_min, args.z_max, args.count);
  } else {
    throw UsageError("give --z or --z-min/--z-max/--count");
  }
  std::cout << "z,value,regime,est_abs_error\n";
  for (double z : zs) {
    const auto r = args.nu ? special::ml2(args.mu, *args.nu, z) : special::ml1(args.mu, z);
    std::cout << csv::format_number(z) << ',' << csv::format_number(r.value) << ','
              << special::to_string(r.regime) << ',' << csv::format_number(r.est_abs_error) << '\n';
  }
}

// --- relax --------------------------------------------------------------

struct RelaxArgs {
  std::string kind = "caputo";
  double mu = 1.0;
  std::optional<double> nu;
  double rate = 1.0;
  double t_min = 0.01, t_max = 5.0;
  std::size_t count = 100;
  bool log_grid = false;
  std::string out;
};

void run_relax(const RelaxArgs& args) {
  relax::RelaxationProblem problem;
  if (args.kind == "caputo") problem.kind = relax::RelaxationKind::caputo;
  else if (args.kind == "rl") problem.kind = relax::RelaxationKind::rl;
  else if (args.kind == "renewal") problem.kind = relax::RelaxationKind::renewal;
  else if (args.kind == "hilfer") problem.kind = relax::RelaxationKind::hilfer;
  else throw Error(ErrorKind::InvalidSignal, "unknown relaxation kind '" + args.kind + "'");
  problem.mu = args.mu;
  problem.nu = args.nu;
  problem.rate = args.rate;
  const auto sol = relax::solve(problem, grid_from(args.t_min, args.t_max, args.count, args.log_grid));
  emit(csv::Table{{"t", "u"}, {sol.grid, sol.values}}, args.out);
}

// --- model-report -------------------------------------------------------

struct ReportArgs {
  std::string model;
  std::string csv_out;
};

void print_modes(const char* title, const std::vector<visco::Mode>& modes) {
  std::cout << title << ": " << modes.size() << '\n';
  for (const auto& md : modes) {
    std::cout << "  " << csv::format_number(md.amplitude) << ", " << csv::format_number(md.tau) << '\n';
  }
}

void run_report(const ReportArgs& args) {
  const auto spec = visco::load_model(args.model);
  const auto mf = visco::material_functions(spec);
  std::cout << "family: " << visco::to_string(spec.family) << '\n';
  std::cout << "type: " << visco::to_string(visco::classify(mf)) << '\n';
  std::cout << "nu: " << csv::format_number(mf.nu) << '\n';
  std::cout << "Jg: " << csv::format_number(mf.Jg) << '\n';
  std::cout << "Je: " << mf.Je().str() << '\n';
  std::cout << "Ge: " << csv::format_number(mf.Ge) << '\n';
  std::cout << "Gg: " << mf.Gg().str() << '\n';
  std::cout << "J_plus: " << csv::format_number(mf.J_plus) << '\n';
  std::cout << "G_minus: " << csv::format_number(mf.G_minus) << '\n';
  print_modes("retardation modes (J_n, tau_eps)", mf.J_modes);
  print_modes("relaxation modes (G_n, tau_sigma)", mf.G_modes);
  if (mf.J_modes.size() == 1 && mf.G_modes.size() == 1) {
    const double te = mf.J_modes[0].tau, ts = mf.G_modes[0].tau;
    const char* rel = ts < te ? " < " : (ts > te ? " > " : " = ");
    std::cout << "times: tau_sigma=" << csv::format_number(ts) << rel
              << "tau_eps=" << csv::format_number(te) << '\n';
  }
  double worst = 0.0;
  int samples = 0;
  for (double re : {0.1, 1.0, 10.0}) {
    for (double im : {0.0, 1.0, -1.0, 5.0}) {
      worst = std::max(worst, visco::reciprocity_residual(mf, {re, im}));
      ++samples;
    }
  }
  std::cout << "max reciprocity residual: " << csv::format_number(worst) << " (" << samples
            << " values of s)\n";
  if (!args.csv_out.empty()) {
    const auto ts = logspace(-2.0, 2.0, 100);
    csv::Table table{{"t", "J", "G"}, {ts, {}, {}}};
    for (double t : ts) {
      table.columns[1].push_back(mf.creep(t));
      table.columns[2].push_back(mf.relaxation(t));
    }
    csv::write_file(args.csv_out, table);
  }
}

// --- respond ------------------------------------------------------------

struct RespondArgs {
  std::string model;
  std::string history;
  std::string mode = "stress-to-strain";
  std::string out;
};

void run_respond(const RespondArgs& args) {
  visco::ResponseMode mode;
  if (args.mode == "stress-to-strain") mode = visco::ResponseMode::stress_to_strain;
  else if (args.mode == "strain-to-stress") mode = visco::ResponseMode::strain_to_stress;
  else throw Error(ErrorKind::InvalidSignal, "unknown mode '" + args.mode + "'");

  const auto mf = visco::material_functions(visco::load_model(args.model));
  const auto table = csv::read_file(args.history);
  if (table.header.size() != 2) throw Error(ErrorKind::MalformedCsv, "history needs columns t,value");
  const auto& t = table.columns[0];
  const auto& x = table.columns[1];
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw Error(ErrorKind::MalformedCsv, "history times must increase strictly");
  }

  SampledSignal input;
  std::optional<double> at_zero;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0.0) {
      if (x[i] != 0.0) throw Error(ErrorKind::NonCausalInput, "history is non-zero before t = 0");
    } else if (t[i] == 0.0) {
      at_zero = x[i];
    } else {
      input.grid.push_back(t[i]);
      input.values.push_back(x[i]);
    }
  }
  if (input.grid.empty()) throw Error(ErrorKind::GridTooCoarse, "history has no samples after t = 0");
  const double x0 = at_zero.value_or(input.values.front());
  const auto y = visco::respond(mf, input, mode, x0);

  csv::Table result{{"t", "value"}, {{}, {}}};
  // The value at 0+ is finite unless the kernel carries an impulse or a
  // singular term there.
  const bool finite_start = mode == visco::ResponseMode::stress_to_strain || mf.G_minus == 0.0;
  if (at_zero && finite_start) {
    const auto start = mode == visco::ResponseMode::stress_to_strain ? visco::Extended::finite(mf.Jg)
                                                                      : mf.Gg();
    result.columns[0].push_back(0.0);
    result.columns[1].push_back(start.value * x0);
  }
  result.columns[0].insert(result.columns[0].end(), y.grid.begin(), y.grid.end());
  result.columns[1].insert(result.columns[1].end(), y.values.begin(), y.values.end());
  emit(result, args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional relaxation and linear viscoelasticity toolkit"};
  app.require_subcommand(1);

  FigureArgs fig;
  auto* c_fig = app.add_subcommand("figure", "Write the fig1, fig2 or fig5 data sets as CSV");
  c_fig->add_option("--id", fig.id, "fig1, fig2 or fig5")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig5"}));
  c_fig->add_option("--out-dir", fig.out_dir, "Output directory");

  EvalArgs ev;
  auto* c_eval = app.add_subcommand("eval", "Evaluate E_mu(z) or E_{mu,nu}(z)");
  c_eval->add_option("--mu", ev.mu, "First parameter")->required();
  c_eval->add_option("--nu", ev.nu, "Second parameter (two-parameter function)");
  c_eval->add_option("--z", ev.z, "Single argument");
  c_eval->add_option("--z-min", ev.z_min, "Grid start");
  c_eval->add_option("--z-max", ev.z_max, "Grid end");
  c_eval->add_option("--count", ev.count, "Number of grid points");

  RelaxArgs rx;
  auto* c_relax = app.add_subcommand("relax", "Solve a fractional relaxation problem");
  c_relax->add_option("--kind", rx.kind, "caputo, rl, renewal or hilfer")
      ->check(CLI::IsMember({"caputo", "rl", "renewal", "hilfer"}));
  c_relax->add_option("--mu", rx.mu, "Order in (0, 1]")->required();
  c_relax->add_option("--nu", rx.nu, "Hilfer type in [0, 1]");
  c_relax->add_option("--rate", rx.rate, "Relaxation rate lambda");
  c_relax->add_option("--t-min", rx.t_min, "First time");
  c_relax->add_option("--t-max", rx.t_max, "Last time");
  c_relax->add_option("--count", rx.count, "Number of times");
  c_relax->add_flag("--log", rx.log_grid, "Geometric time grid");
  c_relax->add_option("--out", rx.out, "Output CSV (default: standard output)");

  ReportArgs rep;
  auto* c_report = app.add_subcommand("model-report", "Summarise a viscoelastic model");
  c_report->add_option("--model", rep.model, "Model JSON")->required();
  c_report->add_option("--csv", rep.csv_out, "Also write t, J, G on logspace(-2, 2, 100)");

  RespondArgs rs;
  auto* c_resp = app.add_subcommand("respond", "Hereditary response to a sampled history");
  c_resp->add_option("--model", rs.model, "Model JSON")->required();
  c_resp->add_option("--history", rs.history, "CSV with columns t,value")->required();
  c_resp->add_option("--mode", rs.mode, "stress-to-strain or strain-to-stress")
      ->check(CLI::IsMember({"stress-to-strain", "strain-to-stress"}));
  c_resp->add_option("--out", rs.out, "Output CSV (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[Usage]: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_fig) run_figure(fig);
    if (*c_eval) run_eval(ev);
    if (*c_relax) run_relax(rx);
    if (*c_report) run_report(rep);
    if (*c_resp) run_respond(rs);
  } catch (const UsageError& e) {
    std::cerr << "error[Usage]: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[Internal]: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
