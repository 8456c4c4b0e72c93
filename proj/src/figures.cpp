#include "fracvisco/figures.hpp"

#include <array>
#include <cmath>

#include "fracvisco/mittag_leffler.hpp"
#include "fracvisco/signal.hpp"
#include "fracvisco/viscoelastic.hpp"

namespace fracvisco::figures {

namespace {

constexpr std::array<double, 4> kMus = {0.25, 0.5, 0.75, 1.0};

double psi(double mu, double t) {
  if (t == 0.0) return 1.0;
  return special::ml1(mu, -std::pow(t, mu)).value;
}

double phi(double mu, double t) { return special::phi_kernel(mu, 1.0, t); }

template <class F>
csv::Table relaxation_table(const std::vector<double>& grid, const char* prefix, F&& f) {
  csv::Table table;
  table.header = {"t"};
  table.columns = {grid};
  for (double mu : kMus) {
    table.header.push_back(std::string(prefix) + csv::format_number(mu));
    std::vector<double> col;
    col.reserve(grid.size());
    for (double t : grid) col.push_back(f(mu, t));
    table.columns.push_back(std::move(col));
  }
  return table;
}

}  // namespace

std::optional<FigureId> figure_from_string(std::string_view name) {
  if (name == "fig1") return FigureId::fig1;
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig5") return FigureId::fig5;
  return std::nullopt;
}

std::vector<std::pair<std::string, csv::Table>> figure_tables(FigureId id) {
  std::vector<std::pair<std::string, csv::Table>> out;
  const auto log_grid = logspace(-2.0, 2.0, 201);
  switch (id) {
    case FigureId::fig1:
      out.emplace_back("fig1_linear.csv", relaxation_table(linspace(0.0, 5.0, 501), "psi_mu_", psi));
      out.emplace_back("fig1_log.csv", relaxation_table(log_grid, "psi_mu_", psi));
      break;
    case FigureId::fig2:
      // Phi is infinite at the origin for mu < 1.
      out.emplace_back("fig2_linear.csv", relaxation_table(linspace(1e-3, 5.0, 501), "phi_mu_", phi));
      out.emplace_back("fig2_log.csv", relaxation_table(log_grid, "phi_mu_", phi));
      break;
    case FigureId::fig5: {
      csv::Table table;
      const auto taus = logspace(-2.0, 2.0, 401);
      table.header = {"tau"};
      table.columns = {taus};
      for (const char* label : {"0.25", "0.50", "0.75", "0.90"}) {
        const double nu = std::stod(label);
        table.header.push_back(std::string("R_nu_") + label);
        std::vector<double> col;
        for (double tau : taus) col.push_back(visco::gross_spectrum(nu, 1.0, tau));
        table.columns.push_back(std::move(col));
      }
      out.emplace_back("fig5.csv", std::move(table));
      break;
    }
  }
  return out;
}

}  // namespace fracvisco::figures
