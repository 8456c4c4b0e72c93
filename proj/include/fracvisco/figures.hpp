#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracvisco/csv.hpp"

namespace fracvisco::figures {

enum class FigureId { fig1, fig2, fig5 };

std::optional<FigureId> figure_from_string(std::string_view name);

/// Named CSV tables for one figure, e.g. {"fig1_linear.csv", table}.
///  fig1: Psi(t) = E_mu(-t^mu) on [0, 5] (501 points, Psi(0) = 1) and on
///        logspace(-2, 2, 201), mu in {1/4, 1/2, 3/4, 1};
///  fig2: Phi(t) = t^{mu-1} E_{mu,mu}(-t^mu) on [1e-3, 5] and the same log grid;
///  fig5: Gross spectrum with tau* = 1 on logspace(-2, 2, 401) for
///        nu in {0.25, 0.50, 0.75, 0.90}.
std::vector<std::pair<std::string, csv::Table>> figure_tables(FigureId id);

}  // namespace fracvisco::figures
