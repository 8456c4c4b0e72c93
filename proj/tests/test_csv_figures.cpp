#include <cmath>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "fracvisco/csv.hpp"
#include "fracvisco/errors.hpp"
#include "fracvisco/figures.hpp"

using namespace fracvisco;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no fracvisco::Error thrown";
  return ErrorKind::DisagreementWarning;
}

csv::Table parse(const std::string& text) {
  std::istringstream in(text);
  return csv::read(in);
}

const csv::Table& table_named(const std::vector<std::pair<std::string, csv::Table>>& tables,
                              const std::string& name) {
  for (const auto& [n, t] : tables) {
    if (n == name) return t;
  }
  throw std::runtime_error("no table " + name);
}

// Indices of interior local extrema: +1 for a maximum, -1 for a minimum.
std::vector<int> extrema(const std::vector<double>& v) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] > v[i - 1] && v[i] > v[i + 1]) out.push_back(+1);
    if (v[i] < v[i - 1] && v[i] < v[i + 1]) out.push_back(-1);
  }
  return out;
}

}  // namespace

TEST(Csv, FormatNumber) {
  EXPECT_EQ(csv::format_number(0.1), "0.1");
  EXPECT_EQ(csv::format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(csv::format_number(-0.0), "0");
  EXPECT_EQ(csv::format_number(1e-20), "1e-20");
  EXPECT_EQ(csv::format_number(123456789012345.0), "1.23456789012e+14");
}

TEST(Csv, RoundTrip) {
  csv::Table t{{"t", "value"}, {{0.5, 1.0, 2.0}, {3.0, -4.25, 1e-9}}};
  std::ostringstream out;
  csv::write(out, t);
  EXPECT_EQ(out.str(), "t,value\n0.5,3\n1,-4.25\n2,1e-09\n");
  const auto back = parse(out.str());
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.columns, t.columns);
}

TEST(Csv, ReaderTolerance) {
  const auto t = parse("\"t\",\"x\"\r\n0,1\r\n\r\n2,3\r\n");
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "x"}));
  ASSERT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.columns[1][1], 3.0);
}

TEST(Csv, Errors) {
  EXPECT_EQ(kind_of([] { parse(""); }), ErrorKind::MalformedCsv);
  EXPECT_EQ(kind_of([] { parse("t,x\n1,2,3\n"); }), ErrorKind::MalformedCsv);
  EXPECT_EQ(kind_of([] { parse("t,x\n1,abc\n"); }), ErrorKind::MalformedCsv);
  EXPECT_EQ(kind_of([] { parse("t,x\n1,\n"); }), ErrorKind::MalformedCsv);
  EXPECT_EQ(kind_of([] { csv::read_file("/nonexistent/in.csv"); }), ErrorKind::IoFailure);
  csv::Table ragged{{"a", "b"}, {{1.0, 2.0}, {1.0}}};
  std::ostringstream out;
  EXPECT_EQ(kind_of([&] { csv::write(out, ragged); }), ErrorKind::InvalidSignal);
  EXPECT_EQ(kind_of([] { csv::write_file("/nonexistent/dir/out.csv", {{"a"}, {{1.0}}}); }),
            ErrorKind::IoFailure);
}

TEST(Figures, Names) {
  EXPECT_EQ(figures::figure_from_string("fig1"), figures::FigureId::fig1);
  EXPECT_EQ(figures::figure_from_string("fig5"), figures::FigureId::fig5);
  EXPECT_FALSE(figures::figure_from_string("fig3"));
}

TEST(Figures, Fig1Schema) {
  const auto tables = figures::figure_tables(figures::FigureId::fig1);
  ASSERT_EQ(tables.size(), 2u);
  const std::vector<std::string> header{"t", "psi_mu_0.25", "psi_mu_0.5", "psi_mu_0.75", "psi_mu_1"};
  const auto& lin = table_named(tables, "fig1_linear.csv");
  const auto& log = table_named(tables, "fig1_log.csv");
  EXPECT_EQ(lin.header, header);
  EXPECT_EQ(log.header, header);
  EXPECT_EQ(lin.rows(), 501u);
  EXPECT_EQ(log.rows(), 201u);
  EXPECT_EQ(lin.columns[0].front(), 0.0);
  EXPECT_EQ(lin.columns[0].back(), 5.0);
  for (std::size_t c = 1; c < 5; ++c) EXPECT_EQ(lin.columns[c][0], 1.0);
  for (const auto* t : {&lin, &log}) {
    for (std::size_t i = 0; i < t->rows(); ++i) {
      EXPECT_NEAR(t->columns[4][i], std::exp(-t->columns[0][i]), 1e-10);
    }
  }
}

TEST(Figures, Fig2Schema) {
  const auto tables = figures::figure_tables(figures::FigureId::fig2);
  const auto& lin = table_named(tables, "fig2_linear.csv");
  const auto& log = table_named(tables, "fig2_log.csv");
  EXPECT_EQ(lin.header.at(1), "phi_mu_0.25");
  EXPECT_EQ(lin.rows(), 501u);
  EXPECT_EQ(log.rows(), 201u);
  EXPECT_EQ(lin.columns[0].front(), 1e-3);
  EXPECT_NEAR(lin.columns[4][0], std::exp(-1e-3), 1e-15);
}

TEST(Figures, Fig5Shapes) {
  const auto tables = figures::figure_tables(figures::FigureId::fig5);
  ASSERT_EQ(tables.size(), 1u);
  const auto& t = tables.front().second;
  EXPECT_EQ(t.header, (std::vector<std::string>{"tau", "R_nu_0.25", "R_nu_0.50", "R_nu_0.75", "R_nu_0.90"}));
  EXPECT_EQ(t.rows(), 401u);
  for (std::size_t c : {1u, 2u}) {
    for (std::size_t i = 1; i < t.rows(); ++i) EXPECT_LT(t.columns[c][i], t.columns[c][i - 1]);
  }
  EXPECT_EQ(extrema(t.columns[4]), (std::vector<int>{-1, +1}));
  EXPECT_EQ(extrema(t.columns[3]), (std::vector<int>{-1, +1}));
}
