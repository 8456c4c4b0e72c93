#include "fracvisco/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "fracvisco/errors.hpp"

namespace fracvisco::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorKind::MalformedCsv, "unterminated quoted field");
  out.push_back(field);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write(std::ostream& out, const Table& table) {
  if (table.columns.size() != table.header.size()) {
    throw Error(ErrorKind::InvalidSignal, "CSV header and column count differ");
  }
  for (const auto& col : table.columns) {
    if (col.size() != table.rows()) throw Error(ErrorKind::InvalidSignal, "CSV columns are ragged");
  }
  for (std::size_t j = 0; j < table.header.size(); ++j) {
    out << (j ? "," : "") << table.header[j];
  }
  out << '\n';
  for (std::size_t i = 0; i < table.rows(); ++i) {
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
      out << (j ? "," : "") << format_number(table.columns[j][i]);
    }
    out << '\n';
  }
}

void write_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoFailure, "cannot write '" + path + "'");
  write(out, table);
  out.flush();
  if (!out) throw Error(ErrorKind::IoFailure, "write to '" + path + "' failed");
}

Table read(std::istream& in) {
  Table table;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (!have_header) {
      for (auto& f : fields) table.header.push_back(trim(f));
      table.columns.resize(table.header.size());
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(ErrorKind::MalformedCsv, "line " + std::to_string(lineno) + ": expected " +
                                               std::to_string(table.header.size()) + " fields");
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      const std::string f = trim(fields[j]);
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(f.c_str(), &end);
      if (f.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
        throw Error(ErrorKind::MalformedCsv,
                    "line " + std::to_string(lineno) + ": '" + f + "' is not a finite number");
      }
      table.columns[j].push_back(v);
    }
  }
  if (!have_header) throw Error(ErrorKind::MalformedCsv, "missing header row");
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoFailure, "cannot open '" + path + "'");
  return read(in);
}

}  // namespace fracvisco::csv
