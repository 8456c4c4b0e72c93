#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracvisco::csv {

/// Column-oriented table with a mandatory header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

/// %.12g formatting shared by every CSV the tools write.
std::string format_number(double v);

/// Comma separated, "\n" line endings. Throws InvalidSignal on ragged columns.
void write(std::ostream& out, const Table& table);
void write_file(const std::string& path, const Table& table);

/// Parses a numeric table. Header fields may be double-quoted; blank lines
/// are skipped; CRLF is accepted. Throws MalformedCsv.
Table read(std::istream& in);
Table read_file(const std::string& path);

}  // namespace fracvisco::csv
