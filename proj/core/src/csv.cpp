#include "adsorb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "adsorb/errors.hpp"

namespace adsorb {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& provenance,
               const std::vector<CsvColumn>& columns) {
  for (const std::string& line : provenance) os << "# " << line << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    os << (c ? "," : "") << columns[c].name;
  }
  os << "\n";
  if (columns.empty()) return;
  const std::size_t rows = columns.front().data.size();
  for (const CsvColumn& col : columns) {
    if (col.data.size() != rows) {
      throw Error("write_csv: column '" + col.name + "' has mismatched length");
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "") << format_number(columns[c].data[r]);
    }
    os << "\n";
  }
}

void write_csv_file(const std::string& path,
                    const std::vector<std::string>& provenance,
                    const std::vector<CsvColumn>& columns) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file '" + path + "'");
  write_csv(f, provenance, columns);
  f.flush();
  if (!f) throw Error("write failed for '" + path + "'");
}

}  // namespace adsorb
