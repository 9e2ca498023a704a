#ifndef ADSORB_CSV_HPP_
#define ADSORB_CSV_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace adsorb {

// One named numeric column. All columns of a table must share a length.
struct CsvColumn {
  std::string name;
  std::vector<double> data;
};

// 12-significant-digit representation, locale-independent.
std::string format_number(double v);

// '#'-prefixed provenance lines, a header row, then numeric rows.
// Deterministic: identical inputs give byte-identical output.
void write_csv(std::ostream& os, const std::vector<std::string>& provenance,
               const std::vector<CsvColumn>& columns);

// Same, to a file; throws Error on I/O failure.
void write_csv_file(const std::string& path,
                    const std::vector<std::string>& provenance,
                    const std::vector<CsvColumn>& columns);

}  // namespace adsorb

#endif  // ADSORB_CSV_HPP_
