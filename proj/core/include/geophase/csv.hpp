#ifndef GEOPHASE_CSV_HPP
#define GEOPHASE_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace geophase {

// Numeric cell with 17 significant digits, '.' decimal separator; nan/inf
// spelled literally so output stays byte-deterministic.
std::string csv_number(double x);

class CsvWriter {
  public:
    CsvWriter(std::ostream& out, bool with_header_comments);
    void comment(const std::string& line);              // "# line"
    void header(const std::vector<std::string>& cols);  // column names row
    void row(const std::vector<std::string>& cells);

  private:
    std::ostream& out_;
    bool comments_;
};

}  // namespace geophase

#endif
