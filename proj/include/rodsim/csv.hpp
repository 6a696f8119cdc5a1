#pragma once

#include <string>
#include <vector>

namespace rodsim {

/// Comma-separated output with a header row; numbers are written in scientific
/// notation with 16 significant digits.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

    void row(const std::vector<double>& values);

  private:
    struct Impl;
    Impl* impl_;
};

std::string format_sci(double v);

}  // namespace rodsim
