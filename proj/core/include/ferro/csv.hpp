#pragma once

// Minimal CSV emitter for diagnostic reports. Values use %.17g so the files
// round-trip doubles exactly; rows end with '\n' regardless of platform.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "ferro/errors.hpp"

namespace ferro {

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns)
      : out_(path, std::ios::binary), ncols_(columns.size()) {
    if (!out_) throw IoError("cannot open '" + path + "' for writing");
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out_ << ',';
      out_ << columns[i];
    }
    out_ << '\n';
  }

  void row(const std::vector<double>& values) {
    if (values.size() != ncols_)
      throw IoError("csv row width does not match the header");
    char buf[64];
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
      out_ << buf;
    }
    out_ << '\n';
  }

  // Mixed row for reports with a leading label column.
  void row(const std::string& label, const std::vector<double>& values) {
    if (values.size() + 1 != ncols_)
      throw IoError("csv row width does not match the header");
    out_ << label;
    char buf[64];
    for (double v : values) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out_ << ',' << buf;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
  std::size_t ncols_;
};

}  // namespace ferro
