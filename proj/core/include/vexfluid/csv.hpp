#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace vexfluid {

/// CSV writer with a fixed, versioned schema line and deterministic
/// formatting (%.17g), so identical runs produce byte-identical files.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& schema_version,
              const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void flush() { os_.flush(); }

    static std::string format(double v);

  private:
    std::ofstream os_;
    std::size_t ncols_;
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const;  // -1 if absent
    std::vector<double> column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace vexfluid
