#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsf::test {

struct OracleRow {
  std::string function;
  double a[4] = {NAN, NAN, NAN, NAN};
  double value = 0.0;
  double abs_err = 0.0;
};

inline std::vector<OracleRow> load_oracle(const std::string& path = QSF_TEST_DATA_DIR "/oracle_values.csv") {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<OracleRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 7) throw std::runtime_error("malformed oracle row: " + line);
    OracleRow r;
    r.function = cells[0];
    for (int i = 0; i < 4; ++i) {
      if (!cells[i + 1].empty()) r.a[i] = std::stod(cells[i + 1]);
    }
    r.value = std::stod(cells[5]);
    r.abs_err = std::stod(cells[6]);
    rows.push_back(r);
  }
  return rows;
}

inline std::vector<OracleRow> rows_with_prefix(const std::vector<OracleRow>& all, const std::string& prefix) {
  std::vector<OracleRow> out;
  for (const auto& r : all) {
    if (r.function.rfind(prefix, 0) == 0) out.push_back(r);
  }
  return out;
}

}  // namespace qsf::test
