#pragma once

// Serialization surface: certificate JSON and plot-ready CSV with a header
// row, LF line endings and 12 significant digits. Identical inputs must
// produce byte-identical output.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "disto/bigint.hpp"
#include "disto/word.hpp"

namespace disto {

// {"group": ..., "n": int, "target": key, "word": [[gen,sgn],...],
//  "tokens": int, "verified": bool}. Powers beyond int64 are emitted as
// decimal strings instead of lossy numbers.
nlohmann::ordered_json certificate_json(const Certificate& cert);

std::string format_sig12(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void header(const std::vector<std::string>& cols);
  void row(const std::vector<std::string>& cells);

  static std::string cell(double v) { return format_sig12(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(long v) { return std::to_string(v); }
  static std::string cell(std::size_t v) { return std::to_string(v); }
  static std::string cell(const BigInt& v) { return v.str(); }
  static std::string cell(bool v) { return v ? "true" : "false"; }
  static std::string cell(const std::string& v) { return v; }

 private:
  void line(const std::vector<std::string>& cells);
  std::ostream& os_;
};

}  // namespace disto
