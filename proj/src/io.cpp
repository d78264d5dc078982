#include "disto/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace disto {

nlohmann::ordered_json certificate_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["group"] = cert.group;
  if (cert.power >= std::numeric_limits<std::int64_t>::min() &&
      cert.power <= std::numeric_limits<std::int64_t>::max())
    j["n"] = cert.power.convert_to<std::int64_t>();
  else
    j["n"] = cert.power.str();
  j["target"] = cert.target_key;
  nlohmann::ordered_json word = nlohmann::ordered_json::array();
  for (const Token& t : cert.word.tokens) word.push_back({t.gen, t.sgn});
  j["word"] = std::move(word);
  j["tokens"] = cert.tokens;
  j["verified"] = cert.verified;
  return j;
}

std::string format_sig12(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void CsvWriter::header(const std::vector<std::string>& cols) { line(cols); }

void CsvWriter::row(const std::vector<std::string>& cells) { line(cells); }

void CsvWriter::line(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") == std::string::npos) {
      os_ << c;
    } else {
      os_ << '"';
      for (char ch : c) {
        if (ch == '"') os_ << '"';
        os_ << ch;
      }
      os_ << '"';
    }
  }
  os_ << '\n';  // LF regardless of platform
}

}  // namespace disto
