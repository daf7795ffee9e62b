#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace mfvar {

// 15 significant digits; the single formatting rule shared by CSV and JSON output.
inline std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline double round15(double x) { return std::stod(fmt15(x)); }

// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  // Comment lines carry the run configuration ahead of the header row.
  void comment(const std::string& text) { os_ << "# " << text << "\r\n"; }

  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os_ << (i ? "," : "") << csv_field(fields[i]);
    os_ << "\r\n";
  }

 private:
  std::ostream& os_;
};

}  // namespace mfvar
