#include "csv.hpp"

#include "error.hpp"

namespace mgc {

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> row;
  std::string f;
  bool quoted = false, any = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          f += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        f += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(f));
      f.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !f.empty()) {
        row.push_back(std::move(f));
        out.push_back(std::move(row));
      }
      row.clear();
      f.clear();
      any = false;
    } else {
      f += c;
      any = true;
    }
  }
  if (quoted) fail(Err::ParseError, "unterminated quoted field");
  if (any || !f.empty()) {
    row.push_back(std::move(f));
    out.push_back(std::move(row));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string r;
  for (size_t i = 0; i < fields.size(); ++i) r += (i ? "," : "") + csv_field(fields[i]);
  return r + "\n";
}

}  // namespace mgc
