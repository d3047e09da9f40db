#pragma once

#include <string>
#include <vector>

namespace mgc {

// RFC 4180 records; quoted fields may contain commas, quotes and newlines.
std::vector<std::vector<std::string>> read_csv(const std::string& text);
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace mgc
