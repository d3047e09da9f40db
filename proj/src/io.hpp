#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "counts.hpp"
#include "interp.hpp"

namespace mgc {

extern const char* const kToolVersion;
extern const char* const kBanner;

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);
// Writes to a temporary sibling and renames it over the target.
void write_atomic(const std::string& path, const std::string& content);

struct TableFile {
  std::string name;
  std::string sha256;  // empty when absent
  bool present = false;
};

// Ingested tables of a data directory. Absent optional tables are empty.
struct DataBundle {
  std::string dir;
  Genus3Data data;
  std::vector<TableFile> files;
  // Censuses keyed by (genus, q).
  std::map<std::pair<int, int>, Census> censuses;
  // Combined hash of all table hashes.
  std::string hash() const;
};

CharPolyTable parse_charpoly_csv(const std::string& text);
std::string charpoly_csv(const CharPolyTable& t);
std::map<std::pair<int, int>, Int> parse_gen_trace_csv(const std::string& text);
std::map<LocalWeight, Int> parse_ec_csv(const std::string& text);
std::map<std::pair<LocalWeight, int>, Int> parse_trace_csv(const std::string& text);
std::string ec_csv(const std::map<LocalWeight, Int>& t);
std::string trace_csv(const std::map<std::pair<LocalWeight, int>, Int>& t);

DataBundle load_bundle(const std::string& dir);

nlohmann::json header_json(const DataBundle& b);
nlohmann::json error_json(const Error& e);
nlohmann::json ec_json(const EquivariantEC& e);
EquivariantEC ec_from_json(const nlohmann::json& j);
nlohmann::json diagnostics_json(const SolveReport& r);
nlohmann::json stage_json(const M3Stage& s);
M3Stage stage_from_json(const nlohmann::json& j);

}  // namespace mgc
