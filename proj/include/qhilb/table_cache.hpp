#ifndef QHILB_TABLE_CACHE_HPP
#define QHILB_TABLE_CACHE_HPP

#include <filesystem>
#include <optional>

#include <json.hpp>

#include <qhilb/fountains.hpp>

namespace qhilb::cache
{

inline constexpr int format_version = 1;

// <dir>/fountains-p<p>-n<n_max>-k<k_max>-v<version>.json
std::filesystem::path table_path(const std::filesystem::path &dir, int p, int n_max, int k_max);

// {"format": "qhilb-fountain-table", "version", "p", "n_max", "k_max",
//  "f": [string], "g": [string], "h": [string]}, arrays row-major in (n, k).
nlohmann::json table_to_json(const fountains::FountainTable &table);

// Throws std::runtime_error on a malformed document, a version mismatch, or a
// table that fails FountainTable::validate().
fountains::FountainTable table_from_json(const nlohmann::json &doc);

void save_table(const std::filesystem::path &file, const fountains::FountainTable &table);
fountains::FountainTable load_table(const std::filesystem::path &file);

// Reads the cached table for exactly these bounds when present and valid;
// otherwise builds it and, when dir is set, writes it back. A cached file that
// fails validation is rebuilt and overwritten.
fountains::FountainTable load_or_build(const std::optional<std::filesystem::path> &dir, int p, int n_max, int k_max);

} // namespace qhilb::cache

#endif
