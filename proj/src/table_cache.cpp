#include <qhilb/table_cache.hpp>

#include <fstream>
#include <stdexcept>
#include <string>

namespace qhilb::cache
{

namespace
{

constexpr const char *format_tag = "qhilb-fountain-table";

nlohmann::json encode(const std::vector<Coefficient> &values)
{
    auto arr = nlohmann::json::array();
    for (const auto &c : values) {
        arr.push_back(to_decimal(c));
    }
    return arr;
}

std::vector<Coefficient> decode(const nlohmann::json &arr)
{
    if (!arr.is_array()) {
        throw std::runtime_error("table entries must be an array of decimal strings");
    }
    std::vector<Coefficient> out;
    out.reserve(arr.size());
    for (const auto &v : arr) {
        if (!v.is_string()) {
            throw std::runtime_error("table entries must be decimal strings");
        }
        try {
            out.push_back(parse_coefficient(v.get<std::string>()));
        } catch (const std::invalid_argument &e) {
            throw std::runtime_error(e.what());
        }
    }
    return out;
}

} // namespace

std::filesystem::path table_path(const std::filesystem::path &dir, int p, int n_max, int k_max)
{
    return dir / ("fountains-p" + std::to_string(p) + "-n" + std::to_string(n_max) + "-k" + std::to_string(k_max)
                  + "-v" + std::to_string(format_version) + ".json");
}

nlohmann::json table_to_json(const fountains::FountainTable &table)
{
    nlohmann::json doc;
    doc["format"] = format_tag;
    doc["version"] = format_version;
    doc["p"] = table.p();
    doc["n_max"] = table.n_max();
    doc["k_max"] = table.k_max();
    doc["f"] = encode(table.raw(fountains::TableKind::f));
    doc["g"] = encode(table.raw(fountains::TableKind::g));
    doc["h"] = encode(table.raw(fountains::TableKind::h));
    return doc;
}

fountains::FountainTable table_from_json(const nlohmann::json &doc)
{
    if (!doc.is_object() || doc.value("format", "") != format_tag) {
        throw std::runtime_error("not a fountain table document");
    }
    if (!doc.contains("version") || doc["version"] != format_version) {
        throw std::runtime_error("unsupported fountain table version");
    }
    for (const char *key : {"p", "n_max", "k_max"}) {
        if (!doc.contains(key) || !doc[key].is_number_integer()) {
            throw std::runtime_error(std::string("missing integer field '") + key + "'");
        }
    }
    for (const char *key : {"f", "g", "h"}) {
        if (!doc.contains(key)) {
            throw std::runtime_error(std::string("missing table '") + key + "'");
        }
    }
    auto make = [&] {
        try {
            return fountains::FountainTable::from_arrays(doc["p"].get<int>(), doc["n_max"].get<int>(),
                                                         doc["k_max"].get<int>(), decode(doc["f"]), decode(doc["g"]),
                                                         decode(doc["h"]));
        } catch (const std::invalid_argument &e) {
            throw std::runtime_error(e.what());
        }
    };
    auto table = make();
    if (!table.has_g() || !table.has_h()) {
        throw std::runtime_error("cached table is missing g or h");
    }
    if (const auto problem = table.validate(); !problem.empty()) {
        throw std::runtime_error("cached table is invalid: " + problem);
    }
    return table;
}

void save_table(const std::filesystem::path &file, const fountains::FountainTable &table)
{
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    const auto tmp = std::filesystem::path(file).concat(".tmp");
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << table_to_json(table).dump() << '\n';
    }
    std::filesystem::rename(tmp, file);
}

fountains::FountainTable load_table(const std::filesystem::path &file)
{
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("cannot read " + file.string());
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("malformed table file " + file.string() + ": " + e.what());
    }
    return table_from_json(doc);
}

fountains::FountainTable load_or_build(const std::optional<std::filesystem::path> &dir, int p, int n_max, int k_max)
{
    if (dir) {
        const auto file = table_path(*dir, p, n_max, k_max);
        if (std::filesystem::exists(file)) {
            try {
                auto table = load_table(file);
                if (table.p() == p && table.n_max() == n_max && table.k_max() == k_max) {
                    return table;
                }
            } catch (const std::runtime_error &) {
                // Rebuilt below.
            }
        }
        auto table = fountains::build_table(p, n_max, k_max);
        save_table(file, table);
        return table;
    }
    return fountains::build_table(p, n_max, k_max);
}

} // namespace qhilb::cache
