#pragma once

// On-disk cache of oracle cells: one JSON object per line,
// {"n":..,"d":..,"w":..,"basis_size":..,"rank":..,"dim":..}.

#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include <json.hpp>

namespace nlie {

struct OracleRecord {
    int n = 0;
    int d = 0;
    int w = 0;
    std::size_t basis_size = 0;
    std::size_t rank = 0;
    std::size_t dim = 0;
};

inline nlohmann::json to_json(const OracleRecord& r) {
    return {{"n", r.n}, {"d", r.d}, {"w", r.w}, {"basis_size", r.basis_size}, {"rank", r.rank}, {"dim", r.dim}};
}

inline OracleRecord oracle_record_from_json(const nlohmann::json& j) {
    OracleRecord r;
    r.n = j.at("n").get<int>();
    r.d = j.at("d").get<int>();
    r.w = j.at("w").get<int>();
    r.basis_size = j.at("basis_size").get<std::size_t>();
    r.rank = j.at("rank").get<std::size_t>();
    r.dim = j.at("dim").get<std::size_t>();
    return r;
}

class OracleCache {
public:
    static constexpr const char* env_var = "NLIE_ORACLE_CACHE";
    static constexpr const char* file_name = "graded_dimensions.jsonl";

    /// Cache rooted at $NLIE_ORACLE_CACHE, or a disabled cache if unset.
    static OracleCache from_environment() {
        const char* dir = std::getenv(env_var);
        if (dir == nullptr || *dir == '\0') return OracleCache();
        return OracleCache(dir);
    }

    OracleCache() = default;

    explicit OracleCache(std::filesystem::path dir) : path_(std::move(dir) / file_name) {
        std::ifstream in(*path_);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            // Damaged lines are skipped; the cell is recomputed on demand.
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            try {
                OracleRecord r = oracle_record_from_json(j);
                cells_[{r.n, r.d, r.w}] = r;
            } catch (const nlohmann::json::exception&) {
            }
        }
    }

    bool enabled() const { return path_.has_value(); }

    std::optional<OracleRecord> find(int n, int d, int w) const {
        auto it = cells_.find({n, d, w});
        if (it == cells_.end()) return std::nullopt;
        return it->second;
    }

    void store(const OracleRecord& r) {
        if (cells_.count({r.n, r.d, r.w})) return;
        cells_[{r.n, r.d, r.w}] = r;
        if (!path_) return;
        std::filesystem::create_directories(path_->parent_path());
        std::ofstream out(*path_, std::ios::app);
        out << to_json(r).dump() << '\n';
    }

private:
    std::optional<std::filesystem::path> path_;
    std::map<std::tuple<int, int, int>, OracleRecord> cells_;
};

}  // namespace nlie
