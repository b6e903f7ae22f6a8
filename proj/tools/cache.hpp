#ifndef SSZ_TOOLS_CACHE_HPP
#define SSZ_TOOLS_CACHE_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include <json.hpp>

#include "ssz/quat.hpp"
#include "ssz/ssloc.hpp"

namespace ssz::tools {

struct LocusData {
    std::unique_ptr<SsLocus> locus;
    std::unique_ptr<BrandtCache> brandt;
};

nlohmann::ordered_json locus_json(const SsLocus& locus);
nlohmann::ordered_json matrix_json(const BrandtMatrix& B);

// Per-p locus + Brandt matrices, built once per process under a single-writer
// lock and optionally persisted as JSON under SSZ_CACHE_DIR.  Cached files
// are re-verified on load (canonical order, mass, Brandt invariants).
class CacheManager {
public:
    CacheManager();  // directory from SSZ_CACHE_DIR, if set
    explicit CacheManager(std::optional<std::filesystem::path> dir);

    const LocusData& get(std::uint64_t p);

private:
    LocusData build(std::uint64_t p) const;
    std::optional<LocusData> load_file(std::uint64_t p) const;
    void store_file(std::uint64_t p, const LocusData& data) const;

    std::optional<std::filesystem::path> dir_;
    std::mutex mu_;
    std::map<std::uint64_t, LocusData> entries_;
};

}  // namespace ssz::tools

#endif
