#include "cache.hpp"

#include <cstdlib>
#include <fstream>

namespace ssz::tools {

using nlohmann::ordered_json;

ordered_json locus_json(const SsLocus& locus) {
    ordered_json j;
    j["p"] = locus.p();
    j["nonresidue"] = quadratic_nonresidue(locus.p());
    j["n"] = locus.n();
    ordered_json classes = ordered_json::array();
    for (const SsClass& c : locus.classes()) {
        ordered_json cj;
        cj["index"] = c.index;
        cj["j"] = {c.j.a().value(), c.j.b().value()};
        cj["weight"] = c.weight;
        cj["conj"] = c.conj;
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    j["s_p"] = locus.s_p();
    return j;
}

ordered_json matrix_json(const BrandtMatrix& B) {
    ordered_json j;
    j["m"] = B.m;
    j["entries"] = B.entries;
    return j;
}

CacheManager::CacheManager() {
    if (const char* d = std::getenv("SSZ_CACHE_DIR"); d && *d) dir_ = std::filesystem::path(d);
}

CacheManager::CacheManager(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

const LocusData& CacheManager::get(std::uint64_t p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(p);
    if (it != entries_.end()) return it->second;
    LocusData data;
    bool from_disk = false;
    if (dir_) {
        if (auto loaded = load_file(p)) {
            data = std::move(*loaded);
            from_disk = true;
        }
    }
    if (!data.locus) data = build(p);
    if (dir_ && !from_disk) store_file(p, data);
    return entries_.emplace(p, std::move(data)).first->second;
}

LocusData CacheManager::build(std::uint64_t p) const {
    LocusData d;
    d.locus = std::make_unique<SsLocus>(p);
    d.brandt = std::make_unique<BrandtCache>(*d.locus);
    return d;
}

std::optional<LocusData> CacheManager::load_file(std::uint64_t p) const {
    std::filesystem::path file = *dir_ / ("p" + std::to_string(p) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    ordered_json j;
    try {
        in >> j;
        if (j.at("schema").get<int>() != 1 || j.at("p").get<std::uint64_t>() != p)
            return std::nullopt;
        std::vector<SsClass> classes;
        for (const auto& cj : j.at("locus").at("classes")) {
            SsClass c;
            c.index = cj.at("index").get<std::size_t>();
            c.j = Fp2(Fp(cj.at("j").at(0).get<std::uint64_t>(), p),
                      Fp(cj.at("j").at(1).get<std::uint64_t>(), p));
            c.weight = cj.at("weight").get<int>();
            c.conj = cj.at("conj").get<std::size_t>();
            classes.push_back(c);
        }
        LocusData d;
        d.locus = std::make_unique<SsLocus>(p, std::move(classes));  // re-verifies
        auto read_matrix = [&](const char* key, std::uint64_t m) {
            BrandtMatrix B;
            B.p = p;
            B.m = m;
            B.entries = j.at(key).at("entries").get<std::vector<std::vector<std::int64_t>>>();
            return B;
        };
        BrandtMatrix b2 = read_matrix("b2", 2);
        BrandtMatrix b3 = read_matrix("b3", 3);
        validate_brandt(*d.locus, b2, 3);
        validate_brandt(*d.locus, b3, 4);
        d.brandt = std::make_unique<BrandtCache>(*d.locus, std::move(b2), std::move(b3),
                                                 brandt_p(*d.locus));
        return d;
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt or stale cache file: fall back to recomputation
    }
}

void CacheManager::store_file(std::uint64_t p, const LocusData& data) const {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    ordered_json j;
    j["schema"] = 1;
    j["p"] = p;
    j["locus"] = locus_json(*data.locus);
    j["b2"] = matrix_json(data.brandt->b2);
    j["b3"] = matrix_json(data.brandt->b3);
    std::filesystem::path file = *dir_ / ("p" + std::to_string(p) + ".json");
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;  // cache is best-effort
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, file, ec);
}

}  // namespace ssz::tools
