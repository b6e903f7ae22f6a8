#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace ssz::tools {

CurveReport run_pipeline(const CurveRecord& rec, CacheManager& cache) {
    CurveQ E = make_curve(rec);
    const LocusData& data = cache.get(rec.p);
    const SsLocus& locus = *data.locus;

    CurveReport r;
    r.rec = rec;
    r.eigenform = extract_eigenform(*data.brandt, E);
    r.analysis = analyze(E, locus, r.eigenform);
    r.eps = r.analysis.eps;
    r.torsion = torsion_order(E);
    r.pairing_norm = pairing(locus, r.eigenform.v, r.eigenform.v);
    r.modular_degree = BigRat(r.pairing_norm, BigInt(r.torsion.order));
    r.modular_degree.canonicalize();
    r.degree_integral = r.modular_degree.get_den() == 1;
    r.two_torsion = E.has_rational_two_torsion();
    r.disc_sign = E.disc_sign();
    const int app = ap(E, rec.p);
    r.parity2 = parity_checks(locus, data.brandt->b2, &r.eigenform, app);
    r.parity3 = parity_checks(locus, data.brandt->b3, &r.eigenform, app);
    r.evenness_theorem = theorem_even_check(E, r.eigenform, locus);
    r.evenness_conjecture = conjecture1_check(r.analysis, r.eigenform, locus, rec.rank);
    r.gw = gross_waldspurger_check(E, r.eigenform, locus);

    if (!rec.rank) r.flags.push_back("rank_unknown");
    if (!r.torsion.witnessed) r.flags.push_back("torsion_heuristic");
    if (!r.degree_integral) r.flags.push_back("degree_nonintegral");
    return r;
}

std::vector<CurveReport> run_all(std::vector<CurveRecord> records, CacheManager& cache,
                                 int jobs) {
    std::sort(records.begin(), records.end(), [](const CurveRecord& a, const CurveRecord& b) {
        return a.p != b.p ? a.p < b.p : a.label < b.label;
    });
    if (jobs <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        jobs = static_cast<int>(std::min<unsigned>(hw == 0 ? 1 : hw, 8));
    }
    jobs = std::min<int>(jobs, static_cast<int>(records.size()) == 0 ? 1
                                                                     : static_cast<int>(records.size()));

    std::vector<CurveReport> out(records.size());
    std::vector<std::exception_ptr> errors(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= records.size()) return;
            try {
                out[i] = run_pipeline(records[i], cache);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);  // first failing curve in canonical order
    return out;
}

}  // namespace ssz::tools
