#ifndef SSZ_TOOLS_PIPELINE_HPP
#define SSZ_TOOLS_PIPELINE_HPP

#include <string>
#include <vector>

#include "cache.hpp"
#include "records.hpp"
#include "ssz/divisor.hpp"

namespace ssz::tools {

// Everything the subcommands report about one curve.
struct CurveReport {
    CurveRecord rec;
    int eps = 0;
    TorsionResult torsion;
    Eigenform eigenform;
    CurveAnalysis analysis;
    BigInt pairing_norm;
    BigRat modular_degree;  // <v,v>/t
    bool degree_integral = true;
    bool two_torsion = false;
    int disc_sign = 0;
    ParityReport parity2, parity3;
    CheckVerdict evenness_theorem = CheckVerdict::not_applicable;
    ConjectureResult evenness_conjecture;
    std::vector<GrossWaldspurgerEntry> gw;
    std::vector<std::string> flags;
};

CurveReport run_pipeline(const CurveRecord& rec, CacheManager& cache);

// Reports for all records, sorted by (p, label), computed by `jobs` workers
// (0 = pick a bounded default).  Output is independent of the job count.
std::vector<CurveReport> run_all(std::vector<CurveRecord> records, CacheManager& cache,
                                 int jobs);

}  // namespace ssz::tools

#endif
