#ifndef SSZ_TOOLS_RECORDS_HPP
#define SSZ_TOOLS_RECORDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssz/ecq.hpp"

namespace ssz::tools {

// One ingested curve.  Ranks are trusted input and never recomputed.
struct CurveRecord {
    std::string label;
    std::uint64_t p = 0;
    BigInt a1, a2, a3, a4, a6;
    std::optional<int> rank;
};

// The embedded record used when no curve file is supplied.
CurveRecord builtin_curve();

// CSV with header `label,p,a1,a2,a3,a4,a6,rank`; `#` starts a comment line.
// Throws invalid_input with the file name and line number on malformed input.
std::vector<CurveRecord> parse_curves(const std::string& path);

// Validated CurveQ: prime conductor, multiplicative reduction at p, and the
// discriminant supported only at p.  Throws invalid_input naming the curve.
CurveQ make_curve(const CurveRecord& rec);

}  // namespace ssz::tools

#endif
