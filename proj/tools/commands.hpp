#ifndef SSZ_TOOLS_COMMANDS_HPP
#define SSZ_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <vector>

#include "pipeline.hpp"

namespace ssz::tools {

// Exit codes shared by the driver: 0 success, 1 internal error, 2 usage,
// 3 conjecture counterexample, 4 proved-theorem check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;
inline constexpr int kExitTheoremFailed = 4;

int cmd_ss(std::uint64_t p, CacheManager& cache, std::ostream& out);
int cmd_brandt(std::uint64_t p, const std::vector<int>& ells,
               const std::vector<std::uint64_t>& extra_m, CacheManager& cache,
               std::ostream& out);
int cmd_eigenform(const std::vector<CurveRecord>& records, CacheManager& cache,
                  std::ostream& out, int jobs);
int cmd_divisor(const std::vector<CurveRecord>& records, CacheManager& cache,
                std::ostream& out, int jobs);
int cmd_check(const std::vector<CurveRecord>& records, CacheManager& cache,
              std::ostream& out, int jobs);
int cmd_survey(const std::vector<CurveRecord>& records, CacheManager& cache,
               std::ostream& out, int jobs);

}  // namespace ssz::tools

#endif
