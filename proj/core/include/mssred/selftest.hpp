#ifndef MSSRED_SELFTEST_HPP
#define MSSRED_SELFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mssred/satss.hpp"

namespace mssred {

struct CriterionResult {
    std::string id;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct SelftestOptions {
    std::uint64_t seed = 20250107;
    unsigned jobs = 1;
};

/// Pinned limits.
namespace limits {
inline constexpr double kA1Seconds = 60;
inline constexpr double kA5Seconds = 600;
inline constexpr double kA10Seconds = 120;
inline constexpr std::uint64_t kA10MinHits = 1;
}  // namespace limits

std::vector<std::string> criterion_ids();

/// Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, const SelftestOptions& opt = {});

std::vector<CriterionResult> run_selftest(const SelftestOptions& opt = {}, const std::vector<std::string>& only = {});

/// "A1 PASS (1.2s) detail" style line.
std::string format_result(const CriterionResult& r);

/// Formula with a planted exactly-one assignment in which every variable occurs.
SatInstance planted_sat(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// Every formula (clauses as literal multisets, formulas as clause multisets) with
/// n variables and m clauses in which each variable occurs.
std::vector<SatInstance> all_formulas(std::size_t n, std::size_t m);

}  // namespace mssred

#endif
