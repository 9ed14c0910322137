// verify_suites.hpp — seeded oracle verification runs behind the `verify` CLI
// command: reproducible parameter draws, fixed thresholds, per-check results.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omgbh/capacity.hpp"

namespace omgbh {

// Deterministic uniform draws independent of the platform's distribution
// implementations (std::uniform_real_distribution is not portable).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64();
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

struct CheckResult {
    std::string label;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    double max_residual(const std::string& label_prefix = "") const;
};

inline constexpr double kCovarianceThreshold = 1e-6;
inline constexpr double kBogoliubovThreshold = 1e-6;
inline constexpr double kCoherentInfoThreshold = 1e-3;

SuiteReport run_bogoliubov_suite(int cutoff, std::uint64_t seed);
SuiteReport run_channel_suite(int cutoff, std::uint64_t seed);
SuiteReport run_entropy_suite(int cutoff, std::uint64_t seed,
                              LogBase base = LogBase::bits());
SuiteReport run_all_suites(int cutoff, std::uint64_t seed,
                           LogBase base = LogBase::bits());

}  // namespace omgbh
