#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperred/reductions.hpp"

namespace hyperred {

struct VerifyConfig {
    unsigned long order = 12;  // must be >= 2
    unsigned trials = 20;
    std::uint64_t seed = 1;
    bool strict_e_gt_d = false;
    bool beta_equals_alpha = false;
    unsigned m_max = 4;
    unsigned n_max = 4;
    Rational float_x = rat(1, 4);
    double float_tol = 1e-10;
    // Pole-freedom horizon for sampled tuples; covers the depth the float
    // spot check walks to, which exceeds the exact comparison order.
    unsigned long float_guard_order = 40;
};

struct LinkOutcome {
    std::string link;
    bool ok = false;
};

struct Divergence {
    std::string link;
    std::optional<unsigned long> coeff_index;  // exact mode
    std::optional<double> at_x;                // float mode
    std::string lhs;
    std::string rhs;
};

struct FloatSpotCheck {
    Rational x;
    double max_rel_err = 0.0;
    bool ok = false;
};

struct VerifyReport {
    enum class Status { PASS, FAIL, SKIPPED_POLAR };

    std::string id;
    ReductionParams params;
    std::string mode;  // "exact" | "float"
    std::vector<LinkOutcome> links;
    std::optional<Divergence> first_divergence;
    std::optional<FloatSpotCheck> float_check;
    std::optional<std::string> diagnostic;
    Status status = Status::SKIPPED_POLAR;
};

/// Deterministic non-polar parameter tuple for registry entry
/// case_index >> 32, stream case_index & 0xffffffff. Numerators are drawn
/// from [-9, 9], denominators from 1..6; tuples whose prefactors or series
/// turn polar within the configured horizon are resampled. Throws
/// SamplerExhausted after a bounded number of rejections.
ReductionParams sample_params(std::uint64_t seed, std::uint64_t case_index,
                              const VerifyConfig& cfg);

/// Exact coefficient-wise comparison of every link, orders 0..order.
VerifyReport verify_exact(std::string_view id, const ReductionParams& p, unsigned long order,
                          const BuildOptions& opts = {});

/// Floating-point comparison of every link at x; PASS iff the relative
/// difference stays within tol on every link.
VerifyReport verify_float(std::string_view id, const ReductionParams& p, double x, double tol);

struct SweepIdSummary {
    std::string id;
    unsigned trials = 0;
    unsigned pass = 0;
    unsigned fail = 0;
    unsigned skipped = 0;
    unsigned long max_order_checked = 0;
};

struct SweepResult {
    std::vector<VerifyReport> reports;  // ordered by (id, trial)
    std::vector<SweepIdSummary> summary;

    unsigned total_pass() const;
    unsigned total_fail() const;
    unsigned total_skipped() const;
};

/// trials exact verifications per id plus one float spot check per trial,
/// deterministic in (ids, cfg).
SweepResult verify_sweep(const std::vector<std::string>& ids, const VerifyConfig& cfg);

/// CSV summary: id, trials, pass, fail, skipped, max_order_checked.
std::string sweep_summary_csv(const SweepResult& result);

}  // namespace hyperred
