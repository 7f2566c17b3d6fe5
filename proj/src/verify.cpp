#include "hyperred/verify.hpp"

#include <cmath>
#include <sstream>

namespace hyperred {

namespace {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Small bounds only; modulo bias is irrelevant here and the stream stays
    // platform-independent.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) { return lo + long(below(std::uint64_t(hi - lo + 1))); }
};

Rational draw_rational(SplitMix64& rng) {
    const long num = rng.range(-9, 9);
    const long den = rng.range(1, 6);
    return rat(num, den);
}

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) / scale;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_config(const VerifyConfig& cfg) {
    if (cfg.order < 2) {
        throw InvalidSpec("verify order must be at least 2");
    }
}

}  // namespace

ReductionParams sample_params(std::uint64_t seed, std::uint64_t case_index,
                              const VerifyConfig& cfg) {
    check_config(cfg);
    const auto& reg = registry();
    const std::size_t idx = std::size_t(case_index >> 32);
    if (idx >= reg.size()) {
        throw UnknownIdentity("case index " + std::to_string(idx) + " out of range");
    }
    const IdentityInfo& info = reg[idx];

    SplitMix64 rng{seed * 0x9e3779b97f4a7c15ull + case_index + 0x632be59bd9b4e019ull};
    rng.next();

    const unsigned long horizon = std::max(cfg.order, cfg.float_guard_order);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        ReductionParams p;
        p.d = draw_rational(rng);
        if (info.has_e) {
            p.e = draw_rational(rng);
        }
        p.alpha = draw_rational(rng);
        p.beta = draw_rational(rng);
        if (cfg.beta_equals_alpha) {
            p.beta = p.alpha;
        }
        if (!info.special_case) {
            p.m = unsigned(rng.below(cfg.m_max + 1));
            p.n = unsigned(rng.below(cfg.n_max + 1));
        }
        if (cfg.strict_e_gt_d && info.has_e && !(*p.e > p.d && p.d > 0)) {
            continue;
        }
        try {
            const IdentityInstance inst = build_identity(info.id, p);
            if (instance_pole_check(inst, horizon).clean()) {
                return p;
            }
        } catch (const PolarPrefactor&) {
            // resample
        }
    }
    throw SamplerExhausted("no non-polar tuple for " + info.id + " after " +
                           std::to_string(kMaxAttempts) + " attempts");
}

VerifyReport verify_exact(std::string_view id, const ReductionParams& p, unsigned long order,
                          const BuildOptions& opts) {
    const IdentityInfo& info = identity_or_throw(id);
    VerifyReport rep;
    rep.id = info.id;
    rep.params = p;
    rep.mode = "exact";
    try {
        const IdentityInstance inst = build_identity(id, p, opts);
        rep.params = inst.params;
        bool all_ok = true;
        for (const auto& [a, b] : link_members(inst)) {
            const auto va = member_taylor(inst, a, order);
            const auto vb = member_taylor(inst, b, order);
            LinkOutcome out;
            out.link = member_name(a) + "=" + member_name(b);
            out.ok = true;
            for (unsigned long t = 0; t <= order; ++t) {
                if (va[t] != vb[t]) {
                    out.ok = false;
                    if (!rep.first_divergence) {
                        rep.first_divergence = Divergence{
                            out.link, t, std::nullopt, format_rational(va[t]),
                            format_rational(vb[t])};
                    }
                    break;
                }
            }
            all_ok = all_ok && out.ok;
            rep.links.push_back(std::move(out));
        }
        rep.status = all_ok ? VerifyReport::Status::PASS : VerifyReport::Status::FAIL;
    } catch (const PolarPrefactor& e) {
        rep.status = VerifyReport::Status::SKIPPED_POLAR;
        rep.diagnostic = e.what();
    } catch (const PoleWithinTruncation& e) {
        rep.status = VerifyReport::Status::SKIPPED_POLAR;
        rep.diagnostic = e.what();
    }
    return rep;
}

VerifyReport verify_float(std::string_view id, const ReductionParams& p, double x, double tol) {
    const IdentityInfo& info = identity_or_throw(id);
    VerifyReport rep;
    rep.id = info.id;
    rep.params = p;
    rep.mode = "float";
    try {
        const IdentityInstance inst = build_identity(id, p);
        rep.params = inst.params;
        bool all_ok = true;
        for (const auto& [a, b] : link_members(inst)) {
            const double va = member_eval_float(inst, a, x).value;
            const double vb = member_eval_float(inst, b, x).value;
            LinkOutcome out;
            out.link = member_name(a) + "=" + member_name(b);
            out.ok = rel_diff(va, vb) <= tol;
            if (!out.ok && !rep.first_divergence) {
                rep.first_divergence = Divergence{out.link, std::nullopt, x, format_double(va),
                                                  format_double(vb)};
            }
            all_ok = all_ok && out.ok;
            rep.links.push_back(std::move(out));
        }
        rep.status = all_ok ? VerifyReport::Status::PASS : VerifyReport::Status::FAIL;
    } catch (const PolarPrefactor& e) {
        rep.status = VerifyReport::Status::SKIPPED_POLAR;
        rep.diagnostic = e.what();
    } catch (const PoleWithinTruncation& e) {
        rep.status = VerifyReport::Status::SKIPPED_POLAR;
        rep.diagnostic = e.what();
    } catch (const NoConvergence& e) {
        rep.status = VerifyReport::Status::FAIL;
        rep.diagnostic = e.what();
    }
    return rep;
}

unsigned SweepResult::total_pass() const {
    unsigned n = 0;
    for (const auto& s : summary) {
        n += s.pass;
    }
    return n;
}

unsigned SweepResult::total_fail() const {
    unsigned n = 0;
    for (const auto& s : summary) {
        n += s.fail;
    }
    return n;
}

unsigned SweepResult::total_skipped() const {
    unsigned n = 0;
    for (const auto& s : summary) {
        n += s.skipped;
    }
    return n;
}

SweepResult verify_sweep(const std::vector<std::string>& ids, const VerifyConfig& cfg) {
    check_config(cfg);
    SweepResult result;
    const auto& reg = registry();
    for (const auto& id : ids) {
        const IdentityInfo& info = identity_or_throw(id);
        std::size_t reg_index = 0;
        for (; reg_index < reg.size(); ++reg_index) {
            if (reg[reg_index].id == info.id) {
                break;
            }
        }
        SweepIdSummary sum;
        sum.id = info.id;
        sum.trials = cfg.trials;
        for (unsigned trial = 0; trial < cfg.trials; ++trial) {
            const std::uint64_t case_index = (std::uint64_t(reg_index) << 32) | trial;
            const ReductionParams p = sample_params(cfg.seed, case_index, cfg);
            VerifyReport rep = verify_exact(id, p, cfg.order);
            if (rep.status != VerifyReport::Status::SKIPPED_POLAR) {
                sum.max_order_checked = std::max(sum.max_order_checked, cfg.order);
                // one float spot check per trial
                const double x = to_float(cfg.float_x);
                FloatSpotCheck spot;
                spot.x = cfg.float_x;
                spot.ok = true;
                try {
                    const IdentityInstance inst = build_identity(id, p);
                    for (const auto& [a, b] : link_members(inst)) {
                        const double va = member_eval_float(inst, a, x).value;
                        const double vb = member_eval_float(inst, b, x).value;
                        spot.max_rel_err = std::max(spot.max_rel_err, rel_diff(va, vb));
                    }
                    spot.ok = spot.max_rel_err <= cfg.float_tol;
                } catch (const std::exception& e) {
                    spot.ok = false;
                    rep.diagnostic = e.what();
                }
                rep.float_check = spot;
                if (rep.status == VerifyReport::Status::PASS && !spot.ok) {
                    rep.status = VerifyReport::Status::FAIL;
                }
            }
            switch (rep.status) {
                case VerifyReport::Status::PASS:
                    ++sum.pass;
                    break;
                case VerifyReport::Status::FAIL:
                    ++sum.fail;
                    break;
                case VerifyReport::Status::SKIPPED_POLAR:
                    ++sum.skipped;
                    break;
            }
            result.reports.push_back(std::move(rep));
        }
        result.summary.push_back(std::move(sum));
    }
    return result;
}

std::string sweep_summary_csv(const SweepResult& result) {
    std::ostringstream os;
    os << "id,trials,pass,fail,skipped,max_order_checked\n";
    for (const auto& s : result.summary) {
        os << s.id << ',' << s.trials << ',' << s.pass << ',' << s.fail << ',' << s.skipped << ','
           << s.max_order_checked << '\n';
    }
    return os.str();
}

}  // namespace hyperred
