#include "hyperred/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace hyperred {

namespace {

unsigned long weighted_lag(const WeightedParam& p, const MultiIndex& k) {
    unsigned long lag = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        lag += static_cast<unsigned long>(p.weights[i]) * k[i];
    }
    return lag;
}

std::string describe_pole(const PoleReport::Entry& e) {
    std::ostringstream os;
    os << "denominator parameter " << format_rational(e.param.value) << " (weights";
    for (unsigned w : e.param.weights) {
        os << ' ' << w;
    }
    os << ") vanishes at index (";
    for (std::size_t i = 0; i < e.index.size(); ++i) {
        os << (i ? "," : "") << e.index[i];
    }
    os << ")";
    return os.str();
}

// Calls fn(k) for every multi-index with sum_i degree_i*k_i == residual,
// lexicographically ascending. Indices whose argument coefficient is zero are
// pinned to zero.
void for_each_at_residual(const SeriesSpec& spec, unsigned long residual,
                          const std::function<void(const MultiIndex&)>& fn) {
    MultiIndex k(spec.index_count, 0);
    std::function<void(unsigned, unsigned long)> rec = [&](unsigned level, unsigned long rem) {
        if (level == spec.index_count) {
            if (rem == 0) {
                fn(k);
            }
            return;
        }
        const auto& arg = spec.args[level];
        if (arg.coeff == 0) {
            rec(level + 1, rem);
            return;
        }
        const unsigned long g = arg.degree;
        for (unsigned long v = 0; v * g <= rem; ++v) {
            k[level] = v;
            rec(level + 1, rem - v * g);
        }
        k[level] = 0;
    };
    rec(0, residual);
}

struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

}  // namespace

void validate_spec(const SeriesSpec& spec) {
    if (spec.index_count < 1 || spec.index_count > 3) {
        throw InvalidSpec("index_count must be 1, 2 or 3");
    }
    if (spec.args.size() != spec.index_count) {
        throw InvalidSpec("argument count must equal index_count");
    }
    for (const auto& arg : spec.args) {
        if (arg.coeff != 0 && arg.degree == 0) {
            throw DegreeZeroArgument("argument with nonzero coefficient has degree 0");
        }
    }
    const auto check_params = [&](const std::vector<WeightedParam>& ps, const char* side) {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (ps[i].weights.size() != spec.index_count) {
                throw InvalidSpec(std::string(side) + " parameter " + std::to_string(i) +
                                  " has wrong weight count");
            }
            if (std::all_of(ps[i].weights.begin(), ps[i].weights.end(),
                            [](unsigned w) { return w == 0; })) {
                throw InvalidSpec(std::string(side) + " parameter " + std::to_string(i) + " (" +
                                  format_rational(ps[i].value) + ") has all-zero weights");
            }
        }
    };
    check_params(spec.num, "numerator");
    check_params(spec.den, "denominator");
}

std::pair<Rational, unsigned long> term_coeff(const SeriesSpec& spec, const MultiIndex& k) {
    validate_spec(spec);
    if (k.size() != spec.index_count) {
        throw InvalidSpec("multi-index size must equal index_count");
    }
    unsigned long degree = spec.prefactor_degree;
    Rational value = spec.prefactor_coeff;
    for (unsigned i = 0; i < spec.index_count; ++i) {
        degree += static_cast<unsigned long>(spec.args[i].degree) * k[i];
        for (unsigned long j = 0; j < k[i]; ++j) {
            value *= spec.args[i].coeff;
        }
        value /= factorial(k[i]);
    }
    for (const auto& p : spec.num) {
        value *= pochhammer(p.value, weighted_lag(p, k));
    }
    for (const auto& p : spec.den) {
        const Rational q = pochhammer(p.value, weighted_lag(p, k));
        if (q == 0) {
            throw PoleAtIndex(describe_pole({p, k}));
        }
        value /= q;
    }
    return {value, degree};
}

PoleReport pole_check(const SeriesSpec& spec, unsigned long order) {
    validate_spec(spec);
    PoleReport report;
    // Candidates: integer values <= 0 vanish once the lag reaches 1 - value.
    struct Candidate {
        const WeightedParam* param;
        BigInt threshold;
        bool found = false;
    };
    std::vector<Candidate> cands;
    for (const auto& p : spec.den) {
        if (is_nonpositive_integer(p.value)) {
            cands.push_back({&p, 1 - numerator(p.value), false});
        }
    }
    if (cands.empty() || spec.prefactor_degree > order) {
        return report;
    }
    std::size_t remaining = cands.size();
    for (unsigned long t = spec.prefactor_degree; t <= order && remaining > 0; ++t) {
        for_each_at_residual(spec, t - spec.prefactor_degree, [&](const MultiIndex& k) {
            for (auto& c : cands) {
                if (!c.found && BigInt(weighted_lag(*c.param, k)) >= c.threshold) {
                    c.found = true;
                    --remaining;
                    report.offending.push_back({*c.param, k});
                }
            }
        });
    }
    return report;
}

std::vector<Rational> taylor_coeffs(const SeriesSpec& spec, unsigned long order) {
    validate_spec(spec);
    if (const PoleReport rep = pole_check(spec, order); !rep.clean()) {
        throw PoleWithinTruncation(describe_pole(rep.offending.front()));
    }
    std::vector<Rational> out(order + 1, Rational(0));
    if (spec.prefactor_degree > order) {
        return out;
    }

    // Running products per parameter; updated by the linear factors a new
    // index step brings in, never recomputed from scratch.
    struct TermState {
        std::vector<Rational> num_vals;
        std::vector<Rational> den_vals;
        Rational scale;  // prefactor * prod_i coeff_i^{k_i} / k_i!
    };
    TermState init;
    init.num_vals.assign(spec.num.size(), Rational(1));
    init.den_vals.assign(spec.den.size(), Rational(1));
    init.scale = spec.prefactor_coeff;

    MultiIndex k(spec.index_count, 0);

    const auto emit = [&](unsigned long degree, const TermState& st) {
        Rational v = st.scale;
        for (const auto& nv : st.num_vals) {
            v *= nv;
        }
        Rational d(1);
        for (const auto& dv : st.den_vals) {
            d *= dv;
        }
        v /= d;
        out[degree] += v;
    };

    std::function<void(unsigned, unsigned long, TermState)> walk =
        [&](unsigned level, unsigned long degree, TermState st) {
            const auto& arg = spec.args[level];
            const bool active = arg.coeff != 0;
            const unsigned long g = arg.degree;
            for (;;) {
                if (level + 1 == spec.index_count) {
                    emit(degree, st);
                } else {
                    walk(level + 1, degree, st);
                }
                if (!active || degree + g > order) {
                    break;
                }
                // advance k[level] by one
                for (std::size_t pi = 0; pi < spec.num.size(); ++pi) {
                    const unsigned w = spec.num[pi].weights[level];
                    if (w == 0) {
                        continue;
                    }
                    const unsigned long lag = weighted_lag(spec.num[pi], k);
                    for (unsigned l = 0; l < w; ++l) {
                        st.num_vals[pi] *= spec.num[pi].value + (lag + l);
                    }
                }
                for (std::size_t pi = 0; pi < spec.den.size(); ++pi) {
                    const unsigned w = spec.den[pi].weights[level];
                    if (w == 0) {
                        continue;
                    }
                    const unsigned long lag = weighted_lag(spec.den[pi], k);
                    for (unsigned l = 0; l < w; ++l) {
                        st.den_vals[pi] *= spec.den[pi].value + (lag + l);
                    }
                }
                st.scale *= arg.coeff;
                st.scale /= k[level] + 1;
                ++k[level];
                degree += g;
            }
            k[level] = 0;
        };
    walk(0, spec.prefactor_degree, std::move(init));
    return out;
}

EvalResult eval_float(const SeriesSpec& spec, double x, const EvalOptions& opts) {
    validate_spec(spec);
    if (!(opts.rel_tol > 0)) {
        throw std::domain_error("eval_float: rel_tol must be positive");
    }
    if (!(std::abs(x) <= opts.radius)) {
        throw std::domain_error("eval_float: |x| exceeds the safe radius");
    }

    const unsigned dims = spec.index_count;
    std::vector<double> num_val(spec.num.size()), den_val(spec.den.size());
    for (std::size_t i = 0; i < spec.num.size(); ++i) {
        num_val[i] = to_float(spec.num[i].value);
    }
    for (std::size_t i = 0; i < spec.den.size(); ++i) {
        den_val[i] = to_float(spec.den[i].value);
    }
    std::array<bool, 3> active{false, false, false};
    std::array<double, 3> arg_coeff{0, 0, 0};
    std::array<unsigned long, 3> deg{1, 1, 1};
    bool any_active = false;
    for (unsigned i = 0; i < dims; ++i) {
        active[i] = spec.args[i].coeff != 0;
        any_active = any_active || active[i];
        arg_coeff[i] = to_float(spec.args[i].coeff);
        deg[i] = spec.args[i].degree;
    }

    // Ratio of the term coefficients at k + e_i and k.
    const auto ratio_along = [&](unsigned i, const MultiIndex& k) -> double {
        double r = arg_coeff[i] / double(k[i] + 1);
        for (std::size_t pi = 0; pi < spec.num.size(); ++pi) {
            const unsigned w = spec.num[pi].weights[i];
            if (w == 0) {
                continue;
            }
            const unsigned long lag = weighted_lag(spec.num[pi], k);
            for (unsigned l = 0; l < w; ++l) {
                r *= num_val[pi] + double(lag + l);
            }
        }
        for (std::size_t pi = 0; pi < spec.den.size(); ++pi) {
            const unsigned w = spec.den[pi].weights[i];
            if (w == 0) {
                continue;
            }
            const unsigned long lag = weighted_lag(spec.den[pi], k);
            for (unsigned l = 0; l < w; ++l) {
                const double f = den_val[pi] + double(lag + l);
                if (f == 0.0) {
                    throw PoleWithinTruncation(
                        describe_pole({spec.den[pi], k}));
                }
                r /= f;
            }
        }
        return r;
    };

    // Term coefficients are carried along rows: for each fixed suffix
    // (k_2, k_3) we keep the last coefficient on the k_1 walk, and row bases
    // at k_1 = 0 are derived from their predecessor suffix. Every term costs
    // one ratio update.
    using Key = std::array<unsigned long, 2>;
    struct RowState {
        unsigned long r = 0;
        double coeff = 0.0;
    };
    std::map<Key, RowState> rows;
    std::map<Key, double> bases;
    bases[{0, 0}] = to_float(spec.prefactor_coeff);
    const int suffix_len = int(dims) - 1;

    std::function<double(Key)> base_of = [&](Key key) -> double {
        const auto it = bases.find(key);
        if (it != bases.end()) {
            return it->second;
        }
        int j = suffix_len - 1;
        while (j >= 0 && key[j] == 0) {
            --j;
        }
        Key pred = key;
        --pred[std::size_t(j)];
        const double prev = base_of(pred);
        MultiIndex k(dims, 0);
        for (int i = 0; i < suffix_len; ++i) {
            k[std::size_t(i) + 1] = pred[std::size_t(i)];
        }
        const double val = prev * ratio_along(unsigned(j) + 1, k);
        bases.emplace(key, val);
        return val;
    };

    NeumaierSum total;
    std::size_t terms = 0;
    int quiet = 0;
    double last_block = 0.0;
    double xpow = std::pow(x, double(spec.prefactor_degree));
    MultiIndex k(dims, 0);

    for (unsigned long t = spec.prefactor_degree;; ++t, xpow *= x) {
        const unsigned long residual = t - spec.prefactor_degree;
        NeumaierSum block;
        std::size_t block_terms = 0;

        const unsigned long lim3 = (dims == 3 && active[2]) ? residual / deg[2] : 0;
        for (unsigned long k3 = 0; k3 <= lim3; ++k3) {
            const unsigned long rem3 = residual - k3 * deg[2];
            const unsigned long lim2 = (dims >= 2 && active[1]) ? rem3 / deg[1] : 0;
            for (unsigned long k2 = 0; k2 <= lim2; ++k2) {
                const unsigned long rem = rem3 - k2 * deg[1];
                unsigned long r = 0;
                if (active[0]) {
                    if (rem % deg[0] != 0) {
                        continue;
                    }
                    r = rem / deg[0];
                } else if (rem != 0) {
                    continue;
                }
                const Key key{k2, k3};
                auto [it, inserted] = rows.try_emplace(key);
                RowState& row = it->second;
                if (inserted) {
                    row.coeff = base_of(key);
                }
                while (row.r < r) {
                    k[0] = row.r;
                    if (dims >= 2) {
                        k[1] = k2;
                    }
                    if (dims == 3) {
                        k[2] = k3;
                    }
                    row.coeff *= ratio_along(0, k);
                    ++row.r;
                }
                block.add(row.coeff);
                ++block_terms;
                if (++terms > opts.max_terms) {
                    throw NoConvergence("term budget of " + std::to_string(opts.max_terms) +
                                        " exhausted before the stopping rule fired");
                }
            }
        }

        if (block_terms > 0) {
            const double block_value = block.value() * xpow;
            total.add(block_value);
            if (x == 0.0) {
                break;  // every later block carries a factor x^t = 0
            }
            last_block = block_value;
            const double scale = std::max(std::abs(total.value()), 1e-300);
            if (std::abs(block_value) / scale < opts.rel_tol) {
                ++quiet;
            } else {
                quiet = 0;
            }
            if (quiet >= 3) {
                break;
            }
        }
        if (!any_active) {
            break;  // single term at the prefactor degree
        }
    }

    EvalResult res;
    res.value = total.value();
    res.terms_used = terms;
    res.est_error =
        (last_block == 0.0) ? 0.0 : std::abs(last_block) / std::max(std::abs(res.value), 1e-300);
    return res;
}

}  // namespace hyperred
