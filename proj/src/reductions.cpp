#include "hyperred/reductions.hpp"

#include <algorithm>

namespace hyperred {

namespace {

const std::vector<IdentityInfo> kRegistry = {
    {"T1E1", 1, 1, true, false, false},   {"T1E2", 2, 1, true, true, false},
    {"T1E3", 3, 1, false, false, false},  {"T1E4", 4, 1, false, true, false},
    {"T2E5", 5, 2, true, false, false},   {"T2E6", 6, 2, true, true, false},
    {"T2E7", 7, 2, false, false, false},  {"T2E8", 8, 2, false, true, false},
    {"T3E9", 9, 3, true, false, false},   {"T3E10", 10, 3, true, true, false},
    {"T3E11", 11, 3, false, false, false}, {"T3E12", 12, 3, false, true, false},
    {"SC13", 13, 1, true, false, true},   {"SC14", 14, 1, true, true, true},
    {"SC15", 15, 1, false, false, true},  {"SC16", 16, 1, false, true, true},
};

// Shift/sign pattern of one identity family.
struct Pattern {
    unsigned mu;       // alpha shift in the inner series (family 2: m)
    unsigned nu;       // beta shift (families 2 and 3: n)
    int row_sign;      // denominator 2a + row_sign*m
    int col_sign;      // denominator 2b + col_sign*n
    bool sign_jk;      // prefactor carries (-1)^{j+k}
    bool sign_k;       // prefactor carries (-1)^k
    int col_num_sign;  // column numerator b + col_num_sign*n on the even side
};

Pattern pattern_for(int family, unsigned m, unsigned n) {
    switch (family) {
        case 1:
            return {0, 0, +1, +1, false, false, +1};
        case 2:
            return {m, n, -1, -1, true, false, -1};
        default:
            return {0, n, +1, -1, false, true, -1};
    }
}

Rational prefactor_coeff(unsigned j, unsigned k, const ReductionParams& p, const Pattern& pt,
                         bool use_e, const BuildOptions& opts) {
    Rational c(1);
    const auto mul_poch = [&](CoeffFactor f, const Rational& base, unsigned lag) {
        if (opts.drop != f) {
            c *= pochhammer(base, lag);
        }
    };
    const auto div_poch = [&](CoeffFactor f, const Rational& base, unsigned lag,
                              const char* what) {
        if (opts.drop == f) {
            return;
        }
        const Rational q = pochhammer(base, lag);
        if (q == 0) {
            throw PolarPrefactor(std::string("prefactor denominator (") + what + ") = " +
                                 format_rational(base) + " vanishes at j=" + std::to_string(j) +
                                 ", k=" + std::to_string(k));
        }
        c /= q;
    };

    const Rational two_alpha = 2 * p.alpha;
    const Rational two_beta = 2 * p.beta;
    const Rational half = rat(1, 2);

    mul_poch(CoeffFactor::num_coupled, p.d, j + k);
    mul_poch(CoeffFactor::num_term_j, Rational(-long(p.m)), j);
    mul_poch(CoeffFactor::num_term_k, Rational(-long(p.n)), k);
    mul_poch(CoeffFactor::num_alpha_j, two_alpha - 2 * long(pt.mu) - 1, j);
    mul_poch(CoeffFactor::num_beta_k, two_beta - 2 * long(pt.nu) - 1, k);
    if (opts.drop != CoeffFactor::sign_factor) {
        if ((pt.sign_jk && (j + k) % 2 != 0) || (pt.sign_k && k % 2 != 0)) {
            c = -c;
        }
    }
    if (use_e) {
        div_poch(CoeffFactor::den_coupled, *p.e, j + k, "e");
    }
    div_poch(CoeffFactor::den_row_j, two_alpha + pt.row_sign * long(p.m), j, "2a+-m");
    div_poch(CoeffFactor::den_col_k, two_beta + pt.col_sign * long(p.n), k, "2b+-n");
    div_poch(CoeffFactor::den_alpha_j, p.alpha - long(pt.mu) - half, j, "a-mu-1/2");
    div_poch(CoeffFactor::den_beta_k, p.beta - long(pt.nu) - half, k, "b-nu-1/2");
    if (opts.drop != CoeffFactor::power4) {
        c /= BigInt(1) << (2 * (j + k));
    }
    c /= factorial(j) * factorial(k);
    return c;
}

SeriesSpec inner_sd(unsigned j, unsigned k, const ReductionParams& p, const Pattern& pt,
                    bool has_e) {
    const Rational c = p.alpha + p.beta + long(j + k) - long(pt.mu) - long(pt.nu);
    const Rational da = p.alpha + long(j) - long(pt.mu) + rat(1, 2);
    const Rational db = p.beta + long(k) - long(pt.nu) + rat(1, 2);
    SdShape sh;
    sh.coupled_num = {{p.d + long(j + k), {1, 2}}};
    if (has_e) {
        sh.coupled_den = {{*p.e + long(j + k), {1, 2}}};
    }
    sh.col_num = {{c / 2, {0, 1}}, {(c + 1) / 2, {0, 1}}};
    sh.col_den = {{da, {0, 1}}, {db, {0, 1}}, {c, {0, 1}}};
    sh.arg1 = {Rational(1), 1};
    sh.arg2 = {rat(1, 4), 2};
    return make_sd(sh);
}

SeriesSpec inner_pfq(unsigned j, unsigned k, const ReductionParams& p, const Pattern& pt,
                     bool has_e, const BuildOptions& opts, const IdentityInfo& info) {
    const Rational c = p.alpha + p.beta + long(j + k) - long(pt.mu) - long(pt.nu);
    const Rational da = p.alpha + long(j) - long(pt.mu) + rat(1, 2);
    const Rational db = p.beta + long(k) - long(pt.nu) + rat(1, 2);
    Rational d_half = (p.d + long(j + k)) / 2;
    if (opts.variant == FormulaVariant::e10_shifted_first_half && info.id == "T3E10") {
        d_half = (p.d + long(j + k) + 1) / 2;
    }
    std::vector<Rational> num = {c / 2, (c + 1) / 2, d_half, (p.d + long(j + k) + 1) / 2};
    std::vector<Rational> den = {da, db, c};
    if (has_e) {
        den.push_back((*p.e + long(j + k)) / 2);
        den.push_back((*p.e + long(j + k) + 1) / 2);
    }
    // Argument x^2/4 when the (e+j+k)/2, (e+j+k+1)/2 pair is present, x^2
    // when it is not: by the duplication identity the pair carries the 4^s
    // that the quartered argument needs, so dropping e rescales the argument.
    const Rational arg_coeff = has_e ? rat(1, 4) : Rational(1);
    return make_pfq(num, den, {arg_coeff, 2});
}

}  // namespace

std::vector<std::pair<LinkKind, LinkKind>> IdentityInfo::links() const {
    if (double_link) {
        return {{LinkKind::KDF, LinkKind::F3}, {LinkKind::F3, LinkKind::SUM}};
    }
    return {{LinkKind::KDF, LinkKind::SUM}};
}

std::vector<std::string> IdentityInfo::param_names() const {
    std::vector<std::string> names = {"d"};
    if (has_e) {
        names.push_back("e");
    }
    names.push_back("alpha");
    names.push_back("beta");
    if (!special_case) {
        names.push_back("m");
        names.push_back("n");
    }
    return names;
}

const std::vector<IdentityInfo>& registry() { return kRegistry; }

const IdentityInfo* find_identity(std::string_view id) {
    const auto it = std::find_if(kRegistry.begin(), kRegistry.end(),
                                 [&](const IdentityInfo& info) { return info.id == id; });
    return it == kRegistry.end() ? nullptr : &*it;
}

const IdentityInfo& identity_or_throw(std::string_view id) {
    if (const IdentityInfo* info = find_identity(id)) {
        return *info;
    }
    throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

std::string link_name(LinkKind a, LinkKind b) {
    const auto name = [](LinkKind l) {
        switch (l) {
            case LinkKind::KDF:
                return "KDF";
            case LinkKind::F3:
                return "F3";
            default:
                return "SUM";
        }
    };
    return std::string(name(a)) + "=" + name(b);
}

Rational coeff_T1(unsigned j, unsigned k, const ReductionParams& p) {
    return prefactor_coeff(j, k, p, pattern_for(1, p.m, p.n), p.e.has_value(), {});
}

Rational coeff_T2(unsigned j, unsigned k, const ReductionParams& p) {
    return prefactor_coeff(j, k, p, pattern_for(2, p.m, p.n), p.e.has_value(), {});
}

Rational coeff_T3(unsigned j, unsigned k, const ReductionParams& p) {
    return prefactor_coeff(j, k, p, pattern_for(3, p.m, p.n), p.e.has_value(), {});
}

IdentityInstance build_identity(std::string_view id, const ReductionParams& params,
                                const BuildOptions& opts) {
    const IdentityInfo& info = identity_or_throw(id);
    const bool spurious_e =
        opts.variant == FormulaVariant::e11_extra_coupled_den && info.id == "T3E11";

    ReductionParams p = params;
    if (info.special_case) {
        p.m = 0;
        p.n = 0;
    }
    if (info.has_e && !p.e) {
        throw InvalidSpec("identity " + info.id + " requires parameter e");
    }
    if (spurious_e && !p.e) {
        throw InvalidSpec("variant e11_extra_coupled_den requires parameter e");
    }
    if (!info.has_e && !spurious_e) {
        p.e.reset();
    }

    const Pattern pt = pattern_for(info.family, p.m, p.n);
    const Rational row_den = 2 * p.alpha + pt.row_sign * long(p.m);
    const Rational col_den = 2 * p.beta + pt.col_sign * long(p.n);

    IdentityInstance inst;
    inst.info = &info;
    inst.params = p;

    KdfShape lhs;
    lhs.coupled_num = {p.d};
    lhs.row_num = {p.alpha};
    lhs.col_num = {info.double_link ? p.beta + pt.col_num_sign * long(p.n) : p.beta};
    if (info.has_e) {
        lhs.coupled_den = {*p.e};
    }
    lhs.row_den = {row_den};
    lhs.col_den = {col_den};
    lhs.arg1 = {Rational(1), 1};
    lhs.arg2 = {info.double_link ? Rational(-1) : Rational(1), 1};
    inst.lhs = make_kdf(lhs);

    if (info.double_link) {
        F3Shape mid;
        mid.all_num = {p.d};
        mid.single2_num = {p.alpha};
        mid.single3_num = {p.beta};
        if (info.has_e) {
            mid.all_den = {*p.e};
        }
        mid.single2_den = {row_den};
        mid.single3_den = {col_den};
        mid.arg1 = {Rational(-1), 1};
        mid.arg2 = {Rational(1), 1};
        mid.arg3 = {Rational(1), 1};
        inst.mid = make_f3(mid);
    }

    for (unsigned j = 0; j <= p.m; ++j) {
        for (unsigned k = 0; k <= p.n; ++k) {
            RhsTerm term;
            term.coefficient = prefactor_coeff(j, k, p, pt, info.has_e || spurious_e, opts);
            term.power = opts.drop_term_power ? 0 : j + k;
            term.series = info.double_link ? inner_pfq(j, k, p, pt, info.has_e, opts, info)
                                           : inner_sd(j, k, p, pt, info.has_e);
            inst.rhs.terms.push_back(std::move(term));
        }
    }
    return inst;
}

std::vector<Rational> rhs_taylor(const RhsSum& rhs, unsigned long order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (const auto& term : rhs.terms) {
        if (term.power > order) {
            continue;
        }
        const auto inner = taylor_coeffs(term.series, order - term.power);
        for (std::size_t t = 0; t < inner.size(); ++t) {
            out[t + term.power] += term.coefficient * inner[t];
        }
    }
    return out;
}

std::vector<Rational> rhs_taylor(std::string_view id, const ReductionParams& params,
                                 unsigned long order) {
    return rhs_taylor(build_identity(id, params).rhs, order);
}

std::vector<Member> members(const IdentityInstance& inst) {
    if (inst.mid) {
        return {Member::kdf_lhs, Member::f3_mid, Member::rhs_sum};
    }
    return {Member::kdf_lhs, Member::rhs_sum};
}

std::vector<std::pair<Member, Member>> link_members(const IdentityInstance& inst) {
    if (inst.mid) {
        return {{Member::kdf_lhs, Member::f3_mid}, {Member::f3_mid, Member::rhs_sum}};
    }
    return {{Member::kdf_lhs, Member::rhs_sum}};
}

std::string member_name(Member m) {
    switch (m) {
        case Member::kdf_lhs:
            return "KDF";
        case Member::f3_mid:
            return "F3";
        default:
            return "SUM";
    }
}

std::vector<Rational> member_taylor(const IdentityInstance& inst, Member m, unsigned long order) {
    switch (m) {
        case Member::kdf_lhs:
            return taylor_coeffs(inst.lhs, order);
        case Member::f3_mid:
            return taylor_coeffs(*inst.mid, order);
        default:
            return rhs_taylor(inst.rhs, order);
    }
}

EvalResult member_eval_float(const IdentityInstance& inst, Member m, double x,
                             const EvalOptions& opts) {
    if (m == Member::kdf_lhs) {
        return eval_float(inst.lhs, x, opts);
    }
    if (m == Member::f3_mid) {
        return eval_float(*inst.mid, x, opts);
    }
    EvalResult total;
    for (const auto& term : inst.rhs.terms) {
        const EvalResult r = eval_float(term.series, x, opts);
        total.value += to_float(term.coefficient) * std::pow(x, double(term.power)) * r.value;
        total.terms_used += r.terms_used;
        total.est_error = std::max(total.est_error, r.est_error);
    }
    return total;
}

PoleReport instance_pole_check(const IdentityInstance& inst, unsigned long order) {
    PoleReport report = pole_check(inst.lhs, order);
    const auto merge = [&](PoleReport r) {
        for (auto& e : r.offending) {
            report.offending.push_back(std::move(e));
        }
    };
    if (inst.mid) {
        merge(pole_check(*inst.mid, order));
    }
    for (const auto& term : inst.rhs.terms) {
        if (term.power <= order) {
            merge(pole_check(term.series, order - term.power));
        }
    }
    return report;
}

}  // namespace hyperred
