#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperred/family.hpp"
#include "hyperred/series.hpp"

namespace hyperred {

/// Free parameters of one reduction identity. e is absent for the identities
/// without a coupled denominator parameter.
struct ReductionParams {
    Rational d;
    std::optional<Rational> e;
    Rational alpha;
    Rational beta;
    unsigned m = 0;
    unsigned n = 0;
};

enum class LinkKind { KDF, F3, SUM };

/// The three members an identity can relate.
enum class Member { kdf_lhs, f3_mid, rhs_sum };

/// Registry metadata for one identity. family selects the prefactor/shift
/// pattern (1, 2 or 3); special cases pin m = n = 0.
struct IdentityInfo {
    std::string id;  // T1E1..T1E4, T2E5..T2E8, T3E9..T3E12, SC13..SC16
    int equation;    // 1..16
    int family;      // 1, 2 or 3
    bool has_e;
    bool double_link;    // KDF=F3 and F3=SUM instead of KDF=SUM
    bool special_case;   // m = n = 0 forced

    std::vector<std::pair<LinkKind, LinkKind>> links() const;
    std::vector<std::string> param_names() const;
};

const std::vector<IdentityInfo>& registry();
const IdentityInfo* find_identity(std::string_view id);
const IdentityInfo& identity_or_throw(std::string_view id);

std::string link_name(LinkKind a, LinkKind b);

/// One term of the finite reduction sum: coefficient * x^power * series.
struct RhsTerm {
    Rational coefficient;
    unsigned power = 0;
    SeriesSpec series;
};

struct RhsSum {
    std::vector<RhsTerm> terms;  // (m+1)(n+1) of them, indexed by (j, k)
};

/// Deliberately wrong alternate readings; the verifier must reject them.
enum class FormulaVariant {
    standard,
    e10_shifted_first_half,   // (d+j+k)/2 numerator replaced by (d+j+k+1)/2
    e11_extra_coupled_den,    // prefactor keeps a spurious (e)_{j+k} factor
};

/// Single structural factor of the prefactor C_{j,k}, for drop-one mutation
/// tests against the exact verifier.
enum class CoeffFactor {
    none,
    power4,        // 2^{2j+2k}
    sign_factor,   // (-1)^{j+k} or (-1)^k
    num_coupled,   // (d)_{j+k}
    num_term_j,    // (-m)_j
    num_term_k,    // (-n)_k
    num_alpha_j,   // (2a-2mu-1)_j
    num_beta_k,    // (2b-2nu-1)_k
    den_coupled,   // (e)_{j+k}
    den_row_j,     // (2a+-m)_j
    den_col_k,     // (2b+-n)_k
    den_alpha_j,   // (a-mu-1/2)_j
    den_beta_k,    // (b-nu-1/2)_k
};

struct BuildOptions {
    FormulaVariant variant = FormulaVariant::standard;
    CoeffFactor drop = CoeffFactor::none;
    bool drop_term_power = false;  // emit x^0 instead of x^{j+k} on RHS terms
};

/// Prefactor C_{j,k} of the family-1 pattern; throws PolarPrefactor when a
/// denominator Pochhammer vanishes. The (e)_{j+k} factor is omitted when e
/// is absent.
Rational coeff_T1(unsigned j, unsigned k, const ReductionParams& p);
/// Family-2 pattern: sign (-1)^{j+k}, numerators shifted by -2m/-2n,
/// denominators (2a-m)_j, (2b-n)_k, (a-m-1/2)_j, (b-n-1/2)_k.
Rational coeff_T2(unsigned j, unsigned k, const ReductionParams& p);
/// Family-3 pattern: sign (-1)^k, j-factors as family 1, k-factors as
/// family 2.
Rational coeff_T3(unsigned j, unsigned k, const ReductionParams& p);

/// A fully instantiated identity: left member, optional middle member, and
/// the finite sum on the right. params are the effective values (m = n = 0
/// for special cases, e dropped when the identity has none).
struct IdentityInstance {
    const IdentityInfo* info = nullptr;
    ReductionParams params;
    SeriesSpec lhs;
    std::optional<SeriesSpec> mid;
    RhsSum rhs;
};

IdentityInstance build_identity(std::string_view id, const ReductionParams& params,
                                const BuildOptions& opts = {});

/// Exact Taylor coefficients of the finite sum up to x^order.
std::vector<Rational> rhs_taylor(const RhsSum& rhs, unsigned long order);
std::vector<Rational> rhs_taylor(std::string_view id, const ReductionParams& params,
                                 unsigned long order);

std::vector<Member> members(const IdentityInstance& inst);
std::vector<std::pair<Member, Member>> link_members(const IdentityInstance& inst);
std::string member_name(Member m);

std::vector<Rational> member_taylor(const IdentityInstance& inst, Member m, unsigned long order);
EvalResult member_eval_float(const IdentityInstance& inst, Member m, double x,
                             const EvalOptions& opts = {});

/// Pole scan over every series of the instance (RHS series are checked at
/// order reduced by their x-power).
PoleReport instance_pole_check(const IdentityInstance& inst, unsigned long order);

}  // namespace hyperred
