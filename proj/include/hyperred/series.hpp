#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperred/rational.hpp"

namespace hyperred {

/// Parameter value plus one integer weight per summation index. A parameter
/// (a, w) contributes the Pochhammer factor (a)_{w·k} to the term at
/// multi-index k. Weights of (1,1), (1,0), (0,1) give the usual coupled, row
/// and column parameters of a double series; (1,2) gives (a)_{r+2s}.
struct WeightedParam {
    Rational value;
    std::vector<unsigned> weights;
};

/// Series argument coeff * x^degree in the single formal variable x.
struct ArgMonomial {
    Rational coeff = Rational(0);
    unsigned degree = 1;
};

/// One multi-index hypergeometric series:
///
///   prefactor_coeff * x^prefactor_degree *
///     Sum_k [ prod_num (a)_{w·k} / prod_den (b)_{w·k} ]
///           * prod_i coeff_i^{k_i} x^{degree_i k_i} / k_i!
///
/// over k in N^index_count. Every weight vector has length index_count, and
/// every argument with nonzero coefficient must have degree >= 1 so
/// coefficient extraction terminates. Indices whose argument coefficient is
/// zero are pinned to k_i = 0.
struct SeriesSpec {
    unsigned index_count = 1;  // 1, 2 or 3
    std::vector<WeightedParam> num;
    std::vector<WeightedParam> den;
    std::vector<ArgMonomial> args;
    Rational prefactor_coeff = Rational(1);
    unsigned prefactor_degree = 0;
};

using MultiIndex = std::vector<unsigned long>;

/// Throws InvalidSpec / DegreeZeroArgument when the structural invariants do
/// not hold.
void validate_spec(const SeriesSpec& spec);

/// Denominator parameters whose Pochhammer vanishes inside a truncation
/// region, with the first (by x-degree, then lexicographic) offending index.
struct PoleReport {
    struct Entry {
        WeightedParam param;
        MultiIndex index;
    };
    std::vector<Entry> offending;

    bool clean() const { return offending.empty(); }
};

/// Exact (coefficient, x-degree) of the term at multi-index k, prefactor
/// included. Throws PoleAtIndex when a denominator Pochhammer is zero at k.
std::pair<Rational, unsigned long> term_coeff(const SeriesSpec& spec, const MultiIndex& k);

/// Exact Taylor coefficients of x^0..x^order. Enumerates exactly the
/// multi-indices whose x-degree is <= order, a finite set because all active
/// argument degrees are >= 1.
std::vector<Rational> taylor_coeffs(const SeriesSpec& spec, unsigned long order);

/// Scans the truncation region for vanishing denominator Pochhammers. A
/// parameter with value b is flagged iff b is an integer <= 0 and some
/// enumerated index with x-degree <= order has w·k >= 1-b.
PoleReport pole_check(const SeriesSpec& spec, unsigned long order);

struct EvalOptions {
    double rel_tol = 1e-13;
    std::size_t max_terms = 1000000;
    double radius = 0.5;  // float evaluation is restricted to |x| <= radius
};

struct EvalResult {
    double value = 0.0;
    double est_error = 0.0;
    std::size_t terms_used = 0;
};

/// Compensated floating-point summation in order of increasing x-degree.
/// Stops once three consecutive degree blocks contribute less than rel_tol
/// relative magnitude; throws NoConvergence when max_terms is exhausted first
/// and PoleWithinTruncation when the walk reaches a vanishing denominator.
EvalResult eval_float(const SeriesSpec& spec, double x, const EvalOptions& opts = {});

}  // namespace hyperred
