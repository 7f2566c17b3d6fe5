#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hyperred/family.hpp"
#include "hyperred/series.hpp"
#include "testutil.hpp"

using namespace hyperred;

namespace {

SeriesSpec exp_spec() {
    return make_pfq({}, {}, {Rational(1), 1});
}

SeriesSpec gauss_2f1_spec() {
    return make_pfq({Rational(1), Rational(1)}, {Rational(2)}, {Rational(1), 1});
}

// Brute-force reference: sums term_coeff over every enumerable multi-index,
// independent of the incremental walker inside taylor_coeffs.
std::vector<Rational> taylor_by_enumeration(const SeriesSpec& spec, unsigned long order) {
    std::vector<Rational> out(order + 1, Rational(0));
    MultiIndex k(spec.index_count, 0);
    std::function<void(unsigned)> rec = [&](unsigned level) {
        if (level == spec.index_count) {
            const auto [value, degree] = term_coeff(spec, k);
            if (degree <= order) {
                out[degree] += value;
            }
            return;
        }
        const auto& arg = spec.args[level];
        const unsigned long lim =
            (arg.coeff == 0) ? 0 : (order - spec.prefactor_degree) / arg.degree;
        for (unsigned long v = 0; v <= lim; ++v) {
            k[level] = v;
            rec(level + 1);
        }
        k[level] = 0;
    };
    if (spec.prefactor_degree <= order) {
        rec(0);
    }
    return out;
}

// Random spec with positive non-integer denominator parameters (pole-free
// everywhere) whose numerator weight never outgrows denominator weight plus
// the factorial, so the float path converges inside the radius.
SeriesSpec random_spec(testutil::Rng& rng, unsigned dims) {
    for (;;) {
        SeriesSpec spec;
        spec.index_count = dims;
        const auto weights = [&]() {
            std::vector<unsigned> w(dims, 0);
            while (std::all_of(w.begin(), w.end(), [](unsigned x) { return x == 0; })) {
                for (auto& x : w) {
                    x = unsigned(rng.range(0, 2));
                }
            }
            return w;
        };
        const int nnum = int(rng.range(0, 2));
        for (int i = 0; i < nnum; ++i) {
            spec.num.push_back({rng.rational(6, 4), weights()});
        }
        const int nden = int(rng.range(0, 2));
        for (int i = 0; i < nden; ++i) {
            spec.den.push_back({rng.safe_den_param(), weights()});
        }
        spec.args.clear();
        for (unsigned i = 0; i < dims; ++i) {
            spec.args.push_back({rng.rational(3, 4), unsigned(rng.range(1, 2))});
        }
        spec.prefactor_coeff = rng.nonzero_rational(4, 3);
        spec.prefactor_degree = unsigned(rng.range(0, 2));

        bool balanced = true;
        for (unsigned i = 0; i < dims; ++i) {
            unsigned num_w = 0, den_w = 0;
            for (const auto& p : spec.num) {
                num_w += p.weights[i];
            }
            for (const auto& p : spec.den) {
                den_w += p.weights[i];
            }
            balanced = balanced && num_w <= den_w + 1;
        }
        if (balanced) {
            return spec;
        }
    }
}

}  // namespace

TEST_CASE("term_coeff on the exponential series") {
    const auto [value, degree] = term_coeff(exp_spec(), {3});
    CHECK(value == rat(1, 6));
    CHECK(degree == 3);
}

TEST_CASE("term_coeff with a terminating numerator") {
    const SeriesSpec spec = make_pfq({Rational(-2)}, {}, {Rational(1), 1});
    const auto [value, degree] = term_coeff(spec, {3});
    CHECK(value == 0);
    CHECK(degree == 3);
}

TEST_CASE("term_coeff of 2F1(1,1;2;x) is 1/(n+1)") {
    const SeriesSpec spec = gauss_2f1_spec();
    for (unsigned long n = 0; n <= 20; ++n) {
        const auto [value, degree] = term_coeff(spec, {n});
        CHECK(value == Rational(1) / (n + 1));
        CHECK(degree == n);
    }
}

TEST_CASE("term_coeff rejects a vanishing denominator") {
    const SeriesSpec spec = make_pfq({Rational(1)}, {Rational(-2)}, {Rational(1), 1});
    CHECK_THROWS_AS(term_coeff(spec, {4}), PoleAtIndex);
}

TEST_CASE("taylor_coeffs frozen examples") {
    CHECK(taylor_coeffs(exp_spec(), 4) ==
          std::vector<Rational>{1, 1, rat(1, 2), rat(1, 6), rat(1, 24)});
    CHECK(taylor_coeffs(gauss_2f1_spec(), 3) ==
          std::vector<Rational>{1, rat(1, 2), rat(1, 3), rat(1, 4)});

    // sum over s of (x^2/4)^s / s!
    const SeriesSpec squared = make_pfq({}, {}, {rat(1, 4), 2});
    CHECK(taylor_coeffs(squared, 5) ==
          std::vector<Rational>{1, 0, rat(1, 4), 0, rat(1, 32), 0});
}

TEST_CASE("taylor_coeffs matches brute-force term enumeration") {
    testutil::Rng rng(201);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned dims = unsigned(rng.range(1, 3));
        const SeriesSpec spec = random_spec(rng, dims);
        const unsigned long order = 8;
        CHECK(taylor_coeffs(spec, order) == taylor_by_enumeration(spec, order));
    }
}

TEST_CASE("taylor_coeffs is linear in the prefactor") {
    testutil::Rng rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesSpec spec = random_spec(rng, unsigned(rng.range(1, 3)));
        const Rational c = rng.nonzero_rational();
        SeriesSpec scaled = spec;
        scaled.prefactor_coeff *= c;
        const auto base = taylor_coeffs(spec, 8);
        const auto big = taylor_coeffs(scaled, 8);
        for (std::size_t t = 0; t < base.size(); ++t) {
            CHECK(big[t] == c * base[t]);
        }
    }
}

TEST_CASE("argument scaling multiplies index-i contributions by c^{k_i}") {
    testutil::Rng rng(203);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesSpec spec = random_spec(rng, 2);
        const Rational c = rng.nonzero_rational(4, 3);
        SeriesSpec scaled = spec;
        scaled.args[0].coeff *= c;
        MultiIndex k = {(unsigned long)rng.range(0, 4), (unsigned long)rng.range(0, 4)};
        const auto base = term_coeff(spec, k);
        const auto moved = term_coeff(scaled, k);
        Rational factor(1);
        for (unsigned long i = 0; i < k[0]; ++i) {
            factor *= c;
        }
        CHECK(moved.first == factor * base.first);
        CHECK(moved.second == base.second);
    }
}

TEST_CASE("term ratio follows the Pochhammer recurrence") {
    testutil::Rng rng(204);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned dims = unsigned(rng.range(1, 3));
        SeriesSpec spec = random_spec(rng, dims);
        for (auto& arg : spec.args) {
            if (arg.coeff == 0) {
                arg.coeff = 1;  // keep every index active for the ratio
            }
        }
        MultiIndex k(dims);
        for (auto& v : k) {
            v = (unsigned long)rng.range(0, 4);
        }
        const unsigned i = unsigned(rng.range(0, long(dims) - 1));
        MultiIndex k2 = k;
        ++k2[i];

        const auto t1 = term_coeff(spec, k);
        const auto t2 = term_coeff(spec, k2);

        Rational expected = t1.first * spec.args[i].coeff / (k[i] + 1);
        for (const auto& p : spec.num) {
            unsigned long lag = 0;
            for (std::size_t d = 0; d < k.size(); ++d) {
                lag += p.weights[d] * k[d];
            }
            for (unsigned l = 0; l < p.weights[i]; ++l) {
                expected *= p.value + (lag + l);
            }
        }
        for (const auto& p : spec.den) {
            unsigned long lag = 0;
            for (std::size_t d = 0; d < k.size(); ++d) {
                lag += p.weights[d] * k[d];
            }
            for (unsigned l = 0; l < p.weights[i]; ++l) {
                expected /= p.value + (lag + l);
            }
        }
        CHECK(t2.first == expected);
    }
}

TEST_CASE("pole_check examples") {
    SeriesSpec spec;
    spec.index_count = 2;
    spec.args = {{Rational(1), 1}, {rat(1, 4), 2}};

    SUBCASE("non-integer denominators never vanish") {
        spec.den.push_back({rat(3, 2), {1, 1}});
        CHECK(pole_check(spec, 40).clean());
    }
    SUBCASE("value -2 with weights (1,0) flags (3,0)") {
        spec.den.push_back({Rational(-2), {1, 0}});
        const auto rep = pole_check(spec, 40);
        REQUIRE(rep.offending.size() == 1);
        CHECK(rep.offending[0].index == MultiIndex{3, 0});
    }
    SUBCASE("value 0 with weights (1,1) flags (1,0)") {
        spec.den.push_back({Rational(0), {1, 1}});
        const auto rep = pole_check(spec, 2);
        REQUIRE(rep.offending.size() == 1);
        CHECK(rep.offending[0].index == MultiIndex{1, 0});
    }
    SUBCASE("pole beyond the truncation region is not flagged") {
        spec.den.push_back({Rational(-2), {1, 0}});
        CHECK(pole_check(spec, 2).clean());
    }
}

TEST_CASE("taylor_coeffs refuses polar and degree-zero specs") {
    SeriesSpec polar = make_pfq({Rational(1)}, {Rational(-2)}, {Rational(1), 1});
    CHECK_THROWS_AS(taylor_coeffs(polar, 10), PoleWithinTruncation);
    CHECK_NOTHROW(taylor_coeffs(polar, 2));  // pole sits at degree 3

    SeriesSpec bad;
    bad.index_count = 1;
    bad.args = {{Rational(1), 0}};
    CHECK_THROWS_AS(taylor_coeffs(bad, 4), DegreeZeroArgument);

    SeriesSpec zero_weight;
    zero_weight.index_count = 1;
    zero_weight.args = {{Rational(1), 1}};
    zero_weight.num.push_back({Rational(1), {0}});
    CHECK_THROWS_AS(taylor_coeffs(zero_weight, 4), InvalidSpec);
}

TEST_CASE("eval_float at x = 0 returns the constant term") {
    const auto r = eval_float(exp_spec(), 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.est_error == 0.0);
    CHECK(r.terms_used == 1);
}

TEST_CASE("eval_float matches the closed form of 2F1(1,1;2;x)") {
    // -ln(1-x)/x at x = 1/2 is 2 ln 2.
    const auto r = eval_float(gauss_2f1_spec(), 0.5);
    CHECK(std::abs(r.value - 2 * std::log(2.0)) < 1e-12);
    CHECK(r.est_error < 1e-12);
}

TEST_CASE("eval_float agrees with exact partial sums") {
    testutil::Rng rng(205);
    for (int trial = 0; trial < 25; ++trial) {
        const SeriesSpec spec = random_spec(rng, unsigned(rng.range(1, 3)));
        const Rational x = rat(1, 4);
        const auto coeffs = taylor_coeffs(spec, 40);
        Rational acc(0);
        Rational xpow(1);
        for (const auto& c : coeffs) {
            acc += c * xpow;
            xpow *= x;
        }
        const double reference = to_float(acc);
        const double got = eval_float(spec, 0.25).value;
        const double scale = std::max({std::abs(reference), std::abs(got), 1.0});
        CHECK(std::abs(got - reference) / scale < 1e-12);
    }
}

TEST_CASE("eval_float precondition and budget errors") {
    CHECK_THROWS_AS(eval_float(exp_spec(), 0.75), std::domain_error);  // outside radius
    EvalOptions bad_tol;
    bad_tol.rel_tol = 0.0;
    CHECK_THROWS_AS(eval_float(exp_spec(), 0.25, bad_tol), std::domain_error);

    EvalOptions tiny;
    tiny.max_terms = 3;
    CHECK_THROWS_AS(eval_float(gauss_2f1_spec(), 0.4, tiny), NoConvergence);
}

TEST_CASE("eval_float detects a pole reached by the walk") {
    // Pole at n = 6; the block decay is far too slow for the stopping rule to
    // fire before the walk lands on it.
    const SeriesSpec polar = make_pfq({Rational(1)}, {Rational(-5)}, {Rational(1), 1});
    CHECK_THROWS_AS(eval_float(polar, 0.5), PoleWithinTruncation);
}

TEST_CASE("zero-coefficient argument short-circuits its index") {
    KdfShape sh;
    sh.coupled_num = {rat(1, 3)};
    sh.row_num = {rat(2, 5)};
    sh.col_num = {rat(7, 2)};
    sh.row_den = {rat(9, 4)};
    sh.col_den = {rat(11, 6)};
    sh.arg1 = {rat(1, 2), 1};
    sh.arg2 = {Rational(0), 1};
    const SeriesSpec kdf = make_kdf(sh);
    const SeriesSpec pfq =
        make_pfq({rat(1, 3), rat(2, 5)}, {rat(9, 4)}, {rat(1, 2), 1});
    CHECK(taylor_coeffs(kdf, 12) == taylor_coeffs(pfq, 12));
}
