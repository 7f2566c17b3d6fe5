#include "doctest.h"

#include "hyperred/reductions.hpp"
#include "hyperred/verify.hpp"
#include "testutil.hpp"

using namespace hyperred;

namespace {

ReductionParams nice_params(bool with_e, unsigned m = 1, unsigned n = 0) {
    ReductionParams p;
    p.d = Rational(1);
    if (with_e) {
        p.e = Rational(2);
    }
    p.alpha = rat(1, 3);
    p.beta = rat(1, 5);
    p.m = m;
    p.n = n;
    return p;
}

}  // namespace

TEST_CASE("registry lists 16 identities carrying 24 links") {
    const auto& reg = registry();
    CHECK(reg.size() == 16);
    std::size_t links = 0;
    for (const auto& info : reg) {
        links += info.links().size();
    }
    CHECK(links == 24);
    CHECK(find_identity("T1E1") != nullptr);
    CHECK(find_identity("SC16") != nullptr);
    CHECK(find_identity("T9Z9") == nullptr);
    CHECK_THROWS_AS(identity_or_throw("T9Z9"), UnknownIdentity);
}

TEST_CASE("prefactor coefficients at j=k=0 are 1") {
    testutil::Rng rng(401);
    for (int i = 0; i < 20; ++i) {
        ReductionParams p;
        p.d = rng.rational();
        p.e = rng.safe_den_param();
        p.alpha = rng.safe_den_param();
        p.beta = rng.safe_den_param();
        p.m = unsigned(rng.range(0, 4));
        p.n = unsigned(rng.range(0, 4));
        CHECK(coeff_T1(0, 0, p) == 1);
        CHECK(coeff_T2(0, 0, p) == 1);
        CHECK(coeff_T3(0, 0, p) == 1);
    }
}

TEST_CASE("prefactor terminates beyond m and n") {
    const ReductionParams p = nice_params(true, 1, 2);
    CHECK(coeff_T1(2, 0, p) == 0);  // j > m
    CHECK(coeff_T1(0, 3, p) == 0);  // k > n
    CHECK(coeff_T2(0, 3, p) == 0);
    CHECK(coeff_T3(2, 0, p) == 0);
}

TEST_CASE("coeff_T1 frozen value") {
    // d=1, e=2, alpha=1/3, beta=1/5, m=1, n=0, j=1, k=0:
    // (1)(-1)(2/3-1) / [(2)(2/3+1)(1/3-1/2) * 4] = -3/20
    const ReductionParams p = nice_params(true, 1, 0);
    CHECK(coeff_T1(1, 0, p) == rat(-3, 20));
}

TEST_CASE("coeff_T2 j-step collapses to a factor 2") {
    // (2a-2m-1)_1 / (a-m-1/2)_1 is identically 2.
    testutil::Rng rng(402);
    for (int i = 0; i < 20; ++i) {
        const Rational alpha = rng.rational();
        const unsigned m = unsigned(rng.range(0, 4));
        const Rational num = pochhammer(2 * alpha - 2 * long(m) - 1, 1);
        const Rational den = pochhammer(alpha - long(m) - rat(1, 2), 1);
        if (den != 0) {
            CHECK(num / den == 2);
        }
    }
}

TEST_CASE("coeff_T3 degenerates to T1 at n=0 and to T2 at m=0") {
    testutil::Rng rng(403);
    for (int i = 0; i < 20; ++i) {
        ReductionParams p;
        p.d = rng.rational();
        p.e = rng.safe_den_param();
        p.alpha = rng.half_safe();
        p.beta = rng.half_safe();
        p.m = unsigned(rng.range(0, 3));
        p.n = 0;
        for (unsigned j = 0; j <= p.m; ++j) {
            CHECK(coeff_T3(j, 0, p) == coeff_T1(j, 0, p));
        }
        p.m = 0;
        p.n = unsigned(rng.range(0, 3));
        for (unsigned k = 0; k <= p.n; ++k) {
            CHECK(coeff_T3(0, k, p) == coeff_T2(0, k, p));
        }
    }
}

TEST_CASE("prefactor denominators throw PolarPrefactor") {
    ReductionParams p = nice_params(true, 1, 0);
    p.alpha = rat(1, 2);  // (alpha - 1/2)_1 vanishes
    CHECK_THROWS_AS(coeff_T1(1, 0, p), PolarPrefactor);
    ReductionParams q = nice_params(true, 2, 0);
    q.e = Rational(-1);  // (e)_2 vanishes
    CHECK_THROWS_AS(coeff_T1(2, 0, q), PolarPrefactor);
}

TEST_CASE("special cases equal the m=n=0 instances term for term") {
    const ReductionParams p = nice_params(true, 0, 0);
    const IdentityInstance sc = build_identity("SC13", p);
    const IdentityInstance t1 = build_identity("T1E1", p);
    REQUIRE(sc.rhs.terms.size() == 1);
    REQUIRE(t1.rhs.terms.size() == 1);
    CHECK(sc.rhs.terms[0].coefficient == t1.rhs.terms[0].coefficient);
    CHECK(sc.rhs.terms[0].power == t1.rhs.terms[0].power);
    CHECK(taylor_coeffs(sc.lhs, 8) == taylor_coeffs(t1.lhs, 8));
    CHECK(taylor_coeffs(sc.rhs.terms[0].series, 8) ==
          taylor_coeffs(t1.rhs.terms[0].series, 8));

    // SC14 carries the single 4F5 with numerators (a+b)/2, (a+b+1)/2, d/2,
    // (d+1)/2.
    const IdentityInstance sc14 = build_identity("SC14", p);
    const auto& series = sc14.rhs.terms[0].series;
    const Rational c = p.alpha + p.beta;
    CHECK(series.num[0].value == c / 2);
    CHECK(series.num[1].value == (c + 1) / 2);
    CHECK(series.num[2].value == p.d / 2);
    CHECK(series.num[3].value == (p.d + 1) / 2);
}

TEST_CASE("special cases ignore sampled m and n") {
    ReductionParams p = nice_params(true, 3, 2);
    const IdentityInstance inst = build_identity("SC13", p);
    CHECK(inst.params.m == 0);
    CHECK(inst.params.n == 0);
    CHECK(inst.rhs.terms.size() == 1);
}

TEST_CASE("RHS terms count and powers follow (m+1)(n+1)") {
    const IdentityInstance inst = build_identity("T1E1", nice_params(true, 1, 0));
    REQUIRE(inst.rhs.terms.size() == 2);
    CHECK(inst.rhs.terms[0].power == 0);
    CHECK(inst.rhs.terms[1].power == 1);

    const IdentityInstance big = build_identity("T2E6", nice_params(true, 2, 3));
    CHECK(big.rhs.terms.size() == 12);
}

TEST_CASE("identities requiring e reject params without it") {
    ReductionParams p = nice_params(false);
    CHECK_THROWS_AS(build_identity("T1E1", p), InvalidSpec);
    CHECK_NOTHROW(build_identity("T1E3", p));
}

TEST_CASE("rhs_taylor is normalized to 1 at order 0") {
    testutil::Rng rng(404);
    VerifyConfig cfg;
    for (std::size_t idx = 0; idx < registry().size(); ++idx) {
        const ReductionParams p = sample_params(11, std::uint64_t(idx) << 32, cfg);
        const auto coeffs = rhs_taylor(registry()[idx].id, p, 0);
        CHECK(coeffs == std::vector<Rational>{Rational(1)});
    }
}

TEST_CASE("rhs_taylor first-order value for the basic special case") {
    ReductionParams p;
    p.d = Rational(1);
    p.e = Rational(2);
    p.alpha = rat(1, 3);
    p.beta = rat(1, 5);
    const auto coeffs = rhs_taylor("SC13", p, 1);
    CHECK(coeffs[0] == 1);
    CHECK(coeffs[1] == rat(1, 2));
    // matches the left side
    const auto lhs = taylor_coeffs(build_identity("SC13", p).lhs, 1);
    CHECK(coeffs == lhs);
}

TEST_CASE("dropping the power-of-4 factor breaks the first shifted coefficient") {
    const ReductionParams p = nice_params(true, 1, 1);
    BuildOptions mutated;
    mutated.drop = CoeffFactor::power4;
    const auto good = rhs_taylor(build_identity("T1E1", p).rhs, 6);
    const auto bad = rhs_taylor(build_identity("T1E1", p, mutated).rhs, 6);
    CHECK(good[0] == bad[0]);
    CHECK(good[1] != bad[1]);  // first coefficient with j+k >= 1
}

TEST_CASE("all sixteen identities verify on fixed smoke tuples") {
    ReductionParams p;
    p.d = rat(1, 2);
    p.e = rat(7, 3);
    p.alpha = rat(2, 3);
    p.beta = rat(3, 5);
    p.m = 1;
    p.n = 2;
    for (const auto& info : registry()) {
        const VerifyReport rep = verify_exact(info.id, p, 8);
        CAPTURE(info.id);
        CHECK(rep.status == VerifyReport::Status::PASS);
    }
}

TEST_CASE("member helpers expose the expected link structure") {
    const IdentityInstance single = build_identity("T1E1", nice_params(true));
    CHECK(members(single).size() == 2);
    CHECK(link_members(single).size() == 1);
    const IdentityInstance dbl = build_identity("T1E2", nice_params(true));
    CHECK(members(dbl).size() == 3);
    CHECK(link_members(dbl).size() == 2);
    CHECK(link_name(LinkKind::KDF, LinkKind::F3) == "KDF=F3");
}
