#include "hyperred/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace hyperred {

namespace {

double exact_partial_sum(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    Rational xpow(1);
    for (const auto& c : coeffs) {
        acc += c * xpow;
        xpow *= x;
    }
    return to_float(acc);
}

}  // namespace

BenchResult run_bench(std::string_view id, const ReductionParams& p, const BenchOptions& opts) {
    const IdentityInstance inst = build_identity(id, p);
    const double xf = to_float(opts.x);
    EvalOptions eval_opts;
    eval_opts.rel_tol = opts.rel_tol;
    eval_opts.max_terms = opts.max_terms;

    BenchResult result;
    result.id = inst.info->id;
    result.x = opts.x;

    for (const Member m : members(inst)) {
        BenchSide side;
        side.side = member_name(m);
        side.oracle = exact_partial_sum(member_taylor(inst, m, opts.oracle_order), opts.x);

        std::vector<double> times;
        EvalResult r;
        const int repeats = std::max(1, opts.repeats);
        for (int i = 0; i < repeats; ++i) {
            const auto start = std::chrono::steady_clock::now();
            r = member_eval_float(inst, m, xf, eval_opts);
            const auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        side.time_ms = times[times.size() / 2];
        side.terms = r.terms_used;
        side.value = r.value;
        side.rel_error = std::abs(r.value - side.oracle) /
                         std::max({std::abs(side.oracle), std::abs(r.value), 1.0});
        result.sides.push_back(std::move(side));
    }
    return result;
}

std::string bench_csv(const BenchResult& result) {
    std::ostringstream os;
    os << "id,side,x,terms,time_ms,value,oracle,rel_error\n";
    os.precision(17);
    for (const auto& s : result.sides) {
        os << result.id << ',' << s.side << ',' << format_rational(result.x) << ',' << s.terms
           << ',' << s.time_ms << ',' << s.value << ',' << s.oracle << ',' << s.rel_error << '\n';
    }
    return os.str();
}

}  // namespace hyperred
