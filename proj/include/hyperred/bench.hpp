#pragma once

#include <string>
#include <vector>

#include "hyperred/reductions.hpp"

namespace hyperred {

struct BenchOptions {
    Rational x = rat(1, 4);
    double rel_tol = 1e-13;
    std::size_t max_terms = 1000000;
    int repeats = 5;
    unsigned long oracle_order = 40;  // exact partial sum the float values are held against
};

struct BenchSide {
    std::string side;  // KDF | F3 | SUM
    std::size_t terms = 0;
    double time_ms = 0.0;  // median over repeats
    double value = 0.0;
    double oracle = 0.0;   // float image of the exact partial sum
    double rel_error = 0.0;
};

struct BenchResult {
    std::string id;
    Rational x;
    std::vector<BenchSide> sides;
};

/// Times every member of the identity at x and reports term counts and the
/// deviation from the exact oracle value.
BenchResult run_bench(std::string_view id, const ReductionParams& p, const BenchOptions& opts = {});

/// CSV rows: id,side,x,terms,time_ms,value,oracle,rel_error.
std::string bench_csv(const BenchResult& result);

}  // namespace hyperred
