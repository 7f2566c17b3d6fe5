#pragma once

#include <vector>

#include "hyperred/series.hpp"

namespace hyperred {

/// Double hypergeometric series F^{p:q;k}_{l:m;n}(u, v): coupled parameters
/// run with r+s, row parameters with r, column parameters with s.
struct KdfShape {
    std::vector<Rational> coupled_num;
    std::vector<Rational> row_num;
    std::vector<Rational> col_num;
    std::vector<Rational> coupled_den;
    std::vector<Rational> row_den;
    std::vector<Rational> col_den;
    ArgMonomial arg1;
    ArgMonomial arg2;
};

/// Same group layout with an explicit weight pair on every parameter, so a
/// parameter [a: 1,2] contributes (a)_{r+2s}.
struct SdShape {
    std::vector<WeightedParam> coupled_num;
    std::vector<WeightedParam> row_num;
    std::vector<WeightedParam> col_num;
    std::vector<WeightedParam> coupled_den;
    std::vector<WeightedParam> row_den;
    std::vector<WeightedParam> col_den;
    ArgMonomial arg1;
    ArgMonomial arg2;
};

/// General triple series: one group coupled to all three indices, one per
/// index pair, one per single index.
struct F3Shape {
    std::vector<Rational> all_num;
    std::vector<Rational> pair12_num;
    std::vector<Rational> pair23_num;
    std::vector<Rational> pair31_num;
    std::vector<Rational> single1_num;
    std::vector<Rational> single2_num;
    std::vector<Rational> single3_num;
    std::vector<Rational> all_den;
    std::vector<Rational> pair12_den;
    std::vector<Rational> pair23_den;
    std::vector<Rational> pair31_den;
    std::vector<Rational> single1_den;
    std::vector<Rational> single2_den;
    std::vector<Rational> single3_den;
    ArgMonomial arg1;
    ArgMonomial arg2;
    ArgMonomial arg3;
};

/// pFq(num; den; coeff x^degree), all weights 1.
SeriesSpec make_pfq(const std::vector<Rational>& num, const std::vector<Rational>& den,
                    const ArgMonomial& arg);

SeriesSpec make_kdf(const KdfShape& shape);
SeriesSpec make_sd(const SdShape& shape);
SeriesSpec make_f3(const F3Shape& shape);

}  // namespace hyperred
