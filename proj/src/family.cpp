#include "hyperred/family.hpp"

namespace hyperred {

namespace {

void append_group(std::vector<WeightedParam>& out, const std::vector<Rational>& values,
                  std::vector<unsigned> weights) {
    for (const auto& v : values) {
        out.push_back({v, weights});
    }
}

}  // namespace

SeriesSpec make_pfq(const std::vector<Rational>& num, const std::vector<Rational>& den,
                    const ArgMonomial& arg) {
    SeriesSpec spec;
    spec.index_count = 1;
    append_group(spec.num, num, {1});
    append_group(spec.den, den, {1});
    spec.args = {arg};
    validate_spec(spec);
    return spec;
}

SeriesSpec make_kdf(const KdfShape& shape) {
    SeriesSpec spec;
    spec.index_count = 2;
    append_group(spec.num, shape.coupled_num, {1, 1});
    append_group(spec.num, shape.row_num, {1, 0});
    append_group(spec.num, shape.col_num, {0, 1});
    append_group(spec.den, shape.coupled_den, {1, 1});
    append_group(spec.den, shape.row_den, {1, 0});
    append_group(spec.den, shape.col_den, {0, 1});
    spec.args = {shape.arg1, shape.arg2};
    validate_spec(spec);
    return spec;
}

SeriesSpec make_sd(const SdShape& shape) {
    SeriesSpec spec;
    spec.index_count = 2;
    const auto append = [&](std::vector<WeightedParam>& out,
                            const std::vector<WeightedParam>& group) {
        out.insert(out.end(), group.begin(), group.end());
    };
    append(spec.num, shape.coupled_num);
    append(spec.num, shape.row_num);
    append(spec.num, shape.col_num);
    append(spec.den, shape.coupled_den);
    append(spec.den, shape.row_den);
    append(spec.den, shape.col_den);
    spec.args = {shape.arg1, shape.arg2};
    validate_spec(spec);
    return spec;
}

SeriesSpec make_f3(const F3Shape& shape) {
    SeriesSpec spec;
    spec.index_count = 3;
    append_group(spec.num, shape.all_num, {1, 1, 1});
    append_group(spec.num, shape.pair12_num, {1, 1, 0});
    append_group(spec.num, shape.pair23_num, {0, 1, 1});
    append_group(spec.num, shape.pair31_num, {1, 0, 1});
    append_group(spec.num, shape.single1_num, {1, 0, 0});
    append_group(spec.num, shape.single2_num, {0, 1, 0});
    append_group(spec.num, shape.single3_num, {0, 0, 1});
    append_group(spec.den, shape.all_den, {1, 1, 1});
    append_group(spec.den, shape.pair12_den, {1, 1, 0});
    append_group(spec.den, shape.pair23_den, {0, 1, 1});
    append_group(spec.den, shape.pair31_den, {1, 0, 1});
    append_group(spec.den, shape.single1_den, {1, 0, 0});
    append_group(spec.den, shape.single2_den, {0, 1, 0});
    append_group(spec.den, shape.single3_den, {0, 0, 1});
    spec.args = {shape.arg1, shape.arg2, shape.arg3};
    validate_spec(spec);
    return spec;
}

}  // namespace hyperred
