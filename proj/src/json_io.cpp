#include "hyperred/json_io.hpp"

namespace hyperred {

namespace {

Rational rational_from_json(const Json& j, const char* what) {
    if (!j.is_string()) {
        throw InvalidSpec(std::string(what) + ": rationals must be \"p/q\" strings");
    }
    return parse_rational(j.get<std::string>());
}

std::vector<Rational> rational_list(const Json& j, const char* key) {
    std::vector<Rational> out;
    if (!j.contains(key)) {
        return out;
    }
    if (!j.at(key).is_array()) {
        throw InvalidSpec(std::string(key) + " must be an array");
    }
    for (const auto& v : j.at(key)) {
        out.push_back(rational_from_json(v, key));
    }
    return out;
}

ArgMonomial arg_from_json(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("coeff") || !j.contains("degree")) {
        throw InvalidSpec(std::string(what) + ": expected {\"coeff\": \"p/q\", \"degree\": g}");
    }
    ArgMonomial arg;
    arg.coeff = rational_from_json(j.at("coeff"), what);
    arg.degree = j.at("degree").get<unsigned>();
    return arg;
}

Json arg_to_json(const ArgMonomial& arg) {
    return Json{{"coeff", format_rational(arg.coeff)}, {"degree", arg.degree}};
}

WeightedParam weighted_from_json(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("value") || !j.contains("weights")) {
        throw InvalidSpec(std::string(what) +
                          ": expected {\"value\": \"p/q\", \"weights\": [..]}");
    }
    WeightedParam p;
    p.value = rational_from_json(j.at("value"), what);
    p.weights = j.at("weights").get<std::vector<unsigned>>();
    return p;
}

std::vector<WeightedParam> weighted_list(const Json& j, const char* key) {
    std::vector<WeightedParam> out;
    if (!j.contains(key)) {
        return out;
    }
    for (const auto& v : j.at(key)) {
        out.push_back(weighted_from_json(v, key));
    }
    return out;
}

}  // namespace

Json series_to_json(const SeriesSpec& spec) {
    Json j;
    j["indices"] = spec.index_count;
    j["num"] = Json::array();
    for (const auto& p : spec.num) {
        j["num"].push_back(Json{{"value", format_rational(p.value)}, {"weights", p.weights}});
    }
    j["den"] = Json::array();
    for (const auto& p : spec.den) {
        j["den"].push_back(Json{{"value", format_rational(p.value)}, {"weights", p.weights}});
    }
    j["args"] = Json::array();
    for (const auto& a : spec.args) {
        j["args"].push_back(arg_to_json(a));
    }
    j["prefactor"] =
        Json{{"coeff", format_rational(spec.prefactor_coeff)}, {"degree", spec.prefactor_degree}};
    return j;
}

SeriesSpec series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("indices") || !j.contains("args")) {
        throw InvalidSpec("series: expected {\"indices\", \"num\", \"den\", \"args\", ...}");
    }
    SeriesSpec spec;
    spec.index_count = j.at("indices").get<unsigned>();
    spec.num = weighted_list(j, "num");
    spec.den = weighted_list(j, "den");
    spec.args.clear();
    for (const auto& a : j.at("args")) {
        spec.args.push_back(arg_from_json(a, "args"));
    }
    if (j.contains("prefactor")) {
        const auto& pf = j.at("prefactor");
        spec.prefactor_coeff = rational_from_json(pf.at("coeff"), "prefactor");
        spec.prefactor_degree = pf.at("degree").get<unsigned>();
    }
    validate_spec(spec);
    return spec;
}

SeriesSpec spec_from_function_json(std::string_view fn, const Json& body) {
    if (fn == "spec") {
        return series_from_json(body);
    }
    if (fn == "pfq") {
        if (!body.contains("arg")) {
            throw InvalidSpec("pfq: missing \"arg\"");
        }
        return make_pfq(rational_list(body, "num"), rational_list(body, "den"),
                        arg_from_json(body.at("arg"), "arg"));
    }
    if (fn == "kdf") {
        KdfShape sh;
        sh.coupled_num = rational_list(body, "coupled_num");
        sh.row_num = rational_list(body, "row_num");
        sh.col_num = rational_list(body, "col_num");
        sh.coupled_den = rational_list(body, "coupled_den");
        sh.row_den = rational_list(body, "row_den");
        sh.col_den = rational_list(body, "col_den");
        if (!body.contains("arg1") || !body.contains("arg2")) {
            throw InvalidSpec("kdf: missing \"arg1\"/\"arg2\"");
        }
        sh.arg1 = arg_from_json(body.at("arg1"), "arg1");
        sh.arg2 = arg_from_json(body.at("arg2"), "arg2");
        return make_kdf(sh);
    }
    if (fn == "sd") {
        SdShape sh;
        sh.coupled_num = weighted_list(body, "coupled_num");
        sh.row_num = weighted_list(body, "row_num");
        sh.col_num = weighted_list(body, "col_num");
        sh.coupled_den = weighted_list(body, "coupled_den");
        sh.row_den = weighted_list(body, "row_den");
        sh.col_den = weighted_list(body, "col_den");
        if (!body.contains("arg1") || !body.contains("arg2")) {
            throw InvalidSpec("sd: missing \"arg1\"/\"arg2\"");
        }
        sh.arg1 = arg_from_json(body.at("arg1"), "arg1");
        sh.arg2 = arg_from_json(body.at("arg2"), "arg2");
        return make_sd(sh);
    }
    if (fn == "f3") {
        F3Shape sh;
        sh.all_num = rational_list(body, "all_num");
        sh.pair12_num = rational_list(body, "pair12_num");
        sh.pair23_num = rational_list(body, "pair23_num");
        sh.pair31_num = rational_list(body, "pair31_num");
        sh.single1_num = rational_list(body, "single1_num");
        sh.single2_num = rational_list(body, "single2_num");
        sh.single3_num = rational_list(body, "single3_num");
        sh.all_den = rational_list(body, "all_den");
        sh.pair12_den = rational_list(body, "pair12_den");
        sh.pair23_den = rational_list(body, "pair23_den");
        sh.pair31_den = rational_list(body, "pair31_den");
        sh.single1_den = rational_list(body, "single1_den");
        sh.single2_den = rational_list(body, "single2_den");
        sh.single3_den = rational_list(body, "single3_den");
        if (!body.contains("arg1") || !body.contains("arg2") || !body.contains("arg3")) {
            throw InvalidSpec("f3: missing \"arg1\"/\"arg2\"/\"arg3\"");
        }
        sh.arg1 = arg_from_json(body.at("arg1"), "arg1");
        sh.arg2 = arg_from_json(body.at("arg2"), "arg2");
        sh.arg3 = arg_from_json(body.at("arg3"), "arg3");
        return make_f3(sh);
    }
    throw InvalidSpec("unknown function '" + std::string(fn) + "' (want pfq|kdf|sd|f3|spec)");
}

Json params_to_json(const ReductionParams& p) {
    Json j;
    j["d"] = format_rational(p.d);
    if (p.e) {
        j["e"] = format_rational(*p.e);
    }
    j["alpha"] = format_rational(p.alpha);
    j["beta"] = format_rational(p.beta);
    j["m"] = p.m;
    j["n"] = p.n;
    return j;
}

ReductionParams params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("alpha") || !j.contains("beta")) {
        throw InvalidSpec("params: expected {\"d\", [\"e\"], \"alpha\", \"beta\", [\"m\", \"n\"]}");
    }
    ReductionParams p;
    p.d = rational_from_json(j.at("d"), "d");
    if (j.contains("e")) {
        p.e = rational_from_json(j.at("e"), "e");
    }
    p.alpha = rational_from_json(j.at("alpha"), "alpha");
    p.beta = rational_from_json(j.at("beta"), "beta");
    if (j.contains("m")) {
        p.m = j.at("m").get<unsigned>();
    }
    if (j.contains("n")) {
        p.n = j.at("n").get<unsigned>();
    }
    return p;
}

Json report_to_json(const VerifyReport& rep) {
    Json j;
    j["id"] = rep.id;
    j["params"] = params_to_json(rep.params);
    j["mode"] = rep.mode;
    j["links"] = Json::array();
    for (const auto& l : rep.links) {
        j["links"].push_back(Json{{"link", l.link}, {"ok", l.ok}});
    }
    if (rep.first_divergence) {
        Json d;
        d["link"] = rep.first_divergence->link;
        if (rep.first_divergence->coeff_index) {
            d["index"] = *rep.first_divergence->coeff_index;
        }
        if (rep.first_divergence->at_x) {
            d["x"] = *rep.first_divergence->at_x;
        }
        d["lhs"] = rep.first_divergence->lhs;
        d["rhs"] = rep.first_divergence->rhs;
        j["first_divergence"] = d;
    }
    if (rep.float_check) {
        j["float_check"] = Json{{"x", format_rational(rep.float_check->x)},
                                {"max_rel_err", rep.float_check->max_rel_err},
                                {"ok", rep.float_check->ok}};
    }
    if (rep.diagnostic) {
        j["diagnostic"] = *rep.diagnostic;
    }
    switch (rep.status) {
        case VerifyReport::Status::PASS:
            j["status"] = "PASS";
            break;
        case VerifyReport::Status::FAIL:
            j["status"] = "FAIL";
            break;
        case VerifyReport::Status::SKIPPED_POLAR:
            j["status"] = "SKIPPED_POLAR";
            break;
    }
    return j;
}

Json registry_to_json() {
    Json arr = Json::array();
    for (const auto& info : registry()) {
        Json entry;
        entry["id"] = info.id;
        entry["equation"] = info.equation;
        entry["links"] = Json::array();
        for (const auto& [a, b] : info.links()) {
            entry["links"].push_back(link_name(a, b));
        }
        entry["params"] = info.param_names();
        arr.push_back(entry);
    }
    return arr;
}

}  // namespace hyperred
