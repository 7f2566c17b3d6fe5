#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperred/bench.hpp"
#include "hyperred/json_io.hpp"
#include "hyperred/verify.hpp"

namespace {

using hyperred::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNumeric = 3;

Json parse_json(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw hyperred::InvalidSpec(std::string(what) + ": malformed JSON");
    }
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw hyperred::InvalidSpec("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw hyperred::InvalidSpec("cannot write '" + path + "'");
    }
    out << text;
}

int status_exit_code(hyperred::VerifyReport::Status s) {
    switch (s) {
        case hyperred::VerifyReport::Status::PASS:
            return kExitOk;
        case hyperred::VerifyReport::Status::FAIL:
            return kExitVerifyFail;
        default:
            return kExitBadInput;  // polar parameters
    }
}

std::uint64_t registry_index(const std::string& id) {
    const auto& reg = hyperred::registry();
    for (std::size_t i = 0; i < reg.size(); ++i) {
        if (reg[i].id == id) {
            return i;
        }
    }
    throw hyperred::UnknownIdentity("unknown identity '" + id + "'");
}

struct EvalArgs {
    std::string fn = "spec";
    std::string spec_json;
    std::string spec_file;
    std::string mode = "exact";
    unsigned long order = 12;
    std::string x = "0";
    double tol = 1e-13;
    std::size_t max_terms = 1000000;
};

int run_eval(const EvalArgs& a) {
    std::string text = a.spec_json;
    if (!a.spec_file.empty()) {
        text = read_file(a.spec_file);
    }
    if (text.empty()) {
        throw hyperred::InvalidSpec("eval: provide --spec or --spec-file");
    }
    const hyperred::SeriesSpec spec =
        hyperred::spec_from_function_json(a.fn, parse_json(text, "eval"));
    if (a.mode == "exact") {
        const auto coeffs = hyperred::taylor_coeffs(spec, a.order);
        Json out = Json::array();
        for (const auto& c : coeffs) {
            out.push_back(hyperred::format_rational(c));
        }
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    if (a.mode == "float") {
        hyperred::EvalOptions opts;
        opts.rel_tol = a.tol;
        opts.max_terms = a.max_terms;
        const double x = hyperred::to_float(hyperred::parse_rational(a.x));
        const auto r = hyperred::eval_float(spec, x, opts);
        Json out;
        out["value"] = r.value;
        out["est_error"] = r.est_error;
        out["terms"] = r.terms_used;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    throw hyperred::InvalidSpec("eval: mode must be exact or float");
}

struct VerifyArgs {
    std::string id;
    std::string params_json;
    std::string params_file;
    std::uint64_t seed = 0;
    bool seeded = false;
    unsigned long order = 12;
    std::string mode = "exact";
    std::string x = "1/4";
    double tol = 1e-10;
};

int run_verify(const VerifyArgs& a) {
    hyperred::ReductionParams params;
    if (a.seeded) {
        hyperred::VerifyConfig cfg;
        cfg.seed = a.seed;
        cfg.order = a.order;
        params = hyperred::sample_params(a.seed, registry_index(a.id) << 32, cfg);
    } else {
        std::string text = a.params_json;
        if (!a.params_file.empty()) {
            text = read_file(a.params_file);
        }
        if (text.empty()) {
            throw hyperred::InvalidSpec("verify: provide --params, --params-file or --seed");
        }
        params = hyperred::params_from_json(parse_json(text, "params"));
    }
    hyperred::VerifyReport rep;
    if (a.mode == "exact") {
        rep = hyperred::verify_exact(a.id, params, a.order);
    } else if (a.mode == "float") {
        rep = hyperred::verify_float(a.id, params,
                                     hyperred::to_float(hyperred::parse_rational(a.x)), a.tol);
    } else {
        throw hyperred::InvalidSpec("verify: mode must be exact or float");
    }
    std::cout << hyperred::report_to_json(rep).dump() << "\n";
    return status_exit_code(rep.status);
}

struct SweepArgs {
    std::vector<std::string> ids;
    unsigned trials = 20;
    std::uint64_t seed = 1;
    unsigned long order = 12;
    unsigned m_max = 4;
    unsigned n_max = 4;
    bool strict_e_gt_d = false;
    bool beta_equals_alpha = false;
    std::string float_x = "1/4";
    double float_tol = 1e-10;
    std::string jsonl_path = "-";
    std::string csv_path;
};

int run_sweep(const SweepArgs& a) {
    std::vector<std::string> ids = a.ids;
    if (ids.empty()) {
        for (const auto& info : hyperred::registry()) {
            ids.push_back(info.id);
        }
    }
    hyperred::VerifyConfig cfg;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.order = a.order;
    cfg.m_max = a.m_max;
    cfg.n_max = a.n_max;
    cfg.strict_e_gt_d = a.strict_e_gt_d;
    cfg.beta_equals_alpha = a.beta_equals_alpha;
    cfg.float_x = hyperred::parse_rational(a.float_x);
    cfg.float_tol = a.float_tol;

    const auto result = hyperred::verify_sweep(ids, cfg);

    std::ostringstream jsonl;
    for (const auto& rep : result.reports) {
        jsonl << hyperred::report_to_json(rep).dump() << "\n";
    }
    write_output(a.jsonl_path, jsonl.str());
    if (!a.csv_path.empty()) {
        write_output(a.csv_path, hyperred::sweep_summary_csv(result));
    }
    std::cerr << "sweep: " << result.reports.size() << " reports, " << result.total_pass()
              << " pass, " << result.total_fail() << " fail, " << result.total_skipped()
              << " skipped\n";
    return result.total_fail() == 0 ? kExitOk : kExitVerifyFail;
}

struct BenchArgs {
    std::string id;
    std::string params_json;
    std::string params_file;
    std::uint64_t seed = 0;
    bool seeded = false;
    std::string x = "1/4";
    double tol = 1e-13;
    int repeats = 5;
    unsigned long oracle_order = 40;
    std::string csv_path = "-";
};

int run_bench(const BenchArgs& a) {
    hyperred::ReductionParams params;
    if (a.seeded) {
        hyperred::VerifyConfig cfg;
        cfg.seed = a.seed;
        params = hyperred::sample_params(a.seed, registry_index(a.id) << 32, cfg);
    } else {
        std::string text = a.params_json;
        if (!a.params_file.empty()) {
            text = read_file(a.params_file);
        }
        if (text.empty()) {
            throw hyperred::InvalidSpec("bench: provide --params, --params-file or --seed");
        }
        params = hyperred::params_from_json(parse_json(text, "params"));
    }
    hyperred::BenchOptions opts;
    opts.x = hyperred::parse_rational(a.x);
    opts.rel_tol = a.tol;
    opts.repeats = a.repeats;
    opts.oracle_order = a.oracle_order;
    const auto result = hyperred::run_bench(a.id, params, opts);
    write_output(a.csv_path, hyperred::bench_csv(result));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evaluator and exact verifier for multi-index hypergeometric reduction identities"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a series (exact coefficients or float)");
    eval->add_option("--fn", eval_args.fn, "pfq|kdf|sd|f3|spec")->default_val("spec");
    eval->add_option("--spec", eval_args.spec_json, "inline JSON body");
    eval->add_option("--spec-file", eval_args.spec_file, "path to JSON body");
    eval->add_option("--mode", eval_args.mode, "exact|float")->default_val("exact");
    eval->add_option("--order", eval_args.order, "highest Taylor order (exact mode)");
    eval->add_option("--x", eval_args.x, "evaluation point p/q (float mode)");
    eval->add_option("--tol", eval_args.tol, "relative stopping tolerance (float mode)");
    eval->add_option("--max-terms", eval_args.max_terms, "term budget (float mode)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "verify one identity instance");
    verify->add_option("--id", verify_args.id, "identity id (see 'list')")->required();
    verify->add_option("--params", verify_args.params_json, "inline params JSON");
    verify->add_option("--params-file", verify_args.params_file, "path to params JSON");
    auto* seed_opt = verify->add_option("--seed", verify_args.seed, "sample params from this seed");
    verify->add_option("--order", verify_args.order, "comparison order (exact mode)");
    verify->add_option("--mode", verify_args.mode, "exact|float")->default_val("exact");
    verify->add_option("--x", verify_args.x, "evaluation point p/q (float mode)");
    verify->add_option("--tol", verify_args.tol, "comparison tolerance (float mode)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "randomized verification sweep");
    sweep->add_option("--ids", sweep_args.ids, "identity ids (default: whole registry)")
        ->delimiter(',');
    sweep->add_option("--trials", sweep_args.trials, "trials per id");
    sweep->add_option("--seed", sweep_args.seed, "sweep seed");
    sweep->add_option("--order", sweep_args.order, "comparison order");
    sweep->add_option("--m-max", sweep_args.m_max, "largest sampled m");
    sweep->add_option("--n-max", sweep_args.n_max, "largest sampled n");
    sweep->add_flag("--strict-e-gt-d", sweep_args.strict_e_gt_d, "require e > d > 0");
    sweep->add_flag("--beta-equals-alpha", sweep_args.beta_equals_alpha, "sweep with beta := alpha");
    sweep->add_option("--float-x", sweep_args.float_x, "spot-check point p/q");
    sweep->add_option("--float-tol", sweep_args.float_tol, "spot-check tolerance");
    sweep->add_option("--jsonl", sweep_args.jsonl_path, "reports output path ('-' = stdout)");
    sweep->add_option("--csv", sweep_args.csv_path, "summary CSV output path");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time reduced vs direct summation");
    bench->add_option("--id", bench_args.id, "identity id")->required();
    bench->add_option("--params", bench_args.params_json, "inline params JSON");
    bench->add_option("--params-file", bench_args.params_file, "path to params JSON");
    auto* bench_seed = bench->add_option("--seed", bench_args.seed, "sample params from this seed");
    bench->add_option("--x", bench_args.x, "evaluation point p/q");
    bench->add_option("--tol", bench_args.tol, "relative stopping tolerance");
    bench->add_option("--repeats", bench_args.repeats, "timing repeats (median reported)");
    bench->add_option("--oracle-order", bench_args.oracle_order, "exact partial-sum order");
    bench->add_option("--csv", bench_args.csv_path, "CSV output path ('-' = stdout)");

    auto* list = app.add_subcommand("list", "print the identity registry as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    verify_args.seeded = seed_opt->count() > 0;
    bench_args.seeded = bench_seed->count() > 0;

    try {
        if (eval->parsed()) {
            return run_eval(eval_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_args);
        }
        if (bench->parsed()) {
            return run_bench(bench_args);
        }
        if (list->parsed()) {
            std::cout << hyperred::registry_to_json().dump(2) << "\n";
            return kExitOk;
        }
    } catch (const hyperred::NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
