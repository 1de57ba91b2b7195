// tricomi-verify: batch verification of Turan-type inequalities for the
// Tricomi function, single-point evaluation and catalog export.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tricomi/bounds.hpp"
#include "tricomi/errors.hpp"
#include "tricomi/measure.hpp"
#include "tricomi/psi.hpp"
#include "tricomi/report.hpp"
#include "tricomi/turanian.hpp"
#include "tricomi/verify.hpp"

namespace {

using namespace tricomi;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kRegion = 3, kEvaluation = 4 };

struct RunOptions {
    std::string config_file;
    std::string suites;
    std::string grid_a, grid_c, grid_x;
    std::map<Suite, double> tolerances;
    std::string out;
    std::string format;
    int jobs = 0;
    bool quiet = false;
};

int do_run(const RunOptions& o) {
    RunConfig cfg;
    try {
        if (!o.config_file.empty()) apply_config_file(cfg, o.config_file);
        if (!o.suites.empty()) cfg.suites = parse_suite_list(o.suites);
        if (!o.grid_a.empty()) cfg.grid.a = parse_number_list(o.grid_a);
        if (!o.grid_c.empty()) cfg.grid.c = parse_number_list(o.grid_c);
        if (!o.grid_x.empty()) cfg.grid.x = parse_number_list(o.grid_x);
        for (const auto& [s, t] : o.tolerances) cfg.tolerances[s] = t;
        if (!o.out.empty()) cfg.output_path = o.out;
        if (!o.format.empty()) cfg.format = parse_format(o.format);
        if (o.jobs != 0) cfg.jobs = o.jobs;
        cfg.validate();
    } catch (const Error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kUsage;
    }

    const auto result = run(cfg);
    if (!cfg.output_path.empty()) {
        try {
            write_report(cfg.output_path, cfg.format, result, utc_timestamp());
        } catch (const Error& e) {
            std::cerr << e.what() << '\n';
            return kUsage;
        }
    }
    if (!o.quiet) write_summary(std::cout, result);
    return result.exit_code();
}

struct EvalOptions {
    std::string what;
    std::vector<double> numbers;
    bool json = false;
};

void print_value(const EvalOptions& o, const std::string& what, const ParameterPoint& p, const FunctionValue& v) {
    if (o.json) {
        ordered_json j;
        j["what"] = what;
        j["a"] = p.a;
        j["c"] = p.c;
        j["x"] = p.x;
        j["value"] = v.value;
        j["abs_error"] = v.abs_error;
        j["method"] = std::string(to_string(v.method));
        std::cout << j.dump() << '\n';
        return;
    }
    std::cout << what << " a=" << format_value(p.a) << " c=" << format_value(p.c) << " x=" << format_value(p.x)
              << " value=" << format_value(v.value) << " abs_error=" << format_value(v.abs_error)
              << " method=" << to_string(v.method) << '\n';
}

int print_record(const EvalOptions& o, const VerificationRecord& r) {
    if (o.json) {
        ordered_json j;
        j["claim"] = r.id;
        j["a"] = r.point.a;
        j["c"] = r.point.c;
        j["x"] = r.point.x;
        j["lhs"] = r.lhs.value;
        j["rhs"] = r.rhs.value;
        j["margin"] = r.margin;
        j["budget"] = r.budget;
        j["status"] = std::string(to_string(r.status));
        j["threshold_met"] = r.threshold_met;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << r.id << " a=" << format_value(r.point.a) << " c=" << format_value(r.point.c)
                  << " x=" << format_value(r.point.x) << " lhs=" << format_value(r.lhs.value)
                  << " rhs=" << format_value(r.rhs.value) << " margin=" << format_value(r.margin)
                  << " budget=" << format_value(r.budget) << " status=" << to_string(r.status);
        if (!r.threshold_met) std::cout << " threshold=unmet";
        std::cout << '\n';
    }
    return r.status == Status::fail ? kFail : kOk;
}

int do_eval(const EvalOptions& o) {
    const auto colon = o.what.find(':');
    const std::string head = o.what.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : o.what.substr(colon + 1);

    const std::size_t need = head == "phi" ? 2 : 3;
    if (o.numbers.size() != need) {
        std::cerr << "eval " << head << " expects " << need << " numbers\n";
        return kUsage;
    }
    ParameterPoint p{o.numbers[0], o.numbers[1], need == 3 ? o.numbers[2] : 1.0};

    try {
        if (head == "psi") {
            print_value(o, "psi", p, psi(p));
        } else if (head == "turanian" || head == "ratio") {
            const auto kind = parse_turanian_kind(arg.empty() ? "both" : arg);
            const auto v = head == "ratio" ? turanian_ratio(kind, p) : turanian(kind, p);
            print_value(o, o.what, p, v);
        } else if (head == "phi") {
            const double t = std::stod(arg);
            p.x = t;
            print_value(o, o.what, p, phi(WeightDensity::make(p.a, p.c), t));
        } else if (head == "aux") {
            print_value(o, o.what, p, auxiliary_log_ratio(parse_auxiliary(arg), p.a, p.c, p.x));
        } else if (head == "bound") {
            return print_record(o, check_bound(arg, p));
        } else if (head == "dominance") {
            return print_record(o, check_dominance(arg, p));
        } else {
            std::cerr << "unknown eval target '" << o.what << "'\n";
            return kUsage;
        }
    } catch (const RegionError& e) {
        std::cerr << "region error: " << e.what() << '\n';
        return kRegion;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cannot parse '" << arg << "'\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return kEvaluation;
    }
    return kOk;
}

ordered_json region_json(const Region& r) {
    auto out = ordered_json::array();
    for (const auto& k : r.constraints) out.push_back(k.text());
    return out;
}

int do_catalog(const std::string& out_path) {
    ordered_json doc;
    auto& bounds = doc["bounds"] = ordered_json::array();
    for (const auto& s : bound_catalog()) {
        ordered_json j;
        j["id"] = s.id;
        j["target"] = std::string(to_string(s.target));
        j["side"] = std::string(to_string(s.side));
        j["region"] = region_json(s.region);
        j["statement"] = s.statement;
        j["anchor"] = s.anchor;
        j["exploratory"] = s.exploratory;
        bounds.push_back(j);
    }
    auto& dom = doc["dominance"] = ordered_json::array();
    for (const auto& d : dominance_catalog()) {
        ordered_json j;
        j["id"] = d.id;
        j["tighter"] = d.tighter;
        j["weaker"] = d.weaker;
        j["region"] = region_json(d.region);
        j["threshold"] = d.threshold_text;
        j["anchor"] = d.anchor;
        dom.push_back(j);
    }
    auto& lim = doc["limits"] = ordered_json::array();
    for (const auto& l : sharpness_limits()) {
        ordered_json j;
        j["id"] = std::string(l.id);
        j["kind"] = std::string(to_string(l.kind));
        j["direction"] = l.direction == LimitDirection::x_to_zero ? "x_to_zero" : "x_to_infinity";
        j["normalization"] = l.normalization == Normalization::ratio ? "ratio" : "ratio_times_x2";
        lim.push_back(j);
    }
    const auto text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return kOk;
    }
    std::FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f || std::fputs(text.c_str(), f) < 0) {
        if (f) std::fclose(f);
        std::cerr << "cannot write '" << out_path << "'\n";
        return kUsage;
    }
    std::fclose(f);
    return kOk;
}

struct SharpnessOptions {
    std::string limit;
    double a = 2.0;
    double c = -2.0;
    std::string sequence;
};

int do_sharpness(const SharpnessOptions& o) {
    std::vector<const SharpnessLimit*> limits;
    try {
        if (o.limit.empty() || o.limit == "all") {
            for (const auto& l : sharpness_limits()) limits.push_back(&l);
        } else {
            limits.push_back(&find_sharpness_limit(o.limit));
        }
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
    int code = kOk;
    for (const auto* l : limits) {
        if (!l->in_region(o.a, o.c)) {
            if (limits.size() == 1) {
                std::cerr << "region error: limit " << l->id << " is not established at a=" << o.a
                          << ", c=" << o.c << '\n';
                return kRegion;
            }
            continue;
        }
        try {
            const auto seq = o.sequence.empty() ? default_scan(l->direction) : parse_number_list(o.sequence);
            const auto scan = sharpness_scan(*l, o.a, o.c, seq);
            for (const auto& pt : scan.points)
                std::cout << l->id << " a=" << format_value(o.a) << " c=" << format_value(o.c)
                          << " x=" << format_value(pt.x) << " value=" << format_value(pt.normalized.value)
                          << " limit=" << format_value(scan.limit_value)
                          << " deviation=" << format_value(pt.deviation) << '\n';
            std::cout << l->id << " eventually_decreasing=" << (scan.eventually_decreasing ? "yes" : "no")
                      << (scan.inconclusive ? " inconclusive" : "") << '\n';
            if (!scan.eventually_decreasing) code = kFail;
        } catch (const RegionError& e) {
            std::cerr << "region error: " << e.what() << '\n';
            return kRegion;
        } catch (const DomainError& e) {
            std::cerr << e.what() << '\n';
            return kUsage;
        } catch (const std::exception& e) {
            std::cerr << "evaluation error: " << e.what() << '\n';
            return kEvaluation;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify Turan-type inequalities for the Tricomi function psi(a,c,x)"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run verification suites over a parameter grid");
    run_cmd->add_option("--config", run_opts.config_file, "key=value config file; flags override it");
    run_cmd->add_option("--suites", run_opts.suites, "Comma list of suites or 'all'");
    run_cmd->add_option("--grid-a", run_opts.grid_a, "Comma list of a values");
    run_cmd->add_option("--grid-c", run_opts.grid_c, "Comma list of c values");
    run_cmd->add_option("--grid-x", run_opts.grid_x, "Comma list of x values");
    for (Suite s : all_suites()) {
        const std::string flag = "--tol-" + std::string(to_string(s));
        run_cmd->add_option_function<double>(
            flag, [&run_opts, s](double v) { run_opts.tolerances[s] = v; },
            "Tolerance for the " + std::string(to_string(s)) + " suite");
    }
    run_cmd->add_option("--out", run_opts.out, "Report file");
    run_cmd->add_option("--format", run_opts.format, "Report format: csv or json");
    run_cmd->add_option("--jobs", run_opts.jobs, "Worker threads");
    run_cmd->add_flag("--quiet", run_opts.quiet, "Do not print the summary");

    EvalOptions eval_opts;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate one quantity at one point");
    eval_cmd->add_option("what", eval_opts.what,
                         "psi | turanian:KIND | ratio:KIND | phi:T | aux:f|g|h | bound:ID | dominance:ID")
        ->required();
    eval_cmd->add_option("numbers", eval_opts.numbers, "a c x (a c for phi)")->required();
    eval_cmd->add_flag("--json", eval_opts.json, "Print one JSON object");

    std::string catalog_out;
    auto* catalog_cmd = app.add_subcommand("catalog", "Dump the bound, dominance and limit catalogs as JSON");
    catalog_cmd->add_option("--out", catalog_out, "Output file (default stdout)");

    SharpnessOptions sharp_opts;
    auto* sharp_cmd = app.add_subcommand("sharpness", "Scan normalized Turanian ratios toward their limits");
    sharp_cmd->add_option("--limit", sharp_opts.limit, "Limit id or 'all'");
    sharp_cmd->add_option("-a", sharp_opts.a, "Parameter a");
    sharp_cmd->add_option("-c", sharp_opts.c, "Parameter c");
    sharp_cmd->add_option("--x", sharp_opts.sequence, "Comma list of x values ordered toward the limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (*run_cmd) return do_run(run_opts);
    if (*eval_cmd) return do_eval(eval_opts);
    if (*catalog_cmd) return do_catalog(catalog_out);
    if (*sharp_cmd) return do_sharpness(sharp_opts);
    return kUsage;
}
