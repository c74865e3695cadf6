// Command-line front end: parses the declarative input format, dispatches to
// the library, and emits machine-readable JSON (CSV for `sweep`).
//
// Exit codes: 0 success, 2 standing hypotheses fail (results still emitted
// with "applicable": false), 1 error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include <fiberscope/fiberscope.hpp>

using nlohmann::json;
using namespace fiberscope;

namespace {

constexpr const char* kSchemaVersion = "1";

struct Options {
    std::string input_file;
    uint64_t seed = 1;
    bool no_timings = false;
    int smax = 3;
    int ext = 1;
    int upto = -1;
    std::string point;
    bool force = false;
    // sweep-only
    uint64_t prime = 101;
    int dmin = 3, dmax = 3, samples = 10;
    std::string sampler = "base_points";
};

class Timer {
public:
    explicit Timer(bool enabled) : enabled_(enabled) {}
    template <class Fn>
    auto time(const std::string& label, Fn&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        auto result = fn();
        auto t1 = std::chrono::steady_clock::now();
        if (enabled_)
            ms_[label] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return result;
    }
    void attach(json& report) const {
        if (enabled_) report["timings_ms"] = ms_;
    }

private:
    bool enabled_;
    std::map<std::string, double> ms_;
};

template <class F>
json point_json(const ProjectivePoint<F>& p) {
    return p.str();
}

template <class F>
json hypotheses_json(const BaseLocusReport& rep) {
    return {{"is_finite", rep.is_finite},
            {"degP", rep.degP},
            {"is_lci", rep.is_lci},
            {"is_saturated", rep.is_saturated},
            {"indeg_sat", rep.indeg_sat},
            {"base_locus_empty", rep.base_locus_empty},
            {"hypotheses_pass", rep.hypotheses_pass}};
}

template <class F>
json locus_json(const OneDimLocus<F>& L) {
    json entries = json::array();
    for (const auto& [p, h] : L.entries)
        entries.push_back({{"point", p.str()}, {"h", h.str()}, {"deg_h", h.degree()}});
    json j = {{"entries", entries},
              {"total_degree", L.total_degree},
              {"complete", !L.residual.has_value()}};
    if (L.residual) {
        json gens = json::array();
        for (const auto& g : L.residual->generators()) gens.push_back(g.str());
        j["residual"] = gens;
    }
    return j;
}

template <class F>
json fiber_json(const FiberReport<F>& rep) {
    json j = {{"point", rep.point.str()}};
    switch (rep.kind) {
    case FiberReport<F>::Kind::Empty:
        j["kind"] = "empty";
        break;
    case FiberReport<F>::Kind::ZeroDimensional:
        j["kind"] = "zero_dimensional";
        j["degree"] = rep.zero_dim_degree;
        break;
    case FiberReport<F>::Kind::OneDimensional:
        j["kind"] = "one_dimensional";
        j["h"] = rep.h->str();
        j["deg_h"] = rep.h_degree;
        break;
    }
    return j;
}

json field_json(const InputSpec& spec) {
    if (spec.rational) return {{"kind", "rational"}};
    return {{"kind", "prime"}, {"p", spec.prime}};
}

template <class F>
int cmd_analyze(const Parameterization<F>& phi, const InputSpec& spec, const Options& opt,
                json& report) {
    Timer timer(!opt.no_timings);
    auto hyp = timer.time("hypotheses", [&] { return check_base_locus(phi); });
    report["hypotheses"] = hypotheses_json<F>(hyp);
    report["applicable"] = hyp.hypotheses_pass;
    report["bound"] = theorem_bound(phi.d);

    try {
        auto inv = timer.time("invariants", [&] {
            return nml_invariants(phi.ideal(), phi.d, NmlInvariants::Route::closed_form);
        });
        long lo = static_cast<long>(phi.d) * (phi.d + 1) / 2;
        long hi = static_cast<long>(phi.d) * phi.d - 2 * phi.d + 3;
        report["invariants"] = {{"n", inv.n},
                                {"m", inv.m},
                                {"l", inv.l},
                                {"degP", inv.degP},
                                {"degP_window",
                                 {{"lower", lo}, {"upper", hi},
                                  {"within", lo <= inv.degP && inv.degP <= hi}}}};
    } catch (const std::exception& e) {
        report["invariants"] = {{"error", e.what()}};
    }

    try {
        auto L = timer.time("locus", [&] { return one_dim_locus(phi, opt.seed); });
        report["locus"] = locus_json(L);
        report["sum_deg_h"] = L.total_degree;
        report["satisfied"] = L.total_degree <= theorem_bound(phi.d);
    } catch (const std::exception& e) {
        report["locus"] = {{"error", e.what()}};
        report["sum_deg_h"] = nullptr;
        report["satisfied"] = nullptr;
    }
    (void)spec;
    timer.attach(report);
    return hyp.hypotheses_pass ? 0 : 2;
}

template <class F>
int cmd_fibers(const Parameterization<F>& phi, const InputSpec& spec, const Options& opt,
               json& report) {
    Timer timer(!opt.no_timings);
    if (!opt.point.empty()) {
        auto p = parse_point(opt.point, phi.field);
        auto rep = timer.time("fiber", [&] { return fiber_at_point(phi, p); });
        report["fiber"] = fiber_json(rep);
        timer.attach(report);
        return 0;
    }
    auto hyp = timer.time("hypotheses", [&] { return check_base_locus(phi); });
    report["hypotheses"] = hypotheses_json<F>(hyp);
    report["applicable"] = hyp.hypotheses_pass;
    if (!hyp.hypotheses_pass && !opt.force) {
        report["locus"] = {{"error",
                            "standing hypotheses fail; pass --force to run the locus "
                            "search anyway"}};
        timer.attach(report);
        return 2;
    }
    try {
        auto L = timer.time("locus", [&] { return one_dim_locus(phi, opt.seed); });
        report["locus"] = locus_json(L);
        report["sum_deg_h"] = L.total_degree;
    } catch (const std::exception& e) {
        report["locus"] = {{"error", e.what()}};
        report["sum_deg_h"] = nullptr;
    }
    (void)spec;
    timer.attach(report);
    return hyp.hypotheses_pass ? 0 : 2;
}

template <class F>
int cmd_bound(const Parameterization<F>& phi, const InputSpec&, const Options& opt,
              json& report) {
    Timer timer(!opt.no_timings);
    auto hyp = timer.time("hypotheses", [&] { return check_base_locus(phi); });
    report["hypotheses"] = hypotheses_json<F>(hyp);
    report["applicable"] = hyp.hypotheses_pass;
    report["theorem_bound"] = theorem_bound(phi.d);
    auto cert = timer.time("prop1", [&] { return prop1_certificate(phi, opt.smax); });
    if (cert) {
        report["prop1"] = {{"s", cert->s}, {"nu", cert->nu}, {"value", cert->value}};
    } else {
        report["prop1"] = nullptr;
    }
    timer.attach(report);
    return hyp.hypotheses_pass ? 0 : 2;
}

template <class F>
int cmd_scan(const Parameterization<F>& phi, const InputSpec& spec, const Options& opt,
             json& report) {
    if constexpr (!F::is_finite) {
        throw std::invalid_argument("scan requires a finite coefficient field");
    } else {
        Timer timer(!opt.no_timings);
        if (opt.ext < 1) throw std::invalid_argument("scan: --ext must be >= 1");
        if (opt.ext == 1) {
            auto L = timer.time("scan", [&] { return exhaustive_scan(phi); });
            report["locus"] = locus_json(L);
            report["sum_deg_h"] = L.total_degree;
            report["field_order"] = spec.prime;
        } else {
            auto ext = ExtensionField::make(spec.prime, opt.ext);
            auto lifted = extend_parameterization(phi, ext);
            auto L = timer.time("scan", [&] { return exhaustive_scan(lifted); });
            report["locus"] = locus_json(L);
            report["sum_deg_h"] = L.total_degree;
            report["field_order"] = ext.order();
        }
        timer.attach(report);
        return 0;
    }
}

template <class F>
int cmd_hilbert(const Parameterization<F>& phi, const InputSpec&, const Options& opt,
                json& report) {
    Timer timer(!opt.no_timings);
    int upto = opt.upto >= 0 ? opt.upto : 2 * phi.d;
    auto I = phi.ideal();
    auto sat = timer.time("saturation", [&] {
        return saturate(I, irrelevant_ideal(phi.field, phi.ctx));
    });
    json rows = json::array();
    timer.time("table", [&] {
        for (int mu = 0; mu <= upto; ++mu) {
            long hf = hilbert_function(I, mu);
            long hfs = hilbert_function(sat, mu);
            rows.push_back({{"t", mu}, {"hf", hf}, {"hf_sat", hfs}});
        }
        return 0;
    });
    report["table"] = rows;
    report["degP"] = hilbert_polynomial_constant(sat);
    timer.attach(report);
    return 0;
}

int cmd_sweep(const Options& opt) {
    Sampler sampler;
    if (opt.sampler == "uniform") sampler = Sampler::uniform;
    else if (opt.sampler == "base_points") sampler = Sampler::base_points;
    else throw std::invalid_argument("unknown sampler '" + opt.sampler + "'");
    auto rows = sweep(opt.prime, opt.dmin, opt.dmax, opt.samples, opt.seed, opt.ext, sampler);
    std::cout << sweep_csv(rows);
    for (const auto& r : rows) {
        if (r.falsified) {
            std::cerr << "sweep: bound violated at d=" << r.d
                      << " (max_sum=" << r.max_sum << " > bound=" << r.bound
                      << "); this indicates an implementation bug" << std::endl;
            return 1;
        }
    }
    return 0;
}

template <class F>
int dispatch(const std::string& cmd, const InputSpec& spec, const F& field,
             const Options& opt) {
    auto phi = make_parameterization(spec, field);
    json report;
    report["schema_version"] = kSchemaVersion;
    report["command"] = cmd;
    report["field"] = field_json(spec);
    report["degree"] = spec.degree;
    report["seed"] = opt.seed;

    int code = 0;
    if (cmd == "analyze") code = cmd_analyze(phi, spec, opt, report);
    else if (cmd == "fibers") code = cmd_fibers(phi, spec, opt, report);
    else if (cmd == "bound") code = cmd_bound(phi, spec, opt, report);
    else if (cmd == "scan") code = cmd_scan(phi, spec, opt, report);
    else if (cmd == "hilbert") code = cmd_hilbert(phi, spec, opt, report);
    else throw std::invalid_argument("unknown command '" + cmd + "'");

    std::cout << report.dump(2) << std::endl;
    return code;
}

int run(const std::string& cmd, const Options& opt) {
    if (cmd == "sweep") return cmd_sweep(opt);
    std::ifstream in(opt.input_file);
    if (!in) throw std::runtime_error("cannot open input file '" + opt.input_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    auto spec = parse_input(buf.str());
    if (spec.rational) return dispatch(cmd, spec, Rationals{}, opt);
    return dispatch(cmd, spec, PrimeField(spec.prime), opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact fiber analysis for rational surface parameterizations"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("FIBERSCOPE_SEED")) {
        try {
            opt.seed = std::stoull(env);
        } catch (...) {
            std::cerr << "error: FIBERSCOPE_SEED is not an integer" << std::endl;
            return 1;
        }
    }

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", opt.input_file, "input file")->required();
        sub->add_option("--seed", opt.seed, "random seed (default from FIBERSCOPE_SEED)");
        sub->add_flag("--no-timings", opt.no_timings, "omit timings from the report");
    };

    auto* analyze = app.add_subcommand("analyze", "hypotheses, invariants and bound check");
    add_common(analyze, true);
    auto* fibers = app.add_subcommand("fibers", "one-dimensional fiber locus");
    add_common(fibers, true);
    fibers->add_option("--point", opt.point, "classify the fiber over a single point a:b:c:d");
    fibers->add_flag("--force", opt.force, "run the locus search even if hypotheses fail");
    auto* bound = app.add_subcommand("bound", "saturation-indeg bound certificate");
    add_common(bound, true);
    bound->add_option("--smax", opt.smax, "largest power to try (default 3)");
    auto* scan = app.add_subcommand("scan", "exhaustive finite-field locus scan");
    add_common(scan, true);
    scan->add_option("--ext", opt.ext, "field extension exponent (default 1)");
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table");
    add_common(hilbert, true);
    hilbert->add_option("--upto", opt.upto, "largest degree in the table (default 2d)");
    auto* sw = app.add_subcommand("sweep", "random-instance sweep over a prime field (CSV)");
    add_common(sw, false);
    sw->add_option("--prime", opt.prime, "prime p (default 101)");
    sw->add_option("--dmin", opt.dmin, "smallest degree (default 3)");
    sw->add_option("--dmax", opt.dmax, "largest degree (default 3)");
    sw->add_option("--samples", opt.samples, "samples per degree (default 10)");
    sw->add_option("--ext", opt.ext, "field extension exponent for the scan (default 1)");
    sw->add_option("--sampler", opt.sampler, "uniform | base_points (default base_points)");

    CLI11_PARSE(app, argc, argv);

    try {
        return run(app.get_subcommands().front()->get_name(), opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}
