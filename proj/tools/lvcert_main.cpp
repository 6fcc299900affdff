#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/pipeline/pipeline.hpp>
#include <lvcert/util/parallel.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace lvcert;

namespace {

struct Options {
    int jobs = default_jobs();
    std::string cache_dir;
    std::string catalogue_path;
    std::string coeffs_path;
    std::string out;
    std::string case_name;
    std::string sense = "min";
    std::string t0 = "1/2";
    int q = 7;
    int d = 4;
    bool generate_only = false;
    std::string report_dir = ".";
};

void log_line(const std::string& msg) { std::cerr << "[lvcert] " << msg << '\n'; }

Cache open_cache(const Options& opt) { return Cache(opt.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(opt.cache_dir)); }

Catalogue obtain_catalogue(const Options& opt, int d = 4)
{
    if (!opt.catalogue_path.empty())
        return load_catalogue(opt.catalogue_path);
    auto cache = open_cache(opt);
    return cached_catalogue(cache, d, opt.jobs, log_line);
}

std::vector<CoeffRecord> obtain_coefficients(const Options& opt, const Catalogue& cat, const CaseSpec& spec)
{
    if (!opt.coeffs_path.empty()) {
        auto file = load_coefficients(opt.coeffs_path);
        if (file.catalogue_hash != cat.hash)
            throw CoeffFileError("coefficient file was computed for a different catalogue");
        if (file.spec.kind != spec.kind)
            throw CoeffFileError("coefficient file is for case " + file.spec.name());
        return std::move(file.records);
    }
    auto cache = open_cache(opt);
    return cached_coefficients(cache, cat, spec, opt.jobs, log_line).records;
}

int write_certificate(const Options& opt, const Certificate& cert, const Catalogue& cat)
{
    std::string path = opt.out.empty() ? "certificate-" + cert.spec.name() + ".txt" : opt.out;
    if (path == "-") {
        emit_certificate(std::cout, cert, cat, utc_timestamp());
    }
    else {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        emit_certificate(out, cert, cat, utc_timestamp());
        log_line("report written to " + path);
    }
    std::cout << "case=" << cert.spec.name() << " pass=" << (cert.pass ? "true" : "false") << " zeros=" << cert.zeros
              << " positives=" << cert.positives << " failures=" << cert.failures << '\n';
    return cert.pass ? 0 : 1;
}

int cmd_generate(const Options& opt)
{
    auto cat = generate_catalogue(opt.d, opt.jobs, log_line);
    if (opt.out.empty() || opt.out == "-")
        write_catalogue(std::cout, cat);
    else
        save_catalogue(opt.out, cat);
    std::cerr << "views=" << cat.views.size() << " hash=" << cat.hash << '\n';
    return 0;
}

int cmd_coeffs(const Options& opt)
{
    auto spec = CaseSpec::parse(opt.case_name);
    auto cat = obtain_catalogue(opt, opt.d);
    CoeffFile file;
    file.spec = spec;
    file.d = cat.d;
    file.catalogue_hash = cat.hash;
    file.records = compute_coefficients(cat, spec, opt.jobs);
    if (opt.out.empty() || opt.out == "-")
        write_coefficients(std::cout, file);
    else
        save_coefficients(opt.out, file);
    return 0;
}

int cmd_verify_min(const Options& opt)
{
    auto spec = CaseSpec::parse(opt.case_name);
    if (spec.kind == CaseKind::MaxQGe5)
        throw std::invalid_argument("verify-min takes --case q5 or qge6");
    auto cat = obtain_catalogue(opt);
    auto records = obtain_coefficients(opt, cat, spec);
    return write_certificate(opt, certify_case(cat, records, spec, opt.jobs), cat);
}

int cmd_verify_max(const Options& opt)
{
    auto spec = CaseSpec::max_qge5();
    auto cat = obtain_catalogue(opt);
    auto records = obtain_coefficients(opt, cat, spec);
    return write_certificate(opt, certify_case(cat, records, spec, opt.jobs), cat);
}

int cmd_feasibility(const Options& opt)
{
    auto cat = obtain_catalogue(opt);
    std::vector<CaseSpec> specs;
    if (opt.case_name.empty())
        specs = {CaseSpec::min_q5(), CaseSpec::min_qge6()};
    else
        specs = {CaseSpec::parse(opt.case_name)};
    bool ok = true;
    for (const auto& spec : specs) {
        auto records = obtain_coefficients(opt, cat, spec);
        auto report = check_k44_feasibility(cat, records, reference_model(ReferenceGraph::K44, spec));
        for (const auto& row : report.rows)
            std::cout << "case=" << spec.name() << " row=\"" << row.name << "\" holds=" << (row.holds ? "true" : "false")
                      << '\n';
        ok = ok && report.ok;
    }
    std::cout << "feasibility " << (ok ? "holds" : "violated") << '\n';
    return ok ? 0 : 1;
}

int cmd_crosscheck(const Options& opt)
{
    LpSense sense;
    CaseSpec spec;
    if (opt.sense == "min") {
        sense = LpSense::Minimise;
        spec = opt.q == 5 ? CaseSpec::min_q5() : CaseSpec::min_qge6();
    }
    else if (opt.sense == "max") {
        sense = LpSense::Maximise;
        spec = CaseSpec::max_qge5();
    }
    else {
        throw std::invalid_argument("--sense must be min or max");
    }
    long r0 = spec.r_for_q(opt.q);
    Rational t0(opt.t0);
    t0.canonicalize();
    auto cat = obtain_catalogue(opt);
    auto records = obtain_coefficients(opt, cat, spec);
    auto res = crosscheck_lp(cat, records, spec, t0, Rational(r0), sense);
    std::cout << "sense=" << opt.sense << " q=" << opt.q << " t0=" << t0.get_str() << " case=" << spec.name()
              << " pivots=" << res.pivots << '\n';
    std::cout << "optimum=" << (res.status == LpStatus::Optimal ? res.optimum.get_str() : "n/a") << '\n';
    std::cout << "reference=" << res.reference.get_str() << '\n';
    std::cout << "support=";
    for (std::size_t i = 0; i < res.support.size(); ++i)
        std::cout << (i ? "," : "") << res.support[i];
    std::cout << '\n' << "agree=" << (res.agrees() ? "true" : "false") << '\n';
    return res.agrees() ? 0 : 1;
}

int cmd_selfcheck(const Options& opt)
{
    auto report = run_selfcheck(opt.jobs, [](const std::string& line) { std::cout << line << '\n'; });
    std::cout << "selfcheck " << (report.ok() ? "passed" : "FAILED") << '\n';
    return report.ok() ? 0 : 1;
}

int cmd_run_all(const Options& opt)
{
    PipelineConfig config;
    config.d = opt.d;
    config.generate_only = opt.generate_only;
    config.jobs = opt.jobs;
    config.report_dir = opt.report_dir;
    if (!opt.cache_dir.empty())
        config.cache_dir = opt.cache_dir;
    if (!opt.case_name.empty())
        config.cases = {CaseSpec::parse(opt.case_name)};
    auto result = run_pipeline(config, log_line);
    for (const auto& s : result.stages_reused)
        std::cout << "reused " << s << '\n';
    for (const auto& s : result.stages_run)
        std::cout << "ran " << s << '\n';
    for (const auto& p : result.reports)
        std::cout << "report " << p.string() << '\n';
    std::cout << "run-all " << (result.exit_code == 0 ? "passed" : "FAILED") << '\n';
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local-view LP certificates for the Potts model on 4-regular graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", opt.cache_dir, std::string("Cache directory (default: $") + cache_env_var + ")");

    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--catalogue", opt.catalogue_path, "Catalogue file (default: cached)");
        sub->add_option("--coeffs", opt.coeffs_path, "Coefficient file (default: cached)");
    };

    auto* gen = app.add_subcommand("generate", "Generate the local-view catalogue");
    gen->add_option("--d", opt.d, "Degree (2..5)")->check(CLI::Range(2, 5));
    gen->add_option("--out", opt.out, "Output path ('-' for stdout)");

    auto* coeffs = app.add_subcommand("coeffs", "Compute exact LP coefficients for every view");
    coeffs->add_option("--case", opt.case_name, "q5, qge6 or max")->required();
    coeffs->add_option("--catalogue", opt.catalogue_path, "Catalogue file (default: cached d=4)");
    coeffs->add_option("--out", opt.out, "Output path ('-' for stdout)");

    auto* vmin = app.add_subcommand("verify-min", "Certify the lower bound (K44 optimal)");
    vmin->add_option("--case", opt.case_name, "q5 or qge6")->required();
    add_inputs(vmin);
    vmin->add_option("--out", opt.out, "Report path ('-' for stdout)");

    auto* vmax = app.add_subcommand("verify-max", "Certify the upper bound (K5 optimal)");
    add_inputs(vmax);
    vmax->add_option("--out", opt.out, "Report path ('-' for stdout)");

    auto* feas = app.add_subcommand("feasibility-check", "Check that the K44 distribution satisfies A p = b");
    feas->add_option("--case", opt.case_name, "q5 or qge6 (default: both)");
    add_inputs(feas);

    auto* cross = app.add_subcommand("crosscheck", "Solve the primal LP exactly at a rational point");
    cross->add_option("--sense", opt.sense, "min or max");
    cross->add_option("--t0", opt.t0, "Rational t = e^beta - 1");
    cross->add_option("--q", opt.q, "Number of colours");
    add_inputs(cross);

    auto* self = app.add_subcommand("selfcheck", "Run the fast oracle suites");

    auto* all = app.add_subcommand("run-all", "generate, coeffs, verify and report with caching");
    all->add_option("--d", opt.d, "Degree (2..5)")->check(CLI::Range(2, 5));
    all->add_option("--case", opt.case_name, "Restrict to one case");
    all->add_flag("--generate-only", opt.generate_only, "Stop after generation");
    all->add_option("--report-dir", opt.report_dir, "Where certificates are written");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(opt);
        if (coeffs->parsed())
            return cmd_coeffs(opt);
        if (vmin->parsed())
            return cmd_verify_min(opt);
        if (vmax->parsed())
            return cmd_verify_max(opt);
        if (feas->parsed())
            return cmd_feasibility(opt);
        if (cross->parsed())
            return cmd_crosscheck(opt);
        if (self->parsed())
            return cmd_selfcheck(opt);
        if (all->parsed())
            return cmd_run_all(opt);
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "lvcert: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "lvcert: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
