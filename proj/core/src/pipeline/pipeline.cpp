#include <lvcert/pipeline/pipeline.hpp>

#include <fstream>
#include <stdexcept>

namespace lvcert {

namespace fs = std::filesystem;

void PipelineConfig::validate() const
{
    if (d < 2 || d > 5)
        throw std::invalid_argument("d must be in 2..5");
    if (!generate_only && d != 4)
        throw std::invalid_argument("verification is defined for d = 4 only; use generate-only for other d");
    if (jobs < 1)
        throw std::invalid_argument("jobs must be positive");
}

Certificate certify_case(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const CaseSpec& spec,
                         int jobs)
{
    auto magic = magic_factor(spec.kind);
    if (spec.kind == CaseKind::MaxQGe5)
        return verify_max(catalogue, records, magic, jobs);
    auto ref = reference_model(ReferenceGraph::K44, spec);
    auto dual = solve_dual(spec, catalogue, records, ref);
    return verify_min(catalogue, records, dual, magic, jobs);
}

PipelineResult run_pipeline(const PipelineConfig& config, const Logger& log)
{
    config.validate();
    PipelineResult result;
    Cache cache(config.cache_dir);

    bool reused = false;
    auto catalogue = cached_catalogue(cache, config.d, config.jobs, log, &reused);
    (reused ? result.stages_reused : result.stages_run).push_back("generate");
    if (config.generate_only) {
        result.feasibility_ok = true;
        return result;
    }

    fs::create_directories(config.report_dir);
    result.feasibility_ok = true;
    for (const auto& spec : config.cases) {
        auto coeffs = cached_coefficients(cache, catalogue, spec, config.jobs, log, &reused);
        (reused ? result.stages_reused : result.stages_run).push_back("coeffs-" + spec.name());

        if (spec.kind != CaseKind::MaxQGe5) {
            auto feas = check_k44_feasibility(catalogue, coeffs.records, reference_model(ReferenceGraph::K44, spec));
            if (log)
                log("feasibility " + spec.name() + ": " + (feas.ok ? "holds" : "VIOLATED"));
            result.feasibility_ok = result.feasibility_ok && feas.ok;
        }

        if (log)
            log("verify " + spec.name() + ": running");
        auto cert = certify_case(catalogue, coeffs.records, spec, config.jobs);
        result.stages_run.push_back("verify-" + spec.name());
        fs::path path = config.report_dir / ("certificate-" + spec.name() + ".txt");
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot write report " + path.string());
        emit_certificate(out, cert, catalogue, utc_timestamp());
        result.reports.push_back(path);
        if (log)
            log("verify " + spec.name() + ": pass=" + (cert.pass ? "true" : "false") + " zeros=" +
                std::to_string(cert.zeros) + " positives=" + std::to_string(cert.positives) +
                " failures=" + std::to_string(cert.failures) + " -> " + path.string());
        if (!cert.pass)
            result.exit_code = 1;
    }
    if (!result.feasibility_ok)
        result.exit_code = 1;
    return result;
}

}  // namespace lvcert
