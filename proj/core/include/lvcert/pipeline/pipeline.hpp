#pragma once

#include <lvcert/certify/crosscheck.hpp>
#include <lvcert/certify/report.hpp>
#include <lvcert/potts/coeff_io.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lvcert {

inline constexpr const char* tool_version = "lvcert-1.0.0";
inline constexpr const char* cache_env_var = "LVCERT_CACHE_DIR";

/// LVCERT_CACHE_DIR, else $XDG_CACHE_HOME/lvcert, else ~/.cache/lvcert,
/// else ./.lvcert-cache.
std::filesystem::path default_cache_dir();

struct CacheEntry {
    std::string stage;
    std::string input_hash;
    std::filesystem::path output_path;
    std::string version;
};

/// Content-addressed artifact store. An entry is reused only when the stage,
/// input hash and tool version all match.
class Cache {
public:
    explicit Cache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    CacheEntry entry(const std::string& stage, const std::string& input_hash) const;
    bool contains(const CacheEntry& e) const;
    /// Marks the artifact at e.output_path as complete.
    void commit(const CacheEntry& e) const;

private:
    std::filesystem::path dir_;
};

/// Coefficient records for every catalogue view, computed in parallel.
std::vector<CoeffRecord> compute_coefficients(const Catalogue& catalogue, const CaseSpec& spec, int jobs);

using Logger = std::function<void(const std::string&)>;

/// Catalogue from the cache or freshly generated (and stored).
Catalogue cached_catalogue(Cache& cache, int d, int jobs, const Logger& log, bool* reused = nullptr);
CoeffFile cached_coefficients(Cache& cache, const Catalogue& catalogue, const CaseSpec& spec, int jobs,
                              const Logger& log, bool* reused = nullptr);

struct PipelineConfig {
    int d = 4;
    std::vector<CaseSpec> cases{CaseSpec::min_q5(), CaseSpec::min_qge6(), CaseSpec::max_qge5()};
    bool generate_only = false;
    std::filesystem::path cache_dir = default_cache_dir();
    std::filesystem::path report_dir = ".";
    int jobs = 1;

    /// Throws std::invalid_argument when d is outside 2..5 or verification
    /// is requested for d != 4.
    void validate() const;
};

struct PipelineResult {
    /// 0 pass, 1 verification failure.
    int exit_code = 0;
    std::vector<std::filesystem::path> reports;
    std::vector<std::string> stages_run;
    std::vector<std::string> stages_reused;
    bool feasibility_ok = false;
};

/// generate -> coeffs -> verify -> report for every configured case, plus
/// the K44 feasibility identity for the minimisation cases.
PipelineResult run_pipeline(const PipelineConfig& config, const Logger& log = {});

/// Certificate for one case from a catalogue and its coefficient records.
Certificate certify_case(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const CaseSpec& spec,
                         int jobs);

struct SelfcheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SelfcheckReport {
    std::vector<SelfcheckItem> items;
    bool ok() const;
};

/// Fast oracle suites: canonical labelling against exhaustive search,
/// d = 2 and d = 3 catalogues against brute force, symbolic coefficients
/// against direct summation at q = 7, the K44 feasibility identity and the
/// magic factor load checks.
SelfcheckReport run_selfcheck(int jobs, const Logger& log = {});

}  // namespace lvcert
