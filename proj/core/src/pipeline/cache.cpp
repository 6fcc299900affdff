#include <lvcert/pipeline/pipeline.hpp>

#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/util/parallel.hpp>
#include <lvcert/util/sha256.hpp>

#include <cstdlib>
#include <fstream>

namespace lvcert {

namespace fs = std::filesystem;

fs::path default_cache_dir()
{
    if (const char* dir = std::getenv(cache_env_var); dir && *dir)
        return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "lvcert";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "lvcert";
    return ".lvcert-cache";
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

CacheEntry Cache::entry(const std::string& stage, const std::string& input_hash) const
{
    CacheEntry e;
    e.stage = stage;
    e.input_hash = input_hash;
    e.version = tool_version;
    auto key = sha256_hex(stage + "\n" + input_hash + "\n" + e.version).substr(0, 24);
    e.output_path = dir_ / (stage + "-" + key + ".txt");
    return e;
}

bool Cache::contains(const CacheEntry& e) const
{
    fs::path marker = e.output_path;
    marker += ".entry";
    std::ifstream in(marker);
    if (!in || !fs::exists(e.output_path))
        return false;
    std::string stage, input, version;
    std::getline(in, stage);
    std::getline(in, input);
    std::getline(in, version);
    return stage == e.stage && input == e.input_hash && version == e.version;
}

void Cache::commit(const CacheEntry& e) const
{
    fs::path marker = e.output_path;
    marker += ".entry";
    std::ofstream out(marker);
    out << e.stage << '\n' << e.input_hash << '\n' << e.version << '\n';
}

std::vector<CoeffRecord> compute_coefficients(const Catalogue& catalogue, const CaseSpec& spec, int jobs)
{
    std::vector<CoeffRecord> records(catalogue.views.size());
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        records[i] = coefficient_vectors(catalogue.views[i], spec, static_cast<int>(i));
    });
    return records;
}

Catalogue cached_catalogue(Cache& cache, int d, int jobs, const Logger& log, bool* reused)
{
    auto e = cache.entry("catalogue", "d=" + std::to_string(d));
    if (cache.contains(e)) {
        if (log)
            log("catalogue: reusing " + e.output_path.string());
        if (reused)
            *reused = true;
        return load_catalogue(e.output_path.string());
    }
    if (log)
        log("catalogue: generating d=" + std::to_string(d));
    auto cat = generate_catalogue(d, jobs);
    save_catalogue(e.output_path.string(), cat);
    cache.commit(e);
    if (log)
        log("catalogue: " + std::to_string(cat.views.size()) + " views, hash " + cat.hash);
    if (reused)
        *reused = false;
    return cat;
}

CoeffFile cached_coefficients(Cache& cache, const Catalogue& catalogue, const CaseSpec& spec, int jobs,
                              const Logger& log, bool* reused)
{
    auto e = cache.entry("coeffs-" + spec.name(), catalogue.hash);
    if (cache.contains(e)) {
        auto file = load_coefficients(e.output_path.string());
        if (file.catalogue_hash == catalogue.hash && file.records.size() == catalogue.views.size()) {
            if (log)
                log("coeffs " + spec.name() + ": reusing " + e.output_path.string());
            if (reused)
                *reused = true;
            return file;
        }
    }
    if (log)
        log("coeffs " + spec.name() + ": computing");
    CoeffFile file;
    file.spec = spec;
    file.d = catalogue.d;
    file.catalogue_hash = catalogue.hash;
    file.records = compute_coefficients(catalogue, spec, jobs);
    save_coefficients(e.output_path.string(), file);
    cache.commit(e);
    if (reused)
        *reused = false;
    return file;
}

}  // namespace lvcert
