#include <doctest.h>

#include <lvcert/localview/catalogue_io.hpp>
#include <lvcert/pipeline/pipeline.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace lvcert;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("lvcert-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string body_of(const fs::path& report)
{
    std::ifstream in(report);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.rfind("# generated", 0) == 0)
        text.erase(0, text.find('\n') + 1);
    return text;
}

}  // namespace

TEST_CASE("configuration validation")
{
    PipelineConfig config;
    config.d = 5;
    config.generate_only = true;
    CHECK_NOTHROW(config.validate());
    config.generate_only = false;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.d = 3;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.d = 6;
    config.generate_only = true;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config.d = 4;
    config.jobs = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("cache entries")
{
    TempDir tmp;
    Cache cache(tmp.path);
    auto e = cache.entry("catalogue", "d=2");
    CHECK_FALSE(cache.contains(e));
    std::ofstream(e.output_path) << "partial";
    CHECK_FALSE(cache.contains(e));
    cache.commit(e);
    CHECK(cache.contains(e));
    CHECK(cache.entry("catalogue", "d=3").output_path != e.output_path);
}

TEST_CASE("cache directory override")
{
    TempDir tmp;
    ::setenv(cache_env_var, tmp.path.c_str(), 1);
    CHECK(default_cache_dir() == tmp.path);
    ::unsetenv(cache_env_var);
    CHECK(default_cache_dir() != tmp.path);
}

TEST_CASE("generate-only runs reuse the cached catalogue")
{
    TempDir tmp;
    PipelineConfig config;
    config.d = 3;
    config.generate_only = true;
    config.cache_dir = tmp.path / "cache";
    auto first = run_pipeline(config);
    CHECK(first.exit_code == 0);
    CHECK(first.stages_run == std::vector<std::string>{"generate"});
    auto second = run_pipeline(config);
    CHECK(second.stages_reused == std::vector<std::string>{"generate"});
    CHECK(second.stages_run.empty());

    Cache cache(config.cache_dir);
    auto e = cache.entry("catalogue", "d=3");
    REQUIRE(cache.contains(e));
    CHECK(load_catalogue(e.output_path.string()).views.size() == 35);
}

TEST_CASE("corrupt cached catalogue is rejected")
{
    TempDir tmp;
    PipelineConfig config;
    config.d = 2;
    config.generate_only = true;
    config.cache_dir = tmp.path;
    run_pipeline(config);
    Cache cache(config.cache_dir);
    auto e = cache.entry("catalogue", "d=2");
    {
        std::ifstream in(e.output_path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        text += "\ninner: \nmults: [1|1]\n";
        std::ofstream(e.output_path) << text;
    }
    CHECK_THROWS_AS(run_pipeline(config), CatalogueError);
}

TEST_CASE("warm run reproduces the certificate body")
{
    TempDir tmp;
    PipelineConfig config;
    config.d = 4;
    config.cases = {CaseSpec::min_q5()};
    config.cache_dir = tmp.path / "cache";
    config.report_dir = tmp.path / "cold";
    auto cold = run_pipeline(config);
    CHECK(cold.exit_code == 0);
    CHECK(cold.feasibility_ok);
    REQUIRE(cold.reports.size() == 1);
    CHECK(cold.stages_run == std::vector<std::string>{"generate", "coeffs-q5", "verify-q5"});

    config.report_dir = tmp.path / "warm";
    auto warm = run_pipeline(config);
    CHECK(warm.stages_reused == std::vector<std::string>{"generate", "coeffs-q5"});
    REQUIRE(warm.reports.size() == 1);
    auto body = body_of(cold.reports[0]);
    CHECK(body == body_of(warm.reports[0]));
    CHECK(body.find("summary pass=true zeros=3 positives=3526 failures=0") != std::string::npos);
}
