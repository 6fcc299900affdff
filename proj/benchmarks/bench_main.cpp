#include <lvcert/certify/magic.hpp>
#include <lvcert/graph/canon.hpp>
#include <lvcert/localview/generate.hpp>
#include <lvcert/potts/coefficients.hpp>

#include <benchmark/benchmark.h>

using namespace lvcert;

namespace {

const Catalogue& d4()
{
    static Catalogue cat = generate_catalogue(4);
    return cat;
}

void BM_CanonicalForm(benchmark::State& state)
{
    const auto& views = d4().views;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(views[i].rep));
        i = (i + 97) % views.size();
    }
}
BENCHMARK(BM_CanonicalForm);

void BM_GenerateCatalogue(benchmark::State& state)
{
    int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_catalogue(d).views.size());
}
BENCHMARK(BM_GenerateCatalogue)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ColourTally(benchmark::State& state)
{
    const auto& views = d4().views;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tally_colour_classes(views[i]).classes);
        i = (i + 131) % views.size();
    }
}
BENCHMARK(BM_ColourTally)->Unit(benchmark::kMicrosecond);

void BM_CoefficientVectors(benchmark::State& state)
{
    const auto& views = d4().views;
    auto spec = state.range(0) == 0 ? CaseSpec::min_q5() : CaseSpec::min_qge6();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coefficient_vectors(views[i], spec).ztilde.term_count());
        i = (i + 131) % views.size();
    }
}
BENCHMARK(BM_CoefficientVectors)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MagicFactorLoad(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(magic_factor(CaseKind::MinQGe6).m.term_count());
}
BENCHMARK(BM_MagicFactorLoad)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
