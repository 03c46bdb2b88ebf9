#include "brauer/enhanced.hpp"
#include "brauer/invariants.hpp"
#include "brauer/rewrite.hpp"
#include "brauer/sigma.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace bk;

namespace {

// uniformly random perfect matching on k+ell nodes
Diagram random_diagram(int k, int ell, std::mt19937_64& rng) {
    std::vector<int> nodes(static_cast<std::size_t>(k + ell));
    for (int i = 0; i < k + ell; ++i) nodes[static_cast<std::size_t>(i)] = i;
    std::shuffle(nodes.begin(), nodes.end(), rng);
    std::vector<int> partner(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); i += 2) {
        partner[static_cast<std::size_t>(nodes[i])] = nodes[i + 1];
        partner[static_cast<std::size_t>(nodes[i + 1])] = nodes[i];
    }
    return Diagram::from_partner(k, ell, partner);
}

void BM_Compose(benchmark::State& st) {
    const int r = static_cast<int>(st.range(0));
    std::mt19937_64 rng(1);
    std::vector<Diagram> ds;
    for (int i = 0; i < 64; ++i) ds.push_back(random_diagram(r, r, rng));
    std::size_t i = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(compose(ds[i % 64], ds[(i + 1) % 64]));
        ++i;
    }
}
BENCHMARK(BM_Compose)->Arg(4)->Arg(16)->Arg(64);

void BM_Enumerate(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_diagrams(n / 2, n / 2));
}
BENCHMARK(BM_Enumerate)->Arg(6)->Arg(8)->Arg(10);

void BM_SymmetrizerSquare(benchmark::State& st) {
    const int r = static_cast<int>(st.range(0));
    const DiagramSum s = symmetrizer(r, 1);
    for (auto _ : st) benchmark::DoNotOptimize(compose(s, s));
}
BENCHMARK(BM_SymmetrizerSquare)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SigmaIdentities(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(sigma_identities(5, 2));
}
BENCHMARK(BM_SigmaIdentities)->Unit(benchmark::kMillisecond);

void BM_RewriteTrace(benchmark::State& st) {
    const int r = static_cast<int>(st.range(0));
    std::mt19937_64 rng(2);
    const Diagram d = random_diagram(r, r, rng);
    const Word a = random_word(d, 3), b = random_word(d, 4);
    for (auto _ : st) benchmark::DoNotOptimize(rewrite_trace(a, b));
}
BENCHMARK(BM_RewriteTrace)->Arg(2)->Arg(3)->Arg(4);

void BM_FunctorImage(benchmark::State& st) {
    const GroupSpec g = GroupSpec::O(3);
    const int r = static_cast<int>(st.range(0));
    std::mt19937_64 rng(5);
    const Diagram d = random_diagram(r, r, rng);
    for (auto _ : st) benchmark::DoNotOptimize(functor(g, d));
}
BENCHMARK(BM_FunctorImage)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_EquivariantDim(benchmark::State& st) {
    const Signs w(static_cast<std::size_t>(st.range(0)), '+');
    for (auto _ : st) benchmark::DoNotOptimize(equivariant_dim(GroupSpec::O(3), w, w));
}
BENCHMARK(BM_EquivariantDim)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FftSweep(benchmark::State& st) {
    for (auto _ : st)
        for (int k = 0; k <= 4; ++k)
            for (int l = 0; k + l <= 4; ++l) benchmark::DoNotOptimize(verify_fft(GroupSpec::O(2), k, l));
}
BENCHMARK(BM_FftSweep)->Unit(benchmark::kMillisecond);

void BM_EpFormula(benchmark::State& st) {
    const int m = static_cast<int>(st.range(0));
    for (auto _ : st)
        for (int p = 0; p <= m + 1; ++p) benchmark::DoNotOptimize(E_p_formula(m, p));
}
BENCHMARK(BM_EpFormula)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_TensorIdeal(benchmark::State& st) {
    set_threads(static_cast<unsigned>(st.range(0)));
    const DiagramSum gen = young_idempotent(1, 0).element;
    const DiagramBasis basis(3, 3);
    for (auto _ : st) benchmark::DoNotOptimize(tensor_ideal_span(gen, basis, 1));
    set_threads(1);
}
BENCHMARK(BM_TensorIdeal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnhancedRelations(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_relations(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_EnhancedRelations)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
