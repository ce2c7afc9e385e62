#include "solhnn/lattice.hpp"
#include "solhnn/words.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace solhnn;

namespace {

std::string random_word(std::mt19937 &rng, const GroupSpec &g, int len) {
    const char *abelian[] = {"t", "u", "v"};
    const char *wreath[] = {"t", "s", "a", "a[1]", "a[-2]"};
    std::string w;
    std::uniform_int_distribution<int> exp(-3, 3);
    for (int i = 0; i < len; ++i) {
        int e = exp(rng);
        if (e == 0)
            e = 1;
        const char *gen;
        if (g.kind() == GroupSpec::Kind::FreeAbelian)
            gen = abelian[rng() % 3];
        else
            gen = wreath[rng() % 5];
        if (!w.empty())
            w += " ";
        w += gen;
        w += "^" + std::to_string(e);
    }
    return w;
}

void BM_normalize(benchmark::State &state, const GroupSpec &g) {
    std::mt19937 rng(7);
    std::vector<Word> words;
    for (int i = 0; i < 64; ++i)
        words.push_back(parse_word(random_word(rng, g, static_cast<int>(state.range(0))), g));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_word(g, words[i % words.size()]));
        ++i;
    }
}

void BM_normalize_abelian(benchmark::State &state) { BM_normalize(state, GroupSpec::thm21()); }
void BM_normalize_wreath(benchmark::State &state) { BM_normalize(state, GroupSpec::baumslag_remeslennikov()); }

void BM_hnf(benchmark::State &state) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> coeff(-50, 50);
    std::size_t dim = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<IntVector>> gen_sets;
    for (int s = 0; s < 32; ++s) {
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < dim + 1; ++i) {
            IntVector v(dim);
            for (auto &c : v)
                c = coeff(rng);
            gens.push_back(v);
        }
        gen_sets.push_back(gens);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hnf(dim, gen_sets[i % gen_sets.size()]));
        ++i;
    }
}

} // namespace

BENCHMARK(BM_normalize_abelian)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_normalize_wreath)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_hnf)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
