#include <benchmark/benchmark.h>

#include <map>
#include <optional>
#include <random>
#include <utility>

#include "arq/kt.hpp"
#include "arq/matrix.hpp"
#include "arq/models.hpp"
#include "arq/poincare.hpp"
#include "arq/quiver.hpp"
#include "arq/resolution.hpp"

namespace {

arq::Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-5, 5);
    arq::Field q = arq::Field::rationals();
    arq::Matrix m(q, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = arq::Scalar::of_int(q, dist(rng));
    return m;
}

void BM_RrefRational(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    arq::Matrix m = random_matrix(n, n, 42);
    for (auto _ : state) {
        auto r = arq::rref(m);
        benchmark::DoNotOptimize(r.pivot_cols);
    }
}
BENCHMARK(BM_RrefRational)->Arg(16)->Arg(32)->Arg(48);

void BM_KernelBasis(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    arq::Matrix m = random_matrix(n / 2, n, 7);
    for (auto _ : state) {
        auto k = arq::kernel_basis(m);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KernelBasis)->Arg(16)->Arg(32);

void BM_MinimalResolution(benchmark::State& state) {
    arq::Field q = arq::Field::rationals();
    auto k = arq::augmentation_module(arq::sphere_dga(q, 3), arq::Side::left);
    const int window = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto res = arq::minimal_resolution(k, window);
        benchmark::DoNotOptimize(res.generator_degrees());
    }
}
BENCHMARK(BM_MinimalResolution)->Arg(6)->Arg(10)->Arg(14);

void BM_PoincareCheck(benchmark::State& state) {
    arq::Field q = arq::Field::rationals();
    auto r = arq::sphere_dga(q, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto rep = arq::poincare_check(r);
        benchmark::DoNotOptimize(rep.left_perfect);
    }
}
BENCHMARK(BM_PoincareCheck)->Arg(3)->Arg(6);

arq::GradedKTModule scrambled_blocks(int d, int blocks, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> js(-10, 10), ms(0, 6), entries(-2, 2);
    arq::Field q = arq::Field::rationals();
    std::optional<arq::GradedKTModule> sum;
    for (int i = 0; i < blocks; ++i) {
        auto cyc = arq::make_cyclic(q, d, js(rng), ms(rng));
        sum = sum ? arq::direct_sum(*sum, cyc) : cyc;
    }
    std::map<int, arq::Matrix> basis, inverse;
    for (int g : sum->space().degrees()) {
        std::size_t n = static_cast<std::size_t>(sum->dim(g));
        arq::Matrix cand = arq::Matrix::zero(q, n, n);
        do {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    cand.at(a, b) = arq::Scalar::of_int(q, entries(rng));
        } while (arq::rank(cand) != n);
        inverse.emplace(g, *arq::solve(cand, arq::Matrix::identity(q, n)));
        basis.emplace(g, std::move(cand));
    }
    auto at = [&](const std::map<int, arq::Matrix>& table, int g) {
        auto it = table.find(g);
        return it != table.end() ? it->second
                                 : arq::Matrix::identity(q, static_cast<std::size_t>(sum->dim(g)));
    };
    std::map<int, arq::Matrix> t;
    for (int g : sum->space().degrees()) {
        arq::Matrix tw = at(basis, g - sum->step()) * sum->t_matrix(g) * at(inverse, g);
        if (!tw.is_zero()) t.emplace(g, std::move(tw));
    }
    return arq::GradedKTModule(q, d, sum->space(), t);
}

void BM_KtDecompose(benchmark::State& state) {
    auto m = scrambled_blocks(3, static_cast<int>(state.range(0)), 11);
    for (auto _ : state) {
        auto blocks = arq::decompose(m);
        benchmark::DoNotOptimize(blocks.entries);
    }
}
BENCHMARK(BM_KtDecompose)->Arg(8)->Arg(16)->Arg(32);

void BM_SphereQuiver(benchmark::State& state) {
    const int span = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto q = arq::build_quiver(4, -span, span, 6);
        auto parts = arq::components(q);
        auto dot = arq::to_dot(q);
        benchmark::DoNotOptimize(parts);
        benchmark::DoNotOptimize(dot);
    }
}
BENCHMARK(BM_SphereQuiver)->Arg(9)->Arg(18)->Arg(36);

}  // namespace

BENCHMARK_MAIN();
