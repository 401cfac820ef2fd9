#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "arq/constructions.hpp"
#include "arq/homology.hpp"
#include "arq/models.hpp"

namespace arqtest {

using namespace arq;

struct Rng {
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    std::mt19937_64 gen;
};

inline std::map<int, int> h_dims(const DGModule& m) { return cohomology(m).space().dims(); }

inline Matrix basis_column(const Field& f, int dim, int index) {
    Matrix e = Matrix::zero(f, static_cast<std::size_t>(dim), 1);
    e.at(static_cast<std::size_t>(index), 0) = Scalar::one(f);
    return e;
}

inline Matrix random_cycle(const DGModule& m, int degree, Rng& rng) {
    Matrix z = kernel_basis(m.differential(degree));
    const Field& f = m.algebra().field();
    Matrix coeff = Matrix::zero(f, z.cols(), 1);
    for (std::size_t i = 0; i < z.cols(); ++i) coeff.at(i, 0) = Scalar::of_int(f, rng.pick(-2, 2));
    return z * coeff;
}

// Strict map out of the n-fold shift of the free rank-one module, sending
// the generator to the given cycle in degree -n of m.
inline ChainMap map_from_free(const ModulePtr& m, int n, const Matrix& cycle) {
    const DgaPtr& r = m->algebra_ptr();
    const Field& f = r->field();
    ModulePtr dom = share(suspend(*regular_module(r, m->side()), n));
    std::map<int, Matrix> mats;
    for (int i : dom->space().degrees()) {
        int p = i + n;
        int dp = r->dim(p);
        if (m->dim(i) == 0) continue;
        Matrix g = Matrix::zero(f, static_cast<std::size_t>(m->dim(i)), static_cast<std::size_t>(dp));
        for (int a = 0; a < dp; ++a) {
            Matrix col = m->action_matrix(p, basis_column(f, dp, a), -n) * cycle;
            if (m->side() == Side::left && (((n * p) % 2) + 2) % 2 == 1)
                col = col.scaled(Scalar::of_int(f, -1));
            g.set_col(static_cast<std::size_t>(a), col);
        }
        if (!g.is_zero()) mats.emplace(i, std::move(g));
    }
    return ChainMap(dom, m, std::move(mats));
}

// Iterated mapping cones over random maps from shifted free modules.
inline ModulePtr random_module(const DgaPtr& r, Side side, Rng& rng, int steps) {
    ModulePtr m = rng.pick(0, 1) == 0 ? regular_module(r, side) : augmentation_module(r, side);
    int shift = rng.pick(-2, 2);
    if (shift != 0) m = share(suspend(*m, shift));
    for (int s = 0; s < steps; ++s) {
        std::vector<int> candidates;
        for (int i : m->space().degrees())
            if (kernel_basis(m->differential(i)).cols() > 0) candidates.push_back(i);
        if (candidates.empty()) break;
        int i = candidates[static_cast<std::size_t>(rng.pick(0, static_cast<int>(candidates.size()) - 1))];
        Matrix cycle = random_cycle(*m, i, rng);
        m = mapping_cone(map_from_free(m, -i, cycle)).cone;
    }
    return m;
}

inline ModulePtr random_module_with_cohomology(const DgaPtr& r, Side side, Rng& rng, int steps) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ModulePtr m = random_module(r, side, rng, steps);
        if (!cohomology(*m).zero()) return m;
    }
    throw std::logic_error("random_module_with_cohomology: exhausted attempts");
}

}  // namespace arqtest
