#include "arq/homology.hpp"

#include <set>
#include <stdexcept>

#include "arq/models.hpp"

namespace arq {

namespace {

// Basis of the column space of a, as a selection of its columns.
Matrix column_space_basis(const Matrix& a) {
    return take_cols(a, rref(a).pivot_cols);
}

// Columns of `candidates` that extend span(base) to span(base, candidates).
std::vector<std::size_t> extending_columns(const Matrix& base, const Matrix& candidates) {
    RrefResult r = rref(hstack(base, candidates));
    std::vector<std::size_t> out;
    for (std::size_t p : r.pivot_cols)
        if (p >= base.cols()) out.push_back(p - base.cols());
    return out;
}

}  // namespace

Matrix Cohomology::representatives(int degree) const {
    auto it = reps_.find(degree);
    if (it != reps_.end()) return it->second;
    return Matrix::zero(field_, 0, 0);
}

Matrix Cohomology::class_coordinates(int degree, const Matrix& z) const {
    int h = space_.dim(degree);
    auto it = frames_.find(degree);
    if (it == frames_.end()) {
        if (!z.is_zero()) throw std::invalid_argument("class_coordinates: input is not a cycle");
        return Matrix::zero(field_, h, z.cols());
    }
    auto x = solve(it->second, z);
    if (!x) throw std::invalid_argument("class_coordinates: input is not a cycle");
    Matrix out(field_, h, z.cols());
    for (int i = 0; i < h; ++i)
        for (std::size_t j = 0; j < z.cols(); ++j) out.at(i, j) = x->at(i, j);
    return out;
}

Cohomology cohomology(const DGModule& m) {
    Cohomology out;
    const Field& f = m.algebra().field();
    out.field_ = f;
    for (int deg : m.space().degrees()) {
        Matrix cycles = kernel_basis(m.differential(deg));
        Matrix boundaries = column_space_basis(m.differential(deg - 1));
        std::vector<std::size_t> chosen = extending_columns(boundaries, cycles);
        Matrix reps = take_cols(cycles, chosen);
        Matrix frame = hstack(reps, boundaries);
        if (!chosen.empty()) {
            out.space_.set_degree(deg, static_cast<int>(chosen.size()), "h");
            out.reps_.emplace(deg, std::move(reps));
        }
        if (frame.cols() > 0) out.frames_.emplace(deg, std::move(frame));
    }
    return out;
}

Matrix induced_map(const ChainMap& f, const Cohomology& hdom, const Cohomology& hcod, int degree) {
    const Field& field = f.domain().algebra().field();
    int n = hdom.dim(degree);
    Matrix out(field, hcod.dim(degree), n);
    if (n == 0) return out;
    Matrix mapped = f.matrix(degree) * hdom.representatives(degree);
    return hcod.class_coordinates(degree, mapped);
}

bool is_quasi_iso(const ChainMap& f) {
    Cohomology hdom = cohomology(f.domain());
    Cohomology hcod = cohomology(f.codomain());
    std::set<int> degs;
    for (int d : hdom.space().degrees()) degs.insert(d);
    for (int d : hcod.space().degrees()) degs.insert(d);
    for (int d : degs) {
        if (hdom.dim(d) != hcod.dim(d)) return false;
        if (rank(induced_map(f, hdom, hcod, d)) != static_cast<std::size_t>(hdom.dim(d))) return false;
    }
    return true;
}

Matrix CohomologyRing::multiply(int p, const Matrix& a, int q, const Matrix& b) const {
    Matrix ra = h_.representatives(p) * a;
    Matrix rb = h_.representatives(q) * b;
    Matrix prod = algebra_->multiply(p, ra, q, rb);
    return h_.class_coordinates(p + q, prod);
}

CohomologyRing cohomology_ring(const DgaPtr& r) {
    CohomologyRing out;
    out.algebra_ = r;
    out.h_ = cohomology(*regular_module(r, Side::left));
    return out;
}

BilinearTable induced_hr_action(const CohomologyRing& hr, const DGModule& m, const Cohomology& hm) {
    BilinearTable out;
    for (int p : hr.h().space().degrees()) {
        Matrix reps_r = hr.h().representatives(p);
        for (int q : hm.space().degrees()) {
            if (hm.dim(p + q) == 0) continue;
            std::vector<Matrix> mats;
            for (int a = 0; a < hr.h().dim(p); ++a) {
                Matrix r_cycle = reps_r.col(a);
                Matrix acted = m.action_matrix(p, r_cycle, q) * hm.representatives(q);
                mats.push_back(hm.class_coordinates(p + q, acted));
            }
            bool all_zero = true;
            for (const Matrix& mm : mats)
                if (!mm.is_zero()) all_zero = false;
            if (!all_zero) out[{p, q}] = std::move(mats);
        }
    }
    return out;
}

}  // namespace arq
