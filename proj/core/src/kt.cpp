#include "arq/kt.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace arq {

namespace {

std::size_t usize(int n) { return static_cast<std::size_t>(n); }

// Composite of p consecutive T-matrices starting at the given degree, as a
// map M^degree -> M^{degree - p(d-1)}.
Matrix t_power(const GradedKTModule& m, int degree, int p) {
    Matrix cur = Matrix::identity(m.field(), usize(m.dim(degree)));
    for (int s = 0; s < p; ++s) cur = m.t_matrix(degree - s * m.step()) * cur;
    return cur;
}

Matrix rows_from(const Matrix& a, std::size_t start) {
    Matrix out = Matrix::zero(a.field(), a.rows() - start, a.cols());
    for (std::size_t i = start; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i - start, j) = a.at(i, j);
    return out;
}

}  // namespace

GradedKTModule::GradedKTModule(const Field& field, int d, GradedVectorSpace space,
                               std::map<int, Matrix> t_action,
                               std::optional<std::map<int, Matrix>> differential)
    : field_(field),
      d_(d),
      space_(std::move(space)),
      t_action_(std::move(t_action)),
      differential_(std::move(differential)) {
    if (d_ < 2) throw std::invalid_argument("kt module: sphere dimension must be at least 2");
    if (field_.characteristic() != 0)
        throw std::invalid_argument("kt module: characteristic zero required");
    for (const auto& [g, mat] : t_action_) {
        if (!(mat.field() == field_))
            throw std::invalid_argument("kt module: scalar field mismatch");
        if (mat.rows() != usize(dim(g - step())) || mat.cols() != usize(dim(g)))
            throw std::invalid_argument("kt module: t-action shape mismatch at degree " +
                                        std::to_string(g));
    }
    if (differential_) {
        for (const auto& [g, mat] : *differential_) {
            if (!(mat.field() == field_))
                throw std::invalid_argument("kt module: scalar field mismatch");
            if (mat.rows() != usize(dim(g + 1)) || mat.cols() != usize(dim(g)))
                throw std::invalid_argument("kt module: differential shape mismatch at degree " +
                                            std::to_string(g));
        }
    }
}

Matrix GradedKTModule::t_matrix(int degree) const {
    auto it = t_action_.find(degree);
    if (it != t_action_.end()) return it->second;
    return Matrix::zero(field_, usize(dim(degree - step())), usize(dim(degree)));
}

Matrix GradedKTModule::differential(int degree) const {
    if (differential_) {
        auto it = differential_->find(degree);
        if (it != differential_->end()) return it->second;
    }
    return Matrix::zero(field_, usize(dim(degree + 1)), usize(dim(degree)));
}

ValidationReport validate_kt_module(const GradedKTModule& m) {
    ValidationReport rep;
    if (!m.has_differential()) return rep;
    for (int g : m.space().degrees()) {
        if (!(m.differential(g + 1) * m.differential(g)).is_zero())
            rep.violations.push_back("differential does not square to zero at degree " +
                                     std::to_string(g));
        Matrix lhs = m.differential(g - m.step()) * m.t_matrix(g);
        Matrix rhs = m.t_matrix(g + 1) * m.differential(g);
        if (lhs != rhs)
            rep.violations.push_back("t-action does not commute with the differential at degree " +
                                     std::to_string(g));
    }
    return rep;
}

GradedKTModule make_cyclic(const Field& field, int d, int j, int m) {
    if (d < 2) throw std::invalid_argument("make_cyclic: sphere dimension must be at least 2");
    if (m < 0) throw std::invalid_argument("make_cyclic: negative number of rungs");
    GradedVectorSpace space;
    for (int s = 0; s <= m; ++s) space.set_degree(-j - s * (d - 1), 1, "c");
    std::map<int, Matrix> t;
    for (int s = 0; s < m; ++s) t.emplace(-j - s * (d - 1), Matrix::identity(field, 1));
    return GradedKTModule(field, d, std::move(space), std::move(t));
}

GradedKTModule suspend(const GradedKTModule& m, int n) {
    GradedVectorSpace space;
    for (int g : m.space().degrees()) space.set_degree(g - n, m.space().labels(g));
    std::map<int, Matrix> t;
    for (const auto& [g, mat] : m.t_table()) t.emplace(g - n, mat);
    std::optional<std::map<int, Matrix>> diff;
    if (m.has_differential()) {
        std::map<int, Matrix> dd;
        for (const auto& [g, mat] : *m.differential_table())
            dd.emplace(g - n, n % 2 == 0 ? mat : -mat);
        diff = std::move(dd);
    }
    return GradedKTModule(m.field(), m.d(), std::move(space), std::move(t), std::move(diff));
}

GradedKTModule direct_sum(const GradedKTModule& a, const GradedKTModule& b) {
    if (!(a.field() == b.field()) || a.d() != b.d())
        throw std::invalid_argument("direct_sum: mismatched kt modules");
    const Field& f = a.field();
    std::set<int> degrees;
    for (int g : a.space().degrees()) degrees.insert(g);
    for (int g : b.space().degrees()) degrees.insert(g);
    GradedVectorSpace space;
    for (int g : degrees) space.set_degree(g, a.dim(g) + b.dim(g), "s");
    auto dim_at = [&](int g) { return a.dim(g) + b.dim(g); };
    std::map<int, Matrix> t;
    for (int g : degrees) {
        Matrix mt = Matrix::zero(f, usize(dim_at(g - a.step())), usize(dim_at(g)));
        paste(mt, 0, 0, a.t_matrix(g));
        paste(mt, usize(a.dim(g - a.step())), usize(a.dim(g)), b.t_matrix(g));
        if (!mt.is_zero()) t.emplace(g, std::move(mt));
    }
    std::optional<std::map<int, Matrix>> diff;
    if (a.has_differential() || b.has_differential()) {
        std::map<int, Matrix> dd;
        for (int g : degrees) {
            Matrix md = Matrix::zero(f, usize(dim_at(g + 1)), usize(dim_at(g)));
            paste(md, 0, 0, a.differential(g));
            paste(md, usize(a.dim(g + 1)), usize(a.dim(g)), b.differential(g));
            if (!md.is_zero()) dd.emplace(g, std::move(md));
        }
        diff = std::move(dd);
    }
    return GradedKTModule(f, a.d(), std::move(space), std::move(t), std::move(diff));
}

int BlockMultiset::multiplicity(int j, int m) const {
    auto it = entries.find({j, m});
    return it == entries.end() ? 0 : it->second;
}

int BlockMultiset::block_count() const {
    int n = 0;
    for (const auto& [label, c] : entries) n += c;
    return n;
}

BlockMultiset decompose(const GradedKTModule& m) {
    if (m.has_differential())
        for (const auto& [g, mat] : *m.differential_table())
            if (!mat.is_zero())
                throw std::invalid_argument(
                    "decompose: module carries a nonzero differential; apply kt_cohomology first");
    const Field& f = m.field();
    const int step = m.step();
    const std::vector<int> degs = m.space().degrees();

    // Rungs of already extracted chains, as columns per degree.
    std::map<int, Matrix> chosen;
    for (int g : degs) chosen.emplace(g, Matrix::zero(f, usize(m.dim(g)), 0));

    BlockMultiset out;
    while (true) {
        // Coordinates on the quotient by the chosen span: a complement basis
        // and the projection onto its coordinates.
        std::map<int, Matrix> comp, proj;
        std::size_t remaining = 0;
        for (int g : degs) {
            const Matrix& ch = chosen.at(g);
            Matrix id = Matrix::identity(f, ch.rows());
            RrefResult rr = rref(hstack(ch, id));
            std::vector<std::size_t> idx;
            for (std::size_t c : rr.pivot_cols)
                if (c >= ch.cols()) idx.push_back(c - ch.cols());
            Matrix cp = take_cols(id, idx);
            remaining += cp.cols();
            if (cp.cols() == 0) {
                proj.emplace(g, Matrix::zero(f, 0, ch.rows()));
                comp.emplace(g, std::move(cp));
                continue;
            }
            Matrix basis = hstack(ch, cp);
            auto inv = solve(basis, Matrix::identity(f, basis.rows()));
            if (!inv) throw std::logic_error("decompose: chosen rungs became dependent");
            proj.emplace(g, rows_from(*inv, ch.cols()));
            comp.emplace(g, std::move(cp));
        }
        if (remaining == 0) break;

        auto qdim = [&](int g) -> std::size_t {
            auto it = comp.find(g);
            return it == comp.end() ? 0 : it->second.cols();
        };
        auto tq = [&](int g) -> Matrix {
            if (qdim(g) == 0 || qdim(g - step) == 0)
                return Matrix::zero(f, qdim(g - step), qdim(g));
            return proj.at(g - step) * m.t_matrix(g) * comp.at(g);
        };

        // Longest chain still visible in the quotient, highest degree first.
        int best_g = 0, best_p = -1;
        Matrix best_pow = Matrix::zero(f, 0, 0);
        for (int g : degs) {
            if (qdim(g) == 0) continue;
            Matrix cur = Matrix::identity(f, qdim(g));
            int p = 0;
            while (true) {
                Matrix nxt = tq(g - p * step) * cur;
                if (nxt.is_zero()) break;
                cur = std::move(nxt);
                ++p;
            }
            if (p > best_p || (p == best_p && g > best_g)) {
                best_p = p;
                best_g = g;
                best_pow = std::move(cur);
            }
        }

        std::size_t col = 0;
        while (col < best_pow.cols() && best_pow.col(col).is_zero()) ++col;
        if (col == best_pow.cols()) throw std::logic_error("decompose: lost track of a chain");
        Matrix v = comp.at(best_g).col(col);

        // Correct the lift so the chain closes after best_p + 1 rungs.
        const int len = best_p + 1;
        Matrix tail = t_power(m, best_g, len);
        Matrix w = tail * v;
        if (!w.is_zero()) {
            auto y = solve(tail * chosen.at(best_g), w);
            if (!y) throw std::logic_error("decompose: chain correction failed");
            v = v - chosen.at(best_g) * *y;
            if (!(tail * v).is_zero()) throw std::logic_error("decompose: chain does not close");
        }

        Matrix rung = std::move(v);
        for (int s = 0; s < len; ++s) {
            if (rung.is_zero()) throw std::logic_error("decompose: degenerate chain");
            int g = best_g - s * step;
            chosen.at(g) = hstack(chosen.at(g), rung);
            if (s + 1 < len) rung = m.t_matrix(g) * rung;
        }
        out.entries[{-best_g, best_p}] += 1;
    }

    for (int g : degs) {
        const Matrix& ch = chosen.at(g);
        if (ch.cols() != ch.rows() || rank(ch) != ch.rows())
            throw std::logic_error("decompose: extracted rungs do not form a basis");
    }

    // The multiset is forced by the ranks of the restricted powers of T.
    auto rk = [&](int g, int p) -> int {
        if (m.dim(g) == 0) return 0;
        return static_cast<int>(rank(t_power(m, g, p)));
    };
    int span = degs.empty() ? 0 : (degs.back() - degs.front()) / step + 1;
    std::map<std::pair<int, int>, int> expected;
    for (int g : degs) {
        for (int mm = 0; mm <= span; ++mm) {
            int mu = rk(g, mm) - rk(g + step, mm + 1) - rk(g, mm + 1) + rk(g + step, mm + 2);
            if (mu < 0) throw std::logic_error("decompose: rank invariants are inconsistent");
            if (mu > 0) expected[{-g, mm}] = mu;
        }
    }
    if (expected != out.entries)
        throw std::logic_error("decompose: extracted blocks disagree with the rank invariants");
    return out;
}

GradedKTModule kt_cohomology(const GradedKTModule& m) {
    const Field& f = m.field();
    std::map<int, Matrix> image, reps;
    GradedVectorSpace hspace;
    for (int g : m.space().degrees()) {
        Matrix dprev = m.differential(g - 1);
        Matrix b = take_cols(dprev, rref(dprev).pivot_cols);
        Matrix z = kernel_basis(m.differential(g));
        RrefResult ext = rref(hstack(b, z));
        std::vector<std::size_t> idx;
        for (std::size_t c : ext.pivot_cols)
            if (c >= b.cols()) idx.push_back(c - b.cols());
        Matrix r = take_cols(z, idx);
        if (r.cols() > 0) hspace.set_degree(g, static_cast<int>(r.cols()), "h");
        image.emplace(g, std::move(b));
        reps.emplace(g, std::move(r));
    }
    std::map<int, Matrix> taction;
    for (int g : hspace.degrees()) {
        int h = g - m.step();
        Matrix tv = m.t_matrix(g) * reps.at(g);
        if (tv.rows() == 0) continue;
        auto bit = image.find(h);
        Matrix basis = bit == image.end() ? Matrix::zero(f, tv.rows(), 0)
                                          : hstack(bit->second, reps.at(h));
        if (basis.cols() == 0) {
            if (!tv.is_zero()) throw std::logic_error("kt_cohomology: action does not descend");
            continue;
        }
        auto sol = solve(basis, tv);
        if (!sol) throw std::logic_error("kt_cohomology: action does not descend");
        Matrix coords = rows_from(*sol, bit->second.cols());
        if (coords.rows() > 0 && !coords.is_zero()) taction.emplace(g, std::move(coords));
    }
    return GradedKTModule(f, m.d(), std::move(hspace), std::move(taction));
}

GradedKTModule make_sphere_resolution(const Field& field, int d, int lo, int hi) {
    if (d < 2)
        throw std::invalid_argument("make_sphere_resolution: sphere dimension must be at least 2");
    if (lo > -d || hi < 0)
        throw std::invalid_argument(
            "make_sphere_resolution: window must contain degrees -d through 0");
    const int step = d - 1;
    // Cutting the free tails below lo is a quotient by a DG submodule; when
    // lo lands on the generator ladder the rung at lo goes with it, which is
    // exactly what keeps the cohomology free of edge classes.
    const bool kill_bottom = (-lo) % step == 0;
    auto e0_at = [&](int g) {
        if (g > 0 || g < lo || (-g) % step != 0) return false;
        return !(kill_bottom && g == lo);
    };
    auto e1_at = [&](int g) { return g <= -d && g >= lo && (-(g + d)) % step == 0; };
    auto dim_at = [&](int g) { return (e0_at(g) ? 1 : 0) + (e1_at(g) ? 1 : 0); };

    GradedVectorSpace space;
    std::map<int, Matrix> t, diff;
    for (int g = lo; g <= 0; ++g) {
        std::vector<std::string> labels;
        if (e0_at(g)) labels.push_back("e0t" + std::to_string((-g) / step));
        if (e1_at(g)) labels.push_back("e1t" + std::to_string((-(g + d)) / step));
        if (!labels.empty()) space.set_degree(g, labels);
    }
    for (int g = lo; g <= 0; ++g) {
        if (dim_at(g) == 0) continue;
        if (dim_at(g - step) > 0) {
            Matrix mt = Matrix::zero(field, usize(dim_at(g - step)), usize(dim_at(g)));
            bool any = false;
            if (e0_at(g) && e0_at(g - step)) {
                mt.at(0, 0) = Scalar::one(field);
                any = true;
            }
            if (e1_at(g) && e1_at(g - step)) {
                mt.at(e0_at(g - step) ? 1 : 0, e0_at(g) ? 1 : 0) = Scalar::one(field);
                any = true;
            }
            if (any) t.emplace(g, std::move(mt));
        }
        if (e1_at(g) && e0_at(g + 1)) {
            Matrix md = Matrix::zero(field, usize(dim_at(g + 1)), usize(dim_at(g)));
            md.at(0, e0_at(g) ? 1 : 0) = Scalar::one(field);
            diff.emplace(g, std::move(md));
        }
    }
    return GradedKTModule(field, d, std::move(space), std::move(t), std::move(diff));
}

namespace {

// Exact per-degree data of the complex the Hom functor is applied to.
struct DegreewiseData {
    std::function<int(int)> dim;
    std::function<Matrix(int)> diff;  // degree g -> matrix dim(g+1) x dim(g)
    std::function<Matrix(int)> tmap;  // degree g -> matrix dim(g-(d-1)) x dim(g)
};

// Cohomology of Hom_{k[T]}(F, X) where F is free on e0 in degree 0 and e1 in
// degree -d with de1 = e0 T.  A degree-n map is the pair (f(e0), f(e1)) in
// X^n + X^{n-d}, and the differential sends it to
// (dX f(e0), dX f(e1) - (-1)^n f(e0) T).
std::map<int, int> resolution_hom_cohomology(const Field& f, int d, const DegreewiseData& x,
                                             int lo, int hi) {
    auto dmat = [&](int n) {
        std::size_t r0 = usize(x.dim(n + 1)), c0 = usize(x.dim(n));
        Matrix out = Matrix::zero(f, r0 + usize(x.dim(n + 1 - d)), c0 + usize(x.dim(n - d)));
        paste(out, 0, 0, x.diff(n));
        paste(out, r0, c0, x.diff(n - d));
        Matrix t = x.tmap(n);
        if (n % 2 == 0) t = -t;
        paste(out, r0, 0, t);
        return out;
    };
    std::map<int, Matrix> cache;
    auto get = [&](int n) -> const Matrix& {
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, dmat(n)).first;
        return it->second;
    };
    std::map<int, int> dims;
    for (int i = lo; i <= hi; ++i) {
        if (!(get(i) * get(i - 1)).is_zero() || !(get(i + 1) * get(i)).is_zero())
            throw std::logic_error("hom complex differential does not square to zero");
        int size = x.dim(i) + x.dim(i - d);
        int h = size - static_cast<int>(rank(get(i))) - static_cast<int>(rank(get(i - 1)));
        if (h < 0) throw std::logic_error("hom complex rank accounting failed");
        if (h > 0) dims[i] = h;
    }
    return dims;
}

}  // namespace

std::map<int, int> rhom_over_kt(int d, const GradedKTModule& m, int lo, int hi) {
    if (d != m.d()) throw std::invalid_argument("rhom_over_kt: sphere dimension mismatch");
    ValidationReport check = validate_kt_module(m);
    if (!check.ok()) throw std::invalid_argument("rhom_over_kt: " + check.violations.front());
    if (lo > hi) return {};
    DegreewiseData x{[&](int g) { return m.dim(g); },
                     [&](int g) { return m.differential(g); },
                     [&](int g) { return m.t_matrix(g); }};
    return resolution_hom_cohomology(m.field(), d, x, lo, hi);
}

std::map<int, int> endo_dga_cohomology(const Field& field, int d, int lo, int hi) {
    if (d < 2)
        throw std::invalid_argument("endo_dga_cohomology: sphere dimension must be at least 2");
    if (field.characteristic() != 0)
        throw std::invalid_argument("endo_dga_cohomology: characteristic zero required");
    if (lo > hi) return {};
    const int step = d - 1;
    auto e0 = [step](int g) { return g <= 0 && (-g) % step == 0; };
    auto e1 = [step, d](int g) { return g <= -d && (-(g + d)) % step == 0; };
    auto fdim = [&](int g) { return (e0(g) ? 1 : 0) + (e1(g) ? 1 : 0); };
    auto fdiff = [&](int g) {
        Matrix out = Matrix::zero(field, usize(fdim(g + 1)), usize(fdim(g)));
        if (e1(g)) out.at(0, e0(g) ? 1 : 0) = Scalar::one(field);
        return out;
    };
    auto ftmap = [&](int g) {
        Matrix out = Matrix::zero(field, usize(fdim(g - step)), usize(fdim(g)));
        if (e0(g)) out.at(0, 0) = Scalar::one(field);
        if (e1(g)) out.at(e0(g - step) ? 1 : 0, e0(g) ? 1 : 0) = Scalar::one(field);
        return out;
    };
    DegreewiseData x{fdim, fdiff, ftmap};
    return resolution_hom_cohomology(field, d, x, lo, hi);
}

std::map<int, int> indec_cohomology(const SphereIndecLabel& label) {
    if (label.d < 2)
        throw std::invalid_argument("indec_cohomology: sphere dimension must be at least 2");
    if (label.m < 0) throw std::invalid_argument("indec_cohomology: negative block length");
    std::map<int, int> dims;
    dims[-label.m * (label.d - 1) - label.j] += 1;
    dims[label.d - label.j] += 1;
    return dims;
}

ARTriangleLabel sphere_ar_triangle(const SphereIndecLabel& right) {
    if (right.d < 2)
        throw std::invalid_argument("sphere_ar_triangle: sphere dimension must be at least 2");
    if (right.m < 0) throw std::invalid_argument("sphere_ar_triangle: negative block length");
    ARTriangleLabel tri;
    tri.right = right;
    tri.left = {right.d, right.j + right.d - 1, right.m};
    if (right.m == 0)
        tri.middle = {{right.d, right.j, 1}};
    else
        tri.middle = {{right.d, right.j + right.d - 1, right.m - 1},
                      {right.d, right.j, right.m + 1}};
    return tri;
}

ValidationReport verify_ar_triangle(const ARTriangleLabel& tri) {
    ValidationReport rep;
    const int d = tri.right.d;
    std::vector<SphereIndecLabel> all = {tri.left, tri.right};
    all.insert(all.end(), tri.middle.begin(), tri.middle.end());
    if (d < 2) rep.violations.push_back("sphere dimension must be at least 2");
    for (const auto& l : all)
        if (l.d != d) {
            rep.violations.push_back("labels disagree on the sphere dimension");
            break;
        }
    for (const auto& l : all)
        if (l.m < 0) {
            rep.violations.push_back("negative block length");
            break;
        }
    if (!rep.ok()) return rep;

    if (tri.middle.empty() || tri.middle.size() > 2)
        rep.violations.push_back("middle must list one or two summands");
    if (tri.left.j != tri.right.j + d - 1 || tri.left.m != tri.right.m)
        rep.violations.push_back("left term is not the translate of the right term");

    std::map<int, int> via_middle, via_ends;
    for (const auto& l : tri.middle)
        for (const auto& [deg, n] : indec_cohomology(l)) via_middle[deg] += n;
    for (const auto& [deg, n] : indec_cohomology(tri.left)) via_ends[deg] += n;
    for (const auto& [deg, n] : indec_cohomology(tri.right)) via_ends[deg] += n;
    if (tri.right.m == 0) {
        for (int deg : {-tri.right.j, 1 - tri.right.j})
            if (--via_ends[deg] < 0)
                rep.violations.push_back("no class available for the connecting map at degree " +
                                         std::to_string(deg));
    }
    std::set<int> degrees;
    for (const auto& [deg, n] : via_middle)
        if (n != 0) degrees.insert(deg);
    for (const auto& [deg, n] : via_ends)
        if (n != 0) degrees.insert(deg);
    for (int deg : degrees) {
        auto ait = via_middle.find(deg);
        auto bit = via_ends.find(deg);
        int a = ait == via_middle.end() ? 0 : ait->second;
        int b = bit == via_ends.end() ? 0 : bit->second;
        if (a != b) {
            rep.violations.push_back("middle cohomology mismatch at degree " + std::to_string(deg) +
                                     ": middle labels give " + std::to_string(a) +
                                     ", outer terms give " + std::to_string(b));
            break;
        }
    }
    return rep;
}

}  // namespace arq
