#include "arq/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "arq/homology.hpp"

namespace arq {

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

Matrix basis_column(const Field& f, int dim, int index) {
    Matrix e = Matrix::zero(f, static_cast<std::size_t>(dim), 1);
    e.at(static_cast<std::size_t>(index), 0) = Scalar::one(f);
    return e;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out = Matrix::zero(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    paste(out, 0, 0, a);
    paste(out, a.rows(), a.cols(), b);
    return out;
}

Matrix take_rows(const Matrix& a, std::size_t r0, std::size_t count) {
    Matrix out = Matrix::zero(a.field(), count, a.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(r0 + i, j);
    return out;
}

// Columns of the identity extending the column space of `base` to the
// full space.
Matrix complement_columns(const Matrix& base) {
    Matrix id = Matrix::identity(base.field(), base.rows());
    RrefResult r = rref(hstack(base, id));
    std::vector<std::size_t> picked;
    for (std::size_t p : r.pivot_cols)
        if (p >= base.cols()) picked.push_back(p - base.cols());
    return take_cols(id, picked);
}

void require_compatible(const DGModule& a, const DGModule& b, const char* what) {
    if (a.algebra_ptr() != b.algebra_ptr())
        throw std::invalid_argument(std::string(what) + ": modules over different algebras");
    if (a.side() != b.side())
        throw std::invalid_argument(std::string(what) + ": modules of different sides");
}

}  // namespace

DGModule suspend(const DGModule& m, int n) {
    const Field& f = m.algebra().field();
    GradedVectorSpace space;
    for (int deg : m.space().degrees()) space.set_degree(deg - n, m.space().labels(deg));

    std::map<int, Matrix> diff;
    Scalar dsign = Scalar::of_int(f, parity(n) == 0 ? 1 : -1);
    for (const auto& [deg, mat] : m.differential_table()) diff.emplace(deg - n, mat.scaled(dsign));

    BilinearTable action;
    for (const auto& [key, mats] : m.action()) {
        auto [p, q] = key;
        Scalar twist = Scalar::one(f);
        if (m.side() == Side::left && parity(n * p) == 1) twist = Scalar::of_int(f, -1);
        std::vector<Matrix> out;
        out.reserve(mats.size());
        for (const Matrix& a : mats) out.push_back(a.scaled(twist));
        action[{p, q - n}] = std::move(out);
    }
    return DGModule(m.algebra_ptr(), m.side(), std::move(space), std::move(action), std::move(diff));
}

ChainMap suspend_map(const ChainMap& f, int n) {
    ModulePtr dom = share(suspend(f.domain(), n));
    ModulePtr cod = share(suspend(f.codomain(), n));
    std::map<int, Matrix> mats;
    for (int deg : dom->space().degrees()) {
        Matrix ff = f.matrix(deg + n);
        if (!ff.is_zero()) mats.emplace(deg, std::move(ff));
    }
    return ChainMap(std::move(dom), std::move(cod), std::move(mats));
}

DGModule dualize(const DGModule& m) {
    const Field& f = m.algebra().field();
    Side dual_side = m.side() == Side::left ? Side::right : Side::left;

    GradedVectorSpace space;
    for (int deg : m.space().degrees()) {
        std::vector<std::string> labels;
        for (const std::string& l : m.space().labels(deg)) labels.push_back(l + "*");
        space.set_degree(-deg, labels);
    }

    std::map<int, Matrix> diff;
    for (const auto& [deg, mat] : m.differential_table()) {
        // mat is the differential from degree deg, landing at -deg - 1 in
        // the dual.
        int i = -deg - 1;
        Scalar sign = Scalar::of_int(f, parity(i) == 0 ? -1 : 1);
        diff.emplace(i, mat.transpose().scaled(sign));
    }

    BilinearTable action;
    for (int p : m.algebra().space().degrees()) {
        int dp = m.algebra().dim(p);
        for (int q : m.space().degrees()) {
            int t = -q - p;  // dual source degree whose action reads off degree q of m
            if (m.dim(q + p) == 0) continue;
            std::vector<Matrix> mats;
            bool any = false;
            for (int a = 0; a < dp; ++a) {
                Matrix acted = m.action_matrix(p, basis_column(f, dp, a), q);
                Matrix dualized = acted.transpose();
                if (dual_side == Side::left && parity(p) == 1) dualized = dualized.scaled(Scalar::of_int(f, -1));
                if (!dualized.is_zero()) any = true;
                mats.push_back(std::move(dualized));
            }
            if (any) action[{p, t}] = std::move(mats);
        }
    }
    return DGModule(m.algebra_ptr(), dual_side, std::move(space), std::move(action), std::move(diff));
}

DGModule direct_sum(const DGModule& a, const DGModule& b) {
    require_compatible(a, b, "direct_sum");
    const Field& f = a.algebra().field();

    GradedVectorSpace space;
    std::vector<int> degrees;
    for (int d : a.space().degrees()) degrees.push_back(d);
    for (int d : b.space().degrees())
        if (a.dim(d) == 0) degrees.push_back(d);
    for (int d : degrees) space.set_degree(d, a.dim(d) + b.dim(d), "d");

    std::map<int, Matrix> diff;
    for (int d : degrees) {
        Matrix bd = block_diag(a.differential(d), b.differential(d));
        if (!bd.is_zero()) diff.emplace(d, std::move(bd));
    }

    BilinearTable action;
    for (int p : a.algebra().space().degrees()) {
        int dp = a.algebra().dim(p);
        for (int q : degrees) {
            if (a.dim(q + p) + b.dim(q + p) == 0) continue;
            std::vector<Matrix> mats;
            bool any = false;
            for (int i = 0; i < dp; ++i) {
                Matrix e = basis_column(f, dp, i);
                Matrix bd = block_diag(a.action_matrix(p, e, q), b.action_matrix(p, e, q));
                if (!bd.is_zero()) any = true;
                mats.push_back(std::move(bd));
            }
            if (any) action[{p, q}] = std::move(mats);
        }
    }
    return DGModule(a.algebra_ptr(), a.side(), std::move(space), std::move(action), std::move(diff));
}

TruncationResult truncate_below(const ModulePtr& m, std::optional<int> expect) {
    const Field& f = m->algebra().field();
    Cohomology h = cohomology(*m);
    if (h.zero()) throw std::invalid_argument("truncate_below: acyclic input");
    int u = *h.inf();
    if (expect && *expect != u)
        throw std::invalid_argument("truncate_below: expected bound " + std::to_string(*expect) +
                                    " but inf H is " + std::to_string(u));

    Matrix cycles = kernel_basis(m->differential(u));
    Matrix reps = h.representatives(u);
    Matrix transversal = complement_columns(cycles);
    Matrix frame = hstack(reps, transversal);  // basis of the degree-u part

    GradedVectorSpace space;
    for (int deg : m->space().degrees()) {
        if (deg < u) continue;
        if (deg == u)
            space.set_degree(deg, static_cast<int>(frame.cols()), "t");
        else
            space.set_degree(deg, m->space().labels(deg));
    }

    std::map<int, Matrix> diff;
    for (int deg : space.degrees()) {
        Matrix d = m->differential(deg);
        if (deg == u) d = d * frame;
        if (!d.is_zero()) diff.emplace(deg, std::move(d));
    }

    BilinearTable action;
    for (const auto& [key, mats] : m->action()) {
        auto [p, q] = key;
        if (q < u) continue;
        std::vector<Matrix> out;
        bool any = false;
        for (const Matrix& a : mats) {
            Matrix mat = a;
            if (q == u) mat = mat * frame;
            if (p + q == u) {
                auto x = solve(frame, mat);
                if (!x) throw std::logic_error("truncate_below: action left the submodule");
                mat = *x;
            }
            if (!mat.is_zero()) any = true;
            out.push_back(std::move(mat));
        }
        if (any) action[key] = std::move(out);
    }

    ModulePtr sub =
        share(DGModule(m->algebra_ptr(), m->side(), std::move(space), std::move(action), std::move(diff)));
    std::map<int, Matrix> incl;
    for (int deg : sub->space().degrees()) incl.emplace(deg, deg == u ? frame : Matrix::identity(f, sub->dim(deg)));
    ChainMap map(sub, m, std::move(incl));
    return TruncationResult{sub, std::move(map)};
}

TruncationResult truncate_above(const ModulePtr& m, std::optional<int> expect) {
    const Field& f = m->algebra().field();
    Cohomology h = cohomology(*m);
    if (h.zero()) throw std::invalid_argument("truncate_above: acyclic input");
    int v = *h.sup();
    if (expect && *expect != v)
        throw std::invalid_argument("truncate_above: expected bound " + std::to_string(*expect) +
                                    " but sup H is " + std::to_string(v));

    Matrix cycles = kernel_basis(m->differential(v));
    Matrix transversal = complement_columns(cycles);
    Matrix frame = hstack(cycles, transversal);
    auto inverse = solve(frame, Matrix::identity(f, frame.rows()));
    if (!inverse) throw std::logic_error("truncate_above: singular change of basis");
    Matrix projection = take_rows(*inverse, 0, cycles.cols());  // kills the transversal

    GradedVectorSpace space;
    for (int deg : m->space().degrees()) {
        if (deg > v) continue;
        if (deg == v)
            space.set_degree(deg, static_cast<int>(cycles.cols()), "t");
        else
            space.set_degree(deg, m->space().labels(deg));
    }

    std::map<int, Matrix> diff;
    for (int deg : space.degrees()) {
        if (deg >= v) continue;
        Matrix d = m->differential(deg);
        if (deg + 1 == v) d = projection * d;
        if (!d.is_zero()) diff.emplace(deg, std::move(d));
    }

    BilinearTable action;
    for (const auto& [key, mats] : m->action()) {
        auto [p, q] = key;
        if (q > v || p + q > v) continue;
        std::vector<Matrix> out;
        bool any = false;
        for (const Matrix& a : mats) {
            Matrix mat = a;
            if (q == v) mat = mat * cycles;
            if (p + q == v) mat = projection * mat;
            if (!mat.is_zero()) any = true;
            out.push_back(std::move(mat));
        }
        if (any) action[key] = std::move(out);
    }

    ModulePtr quot =
        share(DGModule(m->algebra_ptr(), m->side(), std::move(space), std::move(action), std::move(diff)));
    std::map<int, Matrix> proj;
    for (int deg : quot->space().degrees()) proj.emplace(deg, deg == v ? projection : Matrix::identity(f, quot->dim(deg)));
    ChainMap map(m, quot, std::move(proj));
    return TruncationResult{quot, std::move(map)};
}

Triangle mapping_cone(const ChainMap& f) {
    if (!f.is_chain_map()) throw std::invalid_argument("mapping_cone: map does not commute with differentials");
    if (!f.is_module_map()) throw std::invalid_argument("mapping_cone: map does not commute with the action");

    const DGModule& m = f.domain();
    const DGModule& n = f.codomain();
    const Field& field = m.algebra().field();
    Scalar minus = Scalar::of_int(field, -1);

    std::vector<int> degrees;
    {
        std::set<int> degs;
        for (int d : m.space().degrees()) degs.insert(d - 1);
        for (int d : n.space().degrees()) degs.insert(d);
        degrees.assign(degs.begin(), degs.end());
    }

    GradedVectorSpace space;
    for (int d : degrees) space.set_degree(d, m.dim(d + 1) + n.dim(d), "c");

    auto mdim = [&](int d) { return static_cast<std::size_t>(m.dim(d + 1)); };
    auto ndim = [&](int d) { return static_cast<std::size_t>(n.dim(d)); };

    std::map<int, Matrix> diff;
    for (int d : degrees) {
        Matrix out = Matrix::zero(field, mdim(d + 1) + ndim(d + 1), mdim(d) + ndim(d));
        paste(out, 0, 0, m.differential(d + 1).scaled(minus));
        paste(out, mdim(d + 1), 0, f.matrix(d + 1));
        paste(out, mdim(d + 1), mdim(d), n.differential(d));
        if (!out.is_zero()) diff.emplace(d, std::move(out));
    }

    bool twist = m.side() == Side::left;
    BilinearTable action;
    for (int p : m.algebra().space().degrees()) {
        int dp = m.algebra().dim(p);
        for (int q : degrees) {
            if (space.dim(q) == 0 || space.dim(p + q) == 0) continue;
            std::vector<Matrix> mats;
            bool any = false;
            for (int a = 0; a < dp; ++a) {
                Matrix e = basis_column(field, dp, a);
                Matrix top = m.action_matrix(p, e, q + 1);
                if (twist && parity(p) == 1) top = top.scaled(minus);
                Matrix bd = block_diag(top, n.action_matrix(p, e, q));
                if (!bd.is_zero()) any = true;
                mats.push_back(std::move(bd));
            }
            if (any) action[{p, q}] = std::move(mats);
        }
    }

    ModulePtr cone =
        share(DGModule(m.algebra_ptr(), m.side(), std::move(space), std::move(action), std::move(diff)));
    ModulePtr sigma = share(suspend(m, 1));

    std::map<int, Matrix> incl, proj;
    for (int d : cone->space().degrees()) {
        std::size_t mt = mdim(d), nt = ndim(d);
        if (nt > 0) {
            Matrix in = Matrix::zero(field, mt + nt, nt);
            paste(in, mt, 0, Matrix::identity(field, nt));
            incl.emplace(d, std::move(in));
        }
        if (mt > 0) {
            Matrix pr = Matrix::zero(field, mt, mt + nt);
            paste(pr, 0, 0, Matrix::identity(field, mt));
            proj.emplace(d, std::move(pr));
        }
    }

    ChainMap inclusion(f.codomain_ptr(), cone, std::move(incl));
    ChainMap projection(cone, sigma, std::move(proj));
    return Triangle{f.domain_ptr(), f.codomain_ptr(), cone,          sigma,
                    f,              std::move(inclusion), std::move(projection)};
}

ValidationReport verify_triangle_les(const Triangle& t) {
    ValidationReport report;
    ChainMap sf = suspend_map(t.map, 1);

    Cohomology hm = cohomology(*t.source);
    Cohomology hn = cohomology(*t.target);
    Cohomology hc = cohomology(*t.cone);
    Cohomology hsm = cohomology(*t.suspended_source);
    Cohomology hsn = cohomology(sf.codomain());

    std::set<int> degs;
    for (const Cohomology* h : {&hm, &hn, &hc, &hsm, &hsn})
        for (int d : h->space().degrees()) degs.insert(d);

    auto complain = [&](int d, const std::string& what) {
        report.violations.push_back("degree " + std::to_string(d) + ": " + what);
    };

    for (int d : degs) {
        Matrix a = induced_map(t.map, hm, hn, d);
        Matrix b = induced_map(t.inclusion, hn, hc, d);
        Matrix c = induced_map(t.projection, hc, hsm, d);
        Matrix e = induced_map(sf, hsm, hsn, d);

        if (!(b * a).is_zero()) complain(d, "composite through the middle is nonzero");
        if (!(c * b).is_zero()) complain(d, "composite through the cone is nonzero");
        if (!(e * c).is_zero()) complain(d, "composite through the shift is nonzero");

        if (rank(a) + rank(b) != static_cast<std::size_t>(hn.dim(d)))
            complain(d, "not exact at the middle");
        if (rank(b) + rank(c) != static_cast<std::size_t>(hc.dim(d)))
            complain(d, "not exact at the cone");
        if (rank(c) + rank(e) != static_cast<std::size_t>(hsm.dim(d)))
            complain(d, "not exact at the shift");
    }
    return report;
}

}  // namespace arq
