#include "arq/dga.hpp"

#include <stdexcept>

namespace arq {

namespace {

int parity(int n) { return ((n % 2) + 2) % 2; }

// Drops zero matrices and entries over zero-dimensional components.
BilinearTable canonicalize_table(const GradedVectorSpace& source_p, const GradedVectorSpace& target,
                                 const GradedVectorSpace& source_q, BilinearTable table, const char* what) {
    BilinearTable out;
    for (auto& [key, mats] : table) {
        auto [p, q] = key;
        int dp = source_p.dim(p), dq = source_q.dim(q), dt = target.dim(p + q);
        if (static_cast<int>(mats.size()) != dp)
            throw std::invalid_argument(std::string(what) + ": entry (" + std::to_string(p) + "," +
                                        std::to_string(q) + ") has wrong basis count");
        bool all_zero = true;
        for (const Matrix& m : mats) {
            if (static_cast<int>(m.rows()) != dt || static_cast<int>(m.cols()) != dq)
                throw std::invalid_argument(std::string(what) + ": entry (" + std::to_string(p) + "," +
                                            std::to_string(q) + ") has wrong matrix shape");
            if (!m.is_zero()) all_zero = false;
        }
        if (dp == 0 || dq == 0 || dt == 0 || all_zero) continue;
        out.emplace(key, std::move(mats));
    }
    return out;
}

std::map<int, Matrix> canonicalize_differential(const GradedVectorSpace& space, std::map<int, Matrix> table,
                                                const char* what) {
    std::map<int, Matrix> out;
    for (auto& [deg, m] : table) {
        if (static_cast<int>(m.rows()) != space.dim(deg + 1) || static_cast<int>(m.cols()) != space.dim(deg))
            throw std::invalid_argument(std::string(what) + ": differential in degree " + std::to_string(deg) +
                                        " has wrong shape");
        if (m.is_zero()) continue;
        out.emplace(deg, std::move(m));
    }
    return out;
}

const FinDga& deref_algebra(const DgaPtr& p) {
    if (!p) throw std::invalid_argument("module: null algebra");
    return *p;
}

}  // namespace

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

FinDga::FinDga(const Field& field, GradedVectorSpace space, std::size_t unit_index, BilinearTable product,
               std::map<int, Matrix> differential)
    : field_(field),
      space_(std::move(space)),
      unit_index_(unit_index),
      product_(canonicalize_table(space_, space_, space_, std::move(product), "dga product")),
      differential_(canonicalize_differential(space_, std::move(differential), "dga")) {
    if (space_.dim(0) > 0 && unit_index_ >= static_cast<std::size_t>(space_.dim(0)))
        throw std::invalid_argument("dga: unit index out of range");
}

Matrix FinDga::differential(int degree) const {
    auto it = differential_.find(degree);
    if (it != differential_.end()) return it->second;
    return Matrix::zero(field_, space_.dim(degree + 1), space_.dim(degree));
}

bool FinDga::has_product_entry(int p, int q) const { return product_.count({p, q}) > 0; }

Matrix FinDga::unit_vector() const {
    Matrix v = Matrix::zero(field_, space_.dim(0), 1);
    if (space_.dim(0) > 0) v.at(unit_index_, 0) = Scalar::one(field_);
    return v;
}

Matrix FinDga::left_mult_matrix(int p, const Matrix& va, int q) const {
    Matrix out = Matrix::zero(field_, space_.dim(p + q), space_.dim(q));
    auto it = product_.find({p, q});
    if (it == product_.end()) return out;
    for (std::size_t a = 0; a < it->second.size(); ++a) {
        const Scalar& c = va.at(a, 0);
        if (!c.is_zero()) out = out + it->second[a].scaled(c);
    }
    return out;
}

Matrix FinDga::right_mult_matrix(int q, const Matrix& vb, int p) const {
    Matrix out = Matrix::zero(field_, space_.dim(p + q), space_.dim(p));
    auto it = product_.find({p, q});
    if (it == product_.end()) return out;
    for (std::size_t a = 0; a < it->second.size(); ++a) out.set_col(a, it->second[a] * vb);
    return out;
}

Matrix FinDga::multiply(int p, const Matrix& va, int q, const Matrix& vb) const {
    return left_mult_matrix(p, va, q) * vb;
}

Matrix FinDga::apply_differential(int degree, const Matrix& v) const { return differential(degree) * v; }

DGModule::DGModule(DgaPtr algebra, Side side, GradedVectorSpace space, BilinearTable action,
                   std::map<int, Matrix> differential)
    : algebra_(std::move(algebra)),
      side_(side),
      space_(std::move(space)),
      action_(canonicalize_table(deref_algebra(algebra_).space(), space_, space_, std::move(action),
                                 "module action")),
      differential_(canonicalize_differential(space_, std::move(differential), "module")) {}

Matrix DGModule::differential(int degree) const {
    auto it = differential_.find(degree);
    if (it != differential_.end()) return it->second;
    return Matrix::zero(algebra_->field(), space_.dim(degree + 1), space_.dim(degree));
}

Matrix DGModule::action_matrix(int p, const Matrix& va, int q) const {
    Matrix out = Matrix::zero(algebra_->field(), space_.dim(p + q), space_.dim(q));
    auto it = action_.find({p, q});
    if (it == action_.end()) return out;
    for (std::size_t a = 0; a < it->second.size(); ++a) {
        const Scalar& c = va.at(a, 0);
        if (!c.is_zero()) out = out + it->second[a].scaled(c);
    }
    return out;
}

Matrix DGModule::apply_differential(int degree, const Matrix& v) const { return differential(degree) * v; }

ModulePtr share(DGModule m) { return std::make_shared<const DGModule>(std::move(m)); }

ChainMap::ChainMap(ModulePtr domain, ModulePtr codomain, std::map<int, Matrix> matrices)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    if (!domain_ || !codomain_) throw std::invalid_argument("chain map: null module");
    if (domain_->algebra_ptr() != codomain_->algebra_ptr())
        throw std::invalid_argument("chain map: modules over different algebras");
    if (domain_->side() != codomain_->side()) throw std::invalid_argument("chain map: side mismatch");
    for (auto& [deg, m] : matrices) {
        if (static_cast<int>(m.rows()) != codomain_->dim(deg) || static_cast<int>(m.cols()) != domain_->dim(deg))
            throw std::invalid_argument("chain map: wrong shape in degree " + std::to_string(deg));
        if (m.is_zero()) continue;
        matrices_.emplace(deg, std::move(m));
    }
}

Matrix ChainMap::matrix(int degree) const {
    auto it = matrices_.find(degree);
    if (it != matrices_.end()) return it->second;
    return Matrix::zero(domain_->algebra().field(), codomain_->dim(degree), domain_->dim(degree));
}

bool ChainMap::is_chain_map() const {
    for (int deg : domain_->space().degrees())
        if (codomain_->differential(deg) * matrix(deg) != matrix(deg + 1) * domain_->differential(deg))
            return false;
    return true;
}

bool ChainMap::is_module_map() const {
    const FinDga& r = domain_->algebra();
    const Field& f = r.field();
    for (int p : r.space().degrees()) {
        for (int q : domain_->space().degrees()) {
            for (int a = 0; a < r.dim(p); ++a) {
                Matrix ea = Matrix::zero(f, r.dim(p), 1);
                ea.at(a, 0) = Scalar::one(f);
                if (matrix(p + q) * domain_->action_matrix(p, ea, q) !=
                    codomain_->action_matrix(p, ea, q) * matrix(q))
                    return false;
            }
        }
    }
    return true;
}

ValidationReport validate_dga(const FinDga& r) {
    ValidationReport rep;
    const Field& f = r.field();
    const GradedVectorSpace& sp = r.space();

    if (auto md = sp.min_degree(); md && *md < 0)
        rep.violations.push_back("cochain condition: nonzero component in negative degree " + std::to_string(*md));
    if (sp.dim(0) != 1)
        rep.violations.push_back("degree zero must be one-dimensional, got dimension " + std::to_string(sp.dim(0)));
    if (sp.dim(1) != 0)
        rep.violations.push_back("degree one must vanish, got dimension " + std::to_string(sp.dim(1)));

    for (int deg : sp.degrees())
        if (!(r.differential(deg + 1) * r.differential(deg)).is_zero())
            rep.violations.push_back("differential does not square to zero at degree " + std::to_string(deg));

    if (sp.dim(0) == 1) {
        Matrix one = r.unit_vector();
        if (!r.apply_differential(0, one).is_zero()) rep.violations.push_back("differential of the unit is nonzero");
        for (int q : sp.degrees()) {
            if (r.left_mult_matrix(0, one, q) != Matrix::identity(f, r.dim(q)))
                rep.violations.push_back("left unit law fails in degree " + std::to_string(q));
            if (r.right_mult_matrix(0, one, q) != Matrix::identity(f, r.dim(q)))
                rep.violations.push_back("right unit law fails in degree " + std::to_string(q));
        }
    }

    auto basis = [&](int p, int a) {
        Matrix e = Matrix::zero(f, r.dim(p), 1);
        e.at(a, 0) = Scalar::one(f);
        return e;
    };

    // Leibniz rule on basis pairs.
    for (int p : sp.degrees()) {
        for (int q : sp.degrees()) {
            for (int a = 0; a < r.dim(p); ++a) {
                Matrix ea = basis(p, a);
                Matrix da = r.apply_differential(p, ea);
                for (int b = 0; b < r.dim(q); ++b) {
                    Matrix eb = basis(q, b);
                    Matrix lhs = r.apply_differential(p + q, r.multiply(p, ea, q, eb));
                    Matrix rhs = r.multiply(p + 1, da, q, eb);
                    Matrix second = r.multiply(p, ea, q + 1, r.apply_differential(q, eb));
                    rhs = (parity(p) == 1) ? rhs - second : rhs + second;
                    if (lhs != rhs) {
                        rep.violations.push_back("Leibniz rule fails on basis pair (" + std::to_string(p) + ":" +
                                                 std::to_string(a) + ", " + std::to_string(q) + ":" +
                                                 std::to_string(b) + ")");
                    }
                }
            }
        }
    }

    // Associativity on basis triples.
    for (int p : sp.degrees())
        for (int q : sp.degrees())
            for (int t : sp.degrees())
                for (int a = 0; a < r.dim(p); ++a)
                    for (int b = 0; b < r.dim(q); ++b)
                        for (int c = 0; c < r.dim(t); ++c) {
                            Matrix ea = basis(p, a), eb = basis(q, b), ec = basis(t, c);
                            Matrix left = r.multiply(p + q, r.multiply(p, ea, q, eb), t, ec);
                            Matrix right = r.multiply(p, ea, q + t, r.multiply(q, eb, t, ec));
                            if (left != right)
                                rep.violations.push_back("associativity fails on basis triple (" + std::to_string(p) +
                                                         ":" + std::to_string(a) + ", " + std::to_string(q) + ":" +
                                                         std::to_string(b) + ", " + std::to_string(t) + ":" +
                                                         std::to_string(c) + ")");
                        }
    return rep;
}

ValidationReport validate_module(const DGModule& m) {
    ValidationReport rep;
    const FinDga& r = m.algebra();
    const Field& f = r.field();

    for (int deg : m.space().degrees())
        if (!(m.differential(deg + 1) * m.differential(deg)).is_zero())
            rep.violations.push_back("module differential does not square to zero at degree " + std::to_string(deg));

    if (r.dim(0) == 1) {
        Matrix one = r.unit_vector();
        for (int q : m.space().degrees())
            if (m.action_matrix(0, one, q) != Matrix::identity(f, m.dim(q)))
                rep.violations.push_back("unit does not act as identity in degree " + std::to_string(q));
    }

    auto basis = [&](int p, int a) {
        Matrix e = Matrix::zero(f, r.dim(p), 1);
        e.at(a, 0) = Scalar::one(f);
        return e;
    };

    // Associativity of the action.
    for (int p : r.space().degrees())
        for (int q : r.space().degrees())
            for (int t : m.space().degrees())
                for (int a = 0; a < r.dim(p); ++a)
                    for (int b = 0; b < r.dim(q); ++b) {
                        Matrix ea = basis(p, a), eb = basis(q, b);
                        Matrix prod = r.multiply(p, ea, q, eb);
                        Matrix lhs = m.action_matrix(p + q, prod, t);
                        Matrix rhs = (m.side() == Side::left)
                                         ? m.action_matrix(p, ea, q + t) * m.action_matrix(q, eb, t)
                                         : m.action_matrix(q, eb, p + t) * m.action_matrix(p, ea, t);
                        if (lhs != rhs)
                            rep.violations.push_back("action associativity fails on (" + std::to_string(p) + ":" +
                                                     std::to_string(a) + ", " + std::to_string(q) + ":" +
                                                     std::to_string(b) + ") at module degree " + std::to_string(t));
                    }

    // Leibniz rule for the action.
    for (int p : r.space().degrees()) {
        for (int t : m.space().degrees()) {
            for (int a = 0; a < r.dim(p); ++a) {
                Matrix ea = basis(p, a);
                Matrix da = r.apply_differential(p, ea);
                Matrix lhs = m.differential(p + t) * m.action_matrix(p, ea, t);
                Matrix rhs(f, 0, 0);
                if (m.side() == Side::left) {
                    rhs = m.action_matrix(p + 1, da, t);
                    Matrix second = m.action_matrix(p, ea, t + 1) * m.differential(t);
                    rhs = (parity(p) == 1) ? rhs - second : rhs + second;
                } else {
                    rhs = m.action_matrix(p, ea, t + 1) * m.differential(t);
                    Matrix second = m.action_matrix(p + 1, da, t);
                    rhs = (parity(t) == 1) ? rhs - second : rhs + second;
                }
                if (lhs != rhs)
                    rep.violations.push_back("action Leibniz rule fails for algebra basis " + std::to_string(p) + ":" +
                                             std::to_string(a) + " at module degree " + std::to_string(t));
            }
        }
    }
    return rep;
}

bool same_presentation(const DGModule& a, const DGModule& b) {
    if (a.side() != b.side()) return false;
    if (a.space().dims() != b.space().dims()) return false;
    if (a.algebra().space().dims() != b.algebra().space().dims()) return false;
    const Field& f = a.algebra().field();
    if (!(f == b.algebra().field())) return false;
    for (int deg : a.space().degrees())
        if (a.differential(deg) != b.differential(deg)) return false;
    for (int p : a.algebra().space().degrees())
        for (int q : a.space().degrees())
            for (int i = 0; i < a.algebra().dim(p); ++i) {
                Matrix e = Matrix::zero(f, a.algebra().dim(p), 1);
                e.at(i, 0) = Scalar::one(f);
                if (a.action_matrix(p, e, q) != b.action_matrix(p, e, q)) return false;
            }
    return true;
}

}  // namespace arq
