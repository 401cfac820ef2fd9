#include "arq/resolution.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "arq/constructions.hpp"
#include "arq/homology.hpp"
#include "arq/models.hpp"

namespace arq {

namespace {

Matrix basis_column(const Field& f, std::size_t n, std::size_t a) {
    Matrix v = Matrix::zero(f, n, 1);
    v.at(a, 0) = Scalar::one(f);
    return v;
}

bool odd(int n) { return n % 2 != 0; }

constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

// Row offsets of the generator blocks inside degree i of the semi-free
// module on the first `count` generators.
std::vector<std::size_t> block_offsets(const FinDga& r, const std::vector<int>& deg,
                                       std::size_t count, int i, std::size_t& total) {
    std::vector<std::size_t> offs(count, kAbsent);
    std::size_t at = 0;
    for (std::size_t t = 0; t < count; ++t) {
        int dp = r.dim(i - deg[t]);
        if (dp > 0) {
            offs[t] = at;
            at += static_cast<std::size_t>(dp);
        }
    }
    total = at;
    return offs;
}

// A zero differential row for a new generator of degree `newdeg`, one
// coefficient slot per existing generator.
std::vector<Matrix> zero_rho_row(const FinDga& r, const std::vector<int>& deg, int newdeg) {
    std::vector<Matrix> row;
    row.reserve(deg.size());
    for (int ds : deg) {
        int c = newdeg + 1 - ds;
        row.emplace_back(Matrix::zero(r.field(), c >= 0 ? static_cast<std::size_t>(r.dim(c)) : 0, 1));
    }
    return row;
}

ModulePtr build_semifree(const DgaPtr& rp, const std::vector<int>& deg,
                         const std::vector<std::vector<Matrix>>& rho, std::size_t count) {
    const FinDga& r = *rp;
    const Field& f = r.field();

    std::set<int> present;
    for (std::size_t t = 0; t < count; ++t)
        for (int q : r.space().degrees()) present.insert(deg[t] + q);

    GradedVectorSpace space;
    std::map<int, std::vector<std::size_t>> offs;
    std::map<int, std::size_t> total;
    for (int i : present) {
        std::size_t tot = 0;
        offs.emplace(i, block_offsets(r, deg, count, i, tot));
        if (tot > 0) {
            space.set_degree(i, static_cast<int>(tot), "f");
            total.emplace(i, tot);
        }
    }

    std::map<int, Matrix> diff;
    for (int i : present) {
        auto src = total.find(i);
        auto dst = total.find(i + 1);
        if (src == total.end() || dst == total.end()) continue;
        Matrix mat = Matrix::zero(f, dst->second, src->second);
        const auto& off0 = offs.at(i);
        const auto& off1 = offs.at(i + 1);
        for (std::size_t t = 0; t < count; ++t) {
            if (off0[t] == kAbsent) continue;
            int p = i - deg[t];
            int dp = r.dim(p);
            Matrix dr = r.differential(p);
            if (off1[t] != kAbsent && !dr.is_zero()) paste(mat, off1[t], off0[t], dr);
            for (std::size_t s = 0; s < t; ++s) {
                const Matrix& coef = rho[t][s];
                if (coef.rows() == 0 || coef.is_zero()) continue;
                int c = deg[t] + 1 - deg[s];
                if (r.dim(p + c) == 0 || off1[s] == kAbsent) continue;
                Matrix block(f, static_cast<std::size_t>(r.dim(p + c)), static_cast<std::size_t>(dp));
                for (int a = 0; a < dp; ++a)
                    block.set_col(static_cast<std::size_t>(a),
                                  r.multiply(p, basis_column(f, static_cast<std::size_t>(dp),
                                                             static_cast<std::size_t>(a)),
                                             c, coef));
                if (odd(p)) block = -block;
                if (!block.is_zero()) paste(mat, off1[s], off0[t], block);
            }
        }
        if (!mat.is_zero()) diff.emplace(i, mat);
    }

    BilinearTable action;
    for (int pp : r.space().degrees()) {
        int dpp = r.dim(pp);
        for (int q : present) {
            auto tq = total.find(q);
            auto td = total.find(pp + q);
            if (tq == total.end() || td == total.end()) continue;
            std::vector<Matrix> mats;
            mats.reserve(static_cast<std::size_t>(dpp));
            bool any = false;
            for (int a = 0; a < dpp; ++a) {
                Matrix ma = Matrix::zero(f, td->second, tq->second);
                Matrix ea = basis_column(f, static_cast<std::size_t>(dpp), static_cast<std::size_t>(a));
                for (std::size_t t = 0; t < count; ++t) {
                    if (offs.at(q)[t] == kAbsent || offs.at(pp + q)[t] == kAbsent) continue;
                    Matrix block = r.left_mult_matrix(pp, ea, q - deg[t]);
                    if (!block.is_zero()) {
                        paste(ma, offs.at(pp + q)[t], offs.at(q)[t], block);
                        any = true;
                    }
                }
                mats.push_back(std::move(ma));
            }
            if (any) action.emplace(std::make_pair(pp, q), std::move(mats));
        }
    }

    return share(DGModule(rp, Side::left, std::move(space), std::move(action), std::move(diff)));
}

ChainMap build_comparison(const ModulePtr& fmod, const ModulePtr& target,
                          const std::vector<int>& deg, const std::vector<Matrix>& eps,
                          std::size_t count) {
    const FinDga& r = fmod->algebra();
    const Field& f = r.field();
    std::map<int, Matrix> mats;
    for (int i : fmod->space().degrees()) {
        int rows = target->dim(i);
        if (rows == 0) continue;
        std::size_t tot = 0;
        auto offs = block_offsets(r, deg, count, i, tot);
        Matrix mat = Matrix::zero(f, static_cast<std::size_t>(rows), tot);
        for (std::size_t t = 0; t < count; ++t) {
            if (offs[t] == kAbsent) continue;
            if (eps[t].rows() == 0 || eps[t].is_zero()) continue;
            int p = i - deg[t];
            int dp = r.dim(p);
            for (int a = 0; a < dp; ++a) {
                Matrix col = target->action_matrix(p,
                                                   basis_column(f, static_cast<std::size_t>(dp),
                                                                static_cast<std::size_t>(a)),
                                                   deg[t]) *
                             eps[t];
                if (!col.is_zero()) paste(mat, 0, offs[t] + static_cast<std::size_t>(a), col);
            }
        }
        if (!mat.is_zero()) mats.emplace(i, std::move(mat));
    }
    return ChainMap(fmod, target, std::move(mats));
}

void check_squares_to_zero(const DGModule& m, const std::string& who) {
    for (int i : m.space().degrees()) {
        Matrix d1 = m.differential(i);
        Matrix d2 = m.differential(i + 1);
        if (d1.rows() > 0 && d2.rows() > 0 && !(d2 * d1).is_zero())
            throw std::logic_error(who + ": differential fails to square to zero");
    }
}

Matrix slice_rows(const Field& f, const Matrix& v, std::size_t r0, std::size_t n) {
    Matrix out = Matrix::zero(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) out.at(i, 0) = v.at(r0 + i, 0);
    return out;
}

}  // namespace

Resolution::Resolution(ModulePtr target, int window, int u, std::vector<int> degrees,
                       std::vector<std::vector<Matrix>> rho, std::vector<Matrix> eps,
                       std::vector<std::size_t> stage_markers, ModulePtr module, ChainMap comparison)
    : target_(std::move(target)),
      window_(window),
      u_(u),
      gen_degrees_(std::move(degrees)),
      rho_(std::move(rho)),
      eps_(std::move(eps)),
      stage_markers_(std::move(stage_markers)),
      module_(std::move(module)),
      comparison_(std::move(comparison)) {
    for (std::size_t m = 0; m < stage_markers_.size(); m += 2) stage_sizes_.push_back(stage_markers_[m]);
}

std::map<int, int> Resolution::generator_counts() const {
    std::map<int, int> counts;
    for (int g : gen_degrees_) ++counts[g];
    return counts;
}

Matrix Resolution::rho(std::size_t t, std::size_t s) const {
    const FinDga& r = target_->algebra();
    if (s < t) return rho_.at(t).at(s);
    int c = gen_degrees_.at(t) + 1 - gen_degrees_.at(s);
    return Matrix::zero(r.field(), c >= 0 ? static_cast<std::size_t>(r.dim(c)) : 0, 1);
}

bool Resolution::minimal() const {
    for (std::size_t t = 0; t < gen_degrees_.size(); ++t)
        for (std::size_t s = 0; s < t; ++s) {
            int c = gen_degrees_[t] + 1 - gen_degrees_[s];
            if (c < 2 && rho_[t][s].rows() > 0 && !rho_[t][s].is_zero()) return false;
        }
    return true;
}

Resolution::Stage Resolution::stage(std::size_t m) const {
    if (m >= stage_sizes_.size()) throw std::out_of_range("Resolution::stage: stage beyond window");
    return prefix(stage_sizes_[m]);
}

Resolution::Stage Resolution::prefix(std::size_t count) const {
    ModulePtr mod = build_semifree(target_->algebra_ptr(), gen_degrees_, rho_, count);
    ChainMap cmp = build_comparison(mod, target_, gen_degrees_, eps_, count);
    return Stage{std::move(mod), std::move(cmp)};
}

Resolution minimal_resolution(const ModulePtr& m, int window) {
    if (!m) throw std::invalid_argument("minimal_resolution: null module");
    if (window < 0) throw std::invalid_argument("minimal_resolution: negative window");
    if (m->side() != Side::left) throw std::invalid_argument("minimal_resolution: left modules only");
    Cohomology hm = cohomology(*m);
    if (hm.zero()) throw std::invalid_argument("minimal_resolution: acyclic input");

    const DgaPtr& rp = m->algebra_ptr();
    const FinDga& r = *rp;
    const Field& f = r.field();
    int u = *hm.inf();

    std::vector<int> deg;
    std::vector<std::vector<Matrix>> rho;
    std::vector<Matrix> eps;

    Matrix base = hm.representatives(u);
    for (std::size_t j = 0; j < base.cols(); ++j) {
        rho.push_back(zero_rho_row(r, deg, u));
        deg.push_back(u);
        eps.push_back(base.col(j));
    }
    std::vector<std::size_t> markers{deg.size()};

    for (int stage = 1; stage <= window; ++stage) {
        int i = u + stage;
        std::size_t before = deg.size();
        ModulePtr fmod = build_semifree(rp, deg, rho, before);
        ChainMap cmp = build_comparison(fmod, m, deg, eps, before);
        Cohomology hf = cohomology(*fmod);
        Matrix phi = induced_map(cmp, hf, hm, i);

        Matrix ker = kernel_basis(phi);
        if (ker.cols() > 0) {
            Matrix reps = hf.representatives(i);
            std::size_t tot = 0;
            auto offs = block_offsets(r, deg, before, i, tot);
            Matrix epsmat = cmp.matrix(i);
            Matrix dm = m->differential(i - 1);
            for (std::size_t j = 0; j < ker.cols(); ++j) {
                Matrix z = reps * ker.col(j);
                std::vector<Matrix> row = zero_rho_row(r, deg, i - 1);
                for (std::size_t s = 0; s < before; ++s) {
                    if (offs[s] == kAbsent) continue;
                    row[s] = slice_rows(f, z, offs[s], static_cast<std::size_t>(r.dim(i - deg[s])));
                }
                auto w = solve(dm, epsmat * z);
                if (!w) throw std::logic_error("minimal_resolution: boundary lift failed");
                rho.push_back(std::move(row));
                deg.push_back(i - 1);
                eps.push_back(std::move(*w));
            }
        }
        markers.push_back(deg.size());

        int hdim = hm.dim(i);
        if (hdim > 0) {
            Matrix ext = hstack(phi, Matrix::identity(f, static_cast<std::size_t>(hdim)));
            for (std::size_t pc : rref(ext).pivot_cols) {
                if (pc < phi.cols()) continue;
                rho.push_back(zero_rho_row(r, deg, i));
                deg.push_back(i);
                eps.push_back(hm.representatives(i).col(pc - phi.cols()));
            }
        }
        markers.push_back(deg.size());
    }

    ModulePtr fmod = build_semifree(rp, deg, rho, deg.size());
    ChainMap cmp = build_comparison(fmod, m, deg, eps, deg.size());
    check_squares_to_zero(*fmod, "minimal_resolution");
    if (!cmp.is_chain_map() || !cmp.is_module_map())
        throw std::logic_error("minimal_resolution: comparison map is not a module chain map");
    return Resolution(m, window, u, std::move(deg), std::move(rho), std::move(eps),
                      std::move(markers), std::move(fmod), std::move(cmp));
}

RhomCohomology rhom_cohomology(const ModulePtr& m, const ModulePtr& n, int window) {
    if (!m || !n) throw std::invalid_argument("rhom_cohomology: null module");
    if (window < 0) throw std::invalid_argument("rhom_cohomology: negative window");
    if (m->algebra_ptr() != n->algebra_ptr())
        throw std::invalid_argument("rhom_cohomology: modules over different algebras");
    if (m->side() != Side::left || n->side() != Side::left)
        throw std::invalid_argument("rhom_cohomology: left modules only");

    RhomCohomology out;
    Cohomology hm = cohomology(*m);
    Cohomology hn = cohomology(*n);
    if (hm.zero() || hn.zero()) {
        out.valid_from = std::numeric_limits<int>::min();
        return out;
    }
    if (window < 2) return out;

    int u = *hm.inf();
    int vn = *hn.sup();
    int lo = vn - u - window + 2;
    int hi = vn - u;

    Resolution res = minimal_resolution(m, window);
    ModulePtr np = truncate_above(n).module;
    const Field& f = np->algebra().field();
    const auto& deg = res.generator_degrees();
    std::size_t count = deg.size();

    std::map<int, std::size_t> size;
    std::map<int, std::vector<std::size_t>> offs;
    for (int i = lo - 1; i <= hi; ++i) {
        std::vector<std::size_t> o(count, kAbsent);
        std::size_t at = 0;
        for (std::size_t t = 0; t < count; ++t) {
            int nd = np->dim(deg[t] + i);
            if (nd > 0) {
                o[t] = at;
                at += static_cast<std::size_t>(nd);
            }
        }
        offs.emplace(i, std::move(o));
        size.emplace(i, at);
    }

    std::map<int, Matrix> dmat;
    for (int i = lo - 1; i < hi; ++i) {
        Matrix mat = Matrix::zero(f, size.at(i + 1), size.at(i));
        const auto& o0 = offs.at(i);
        const auto& o1 = offs.at(i + 1);
        for (std::size_t t = 0; t < count; ++t) {
            if (o1[t] == kAbsent) continue;
            if (o0[t] != kAbsent) {
                Matrix dn = np->differential(deg[t] + i);
                if (!dn.is_zero()) paste(mat, o1[t], o0[t], dn);
            }
            for (std::size_t s = 0; s < t; ++s) {
                if (o0[s] == kAbsent) continue;
                Matrix coef = res.rho(t, s);
                if (coef.rows() == 0 || coef.is_zero()) continue;
                int c = deg[t] + 1 - deg[s];
                Matrix block = np->action_matrix(c, coef, deg[s] + i);
                if (block.is_zero()) continue;
                if (!odd(i * (deg[t] - deg[s]))) block = -block;
                paste(mat, o1[t], o0[s], block);
            }
        }
        dmat.emplace(i, std::move(mat));
    }

    for (int i = lo - 1; i + 1 < hi; ++i)
        if (!(dmat.at(i + 1) * dmat.at(i)).is_zero())
            throw std::logic_error("rhom_cohomology: differential fails to square to zero");

    out.valid_from = lo;
    for (int i = lo; i <= hi; ++i) {
        if (size.at(i) == 0) continue;
        std::size_t out_rank = i < hi ? rank(dmat.at(i)) : 0;
        std::size_t in_rank = rank(dmat.at(i - 1));
        int h = static_cast<int>(size.at(i)) - static_cast<int>(out_rank) - static_cast<int>(in_rank);
        if (h < 0) throw std::logic_error("rhom_cohomology: inconsistent ranks");
        if (h > 0) out.dims.emplace(i, h);
    }
    return out;
}

WindowedModule derived_tensor_with_dual(const ModulePtr& p, int window) {
    Resolution res = minimal_resolution(p, window);
    const DgaPtr& rp = p->algebra_ptr();
    const FinDga& r = *rp;
    const Field& f = r.field();
    ModulePtr drr = share(dualize(*regular_module(rp, Side::left)));
    ModulePtr drl = share(dualize(*regular_module(rp, Side::right)));
    const auto& deg = res.generator_degrees();
    std::size_t count = deg.size();

    std::set<int> present;
    for (std::size_t t = 0; t < count; ++t)
        for (int q : drr->space().degrees()) present.insert(deg[t] + q);

    GradedVectorSpace space;
    std::map<int, std::vector<std::size_t>> offs;
    std::map<int, std::size_t> total;
    for (int i : present) {
        std::vector<std::size_t> o(count, kAbsent);
        std::size_t at = 0;
        for (std::size_t t = 0; t < count; ++t) {
            int dd = drr->dim(i - deg[t]);
            if (dd > 0) {
                o[t] = at;
                at += static_cast<std::size_t>(dd);
            }
        }
        offs.emplace(i, std::move(o));
        if (at > 0) {
            space.set_degree(i, static_cast<int>(at), "x");
            total.emplace(i, at);
        }
    }

    std::map<int, Matrix> diff;
    for (int i : present) {
        auto src = total.find(i);
        auto dst = total.find(i + 1);
        if (src == total.end() || dst == total.end()) continue;
        Matrix mat = Matrix::zero(f, dst->second, src->second);
        const auto& o0 = offs.at(i);
        const auto& o1 = offs.at(i + 1);
        for (std::size_t t = 0; t < count; ++t) {
            if (o0[t] == kAbsent) continue;
            int j = i - deg[t];
            Matrix dd = drr->differential(j);
            if (o1[t] != kAbsent && !dd.is_zero()) paste(mat, o1[t], o0[t], dd);
            for (std::size_t s = 0; s < t; ++s) {
                if (o1[s] == kAbsent) continue;
                Matrix coef = res.rho(t, s);
                if (coef.rows() == 0 || coef.is_zero()) continue;
                int c = deg[t] + 1 - deg[s];
                Matrix block = drr->action_matrix(c, coef, j);
                if (block.is_zero()) continue;
                if (odd(j)) block = -block;
                paste(mat, o1[s], o0[t], block);
            }
        }
        if (!mat.is_zero()) diff.emplace(i, std::move(mat));
    }

    BilinearTable action;
    for (int pp : r.space().degrees()) {
        int dpp = r.dim(pp);
        for (int q : present) {
            auto tq = total.find(q);
            auto td = total.find(pp + q);
            if (tq == total.end() || td == total.end()) continue;
            std::vector<Matrix> mats;
            mats.reserve(static_cast<std::size_t>(dpp));
            bool any = false;
            for (int a = 0; a < dpp; ++a) {
                Matrix ma = Matrix::zero(f, td->second, tq->second);
                Matrix ea = basis_column(f, static_cast<std::size_t>(dpp), static_cast<std::size_t>(a));
                for (std::size_t t = 0; t < count; ++t) {
                    if (offs.at(q)[t] == kAbsent || offs.at(pp + q)[t] == kAbsent) continue;
                    Matrix block = drl->action_matrix(pp, ea, q - deg[t]);
                    if (!block.is_zero()) {
                        paste(ma, offs.at(pp + q)[t], offs.at(q)[t], block);
                        any = true;
                    }
                }
                mats.push_back(std::move(ma));
            }
            if (any) action.emplace(std::make_pair(pp, q), std::move(mats));
        }
    }

    DGModule tensor(rp, Side::left, std::move(space), std::move(action), std::move(diff));
    check_squares_to_zero(tensor, "derived_tensor_with_dual");

    WindowedModule out;
    out.module = share(std::move(tensor));
    if (window >= 2) out.valid_to = res.base_degree() + window - *r.space().max_degree() - 2;
    return out;
}

WindowedModule ar_translate(const ModulePtr& p, int window) {
    WindowedModule tensor = derived_tensor_with_dual(p, window);
    WindowedModule out;
    out.module = share(suspend(*tensor.module, -1));
    if (tensor.valid_to) out.valid_to = *tensor.valid_to + 1;
    return out;
}

StageApproximation finite_stage_approximation(const ModulePtr& n, int v, int window) {
    Resolution res = minimal_resolution(n, window);
    int need = std::max(v - res.base_degree(), 0);
    if (need > window)
        throw std::invalid_argument("finite_stage_approximation: window too small for requested degree");
    // Stage m certifies degrees <= u + m; past stage zero the cycle-killing
    // half-stage L(m+1) tightens the certificate without generators above v.
    std::size_t idx = static_cast<std::size_t>(need);
    std::size_t count = res.stage_markers()[std::min(2 * idx + 1, res.stage_markers().size() - 1)];
    if (need == 0) count = res.stage_markers()[0];
    Resolution::Stage st = res.prefix(count);
    Triangle tri = mapping_cone(st.comparison);
    Cohomology hq = cohomology(*tri.cone);
    StageApproximation out{std::move(st.module), std::move(st.comparison), idx, hq.inf()};
    if (out.tail_inf && *out.tail_inf < v)
        throw std::logic_error("finite_stage_approximation: tail certificate failed");
    return out;
}

}  // namespace arq
