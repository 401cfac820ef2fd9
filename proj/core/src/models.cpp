#include "arq/models.hpp"

#include <stdexcept>

namespace arq {

namespace {

std::vector<Matrix> unit_row(const Field& f, long value) {
    return {Matrix::from_int_rows(f, {{value}})};
}

}  // namespace

DgaPtr sphere_dga(const Field& f, int d) {
    if (d < 2) throw std::invalid_argument("sphere_dga: need d >= 2");
    GradedVectorSpace sp;
    sp.set_degree(0, {"e"});
    sp.set_degree(d, {"s"});
    BilinearTable product;
    product[{0, 0}] = unit_row(f, 1);
    product[{0, d}] = unit_row(f, 1);
    product[{d, 0}] = unit_row(f, 1);
    return std::make_shared<const FinDga>(f, std::move(sp), 0, std::move(product), std::map<int, Matrix>{});
}

DgaPtr wedge_s2_s4_dga(const Field& f) {
    GradedVectorSpace sp;
    sp.set_degree(0, {"e"});
    sp.set_degree(2, {"x"});
    sp.set_degree(4, {"y"});
    BilinearTable product;
    product[{0, 0}] = unit_row(f, 1);
    product[{0, 2}] = unit_row(f, 1);
    product[{2, 0}] = unit_row(f, 1);
    product[{0, 4}] = unit_row(f, 1);
    product[{4, 0}] = unit_row(f, 1);
    return std::make_shared<const FinDga>(f, std::move(sp), 0, std::move(product), std::map<int, Matrix>{});
}

DgaPtr truncated_poly_dga(const Field& f) {
    GradedVectorSpace sp;
    sp.set_degree(0, {"e"});
    sp.set_degree(2, {"x"});
    sp.set_degree(4, {"xx"});
    BilinearTable product;
    product[{0, 0}] = unit_row(f, 1);
    product[{0, 2}] = unit_row(f, 1);
    product[{2, 0}] = unit_row(f, 1);
    product[{0, 4}] = unit_row(f, 1);
    product[{4, 0}] = unit_row(f, 1);
    product[{2, 2}] = unit_row(f, 1);
    return std::make_shared<const FinDga>(f, std::move(sp), 0, std::move(product), std::map<int, Matrix>{});
}

DgaPtr twisted_sphere5_dga(const Field& f) {
    GradedVectorSpace sp;
    sp.set_degree(0, {"e"});
    sp.set_degree(2, {"a"});
    sp.set_degree(3, {"b"});
    sp.set_degree(5, {"p"});
    BilinearTable product;
    for (int d : {0, 2, 3, 5}) {
        product[{0, d}] = unit_row(f, 1);
        if (d > 0) product[{d, 0}] = unit_row(f, 1);
    }
    product[{2, 3}] = unit_row(f, 1);
    product[{3, 2}] = unit_row(f, -1);
    std::map<int, Matrix> diff;
    diff.emplace(2, Matrix::identity(f, 1));
    return std::make_shared<const FinDga>(f, std::move(sp), 0, std::move(product), std::move(diff));
}

ModulePtr regular_module(const DgaPtr& r, Side side) {
    const FinDga& alg = *r;
    BilinearTable action;
    if (side == Side::left) {
        action = alg.product();
    } else {
        // Entry (p, q)[a] must represent m |-> m * r_a on the degree-q part.
        const Field& f = alg.field();
        for (int p : alg.space().degrees()) {
            for (int q : alg.space().degrees()) {
                if (alg.dim(p + q) == 0) continue;
                std::vector<Matrix> mats;
                mats.reserve(alg.dim(p));
                for (int a = 0; a < alg.dim(p); ++a) {
                    Matrix ea = Matrix::zero(f, alg.dim(p), 1);
                    ea.at(a, 0) = Scalar::one(f);
                    mats.push_back(alg.right_mult_matrix(p, ea, q));
                }
                action[{p, q}] = std::move(mats);
            }
        }
    }
    std::map<int, Matrix> diff;
    for (int deg : alg.space().degrees()) {
        Matrix d = alg.differential(deg);
        if (!d.is_zero()) diff.emplace(deg, std::move(d));
    }
    return share(DGModule(r, side, alg.space(), std::move(action), std::move(diff)));
}

ModulePtr augmentation_module(const DgaPtr& r, Side side) {
    const Field& f = r->field();
    GradedVectorSpace sp;
    sp.set_degree(0, {"k"});
    BilinearTable action;
    action[{0, 0}] = {Matrix::identity(f, 1)};
    return share(DGModule(r, side, std::move(sp), std::move(action), {}));
}

ModulePtr zero_module(const DgaPtr& r, Side side) {
    return share(DGModule(r, side, GradedVectorSpace{}, {}, {}));
}

}  // namespace arq
