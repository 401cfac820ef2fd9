#include "arq/poincare.hpp"

#include <stdexcept>

#include "arq/homology.hpp"
#include "arq/models.hpp"
#include "arq/resolution.hpp"

namespace arq {

namespace {

Matrix basis_column(const Field& f, std::size_t n, std::size_t a) {
    Matrix v = Matrix::zero(f, n, 1);
    v.at(a, 0) = Scalar::one(f);
    return v;
}

}  // namespace

int top_degree(const DgaPtr& r) {
    if (!r) throw std::invalid_argument("top_degree: null algebra");
    Cohomology h = cohomology(*regular_module(r, Side::left));
    return *h.sup();
}

PoincareReport poincare_check(const DgaPtr& r, std::optional<int> ext_window) {
    if (!r) throw std::invalid_argument("poincare_check: null algebra");
    const Field& f = r->field();
    CohomologyRing hr = cohomology_ring(r);
    const Cohomology& h = hr.h();

    PoincareReport report;
    report.d = *h.sup();
    report.unit_ok = h.dim(0) == 1;
    report.top_ok = h.dim(report.d) == 1;
    report.left_perfect = report.unit_ok && report.top_ok;
    report.right_perfect = report.left_perfect;

    if (report.top_ok) {
        for (int i = 0; i <= report.d; ++i) {
            int lo = h.dim(i);
            int hi = h.dim(report.d - i);
            if (lo == 0 && hi == 0) continue;
            Matrix pairing = Matrix::zero(f, static_cast<std::size_t>(hi), static_cast<std::size_t>(lo));
            for (int a = 0; a < lo; ++a)
                for (int b = 0; b < hi; ++b) {
                    Matrix top = hr.multiply(i, basis_column(f, static_cast<std::size_t>(lo),
                                                             static_cast<std::size_t>(a)),
                                             report.d - i,
                                             basis_column(f, static_cast<std::size_t>(hi),
                                                          static_cast<std::size_t>(b)));
                    pairing.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = top.at(0, 0);
                }
            std::size_t rk = rank(pairing);
            if (rk != static_cast<std::size_t>(lo)) report.left_perfect = false;
            if (rk != static_cast<std::size_t>(hi)) report.right_perfect = false;
            report.witness.emplace(i, PairingWitness{std::move(pairing), rk});
        }
    }

    if (ext_window) {
        RhomCohomology ext = rhom_cohomology(augmentation_module(r, Side::left),
                                             regular_module(r, Side::left), *ext_window);
        report.ext_window_check = ext.valid_from.has_value() && *ext.valid_from <= report.d &&
                                  ext.dims == std::map<int, int>{{report.d, 1}};
    }
    return report;
}

bool ar_exists(const DgaPtr& r) { return poincare_check(r).ar_exists(); }

}  // namespace arq
