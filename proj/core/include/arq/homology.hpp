#pragma once

#include <map>
#include <optional>

#include "arq/dga.hpp"

namespace arq {

// Cohomology of a DG module with chosen cycle representatives.  In each
// degree the representatives extend a basis of the boundary space inside the
// cycle space, picked by pivoting, so repeated runs give identical output.
class Cohomology {
public:
    const GradedVectorSpace& space() const { return space_; }
    int dim(int degree) const { return space_.dim(degree); }
    std::optional<int> inf() const { return space_.min_degree(); }
    std::optional<int> sup() const { return space_.max_degree(); }
    bool zero() const { return space_.empty(); }

    // Columns are the representative cycles in module degree `degree`.
    Matrix representatives(int degree) const;

    // Coordinates of the class of the cycle z with respect to the chosen
    // representatives.  Throws when z is not a cycle.
    Matrix class_coordinates(int degree, const Matrix& z) const;

private:
    friend Cohomology cohomology(const DGModule& m);
    Field field_ = Field::rationals();
    GradedVectorSpace space_;
    std::map<int, Matrix> reps_;    // module-degree columns
    std::map<int, Matrix> frames_;  // [reps | boundary basis]
};

Cohomology cohomology(const DGModule& m);

// Matrix of the map induced on cohomology by a chain map, in degree `degree`.
Matrix induced_map(const ChainMap& f, const Cohomology& hdom, const Cohomology& hcod, int degree);

// True when the induced map on cohomology is invertible in every degree.
bool is_quasi_iso(const ChainMap& f);

// The cohomology of R as an algebra: multiplication of classes through the
// chosen representatives.
class CohomologyRing {
public:
    const Cohomology& h() const { return h_; }
    const DgaPtr& algebra() const { return algebra_; }

    // Class coordinates of the product of classes (p, a) and (q, b).
    Matrix multiply(int p, const Matrix& a, int q, const Matrix& b) const;

private:
    friend CohomologyRing cohomology_ring(const DgaPtr& r);
    DgaPtr algebra_;
    Cohomology h_;
};

CohomologyRing cohomology_ring(const DgaPtr& r);

// Induced action of H R on H M: entry (p, q)[a] is the matrix of the action
// of the a-th degree-p class of H R, mapping H^q M to H^{p+q} M.
BilinearTable induced_hr_action(const CohomologyRing& hr, const DGModule& m, const Cohomology& hm);

}  // namespace arq
