#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arq/dga.hpp"
#include "arq/field.hpp"
#include "arq/graded.hpp"
#include "arq/matrix.hpp"

namespace arq {

// Finite-dimensional graded right module over the polynomial algebra k[T]
// with deg T = -(d-1), for a sphere dimension d >= 2.  The T-action lowers
// the cohomological degree by d-1, so it is nilpotent on any finite space.
// An optional degree +1 differential turns the module into a DG module;
// since T is a cycle, the differential must commute with the action.
// Scalars are restricted to characteristic zero.
class GradedKTModule {
public:
    GradedKTModule(const Field& field, int d, GradedVectorSpace space,
                   std::map<int, Matrix> t_action,
                   std::optional<std::map<int, Matrix>> differential = std::nullopt);

    const Field& field() const { return field_; }
    int d() const { return d_; }
    int step() const { return d_ - 1; }
    const GradedVectorSpace& space() const { return space_; }
    int dim(int degree) const { return space_.dim(degree); }

    // Matrix of T on the degree component, mapping M^i -> M^{i-(d-1)}.
    Matrix t_matrix(int degree) const;
    const std::map<int, Matrix>& t_table() const { return t_action_; }

    bool has_differential() const { return differential_.has_value(); }
    Matrix differential(int degree) const;
    const std::optional<std::map<int, Matrix>>& differential_table() const {
        return differential_;
    }

private:
    Field field_;
    int d_;
    GradedVectorSpace space_;
    std::map<int, Matrix> t_action_;
    std::optional<std::map<int, Matrix>> differential_;
};

ValidationReport validate_kt_module(const GradedKTModule& m);

// Cyclic module: one basis vector in each degree -j, -j-(d-1), ..., -j-m(d-1),
// with T carrying each rung to the next and the last rung to zero.
GradedKTModule make_cyclic(const Field& field, int d, int j, int m);

// Degree shift with (suspend(m, n))^i = m^{i+n}; the differential picks up
// the sign (-1)^n and the action is untouched.
GradedKTModule suspend(const GradedKTModule& m, int n);

GradedKTModule direct_sum(const GradedKTModule& a, const GradedKTModule& b);

// Multiset of cyclic summands; the entry (j, m) -> c records c copies of the
// shifted cyclic module with top rung in degree -j and m+1 rungs.
struct BlockMultiset {
    std::map<std::pair<int, int>, int> entries;

    int multiplicity(int j, int m) const;
    int block_count() const;
    bool operator==(const BlockMultiset& o) const = default;
};

// Splits a plain graded module (differential absent or zero) into shifted
// cyclic summands.  The multiset is cross-checked against the rank
// invariants rank(T^p restricted to each degree), which determine it.
BlockMultiset decompose(const GradedKTModule& m);

// Cohomology of a DG module with the induced T-action and zero differential.
GradedKTModule kt_cohomology(const GradedKTModule& m);

// The rank-two semi-free resolution of the trivial module k: the mapping
// cone of T acting on k[T], with free generators in degrees 0 and -d.  The
// infinite lower tail is cut off by passing to the quotient in degrees >= lo,
// which keeps the cohomology equal to k in degree 0 with no edge classes.
// Requires lo <= -d <= 0 <= hi so both generators are in the window.
GradedKTModule make_sphere_resolution(const Field& field, int d, int lo, int hi);

// Dimensions of H^i Hom_{k[T]}(F, m) for i in [lo, hi], where F is the
// resolution of k above.  Each Hom degree only involves finitely many
// components of m, so every reported degree is exact.  Degrees with zero
// cohomology are omitted from the map.
std::map<int, int> rhom_over_kt(int d, const GradedKTModule& m, int lo, int hi);

// Dimensions of H^i Hom_{k[T]}(F, F) for i in [lo, hi], computed degreewise
// against the untruncated resolution.  Expected: one class in degree 0 (the
// identity) and one in degree d.
std::map<int, int> endo_dga_cohomology(const Field& field, int d, int lo, int hi);

// Names the indecomposable object Sigma^j N_m of the compact derived
// category of the d-sphere.
struct SphereIndecLabel {
    int d = 2;
    int j = 0;
    int m = 0;

    bool operator==(const SphereIndecLabel& o) const = default;
    auto operator<=>(const SphereIndecLabel& o) const = default;
};

// Closed-form cohomology of Sigma^j N_m: one-dimensional in degrees
// -m(d-1)-j and d-j, zero elsewhere.
std::map<int, int> indec_cohomology(const SphereIndecLabel& label);

struct ARTriangleLabel {
    SphereIndecLabel left;
    std::vector<SphereIndecLabel> middle;
    SphereIndecLabel right;

    bool operator==(const ARTriangleLabel& o) const = default;
};

// The almost split triangle ending in the given object: the left term is the
// translate (j+d-1, m), and the middle is (j, 1) for m = 0 and the pair
// (j+d-1, m-1), (j, m+1) for m >= 1.
ARTriangleLabel sphere_ar_triangle(const SphereIndecLabel& right);

// Consistency check of a triangle label: the translate rule for the outer
// terms, and equality of the middle cohomology computed from the middle
// labels against the long-exact-sequence count from the outer terms.  For
// m = 0 the connecting map is nonzero and cancels one dimension in each of
// the degrees -j and 1-j.
ValidationReport verify_ar_triangle(const ARTriangleLabel& tri);

}  // namespace arq
