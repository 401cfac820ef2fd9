#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "arq/graded.hpp"
#include "arq/matrix.hpp"

namespace arq {

enum class Side { left, right };

std::string side_name(Side s);

// Structure constants of a graded bilinear pairing keyed by source degrees
// (p, q).  Entry [a] is the matrix of pairing with the a-th degree-p basis
// vector, mapping the degree-q component into the degree-(p+q) component.
using BilinearTable = std::map<std::pair<int, int>, std::vector<Matrix>>;

// Finite cochain differential graded algebra: concentrated in nonnegative
// degrees with a one-dimensional degree-zero part spanned by the unit and
// no degree-one part.  Those axioms are checked by validate_dga, not here;
// the constructor only enforces shape coherence of the tables.
class FinDga {
public:
    FinDga(const Field& field, GradedVectorSpace space, std::size_t unit_index,
           BilinearTable product, std::map<int, Matrix> differential);

    const Field& field() const { return field_; }
    const GradedVectorSpace& space() const { return space_; }
    std::size_t unit_index() const { return unit_index_; }
    int dim(int degree) const { return space_.dim(degree); }

    Matrix differential(int degree) const;
    bool has_product_entry(int p, int q) const;
    const BilinearTable& product() const { return product_; }

    Matrix unit_vector() const;

    // Matrix of left multiplication by the degree-p element with coordinates
    // va, acting on the degree-q component.
    Matrix left_mult_matrix(int p, const Matrix& va, int q) const;
    // Matrix of right multiplication by the degree-q element vb on degree p.
    Matrix right_mult_matrix(int q, const Matrix& vb, int p) const;
    // Product of elements (p, va) and (q, vb), as coordinates in degree p+q.
    Matrix multiply(int p, const Matrix& va, int q, const Matrix& vb) const;

    Matrix apply_differential(int degree, const Matrix& v) const;

private:
    Field field_;
    GradedVectorSpace space_;
    std::size_t unit_index_;
    BilinearTable product_;
    std::map<int, Matrix> differential_;
};

using DgaPtr = std::shared_ptr<const FinDga>;

// Finite-dimensional DG module over a FinDga, left or right.  The action
// table is keyed by (algebra degree p, module degree q); entry [a] maps the
// module degree-q component to degree p+q and represents r_a * m for left
// modules and m * r_a for right modules.
class DGModule {
public:
    DGModule(DgaPtr algebra, Side side, GradedVectorSpace space, BilinearTable action,
             std::map<int, Matrix> differential);

    const DgaPtr& algebra_ptr() const { return algebra_; }
    const FinDga& algebra() const { return *algebra_; }
    Side side() const { return side_; }
    const GradedVectorSpace& space() const { return space_; }
    int dim(int degree) const { return space_.dim(degree); }
    const BilinearTable& action() const { return action_; }

    Matrix differential(int degree) const;
    const std::map<int, Matrix>& differential_table() const { return differential_; }

    // Matrix of the action of the degree-p algebra element va on degree q.
    Matrix action_matrix(int p, const Matrix& va, int q) const;
    Matrix apply_differential(int degree, const Matrix& v) const;

private:
    DgaPtr algebra_;
    Side side_;
    GradedVectorSpace space_;
    BilinearTable action_;
    std::map<int, Matrix> differential_;
};

using ModulePtr = std::shared_ptr<const DGModule>;

ModulePtr share(DGModule m);

// Degree-zero map of DG modules over the same algebra, one matrix per degree.
class ChainMap {
public:
    ChainMap(ModulePtr domain, ModulePtr codomain, std::map<int, Matrix> matrices);

    const DGModule& domain() const { return *domain_; }
    const DGModule& codomain() const { return *codomain_; }
    const ModulePtr& domain_ptr() const { return domain_; }
    const ModulePtr& codomain_ptr() const { return codomain_; }

    Matrix matrix(int degree) const;

    // Commutes with the differentials.
    bool is_chain_map() const;
    // Commutes with the algebra action.
    bool is_module_map() const;

private:
    ModulePtr domain_, codomain_;
    std::map<int, Matrix> matrices_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_dga(const FinDga& r);
ValidationReport validate_module(const DGModule& m);

// Structural equality of presentations: same dimensions and identical
// differential and action matrices (absent entries read as zero).
bool same_presentation(const DGModule& a, const DGModule& b);

}  // namespace arq
