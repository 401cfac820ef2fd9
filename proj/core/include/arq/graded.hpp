#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arq {

// Spells a degree as an identifier chunk: 3 -> "3", -2 -> "m2".
std::string degree_token(int degree);

// Finite-dimensional graded vector space with per-degree basis labels.
// Only degrees of nonzero dimension are stored.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;

    void set_degree(int degree, int dim, const std::string& label_stem = "b");
    void set_degree(int degree, std::vector<std::string> labels);

    int dim(int degree) const;
    std::vector<std::string> labels(int degree) const;
    std::vector<int> degrees() const;
    std::map<int, int> dims() const;
    int total_dim() const;
    bool empty() const { return labels_.empty(); }
    std::optional<int> min_degree() const;
    std::optional<int> max_degree() const;

    bool operator==(const GradedVectorSpace& o) const { return dims() == o.dims(); }

private:
    std::map<int, std::vector<std::string>> labels_;
};

}  // namespace arq
