#include "arq/graded.hpp"

#include <set>
#include <stdexcept>

namespace arq {

std::string degree_token(int degree) {
    return degree < 0 ? "m" + std::to_string(-degree) : std::to_string(degree);
}

void GradedVectorSpace::set_degree(int degree, int dim, const std::string& label_stem) {
    if (dim < 0) throw std::invalid_argument("set_degree: negative dimension");
    if (dim == 0) {
        labels_.erase(degree);
        return;
    }
    std::vector<std::string> names;
    names.reserve(dim);
    for (int i = 0; i < dim; ++i)
        names.push_back(label_stem + degree_token(degree) + "_" + std::to_string(i));
    labels_[degree] = std::move(names);
}

void GradedVectorSpace::set_degree(int degree, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels_.erase(degree);
        return;
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("set_degree: duplicate basis label in degree " + std::to_string(degree));
    labels_[degree] = std::move(labels);
}

int GradedVectorSpace::dim(int degree) const {
    auto it = labels_.find(degree);
    return it == labels_.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<std::string> GradedVectorSpace::labels(int degree) const {
    auto it = labels_.find(degree);
    return it == labels_.end() ? std::vector<std::string>{} : it->second;
}

std::vector<int> GradedVectorSpace::degrees() const {
    std::vector<int> out;
    out.reserve(labels_.size());
    for (const auto& [deg, names] : labels_) out.push_back(deg);
    return out;
}

std::map<int, int> GradedVectorSpace::dims() const {
    std::map<int, int> out;
    for (const auto& [deg, names] : labels_) out[deg] = static_cast<int>(names.size());
    return out;
}

int GradedVectorSpace::total_dim() const {
    int total = 0;
    for (const auto& [deg, names] : labels_) total += static_cast<int>(names.size());
    return total;
}

std::optional<int> GradedVectorSpace::min_degree() const {
    if (labels_.empty()) return std::nullopt;
    return labels_.begin()->first;
}

std::optional<int> GradedVectorSpace::max_degree() const {
    if (labels_.empty()) return std::nullopt;
    return labels_.rbegin()->first;
}

}  // namespace arq
