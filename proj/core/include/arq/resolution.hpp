#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arq/dga.hpp"

namespace arq {

struct StageApproximation;

// Minimal semi-free resolution of a left DG module, correct through a
// window: stage m extends the previous stage so that the comparison map
// induces isomorphisms H^i F -> H^i M for i <= inf H M + m.  Generators
// carry degrees g_t; the differential of a generator is a combination of
// earlier generators with algebra coefficients of degree >= 2, which is the
// minimality condition.
class Resolution {
public:
    const ModulePtr& target() const { return target_; }
    int window() const { return window_; }
    // inf of H of the target; the lowest generator degree.
    int base_degree() const { return u_; }

    const std::vector<int>& generator_degrees() const { return gen_degrees_; }
    std::map<int, int> generator_counts() const;
    // Number of generators present in stage m, for m = 0..window.
    const std::vector<std::size_t>& stage_sizes() const { return stage_sizes_; }
    // Generator counts of the filtration F(0), L(1), F(1), L(2), ... where
    // L(m) adds the cycle-killing generators of stage m and F(m) adds the
    // class-filling ones.
    const std::vector<std::size_t>& stage_markers() const { return stage_markers_; }

    // The resolution as a DG module, and the comparison map into the target.
    const ModulePtr& module() const { return module_; }
    const ChainMap& comparison() const { return comparison_; }

    // Coefficient of generator s in the differential of generator t, as a
    // coordinate column in the algebra component of degree g_t + 1 - g_s.
    Matrix rho(std::size_t t, std::size_t s) const;

    // Image of generator t in the target, a coordinate column in degree g_t.
    const Matrix& generator_image(std::size_t t) const { return eps_.at(t); }

    // No generator differential carries a unit coefficient.
    bool minimal() const;

    struct Stage {
        ModulePtr module;
        ChainMap comparison;
    };
    // The filtration stage F(m) with its comparison map into the target.
    Stage stage(std::size_t m) const;

private:
    // Sub-resolution on the first `count` generators.
    Stage prefix(std::size_t count) const;

    Resolution(ModulePtr target, int window, int u, std::vector<int> degrees,
               std::vector<std::vector<Matrix>> rho, std::vector<Matrix> eps,
               std::vector<std::size_t> stage_markers, ModulePtr module, ChainMap comparison);
    friend Resolution minimal_resolution(const ModulePtr& m, int window);
    friend StageApproximation finite_stage_approximation(const ModulePtr& n, int v, int window);

    ModulePtr target_;
    int window_;
    int u_;
    std::vector<int> gen_degrees_;
    std::vector<std::vector<Matrix>> rho_;
    std::vector<Matrix> eps_;
    std::vector<std::size_t> stage_sizes_;
    std::vector<std::size_t> stage_markers_;
    ModulePtr module_;
    ChainMap comparison_;
};

// Builds the resolution stage by stage.  Throws on acyclic input, negative
// windows, and right modules.
Resolution minimal_resolution(const ModulePtr& m, int window);

struct RhomCohomology {
    // Nonzero dims of H^i Hom(F, N) among the certified degrees.
    std::map<int, int> dims;
    // All degrees >= *valid_from are certified by the window; nullopt when
    // the window is too small to certify anything.
    std::optional<int> valid_from;
};

// Cohomology of the derived Hom from m to n, certified from a cutoff degree
// upward.  Acyclic inputs give a result that is zero in every degree.
RhomCohomology rhom_cohomology(const ModulePtr& m, const ModulePtr& n, int window);

struct WindowedModule {
    ModulePtr module;
    // Cohomology of `module` is certified in degrees <= *valid_to; nullopt
    // when the window certifies nothing.
    std::optional<int> valid_to;
};

// D R tensored over R with the minimal resolution of p.
WindowedModule derived_tensor_with_dual(const ModulePtr& p, int window);

// The shift by -1 of derived_tensor_with_dual(p).
WindowedModule ar_translate(const ModulePtr& p, int window);

struct StageApproximation {
    ModulePtr stage;
    ChainMap comparison;
    std::size_t stage_index;
    // inf of H of the cone over the comparison map; nullopt when the cone is
    // acyclic.  Always >= the requested degree v.
    std::optional<int> tail_inf;
};

// The filtration stage whose comparison map is an isomorphism on H^i for
// i <= v, together with the cone certificate.
StageApproximation finite_stage_approximation(const ModulePtr& n, int v, int window);

}  // namespace arq
