#pragma once

#include <optional>

#include "arq/dga.hpp"

namespace arq {

// n-fold shift: the degree-i part of the result is the degree-(i+n) part of
// m.  The differential picks up the sign (-1)^n and, for left modules, the
// action of a degree-p element picks up (-1)^{n*p}.
DGModule suspend(const DGModule& m, int n);

// Shift of a map, compatible with suspend on both ends.
ChainMap suspend_map(const ChainMap& f, int n);

// Degreewise linear dual.  Left modules dualize to right modules and back;
// the degree-i part of the result is the dual of the degree-(-i) part of m.
DGModule dualize(const DGModule& m);

DGModule direct_sum(const DGModule& a, const DGModule& b);

struct TruncationResult {
    ModulePtr module;
    ChainMap map;
};

// Sub-DG-module supported in degrees >= inf H m, with the inclusion into m.
// The inclusion is a quasi-isomorphism.  Throws on acyclic input, and when
// `expect` is given and differs from the computed inf H m.
TruncationResult truncate_below(const ModulePtr& m, std::optional<int> expect = std::nullopt);

// Quotient DG module supported in degrees <= sup H m, with the projection
// from m.  The projection is a quasi-isomorphism.  Throws on acyclic input,
// and when `expect` is given and differs from the computed sup H m.
TruncationResult truncate_above(const ModulePtr& m, std::optional<int> expect = std::nullopt);

struct Triangle {
    ModulePtr source;
    ModulePtr target;
    ModulePtr cone;
    ModulePtr suspended_source;
    ChainMap map;         // source -> target
    ChainMap inclusion;   // target -> cone
    ChainMap projection;  // cone -> suspended source
};

// Mapping cone of a strict map of DG modules, with the two structure maps.
// Requires f to commute with differentials and the algebra action.
Triangle mapping_cone(const ChainMap& f);

// Checks exactness of the induced long sequence on cohomology, degree by
// degree: consecutive composites vanish and ranks add up.
ValidationReport verify_triangle_les(const Triangle& t);

}  // namespace arq
