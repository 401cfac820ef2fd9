#pragma once

#include "arq/dga.hpp"

namespace arq {

// Cochain model of the d-sphere: unit in degree 0, one class s in degree d,
// s*s = 0, zero differential.  Requires d >= 2.
DgaPtr sphere_dga(const Field& f, int d);

// Cochain model of a wedge of a 2-sphere and a 4-sphere: classes x (degree 2)
// and y (degree 4) with all positive-degree products zero.
DgaPtr wedge_s2_s4_dga(const Field& f);

// Truncated polynomial model with x in degree 2, x*x spanning degree 4 and
// x*x*x = 0, zero differential.
DgaPtr truncated_poly_dga(const Field& f);

// Five-sphere model with extra cells: a (degree 2) and b = da (degree 3)
// cancel in cohomology, and a*b = -b*a = p spans degree 5.
DgaPtr twisted_sphere5_dga(const Field& f);

// R as a module over itself.
ModulePtr regular_module(const DgaPtr& r, Side side);

// The residue module R / R^{>=1}: one-dimensional in degree 0.
ModulePtr augmentation_module(const DgaPtr& r, Side side);

ModulePtr zero_module(const DgaPtr& r, Side side);

}  // namespace arq
