#pragma once

#include <map>
#include <optional>

#include "arq/dga.hpp"

namespace arq {

// The largest degree carrying cohomology of R.  Well defined because the
// unit class survives.
int top_degree(const DgaPtr& r);

struct PairingWitness {
    // Entry (b, a) is the top-class coefficient of the product of the a-th
    // degree-i class with the b-th degree-(d-i) class.
    Matrix pairing;
    std::size_t rank;
};

struct PoincareReport {
    int d;
    // dim H^0 = 1 and dim H^d = 1; the pairing criterion presupposes both.
    bool unit_ok;
    bool top_ok;
    // Every class pairs nontrivially as a left factor (columns of each
    // witness have full rank), respectively as a right factor (rows).
    bool left_perfect;
    bool right_perfect;
    // Keyed by the lower pairing degree i, for 0 <= i <= d where either side
    // is nonzero; populated only when the top is one-dimensional.
    std::map<int, PairingWitness> witness;
    // Windowed cross-check that the derived hom from the residue module into
    // R is a single class in degree d.
    std::optional<bool> ext_window_check;

    bool ar_exists() const { return left_perfect && right_perfect; }
};

// Decides whether H R pairs perfectly into its top degree, degree by degree.
PoincareReport poincare_check(const DgaPtr& r, std::optional<int> ext_window = std::nullopt);

// Both-sided perfectness of poincare_check.
bool ar_exists(const DgaPtr& r);

}  // namespace arq
