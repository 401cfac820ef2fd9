#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arq/kt.hpp"

namespace arq {

// Rectangular window of shift/length labels: j_min <= j <= j_max, 0 <= m <= m_max.
struct QuiverWindow {
    int j_min = 0;
    int j_max = 0;
    int m_max = 0;

    bool contains(int j, int m) const { return j >= j_min && j <= j_max && m >= 0 && m <= m_max; }
    bool contains(const SphereIndecLabel& v) const { return contains(v.j, v.m); }
};

// The stable translation quiver of the compact derived category of a sphere,
// restricted to a window.  Vertices are indecomposable labels, arrows are the
// irreducible maps read off the almost split triangles, and the translation
// shifts j by d - 1.
struct TranslationQuiver {
    int d = 2;
    QuiverWindow window;
    std::vector<SphereIndecLabel> vertices;
    std::vector<std::pair<SphereIndecLabel, SphereIndecLabel>> arrows;
    std::map<SphereIndecLabel, SphereIndecLabel> translation;
};

// Vertices, arrows, and translation over the given window.  Arrows whose
// endpoints fall outside the window are dropped, as are translation pairs.
// Requires d >= 2, j_max - j_min >= 2(d - 1), and m_max >= 2.
TranslationQuiver build_quiver(int d, int j_min, int j_max, int m_max);

// Connected components of the underlying undirected graph, each sorted, in
// order of their smallest vertex.
std::vector<std::vector<SphereIndecLabel>> components(const TranslationQuiver& q);

// True iff every interior vertex of the component has exactly the two
// diagonal arrow families in and out (one each on the m = 0 row) and no
// other incident arrows.  The interior window must exclude vertices whose
// neighbors leave the quiver's window.
bool check_za_infinity(const TranslationQuiver& q, const std::vector<SphereIndecLabel>& component,
                       const QuiverWindow& interior);

// True iff for every interior vertex P the arrow counts from the translate
// of P to any vertex equal the arrow counts from that vertex to P.
bool check_stable_translation(const TranslationQuiver& q, const QuiverWindow& interior);

// Vertex label used in DOT output and reports.
std::string vertex_name(const SphereIndecLabel& v);

// DOT digraph: one quoted node per vertex in lexicographic (j, m) order,
// solid edges for arrows, dashed edges from each vertex to its translate.
// Byte-deterministic, UTF-8, LF line endings.
std::string to_dot(const TranslationQuiver& q);

}  // namespace arq
