#include "arq/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace arq {

TranslationQuiver build_quiver(int d, int j_min, int j_max, int m_max) {
    if (d < 2) throw std::invalid_argument("build_quiver: sphere dimension must be at least 2");
    if (j_max - j_min < 2 * (d - 1) || m_max < 2)
        throw std::invalid_argument("build_quiver: window too small");
    TranslationQuiver q;
    q.d = d;
    q.window = {j_min, j_max, m_max};
    for (int j = j_min; j <= j_max; ++j)
        for (int m = 0; m <= m_max; ++m) q.vertices.push_back({d, j, m});
    std::sort(q.vertices.begin(), q.vertices.end());
    for (const auto& v : q.vertices) {
        if (v.m >= 1 && q.window.contains(v.j + d - 1, v.m - 1))
            q.arrows.push_back({{d, v.j + d - 1, v.m - 1}, v});
        if (q.window.contains(v.j, v.m + 1)) q.arrows.push_back({{d, v.j, v.m + 1}, v});
        if (q.window.contains(v.j + d - 1, v.m)) q.translation[v] = {d, v.j + d - 1, v.m};
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

std::vector<std::vector<SphereIndecLabel>> components(const TranslationQuiver& q) {
    std::map<SphereIndecLabel, std::size_t> index;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) index.emplace(q.vertices[i], i);
    std::vector<std::size_t> parent(q.vertices.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (const auto& [from, to] : q.arrows) {
        auto fit = index.find(from);
        auto tit = index.find(to);
        if (fit == index.end() || tit == index.end()) continue;
        parent[find(fit->second)] = find(tit->second);
    }
    std::map<std::size_t, std::vector<SphereIndecLabel>> groups;
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        groups[find(i)].push_back(q.vertices[i]);
    std::vector<std::vector<SphereIndecLabel>> out;
    std::vector<std::pair<SphereIndecLabel, std::size_t>> order;
    for (auto& [root, verts] : groups) {
        std::sort(verts.begin(), verts.end());
        order.push_back({verts.front(), root});
    }
    std::sort(order.begin(), order.end());
    for (const auto& [first, root] : order) out.push_back(std::move(groups.at(root)));
    return out;
}

bool check_za_infinity(const TranslationQuiver& q, const std::vector<SphereIndecLabel>& component,
                       const QuiverWindow& interior) {
    std::set<SphereIndecLabel> verts(q.vertices.begin(), q.vertices.end());
    for (const auto& v : component) {
        if (!interior.contains(v)) continue;
        std::set<SphereIndecLabel> expect_out = {{q.d, v.j - (q.d - 1), v.m + 1}};
        std::set<SphereIndecLabel> expect_in = {{q.d, v.j, v.m + 1}};
        if (v.m >= 1) {
            expect_out.insert({q.d, v.j, v.m - 1});
            expect_in.insert({q.d, v.j + q.d - 1, v.m - 1});
        }
        for (const auto& w : expect_out)
            if (verts.find(w) == verts.end()) return false;
        for (const auto& w : expect_in)
            if (verts.find(w) == verts.end()) return false;
        std::set<SphereIndecLabel> out, in;
        for (const auto& [from, to] : q.arrows) {
            if (from == v) out.insert(to);
            if (to == v) in.insert(from);
        }
        if (out != expect_out || in != expect_in) return false;
    }
    return true;
}

bool check_stable_translation(const TranslationQuiver& q, const QuiverWindow& interior) {
    std::map<std::pair<SphereIndecLabel, SphereIndecLabel>, int> count;
    for (const auto& arrow : q.arrows) count[arrow] += 1;
    auto arrows_between = [&](const SphereIndecLabel& a, const SphereIndecLabel& b) {
        auto it = count.find({a, b});
        return it == count.end() ? 0 : it->second;
    };
    for (const auto& p : q.vertices) {
        if (!interior.contains(p)) continue;
        auto it = q.translation.find(p);
        if (it == q.translation.end()) return false;
        for (const auto& other : q.vertices)
            if (arrows_between(it->second, other) != arrows_between(other, p)) return false;
    }
    return true;
}

std::string vertex_name(const SphereIndecLabel& v) {
    return "Σ^" + std::to_string(v.j) + " N_" + std::to_string(v.m);
}

std::string to_dot(const TranslationQuiver& q) {
    std::string out = "digraph sphere_quiver {\n";
    for (const auto& v : q.vertices) out += "    \"" + vertex_name(v) + "\";\n";
    for (const auto& [from, to] : q.arrows)
        out += "    \"" + vertex_name(from) + "\" -> \"" + vertex_name(to) + "\";\n";
    for (const auto& [v, tv] : q.translation)
        out += "    \"" + vertex_name(v) + "\" -> \"" + vertex_name(tv) + "\" [style=dashed];\n";
    out += "}\n";
    return out;
}

}  // namespace arq
