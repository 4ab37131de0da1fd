#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lynum/simplicial.hpp"

namespace lynum {

/// The face prime P_sigma = (x_i : i not in sigma) of the Stanley-Reisner ring.
struct FacePrime {
    Face face = 0;
    int n = 0;

    std::vector<int> variables() const {
        std::vector<int> out;
        for (int v = 1; v <= n; ++v)
            if (!(face & (Face(1) << (v - 1)))) out.push_back(v);
        return out;
    }
};

/// Height of the face prime P_sigma: the longest facet overhang above sigma.
inline int face_prime_height(const SimplicialComplex& delta, Face sigma) {
    if (!delta.is_face(sigma)) throw NotAFace("height requested at a non-face");
    int h = 0;
    for (Face f : delta.facets())
        if ((f & sigma) == sigma) h = std::max(h, face_size(f) - face_size(sigma));
    return h;
}

/// Same value by brute enumeration of saturated face chains (test oracle).
inline int face_prime_height_by_chains(const SimplicialComplex& delta, Face sigma) {
    if (!delta.is_face(sigma)) throw NotAFace("height requested at a non-face");
    int best = 0;
    std::vector<Face> stack{sigma};
    std::vector<int> depth{0};
    const int n = delta.vertex_count();
    while (!stack.empty()) {
        Face cur = stack.back(); stack.pop_back();
        int dep = depth.back(); depth.pop_back();
        best = std::max(best, dep);
        for (int v = 0; v < n; ++v) {
            Face bit = Face(1) << v;
            if (cur & bit) continue;
            if (delta.is_face(cur | bit)) {
                stack.push_back(cur | bit);
                depth.push_back(dep + 1);
            }
        }
    }
    return best;
}

/// Height of P_F + P_G = P_{F cap G} for two facets.
inline int facet_sum_height(const SimplicialComplex& delta, Face f, Face g) {
    return face_prime_height(delta, f & g);
}

/// Graph on the top-dimensional minimal primes; edge iff the prime sum has
/// height one. For pure complexes this is exactly ridge adjacency.
struct HHGraph {
    std::vector<FacePrime> vertices;           // canonical lex order of facets
    std::vector<std::pair<int, int>> edges;    // index pairs i < j, sorted
};

inline HHGraph hochster_huneke_graph(const SimplicialComplex& delta) {
    HHGraph g;
    for (Face f : delta.top_facets()) g.vertices.push_back(FacePrime{f, delta.vertex_count()});
    const int m = static_cast<int>(g.vertices.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (facet_sum_height(delta, g.vertices[i].face, g.vertices[j].face) == 1)
                g.edges.emplace_back(i, j);
    return g;
}

struct Components {
    int count = 0;
    std::vector<std::vector<int>> partition; // vertex indices, each sorted; blocks sorted
};

inline Components connected_components(const HHGraph& g) {
    const int m = static_cast<int>(g.vertices.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (auto [a, b] : g.edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < m; ++i) blocks[find(i)].push_back(i);
    Components out;
    out.count = static_cast<int>(blocks.size());
    for (auto& [root, vs] : blocks) out.partition.push_back(vs);
    return out;
}

/// The graph-side value of the top Lyubeznik number.
inline int top_lyubeznik_via_graph(const SimplicialComplex& delta) {
    return connected_components(hochster_huneke_graph(delta)).count;
}

/// One pure subcomplex per graph component, generated by its facets.
inline std::vector<SimplicialComplex> component_split(const SimplicialComplex& delta) {
    HHGraph g = hochster_huneke_graph(delta);
    Components comps = connected_components(g);
    std::vector<SimplicialComplex> out;
    for (const auto& block : comps.partition) {
        std::vector<Face> fs;
        for (int idx : block) fs.push_back(g.vertices[idx].face);
        out.emplace_back(delta.vertex_count(), fs);
    }
    return out;
}

/// Projective input: named d-dimensional components with pairwise
/// intersection dimensions (-1 = empty; pairs left out default to -1).
struct ProjectiveComponent {
    std::string id;
    int dim = 0;
};

struct ProjectiveInput {
    int d = 0;
    std::vector<ProjectiveComponent> components;
    std::vector<std::tuple<std::string, std::string, int>> intersections;
};

/// Top Lyubeznik number of the affine cone ring, from projective data alone:
/// components are joined when their intersection has dimension exactly d-1
/// (codimension one inside the components), and the answer is the number of
/// connected components of that graph.
inline int projective_top_lyubeznik(const ProjectiveInput& input) {
    const int m = static_cast<int>(input.components.size());
    if (m == 0) throw BadInput("no components given");
    std::map<std::string, int> index;
    for (int i = 0; i < m; ++i) {
        const auto& c = input.components[i];
        if (c.dim != input.d)
            throw BadInput("component " + c.id + " does not have dimension d");
        if (index.count(c.id)) throw BadInput("duplicate component id " + c.id);
        index[c.id] = i;
    }
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (const auto& [a, b, dim] : input.intersections) {
        if (!index.count(a) || !index.count(b)) throw BadInput("unknown component id");
        if (dim >= input.d) throw BadInput("intersection dimension must be below d");
        if (dim == input.d - 1) {
            int ra = find(index[a]), rb = find(index[b]);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    }
    std::vector<char> seen(m, 0);
    int count = 0;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (!seen[r]) { seen[r] = 1; ++count; }
    }
    return count;
}

/// DOT rendering with fully deterministic ordering.
inline std::string to_dot(const HHGraph& g) {
    std::string out = "graph hochster_huneke {\n";
    auto label = [&](int idx) {
        std::string s;
        bool first = true;
        for (int v : face_vertices(g.vertices[idx].face)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s.empty() ? std::string("{}") : s;
    };
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        out += "  \"" + label(static_cast<int>(i)) + "\";\n";
    for (auto [a, b] : g.edges)
        out += "  \"" + label(a) + "\" -- \"" + label(b) + "\";\n";
    out += "}\n";
    return out;
}

} // namespace lynum
