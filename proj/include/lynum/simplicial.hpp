#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lynum/errors.hpp"

namespace lynum {

/// A face is a set of 1-based vertices stored as a bitmask (bit v-1 = vertex v).
using Face = std::uint32_t;

constexpr int kMaxVertices = 12; // degree boxes are exponential in n

inline int face_size(Face f) { return __builtin_popcount(f); }

inline std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    for (int v = 1; f; ++v, f >>= 1)
        if (f & 1u) out.push_back(v);
    return out;
}

inline Face face_from_vertices(const std::vector<int>& vs, int n) {
    Face f = 0;
    for (int v : vs) {
        if (v < 1 || v > n) throw BadVertex("vertex " + std::to_string(v) + " out of range 1.." +
                                            std::to_string(n));
        f |= (Face(1) << (v - 1));
    }
    return f;
}

/// Lexicographic order on faces viewed as sorted vertex lists.
inline bool face_lex_less(Face a, Face b) {
    while (a && b) {
        int va = __builtin_ctz(a), vb = __builtin_ctz(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

inline std::string face_str(Face f) {
    std::string s = "{";
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

/// Keep only inclusion-maximal masks, in canonical lex order.
inline std::vector<Face> maximal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> out;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : faces)
            if (g != f && (f & g) == f) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

/// Keep only inclusion-minimal masks (antichain), canonical lex order.
inline std::vector<Face> minimal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> out;
    for (Face f : faces) {
        bool dominates = false;
        for (Face g : faces)
            if (g != f && (f & g) == g) { dominates = true; break; }
        if (!dominates) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

/// Simplicial complex on vertices 1..n given by its facets.
///
/// The facet list is a nonempty antichain. The irrelevant complex {[]} (whose
/// only face is the empty set) is allowed and is the 0-dimensional case; the
/// void complex with no faces at all is rejected.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    SimplicialComplex(int n, std::vector<Face> facets) : n_(n), facets_(std::move(facets)) {
        if (n_ < 1) throw BadVertex("vertex count must be at least 1");
        if (n_ > kMaxVertices)
            throw BadParams("vertex count exceeds supported maximum " +
                            std::to_string(kMaxVertices));
        if (facets_.empty()) throw EmptyComplex("a complex needs at least one facet");
        Face all = (n_ >= 32) ? ~Face(0) : ((Face(1) << n_) - 1);
        for (Face f : facets_)
            if ((f & ~all) != 0) throw BadVertex("facet contains a vertex out of range");
        facets_ = maximal_faces(std::move(facets_));
    }

    int vertex_count() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_face(Face sigma) const {
        for (Face f : facets_)
            if ((sigma & f) == sigma) return true;
        return false;
    }

    /// Max facet cardinality; this is dim A for the Stanley-Reisner ring.
    int top_dimension() const {
        int d = 0;
        for (Face f : facets_) d = std::max(d, face_size(f));
        return d;
    }

    bool is_pure() const {
        int d = top_dimension();
        for (Face f : facets_)
            if (face_size(f) != d) return false;
        return true;
    }

    std::vector<Face> top_facets() const {
        int d = top_dimension();
        std::vector<Face> out;
        for (Face f : facets_)
            if (face_size(f) == d) out.push_back(f);
        return out;
    }

    /// All faces (including the empty face), ordered by (size, lex).
    std::vector<Face> all_faces() const {
        std::vector<Face> out;
        for (Face m = 0; m < (Face(1) << n_); ++m)
            if (is_face(m)) out.push_back(m);
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
            return face_lex_less(a, b);
        });
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

private:
    int n_ = 0;
    std::vector<Face> facets_;
};

/// Squarefree monomial ideal given by the supports of its minimal generators.
/// An empty generator list denotes the zero ideal (the full-simplex case).
class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal() = default;

    SquarefreeMonomialIdeal(int n, std::vector<Face> generators)
        : n_(n), gens_(std::move(generators)) {
        if (n_ < 1) throw BadVertex("variable count must be at least 1");
        if (n_ > kMaxVertices)
            throw BadParams("variable count exceeds supported maximum " +
                            std::to_string(kMaxVertices));
        Face all = (Face(1) << n_) - 1;
        for (Face g : gens_) {
            if (g == 0) throw BadInput("the unit monomial cannot generate a proper ideal");
            if ((g & ~all) != 0) throw BadVertex("generator contains a variable out of range");
        }
        gens_ = minimal_faces(std::move(gens_));
    }

    int variable_count() const { return n_; }
    const std::vector<Face>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    std::string key() const {
        std::string s = std::to_string(n_) + ":";
        for (Face g : gens_) s += std::to_string(g) + ",";
        return s;
    }

    friend bool operator==(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    int n_ = 0;
    std::vector<Face> gens_;
};

/// Build a complex from 1-based vertex lists; non-maximal entries are absorbed.
inline SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facet_lists) {
    if (facet_lists.empty()) throw EmptyComplex("empty facet list");
    std::vector<Face> fs;
    fs.reserve(facet_lists.size());
    for (const auto& vs : facet_lists) fs.push_back(face_from_vertices(vs, n));
    return SimplicialComplex(n, std::move(fs));
}

/// Stanley-Reisner ideal: generators are the minimal non-faces of the complex.
/// The full simplex yields the distinguished zero ideal.
inline SquarefreeMonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta) {
    const int n = delta.vertex_count();
    std::vector<Face> gens;
    std::vector<char> is_face(std::size_t(1) << n, 0);
    for (Face m = 0; m < (Face(1) << n); ++m) is_face[m] = delta.is_face(m) ? 1 : 0;
    for (Face m = 1; m < (Face(1) << n); ++m) {
        if (is_face[m]) continue;
        // minimal iff every subset obtained by dropping one vertex is a face
        bool minimal = true;
        Face rest = m;
        while (rest) {
            Face bit = rest & (~rest + 1);
            if (!is_face[m & ~bit]) { minimal = false; break; }
            rest &= rest - 1;
        }
        if (minimal) gens.push_back(m);
    }
    return SquarefreeMonomialIdeal(n, std::move(gens));
}

/// Inverse of stanley_reisner_ideal: faces are the sets containing no generator.
inline SimplicialComplex complex_of(const SquarefreeMonomialIdeal& ideal) {
    const int n = ideal.variable_count();
    std::vector<Face> faces;
    for (Face m = 0; m < (Face(1) << n); ++m) {
        bool face = true;
        for (Face g : ideal.generators())
            if ((m & g) == g) { face = false; break; }
        if (face) faces.push_back(m);
    }
    return SimplicialComplex(n, maximal_faces(std::move(faces)));
}

struct BasicStats {
    int dimension;            // max facet cardinality (= dim of the quotient ring)
    bool pure;
    std::vector<Face> top_facets;
};

inline BasicStats basic_stats(const SimplicialComplex& delta) {
    return BasicStats{delta.top_dimension(), delta.is_pure(), delta.top_facets()};
}

enum class SubcomplexKind { Link, Deletion, Star };

inline SimplicialComplex subcomplex(const SimplicialComplex& delta, SubcomplexKind kind,
                                    Face sigma) {
    if (!delta.is_face(sigma)) throw NotAFace("sigma is not a face of the complex");
    std::vector<Face> fs;
    switch (kind) {
    case SubcomplexKind::Link:
        for (Face f : delta.facets())
            if ((f & sigma) == sigma) fs.push_back(f & ~sigma);
        break;
    case SubcomplexKind::Deletion:
        // maximal faces containing no vertex... containing sigma entirely are cut
        for (Face f : delta.facets()) {
            if ((f & sigma) != sigma) {
                fs.push_back(f);
            } else {
                for (Face rest = sigma; rest; rest &= rest - 1) {
                    Face bit = rest & (~rest + 1);
                    fs.push_back(f & ~bit);
                }
            }
        }
        break;
    case SubcomplexKind::Star:
        for (Face f : delta.facets())
            if ((f & sigma) == sigma) fs.push_back(f);
        if (fs.empty()) fs.push_back(sigma);
        break;
    }
    if (fs.empty()) fs.push_back(0); // deletion/link emptied out: irrelevant complex
    return SimplicialComplex(delta.vertex_count(), maximal_faces(std::move(fs)));
}

inline SimplicialComplex link(const SimplicialComplex& d, Face s) {
    return subcomplex(d, SubcomplexKind::Link, s);
}
inline SimplicialComplex deletion(const SimplicialComplex& d, Face s) {
    return subcomplex(d, SubcomplexKind::Deletion, s);
}
inline SimplicialComplex star(const SimplicialComplex& d, Face s) {
    return subcomplex(d, SubcomplexKind::Star, s);
}

/// Cone with a fresh apex vertex n+1: every facet gains the apex.
inline SimplicialComplex cone(const SimplicialComplex& delta) {
    int n = delta.vertex_count();
    if (n + 1 > kMaxVertices) throw BadParams("cone would exceed the vertex cap");
    Face apex = Face(1) << n;
    std::vector<Face> fs;
    for (Face f : delta.facets()) fs.push_back(f | apex);
    return SimplicialComplex(n + 1, std::move(fs));
}

/// True iff v (1-based) lies in every facet.
inline bool is_cone_vertex(const SimplicialComplex& delta, int v) {
    Face bit = Face(1) << (v - 1);
    for (Face f : delta.facets())
        if (!(f & bit)) return false;
    return true;
}

} // namespace lynum
