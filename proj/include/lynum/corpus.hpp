#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "lynum/simplicial.hpp"

namespace lynum {

/// Deterministic generator (splitmix64 core). std:: distributions are
/// implementation-defined, so sampling is done by hand for reproducibility.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

enum class CorpusKind { RandomPure, Shellable, DisjointBlocks };

namespace detail_corpus {

inline std::vector<Face> all_subsets_of_size(int n, int d) {
    std::vector<Face> out;
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Face f = 0;
        for (int i : idx) f |= Face(1) << i;
        out.push_back(f);
        int k = d - 1;
        while (k >= 0 && idx[k] == n - d + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// Attaching condition: the maximal common faces of cand with the current
/// complex are exactly ridges of cand (size d-1), and there is at least one.
inline bool attaches_along_ridges(const SimplicialComplex& current, Face cand) {
    const int d = face_size(cand);
    std::vector<Face> common;
    for (Face sub = cand;; sub = (sub - 1) & cand) {
        if (current.is_face(sub)) common.push_back(sub);
        if (sub == 0) break;
    }
    std::vector<Face> maximal = maximal_faces(std::move(common));
    if (maximal.empty()) return false;
    if (maximal.size() == 1 && maximal[0] == 0) return false;
    for (Face m : maximal)
        if (face_size(m) != d - 1) return false;
    return true;
}

inline int generator_count(const SimplicialComplex& delta) {
    return static_cast<int>(stanley_reisner_ideal(delta).generators().size());
}

// Keeps the Cech complexes at desk scale; see the corpus notes in the README.
constexpr int kGeneratorCap = 13;

inline SimplicialComplex random_pure_one(DetRng& rng, int n, int d) {
    const std::vector<Face> pool = all_subsets_of_size(n, d);
    for (int attempt = 0; attempt < 64; ++attempt) {
        int want = rng.range(2, std::min<int>(static_cast<int>(pool.size()), 2 + d + n / 2));
        std::vector<Face> facets;
        while (static_cast<int>(facets.size()) < want) {
            Face f = pool[rng.below(pool.size())];
            if (std::find(facets.begin(), facets.end(), f) == facets.end()) facets.push_back(f);
        }
        SimplicialComplex delta(n, facets);
        // densify until the ideal is small enough (more facets, fewer non-faces)
        for (int grow = 0; grow < 64 && generator_count(delta) > kGeneratorCap; ++grow) {
            std::vector<Face> fs = delta.facets();
            fs.push_back(pool[rng.below(pool.size())]);
            delta = SimplicialComplex(n, fs);
        }
        if (generator_count(delta) <= kGeneratorCap) return delta;
    }
    throw BadParams("could not draw a random pure complex within the generator cap");
}

inline SimplicialComplex shellable_one(DetRng& rng, int n, int d) {
    const std::vector<Face> pool = all_subsets_of_size(n, d);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Face> facets{pool[rng.below(pool.size())]};
        SimplicialComplex delta(n, facets);
        int want = rng.range(1, std::min<int>(static_cast<int>(pool.size()), 2 + n));
        int stuck = 0;
        while (static_cast<int>(delta.facets().size()) < want && stuck < 40) {
            Face cand = pool[rng.below(pool.size())];
            if (delta.is_face(cand) || !attaches_along_ridges(delta, cand)) {
                ++stuck;
                continue;
            }
            std::vector<Face> fs = delta.facets();
            fs.push_back(cand);
            delta = SimplicialComplex(n, fs);
        }
        // same densification trick, but only along shelling extensions
        int grow = 0;
        while (generator_count(delta) > kGeneratorCap && grow < 128) {
            bool extended = false;
            for (int tries = 0; tries < 64; ++tries) {
                Face cand = pool[rng.below(pool.size())];
                if (!delta.is_face(cand) && attaches_along_ridges(delta, cand)) {
                    std::vector<Face> fs = delta.facets();
                    fs.push_back(cand);
                    delta = SimplicialComplex(n, fs);
                    extended = true;
                    break;
                }
            }
            if (!extended) break;
            ++grow;
        }
        if (generator_count(delta) <= kGeneratorCap) return delta;
    }
    throw BadParams("could not draw a shellable complex within the generator cap");
}

inline SimplicialComplex disjoint_blocks_one(DetRng& rng, int n, int d) {
    // b vertex-disjoint d-simplices; leftover vertices stay unused.
    // Cross-block pairs contribute C(b,2)*d*d generators, each unused vertex one.
    int b = n / d;
    while (b >= 2) {
        int leftover = n - b * d;
        long gens = static_cast<long>(b) * (b - 1) / 2 * d * d + leftover;
        if (gens <= kGeneratorCap) break;
        --b;
    }
    if (b < 2) throw BadParams("disjoint_blocks needs room for at least two blocks");
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(verts[i], verts[rng.range(0, i)]);
    std::vector<Face> facets;
    for (int blk = 0; blk < b; ++blk) {
        Face f = 0;
        for (int j = 0; j < d; ++j) f |= Face(1) << (verts[blk * d + j] - 1);
        facets.push_back(f);
    }
    return SimplicialComplex(n, facets);
}

} // namespace detail_corpus

/// Seeded corpus of complexes; deterministic in (kind, n, d, count, seed).
inline std::vector<SimplicialComplex> generate_corpus(CorpusKind kind, int n, int d, int count,
                                                      std::uint64_t seed) {
    if (n < 1 || d < 1 || d > n || n > kMaxVertices)
        throw BadParams("need 1 <= d <= n <= " + std::to_string(kMaxVertices));
    if (count < 1) throw BadParams("count must be positive");
    DetRng rng(seed * 1000003ull + static_cast<std::uint64_t>(kind) * 7919ull +
               static_cast<std::uint64_t>(n) * 131ull + static_cast<std::uint64_t>(d));
    std::vector<SimplicialComplex> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        switch (kind) {
        case CorpusKind::RandomPure:
            out.push_back(detail_corpus::random_pure_one(rng, n, d));
            break;
        case CorpusKind::Shellable:
            out.push_back(detail_corpus::shellable_one(rng, n, d));
            break;
        case CorpusKind::DisjointBlocks:
            out.push_back(detail_corpus::disjoint_blocks_one(rng, n, d));
            break;
        }
    }
    return out;
}

/// Number of blocks disjoint_blocks would produce for these parameters.
inline int disjoint_block_count(int n, int d) {
    int b = n / d;
    while (b >= 2) {
        int leftover = n - b * d;
        long gens = static_cast<long>(b) * (b - 1) / 2 * d * d + leftover;
        if (gens <= detail_corpus::kGeneratorCap) break;
        --b;
    }
    return b;
}

} // namespace lynum
