#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "lynum/simplicial.hpp"
#include "lynum/subquotient.hpp"

namespace lynum {

/// A Z^n-degree.
struct MultiDegree {
    std::vector<int> a;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<int> v) : a(std::move(v)) {}

    int size() const { return static_cast<int>(a.size()); }

    /// Bitmask of coordinates with a_i < 0.
    Face negative_pattern() const {
        Face g = 0;
        for (int i = 0; i < size(); ++i)
            if (a[i] < 0) g |= Face(1) << i;
        return g;
    }

    static MultiDegree minus_chi(Face g, int n) {
        std::vector<int> v(n, 0);
        for (int i = 0; i < n; ++i)
            if (g & (Face(1) << i)) v[i] = -1;
        return MultiDegree(std::move(v));
    }
};

/// Finite model of a Z^n-graded straight module: one coordinate space V_G per
/// sign pattern G, plus the crossing maps u_{G,i}: V_G -> V_{G minus i} that
/// realize multiplication by x_i across the hyperplane a_i = -1.
///
/// Every graded piece of the module is recovered by the extension rule
/// M_a = V_{neg(a)}; x_i acts as the identity except at the crossing, where it
/// acts as u.
struct StraightModuleTable {
    int n = 0;
    int position = 0; // cohomological position this table was built from
    FieldSpec field;
    std::vector<Subquotient> pieces;                 // indexed by pattern mask
    std::map<std::pair<Face, int>, ExactMatrix> crossings; // (G, i 1-based)

    int dim(Face pattern) const { return pieces[pattern].dim(); }

    bool is_zero() const {
        for (const auto& p : pieces)
            if (p.dim() > 0) return false;
        return true;
    }

    /// u_{G,i}: V_G -> V_{G minus i}; i must lie in G (1-based).
    ExactMatrix crossing(Face pattern, int i) const {
        Face bit = Face(1) << (i - 1);
        if (!(pattern & bit)) throw BadIndex("crossing variable not in the pattern");
        auto it = crossings.find({pattern, i});
        if (it != crossings.end()) return it->second;
        return ExactMatrix::zero(dim(pattern & ~bit), dim(pattern));
    }

    int graded_piece(const MultiDegree& a) const {
        if (a.size() != n) throw BadIndex("degree length does not match the ring");
        return dim(a.negative_pattern());
    }
};

namespace detail_cech {

inline Face support_union(const std::vector<Face>& gens, std::uint32_t subset) {
    Face u = 0;
    for (int i = 0; subset; ++i, subset >>= 1)
        if (subset & 1u) u |= gens[i];
    return u;
}

/// Generator subsets of size p whose supports jointly cover the pattern,
/// in lexicographic order of index tuples.
inline std::vector<std::uint32_t> level_sets(const std::vector<Face>& gens, int p, Face pattern) {
    const int t = static_cast<int>(gens.size());
    std::vector<std::uint32_t> out;
    if (p < 0 || p > t) return out;
    if (p == 0) {
        if (pattern == 0) out.push_back(0);
        return out;
    }
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        std::uint32_t s = 0;
        for (int i : idx) s |= std::uint32_t(1) << i;
        if ((support_union(gens, s) & pattern) == pattern) out.push_back(s);
        int k = p - 1;
        while (k >= 0 && idx[k] == t - p + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j2 = k + 1; j2 < p; ++j2) idx[j2] = idx[j2 - 1] + 1;
    }
    return out;
}

inline int insertion_sign(std::uint32_t set_with, std::uint32_t bit) {
    return (__builtin_popcount(set_with & (bit - 1)) % 2 == 0) ? 1 : -1;
}

/// Coboundary matrix from the lower level to the upper level.
inline ExactMatrix coboundary(const std::vector<std::uint32_t>& lower,
                              const std::vector<std::uint32_t>& upper, int t) {
    std::map<std::uint32_t, int> upper_index;
    for (std::size_t i = 0; i < upper.size(); ++i)
        upper_index[upper[i]] = static_cast<int>(i);
    ExactMatrix m(static_cast<int>(upper.size()), static_cast<int>(lower.size()));
    for (std::size_t c = 0; c < lower.size(); ++c) {
        ExactMatrix::Column col;
        for (int i = 0; i < t; ++i) {
            std::uint32_t bit = std::uint32_t(1) << i;
            if (lower[c] & bit) continue;
            auto it = upper_index.find(lower[c] | bit);
            if (it == upper_index.end()) continue;
            col.emplace_back(it->second, mpq_class(insertion_sign(lower[c] | bit, bit)));
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        m.set_column(static_cast<int>(c), std::move(col));
    }
    return m;
}

constexpr std::size_t kLevelCap = 50000;

inline void check_level_size(std::size_t s) {
    if (s > kLevelCap)
        throw BadParams("ideal has too many generators for the Cech engine at this position");
}

} // namespace detail_cech

/// Cech cohomology engine with memoized per-pattern dimensions and tables.
/// All public computations are deterministic; the caches are guarded for
/// concurrent readers with exclusive insertion.
class CechEngine {
public:
    struct Options {
        bool validate = true; // cross-check tables on construction
        int box_lo = -2;      // validation box, one step beyond the structural box
        int box_hi = 1;
    };

    CechEngine() = default;
    explicit CechEngine(Options opts) : opts_(opts) {}

    const Options& options() const { return opts_; }

    /// Degree-a piece of the local cohomology at the given position, computed
    /// from the Cech complex on the ideal's minimal generators.
    Subquotient cech_piece(const SquarefreeMonomialIdeal& ideal, int position,
                           const MultiDegree& a, const FieldSpec& f) {
        if (a.size() != ideal.variable_count())
            throw BadIndex("degree length does not match the ring");
        return cech_piece_raw(ideal.variable_count(), ideal.generators(), position, a, f);
    }

    /// Same computation on an explicit (possibly redundant) generator list.
    static Subquotient cech_piece_raw(int n, const std::vector<Face>& gens, int position,
                                      const MultiDegree& a, const FieldSpec& f) {
        const int t = static_cast<int>(gens.size());
        if (position < 0 || position > t)
            throw BadIndex("Cech position out of range 0..t");
        if (a.size() != n) throw BadIndex("degree length does not match the ring");
        Face pattern = a.negative_pattern();
        auto below = detail_cech::level_sets(gens, position - 1, pattern);
        auto level = detail_cech::level_sets(gens, position, pattern);
        auto above = detail_cech::level_sets(gens, position + 1, pattern);
        detail_cech::check_level_size(below.size());
        detail_cech::check_level_size(level.size());
        detail_cech::check_level_size(above.size());
        ExactMatrix d_in = detail_cech::coboundary(below, level, t);
        ExactMatrix d_out = detail_cech::coboundary(level, above, t);
        return cohomology_at(d_in, d_out, f);
    }

    /// Dimension of the degree piece; memoized by the generator traces on the
    /// pattern (the complex only depends on those).
    int cech_dim(const SquarefreeMonomialIdeal& ideal, int position, Face pattern,
                 const FieldSpec& f) {
        return cech_dim_raw(ideal.generators(), position, pattern, f);
    }

    int cech_dim_raw(const std::vector<Face>& gens, int position, Face pattern,
                     const FieldSpec& f) {
        const int t = static_cast<int>(gens.size());
        if (position < 0 || position > t)
            throw BadIndex("Cech position out of range 0..t");
        DimKey key{traces_of(gens, pattern), position, f.characteristic()};
        {
            std::shared_lock lk(mutex_);
            auto it = dim_cache_.find(key);
            if (it != dim_cache_.end()) return it->second;
        }
        auto below = detail_cech::level_sets(gens, position - 1, pattern);
        auto level = detail_cech::level_sets(gens, position, pattern);
        auto above = detail_cech::level_sets(gens, position + 1, pattern);
        detail_cech::check_level_size(below.size());
        detail_cech::check_level_size(level.size());
        detail_cech::check_level_size(above.size());
        int dim = static_cast<int>(level.size()) -
                  rank(detail_cech::coboundary(level, above, t), f) -
                  rank(detail_cech::coboundary(below, level, t), f);
        std::unique_lock lk(mutex_);
        dim_cache_.emplace(std::move(key), dim);
        return dim;
    }

    /// The finite straight-module model of the local cohomology at `position`.
    std::shared_ptr<const StraightModuleTable> straight_table(const SquarefreeMonomialIdeal& ideal,
                                                              int position, const FieldSpec& f) {
        auto cache_key = std::make_tuple(ideal.key(), position, f.characteristic());
        {
            std::shared_lock lk(mutex_);
            auto it = table_cache_.find(cache_key);
            if (it != table_cache_.end()) return it->second;
        }
        auto table = std::make_shared<StraightModuleTable>(build_table(ideal, position, f));
        std::unique_lock lk(mutex_);
        auto [it, inserted] = table_cache_.emplace(cache_key, table);
        return it->second;
    }

private:
    struct DimKey {
        std::vector<Face> traces;
        int position;
        std::uint32_t chr;
        bool operator<(const DimKey& o) const {
            return std::tie(traces, position, chr) < std::tie(o.traces, o.position, o.chr);
        }
    };

    static std::vector<Face> traces_of(const std::vector<Face>& gens, Face pattern) {
        std::vector<Face> tr;
        tr.reserve(gens.size());
        for (Face g : gens) tr.push_back(g & pattern);
        std::sort(tr.begin(), tr.end());
        return tr;
    }

    StraightModuleTable build_table(const SquarefreeMonomialIdeal& ideal, int position,
                                    const FieldSpec& f) {
        const int n = ideal.variable_count();
        const int t = static_cast<int>(ideal.generators().size());
        if (position < 0 || position > t)
            throw BadIndex("Cech position out of range 0..t");
        const std::vector<Face>& gens = ideal.generators();
        const Face npatterns = Face(1) << n;

        StraightModuleTable table;
        table.n = n;
        table.position = position;
        table.field = f;
        table.pieces.resize(npatterns);

        std::vector<int> dims(npatterns, 0);
        for (Face g = 0; g < npatterns; ++g) dims[g] = cech_dim(ideal, position, g, f);

        // Full subquotients (with sections) only where the piece is nonzero.
        std::map<Face, Subquotient> sq;
        std::map<Face, std::vector<std::uint32_t>> level_of;
        for (Face g = 0; g < npatterns; ++g) {
            if (dims[g] == 0) {
                table.pieces[g] = Subquotient::full(0, f);
                continue;
            }
            auto below = detail_cech::level_sets(gens, position - 1, g);
            auto level = detail_cech::level_sets(gens, position, g);
            auto above = detail_cech::level_sets(gens, position + 1, g);
            Subquotient piece = cohomology_at(detail_cech::coboundary(below, level, t),
                                              detail_cech::coboundary(level, above, t), f);
            if (piece.dim() != dims[g])
                throw EngineInconsistency("rank-based and section-based dimensions disagree");
            sq.emplace(g, std::move(piece));
            level_of.emplace(g, std::move(level));
            table.pieces[g] = Subquotient::full(dims[g], f);
        }

        // Crossing maps between nonzero pieces, induced by basis inclusion
        // (multiplication by x_i is the identity on the surviving subsets).
        for (auto& [g, src] : sq) {
            for (int i = 1; i <= n; ++i) {
                Face bit = Face(1) << (i - 1);
                if (!(g & bit)) continue;
                Face h = g & ~bit;
                auto dst_it = sq.find(h);
                if (dst_it == sq.end()) continue;
                const auto& src_level = level_of[g];
                const auto& dst_level = level_of[h];
                std::map<std::uint32_t, int> dst_index;
                for (std::size_t k = 0; k < dst_level.size(); ++k)
                    dst_index[dst_level[k]] = static_cast<int>(k);
                ExactMatrix incl(static_cast<int>(dst_level.size()),
                                 static_cast<int>(src_level.size()));
                for (std::size_t c = 0; c < src_level.size(); ++c) {
                    auto it = dst_index.find(src_level[c]);
                    if (it == dst_index.end())
                        throw EngineInconsistency("covering sets must survive pattern shrink");
                    incl.set(it->second, static_cast<int>(c), mpq_class(1));
                }
                table.crossings.emplace(std::make_pair(g, i),
                                        induced_map(src, dst_it->second, incl));
            }
        }

        if (opts_.validate) validate_table(table, ideal, f);
        return table;
    }

    void validate_table(const StraightModuleTable& table, const SquarefreeMonomialIdeal& ideal,
                        const FieldSpec& f) {
        const int n = table.n;
        // crossing commutativity
        for (Face g = 0; g < (Face(1) << n); ++g) {
            if (table.dim(g) == 0) continue;
            for (int i = 1; i <= n; ++i) {
                if (!(g & (Face(1) << (i - 1)))) continue;
                for (int j2 = i + 1; j2 <= n; ++j2) {
                    if (!(g & (Face(1) << (j2 - 1)))) continue;
                    Face gi = g & ~(Face(1) << (i - 1));
                    Face gj = g & ~(Face(1) << (j2 - 1));
                    ExactMatrix lhs = multiply(table.crossing(gi, j2), table.crossing(g, i), f);
                    ExactMatrix rhs = multiply(table.crossing(gj, i), table.crossing(g, j2), f);
                    if (!(lhs == rhs))
                        throw EngineInconsistency("crossing maps do not commute");
                }
            }
        }
        // extension rule against the direct computation over the box
        if (n <= 8) {
            std::vector<int> a(n, opts_.box_lo);
            while (true) {
                MultiDegree deg{std::vector<int>(a)};
                if (table.graded_piece(deg) !=
                    cech_dim(ideal, table.position, deg.negative_pattern(), f))
                    throw EngineInconsistency("extension rule mismatch on the validation box");
                int k = 0;
                while (k < n && a[k] == opts_.box_hi) { a[k] = opts_.box_lo; ++k; }
                if (k == n) break;
                ++a[k];
            }
        } else {
            for (Face g = 0; g < (Face(1) << n); ++g)
                if (table.dim(g) != cech_dim(ideal, table.position, g, f))
                    throw EngineInconsistency("extension rule mismatch on the validation box");
        }
    }

    Options opts_;
    mutable std::shared_mutex mutex_;
    std::map<DimKey, int> dim_cache_;
    std::map<std::tuple<std::string, int, std::uint32_t>, std::shared_ptr<const StraightModuleTable>>
        table_cache_;
};

/// Zero table in the shape of the given ring (used for out-of-range positions).
inline StraightModuleTable zero_table(int n, int position, const FieldSpec& f) {
    StraightModuleTable t;
    t.n = n;
    t.position = position;
    t.field = f;
    t.pieces.assign(std::size_t(1) << n, Subquotient::full(0, f));
    return t;
}

/// straight_table when the position is within 0..t, the zero table otherwise.
inline std::shared_ptr<const StraightModuleTable> table_or_zero(
    CechEngine& engine, const SquarefreeMonomialIdeal& ideal, int position, const FieldSpec& f) {
    const int t = static_cast<int>(ideal.generators().size());
    if (position < 0 || position > t)
        return std::make_shared<StraightModuleTable>(zero_table(ideal.variable_count(), position, f));
    return engine.straight_table(ideal, position, f);
}

/// Localization at x_v: the pattern forgets v, x_v becomes invertible.
inline StraightModuleTable localize(const StraightModuleTable& t, int v) {
    if (v < 1 || v > t.n) throw BadIndex("variable out of range");
    Face bit = Face(1) << (v - 1);
    StraightModuleTable out;
    out.n = t.n;
    out.position = t.position;
    out.field = t.field;
    out.pieces.resize(std::size_t(1) << t.n);
    for (Face g = 0; g < (Face(1) << t.n); ++g)
        out.pieces[g] = Subquotient::full(t.dim(g & ~bit), t.field);
    for (Face g = 0; g < (Face(1) << t.n); ++g) {
        for (int i = 1; i <= t.n; ++i) {
            Face ibit = Face(1) << (i - 1);
            if (!(g & ibit)) continue;
            if (out.pieces[g].dim() == 0 || out.pieces[g & ~ibit].dim() == 0) continue;
            if (i == v) {
                out.crossings.emplace(std::make_pair(g, i),
                                      ExactMatrix::identity(out.pieces[g].dim()));
            } else {
                out.crossings.emplace(std::make_pair(g, i), t.crossing(g & ~bit, i));
            }
        }
    }
    return out;
}

namespace detail_cech {

/// Shared shape of the torsion/cokernel constructions: pieces are built by a
/// small cohomology computation from the crossing maps, then crossings are
/// induced functorially.
template <class PieceFn>
StraightModuleTable derived_table(const StraightModuleTable& t, int v, PieceFn make_piece) {
    Face vbit = Face(1) << (v - 1);
    StraightModuleTable out;
    out.n = t.n;
    out.position = t.position;
    out.field = t.field;
    out.pieces.resize(std::size_t(1) << t.n);
    std::map<Face, Subquotient> sq;
    for (Face g = 0; g < (Face(1) << t.n); ++g) {
        std::optional<Subquotient> piece = make_piece(g);
        if (piece) {
            out.pieces[g] = Subquotient::full(piece->dim(), t.field);
            sq.emplace(g, std::move(*piece));
        } else {
            out.pieces[g] = Subquotient::full(0, t.field);
        }
    }
    for (auto& [g, src] : sq) {
        if (src.dim() == 0) continue;
        for (int i = 1; i <= t.n; ++i) {
            Face ibit = Face(1) << (i - 1);
            if (!(g & ibit) || i == v) continue;
            auto dst_it = sq.find(g & ~ibit);
            if (dst_it == sq.end() || dst_it->second.dim() == 0) continue;
            out.crossings.emplace(std::make_pair(g, i),
                                  induced_map(src, dst_it->second, t.crossing(g, i)));
        }
    }
    (void)vbit;
    return out;
}

} // namespace detail_cech

/// x_v-torsion part H^0_{(x_v)}: kernels of the crossing maps across v.
inline StraightModuleTable torsion_h0(const StraightModuleTable& t, int v) {
    if (v < 1 || v > t.n) throw BadIndex("variable out of range");
    Face vbit = Face(1) << (v - 1);
    return detail_cech::derived_table(t, v, [&](Face g) -> std::optional<Subquotient> {
        if (!(g & vbit)) return std::nullopt;
        ExactMatrix u = t.crossing(g, v);
        return cohomology_at(ExactMatrix::zero(t.dim(g), 0), u, t.field);
    });
}

/// First local cohomology at (x_v): cokernels of the crossing maps into the
/// pattern, matching the four-term localization sequence degreewise.
inline StraightModuleTable local_h1(const StraightModuleTable& t, int v) {
    if (v < 1 || v > t.n) throw BadIndex("variable out of range");
    Face vbit = Face(1) << (v - 1);
    return detail_cech::derived_table(t, v, [&](Face g) -> std::optional<Subquotient> {
        if (g & vbit) return std::nullopt;
        ExactMatrix u = t.crossing(g | vbit, v);
        return cohomology_at(u, ExactMatrix::zero(0, t.dim(g)), t.field);
    });
}

struct SupportInfo {
    std::optional<int> dim;             // empty when the module vanishes
    std::vector<Face> minimal_patterns; // minimal nonzero patterns (antichain)
};

/// Support dimension: n minus the smallest nonzero pattern size; the minimal
/// patterns are the minimal primes of the support.
inline SupportInfo support_dim(const StraightModuleTable& t) {
    std::vector<Face> nonzero;
    for (Face g = 0; g < (Face(1) << t.n); ++g)
        if (t.dim(g) > 0) nonzero.push_back(g);
    SupportInfo info;
    if (nonzero.empty()) return info;
    int min_size = t.n;
    for (Face g : nonzero) min_size = std::min(min_size, face_size(g));
    info.dim = t.n - min_size;
    info.minimal_patterns = minimal_faces(std::move(nonzero));
    return info;
}

} // namespace lynum
