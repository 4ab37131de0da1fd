#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lynum/matrix.hpp"

namespace lynum {

/// A subquotient S/T of an ambient coordinate space, with a chosen section.
///
/// Stored as two echelonized column families over the field:
///   denom_cols  - echelon basis of T (e.g. the image of an incoming map)
///   rep_cols    - representatives of a basis of S/T; they lie in S, and their
///                 leading rows are disjoint from those of denom_cols
/// Together the two families span S, so membership in S, membership in T, and
/// coordinates of a class are all answered by reduction against the echelon.
class Subquotient {
public:
    Subquotient() = default;

    Subquotient(int ambient, FieldSpec f, std::vector<ExactMatrix::Column> denom_cols,
                std::vector<ExactMatrix::Column> rep_cols)
        : ambient_(ambient), field_(f), denom_(std::move(denom_cols)),
          reps_(std::move(rep_cols)) {
        for (std::size_t i = 0; i < denom_.size(); ++i)
            low_map_[denom_[i].front().first] = {0, static_cast<int>(i)};
        for (std::size_t i = 0; i < reps_.size(); ++i)
            low_map_[reps_[i].front().first] = {1, static_cast<int>(i)};
    }

    /// The full space k^dim viewed as a subquotient of itself.
    static Subquotient full(int dim, const FieldSpec& f) {
        std::vector<ExactMatrix::Column> reps(dim);
        for (int i = 0; i < dim; ++i) reps[i] = {{i, mpq_class(1)}};
        return Subquotient(dim, f, {}, std::move(reps));
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(reps_.size()); }
    const FieldSpec& field() const { return field_; }

    /// Chosen representatives of the quotient basis, as ambient columns.
    ExactMatrix representatives() const {
        ExactMatrix m(ambient_, dim());
        for (int i = 0; i < dim(); ++i) m.set_column(i, reps_[i]);
        return m;
    }

    /// Basis of the subspace S (denominator columns followed by representatives).
    ExactMatrix subspace_basis() const {
        ExactMatrix m(ambient_, static_cast<int>(denom_.size()) + dim());
        int c = 0;
        for (const auto& col : denom_) m.set_column(c++, col);
        for (const auto& col : reps_) m.set_column(c++, col);
        return m;
    }

    ExactMatrix denominator_basis() const {
        ExactMatrix m(ambient_, static_cast<int>(denom_.size()));
        for (std::size_t i = 0; i < denom_.size(); ++i)
            m.set_column(static_cast<int>(i), denom_[i]);
        return m;
    }

    /// Coordinates of an ambient vector's class, if the vector lies in S.
    std::optional<std::vector<mpq_class>> coords_of(const ExactMatrix::Column& v) const {
        std::vector<mpq_class> coords(dim(), mpq_class(0));
        ExactMatrix::Column rem = v;
        if (!reduce(rem, &coords)) return std::nullopt;
        return coords;
    }

    /// True iff the vector lies in T.
    bool in_denominator(const ExactMatrix::Column& v) const {
        ExactMatrix::Column rem = v;
        std::vector<mpq_class> coords(dim(), mpq_class(0));
        if (!reduce(rem, &coords)) return false;
        for (const mpq_class& c : coords)
            if (c != 0) return false;
        return true;
    }

    /// Retraction matrix dim x ambient: projection . representatives = identity,
    /// T and the complement of S map to zero resp. arbitrarily-but-linearly.
    ExactMatrix quotient_projection() const {
        ExactMatrix proj(dim(), ambient_);
        for (int c = 0; c < ambient_; ++c) {
            ExactMatrix::Column e{{c, mpq_class(1)}};
            std::vector<mpq_class> coords(dim(), mpq_class(0));
            ExactMatrix::Column rem = e;
            reduce_best_effort(rem, &coords);
            for (int i = 0; i < dim(); ++i)
                if (coords[i] != 0) proj.set(i, c, coords[i]);
        }
        return proj;
    }

private:
    friend Subquotient cohomology_at(const ExactMatrix&, const ExactMatrix&, const FieldSpec&);
    friend ExactMatrix induced_map(const Subquotient&, const Subquotient&, const ExactMatrix&);

    // Reduce v against denominator and representative echelons. Returns true
    // iff v reduced to zero (v in S); rep coefficients are accumulated.
    bool reduce(ExactMatrix::Column& v, std::vector<mpq_class>* coords) const {
        reduce_best_effort(v, coords);
        return v.empty();
    }

    void reduce_best_effort(ExactMatrix::Column& v, std::vector<mpq_class>* coords) const {
        while (!v.empty()) {
            int lead = v.front().first;
            auto it = low_map_.find(lead);
            if (it == low_map_.end()) return;
            const bool is_rep = it->second.first == 1;
            const int rep_idx = is_rep ? it->second.second : -1;
            const ExactMatrix::Column* piv =
                is_rep ? &reps_[it->second.second] : &denom_[it->second.second];
            mpq_class factor = field_.div(v.front().second, piv->front().second);
            // v -= factor * piv, canonicalized in the field
            ExactMatrix::Column out;
            out.reserve(v.size() + piv->size());
            std::size_t i = 0, j = 0;
            while (i < v.size() || j < piv->size()) {
                if (j >= piv->size() || (i < v.size() && v[i].first < (*piv)[j].first)) {
                    out.push_back(v[i++]);
                } else if (i >= v.size() || (*piv)[j].first < v[i].first) {
                    mpq_class t = field_.neg(field_.mul(factor, (*piv)[j].second));
                    if (t != 0) out.emplace_back((*piv)[j].first, t);
                    ++j;
                } else {
                    mpq_class t = field_.sub(v[i].second, field_.mul(factor, (*piv)[j].second));
                    if (t != 0) out.emplace_back(v[i].first, t);
                    ++i; ++j;
                }
            }
            v = std::move(out);
            if (coords && rep_idx >= 0) (*coords)[rep_idx] = field_.add((*coords)[rep_idx], factor);
        }
    }

    int ambient_ = 0;
    FieldSpec field_;
    std::vector<ExactMatrix::Column> denom_; // echelon basis of T
    std::vector<ExactMatrix::Column> reps_;  // class representatives, echelon mod T
    std::unordered_map<int, std::pair<int, int>> low_map_; // lead row -> (family, index)
};

/// Cohomology ker(d_out)/im(d_in) at the middle of  . --d_in--> . --d_out--> .
///
/// Requires d_out . d_in = 0 (throws NotAComplex otherwise). The returned
/// subquotient carries a section: induced maps can be computed against it.
inline Subquotient cohomology_at(const ExactMatrix& d_in, const ExactMatrix& d_out,
                                 const FieldSpec& f) {
    if (d_in.rows() != d_out.cols())
        throw NotAComplex("ambient dimension mismatch between d_in and d_out");
    if (d_in.cols() > 0 && d_out.rows() > 0 && !multiply(d_out, d_in, f).is_zero())
        throw NotAComplex("d_out * d_in is nonzero");

    const int ambient = d_out.cols();
    return detail::with_field(f, [&](auto ops) {
        using Ops = decltype(ops);
        // Kernel of d_out, with lifts tracked in ambient coordinates.
        detail::ColumnEchelon<Ops> out_ech(ops);
        std::vector<detail::SpCol<Ops>> kernel;
        for (int c = 0; c < ambient; ++c) {
            auto col = detail::import_column(ops, d_out.column(c));
            detail::SpCol<Ops> record{{c, ops.from_rational(1)}};
            out_ech.reduce(col, &record);
            if (col.empty()) kernel.push_back(std::move(record));
            else out_ech.add_pivot(std::move(col), std::move(record));
        }
        // Echelon image of d_in.
        detail::ColumnEchelon<Ops> im_ech(ops);
        for (int c = 0; c < d_in.cols(); ++c) {
            auto col = detail::import_column(ops, d_in.column(c));
            im_ech.reduce(col);
            if (!col.empty()) im_ech.add_pivot(std::move(col));
        }
        // Representatives: kernel vectors surviving reduction mod image.
        detail::ColumnEchelon<Ops> rep_ech(ops);
        for (auto& k : kernel) {
            im_ech.reduce(k);
            rep_ech.reduce(k);
            if (!k.empty()) rep_ech.add_pivot(std::move(k));
        }
        const int expected = static_cast<int>(kernel.size()) - im_ech.size();
        if (rep_ech.size() != expected)
            throw EngineInconsistency("cohomology dimension bookkeeping failed");

        std::vector<ExactMatrix::Column> denom, reps;
        for (const auto& col : im_ech.columns()) denom.push_back(detail::export_column(ops, col));
        for (const auto& col : rep_ech.columns()) reps.push_back(detail::export_column(ops, col));
        return Subquotient(ambient, f, std::move(denom), std::move(reps));
    });
}

namespace detail {

inline ExactMatrix::Column apply_to_column(const ExactMatrix& m, const ExactMatrix::Column& v,
                                           const FieldSpec& f) {
    // m * v as a sparse column
    std::vector<std::pair<int, mpq_class>> acc;
    for (const auto& [c, val] : v) {
        for (const auto& [r, mval] : m.column(c)) {
            acc.emplace_back(r, f.mul(mval, val));
        }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ExactMatrix::Column out;
    for (const auto& [r, val] : acc) {
        if (!out.empty() && out.back().first == r) {
            out.back().second = f.add(out.back().second, val);
            if (out.back().second == 0) out.pop_back();
        } else if (val != 0) {
            out.emplace_back(r, val);
        }
    }
    return out;
}

} // namespace detail

/// Matrix of the map induced on subquotients by an ambient chain map.
///
/// Verifies compatibility: the chain map must send src's subspace into dst's
/// subspace and src's denominator into dst's denominator (NotChainMap else).
inline ExactMatrix induced_map(const Subquotient& src, const Subquotient& dst,
                               const ExactMatrix& chain_map) {
    if (chain_map.cols() != src.ambient_dim() || chain_map.rows() != dst.ambient_dim())
        throw NotChainMap("chain map has wrong shape");
    const FieldSpec& f = src.field();
    for (const auto& col : src.denom_) {
        auto w = detail::apply_to_column(chain_map, col, f);
        if (!dst.in_denominator(w))
            throw NotChainMap("chain map does not preserve the denominator subspace");
    }
    ExactMatrix out(dst.dim(), src.dim());
    for (int i = 0; i < src.dim(); ++i) {
        auto w = detail::apply_to_column(chain_map, src.reps_[i], f);
        auto coords = dst.coords_of(w);
        if (!coords)
            throw NotChainMap("chain map does not preserve the subspace");
        for (int r = 0; r < dst.dim(); ++r)
            if ((*coords)[r] != 0) out.set(r, i, (*coords)[r]);
    }
    return out;
}

} // namespace lynum
