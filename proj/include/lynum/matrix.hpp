#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lynum/field.hpp"

namespace lynum {

/// Exact matrix over the rationals (or residues of F_p), sparse column storage.
///
/// Entries are canonical mpq_class values. Logical semantics are dense:
/// at(r, c) is defined for every position, absent positions read as zero.
class ExactMatrix {
public:
    using Entry = std::pair<int, mpq_class>; // (row, value), value != 0
    using Column = std::vector<Entry>;       // sorted by row

    ExactMatrix() = default;

    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {
        if (rows < 0 || cols < 0) throw BadParams("negative matrix dimension");
    }

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
        return m;
    }

    static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    mpq_class at(int r, int c) const {
        check_pos(r, c);
        const Column& col = data_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return mpq_class(0);
    }

    void set(int r, int c, const mpq_class& v) {
        check_pos(r, c);
        Column& col = data_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            if (v == 0) col.erase(it);
            else it->second = v;
        } else if (v != 0) {
            col.insert(it, {r, v});
        }
    }

    const Column& column(int c) const {
        if (c < 0 || c >= cols_) throw BadIndex("column index out of range");
        return data_[c];
    }

    void set_column(int c, Column col) {
        if (c < 0 || c >= cols_) throw BadIndex("column index out of range");
        data_[c] = std::move(col);
    }

    int nnz() const {
        int k = 0;
        for (const Column& c : data_) k += static_cast<int>(c.size());
        return k;
    }

    bool is_zero() const { return nnz() == 0; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (int c = 0; c < cols_; ++c)
            for (const Entry& e : data_[c]) t.data_[e.first].emplace_back(c, e.second);
        // columns of t were filled in increasing row order already
        return t;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_pos(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw BadIndex("matrix position out of range");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Column> data_;
};

namespace detail {

struct RationalOps {
    using Elem = mpq_class;
    bool is_zero(const Elem& e) const { return e == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem from_rational(const mpq_class& q) const { return q; }
    mpq_class to_rational(const Elem& e) const { return e; }
};

struct ModularOps {
    long p;
    using Elem = long; // residues in [0, p)
    bool is_zero(Elem e) const { return e == 0; }
    Elem add(Elem a, Elem b) const { long s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { long s = a - b; return s < 0 ? s + p : s; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem div(Elem a, Elem b) const { return mul(a, FieldSpec::inv_mod(b, p)); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem from_rational(const mpq_class& q) const {
        long num = FieldSpec::residue(q.get_num(), p);
        long den = FieldSpec::residue(q.get_den(), p);
        if (den == 0) throw InvalidField("denominator not invertible in F_p");
        return mul(num, FieldSpec::inv_mod(den, p));
    }
    mpq_class to_rational(Elem e) const { return mpq_class(e); }
};

template <class Ops>
using SpCol = std::vector<std::pair<int, typename Ops::Elem>>;

/// dst -= factor * src, sparse merge on sorted columns.
template <class Ops>
void axpy_sub(const Ops& ops, SpCol<Ops>& dst, const typename Ops::Elem& factor,
              const SpCol<Ops>& src) {
    SpCol<Ops> out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j >= src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i >= dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, ops.neg(ops.mul(factor, src[j].second)));
            ++j;
        } else {
            auto v = ops.sub(dst[i].second, ops.mul(factor, src[j].second));
            if (!ops.is_zero(v)) out.emplace_back(dst[i].first, v);
            ++i; ++j;
        }
    }
    dst = std::move(out);
}

/// Echelon set of columns with pairwise distinct leading (lowest) row indices.
/// Columns are processed in a fixed order, making every result deterministic.
template <class Ops>
class ColumnEchelon {
public:
    explicit ColumnEchelon(const Ops& ops) : ops_(ops) {}

    /// Reduce col in place against the stored pivots. If record is nonnull,
    /// subtracts the same combination from it (pivot lifts live there).
    void reduce(SpCol<Ops>& col, SpCol<Ops>* record = nullptr) const {
        while (!col.empty()) {
            int lead = col.front().first;
            auto it = pivot_of_row_.find(lead);
            if (it == pivot_of_row_.end()) return;
            const auto& piv = cols_[it->second];
            auto factor = ops_.div(col.front().second, piv.front().second);
            axpy_sub(ops_, col, factor, piv);
            if (record) axpy_sub(ops_, *record, factor, lifts_[it->second]);
        }
    }

    /// Store col as a new pivot; col must be reduced and nonempty.
    void add_pivot(SpCol<Ops> col, SpCol<Ops> lift = {}) {
        pivot_of_row_[col.front().first] = static_cast<int>(cols_.size());
        cols_.push_back(std::move(col));
        lifts_.push_back(std::move(lift));
    }

    int size() const { return static_cast<int>(cols_.size()); }
    const std::vector<SpCol<Ops>>& columns() const { return cols_; }
    const std::vector<SpCol<Ops>>& lifts() const { return lifts_; }

private:
    const Ops& ops_;
    std::vector<SpCol<Ops>> cols_;
    std::vector<SpCol<Ops>> lifts_;
    std::unordered_map<int, int> pivot_of_row_;
};

template <class Ops>
SpCol<Ops> import_column(const Ops& ops, const ExactMatrix::Column& col) {
    SpCol<Ops> out;
    out.reserve(col.size());
    for (const auto& [r, v] : col) {
        auto e = ops.from_rational(v);
        if (!ops.is_zero(e)) out.emplace_back(r, e);
    }
    return out;
}

template <class Ops>
ExactMatrix::Column export_column(const Ops& ops, const SpCol<Ops>& col) {
    ExactMatrix::Column out;
    out.reserve(col.size());
    for (const auto& [r, v] : col) out.emplace_back(r, ops.to_rational(v));
    return out;
}

template <class Fn>
auto with_field(const FieldSpec& f, Fn&& fn) {
    if (f.is_rational()) return fn(RationalOps{});
    return fn(ModularOps{static_cast<long>(f.characteristic())});
}

template <class Ops>
int rank_impl(const Ops& ops, const ExactMatrix& m) {
    ColumnEchelon<Ops> ech(ops);
    for (int c = 0; c < m.cols(); ++c) {
        auto col = import_column(ops, m.column(c));
        ech.reduce(col);
        if (!col.empty()) ech.add_pivot(std::move(col));
    }
    return ech.size();
}

template <class Ops>
ExactMatrix kernel_impl(const Ops& ops, const ExactMatrix& m) {
    ColumnEchelon<Ops> ech(ops);
    std::vector<SpCol<Ops>> kernel;
    for (int c = 0; c < m.cols(); ++c) {
        auto col = import_column(ops, m.column(c));
        SpCol<Ops> record{{c, ops.from_rational(1)}};
        ech.reduce(col, &record);
        if (col.empty()) kernel.push_back(std::move(record));
        else ech.add_pivot(std::move(col), std::move(record));
    }
    ExactMatrix out(m.cols(), static_cast<int>(kernel.size()));
    for (std::size_t k = 0; k < kernel.size(); ++k)
        out.set_column(static_cast<int>(k), export_column(ops, kernel[k]));
    return out;
}

} // namespace detail

/// Rank over the given field. Deterministic: columns are eliminated left to
/// right against an echelon of previously seen pivots.
inline int rank(const ExactMatrix& m, const FieldSpec& f) {
    return detail::with_field(f, [&](auto ops) { return detail::rank_impl(ops, m); });
}

/// Basis of the right kernel, returned as the columns of a cols x k matrix.
/// Each basis vector has coefficient 1 at its own non-pivot column index.
inline ExactMatrix kernel_basis(const ExactMatrix& m, const FieldSpec& f) {
    return detail::with_field(f, [&](auto ops) { return detail::kernel_impl(ops, m); });
}

/// Product a*b with entries canonicalized in f.
inline ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, const FieldSpec& f) {
    if (a.cols() != b.rows()) throw BadParams("dimension mismatch in multiply");
    return detail::with_field(f, [&](auto ops) {
        ExactMatrix out(a.rows(), b.cols());
        for (int c = 0; c < b.cols(); ++c) {
            detail::SpCol<decltype(ops)> acc;
            for (const auto& [k, v] : b.column(c)) {
                auto factor = ops.neg(ops.from_rational(v));
                detail::axpy_sub(ops, acc, factor, detail::import_column(ops, a.column(k)));
            }
            out.set_column(c, detail::export_column(ops, acc));
        }
        return out;
    });
}

/// a - b over f (used by consistency checks).
inline ExactMatrix subtract(const ExactMatrix& a, const ExactMatrix& b, const FieldSpec& f) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw BadParams("dimension mismatch in subtract");
    ExactMatrix out(a.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        ExactMatrix::Column col;
        std::size_t i = 0, j = 0;
        const auto& ca = a.column(c);
        const auto& cb = b.column(c);
        while (i < ca.size() || j < cb.size()) {
            if (j >= cb.size() || (i < ca.size() && ca[i].first < cb[j].first)) {
                col.push_back(ca[i++]);
            } else if (i >= ca.size() || cb[j].first < ca[i].first) {
                col.emplace_back(cb[j].first, f.neg(cb[j].second));
                ++j;
            } else {
                mpq_class v = f.sub(ca[i].second, cb[j].second);
                if (v != 0) col.emplace_back(ca[i].first, v);
                ++i; ++j;
            }
        }
        out.set_column(c, std::move(col));
    }
    return out;
}

} // namespace lynum
