#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sinv/detail/work_matrix.hpp"
#include "sinv/rings.hpp"
#include "sinv/sparse_matrix.hpp"

namespace sinv {

enum class OpKind { RowSwap, ColSwap, RowAdd, ColAdd, RowScale, ColScale };

/// One elementary row/column operation. RowAdd means row_i += factor * row_j;
/// scales multiply by a unit; swaps exchange i and j.
template <typename R>
struct ElementaryOp {
    OpKind kind;
    int i;
    int j;
    typename R::Element factor;
};

namespace detail {

inline std::size_t element_bits(const IntegerRing&, const mpz_class& v) {
    return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}
inline std::size_t element_bits(const RationalField&, const mpq_class&) { return 0; }
inline std::size_t element_bits(const PrimeField&, std::int64_t) { return 0; }

} // namespace detail

/// Outcome of an elimination to diagonal form. Over Z the diagonal is the
/// invariant factor list (divisibility chain, positive); over a field it is a
/// run of ones of length rank. When tracking was requested, the elementary
/// operation log reproduces U and V with U*A*V = D; the dense transforms are
/// materialized on demand only.
template <typename R>
class SnfResult {
public:
    using Element = typename R::Element;

    int rows = 0;
    int cols = 0;
    std::vector<Element> diagonal;
    bool tracked = false;
    std::vector<ElementaryOp<R>> ops;
    /// Largest bit size of any matrix entry seen during elimination (Z only).
    std::size_t max_coefficient_bits = 0;

    int rank() const { return static_cast<int>(diagonal.size()); }

    SparseMatrix<R> row_transform(const R& ring) const {
        auto w = detail::WorkMatrix<R>::identity(ring, rows);
        for (const auto& op : ops) apply_row_op(ring, w, op);
        return w.to_sparse(ring);
    }

    SparseMatrix<R> col_transform(const R& ring) const {
        auto w = detail::WorkMatrix<R>::identity(ring, cols);
        for (const auto& op : ops) apply_col_op(ring, w, op);
        return w.to_sparse(ring);
    }

    SparseMatrix<R> row_transform_inverse(const R& ring) const {
        auto w = detail::WorkMatrix<R>::identity(ring, rows);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            apply_row_op(ring, w, inverted(ring, *it));
        return w.to_sparse(ring);
    }

    SparseMatrix<R> col_transform_inverse(const R& ring) const {
        auto w = detail::WorkMatrix<R>::identity(ring, cols);
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            apply_col_op(ring, w, inverted(ring, *it));
        return w.to_sparse(ring);
    }

    /// U * v without materializing U.
    std::vector<Element> apply_row_transform(const R& ring, std::vector<Element> v) const {
        for (const auto& op : ops) {
            switch (op.kind) {
                case OpKind::RowSwap:
                    std::swap(v[static_cast<std::size_t>(op.i)], v[static_cast<std::size_t>(op.j)]);
                    break;
                case OpKind::RowAdd:
                    v[static_cast<std::size_t>(op.i)] =
                        ring.add(v[static_cast<std::size_t>(op.i)],
                                 ring.mul(op.factor, v[static_cast<std::size_t>(op.j)]));
                    break;
                case OpKind::RowScale:
                    v[static_cast<std::size_t>(op.i)] =
                        ring.mul(op.factor, v[static_cast<std::size_t>(op.i)]);
                    break;
                default:
                    break;
            }
        }
        return v;
    }

    /// V * y without materializing V. Column ops compose on the right, so the
    /// left action on a vector replays them in reverse.
    std::vector<Element> apply_col_transform(const R& ring, std::vector<Element> y) const {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            const auto& op = *it;
            switch (op.kind) {
                case OpKind::ColSwap:
                    std::swap(y[static_cast<std::size_t>(op.i)], y[static_cast<std::size_t>(op.j)]);
                    break;
                case OpKind::ColAdd:
                    // col_i += c * col_j contributes c * y_i to position j.
                    y[static_cast<std::size_t>(op.j)] =
                        ring.add(y[static_cast<std::size_t>(op.j)],
                                 ring.mul(op.factor, y[static_cast<std::size_t>(op.i)]));
                    break;
                case OpKind::ColScale:
                    y[static_cast<std::size_t>(op.i)] =
                        ring.mul(op.factor, y[static_cast<std::size_t>(op.i)]);
                    break;
                default:
                    break;
            }
        }
        return y;
    }

    /// Determinant of U (product of scale factors, sign-flipped per swap).
    Element det_row_transform(const R& ring) const { return det_of(ring, /*row_side=*/true); }
    Element det_col_transform(const R& ring) const { return det_of(ring, /*row_side=*/false); }

private:
    static bool is_row_op(OpKind k) {
        return k == OpKind::RowSwap || k == OpKind::RowAdd || k == OpKind::RowScale;
    }

    static void apply_row_op(const R& ring, detail::WorkMatrix<R>& w, const ElementaryOp<R>& op) {
        switch (op.kind) {
            case OpKind::RowSwap: w.swap_rows(op.i, op.j); break;
            case OpKind::RowAdd: w.add_scaled_row(ring, op.i, op.j, op.factor); break;
            case OpKind::RowScale: w.scale_row(ring, op.i, op.factor); break;
            default: break;
        }
    }

    static void apply_col_op(const R& ring, detail::WorkMatrix<R>& w, const ElementaryOp<R>& op) {
        switch (op.kind) {
            case OpKind::ColSwap: w.swap_cols(op.i, op.j); break;
            case OpKind::ColAdd: w.add_scaled_col(ring, op.i, op.j, op.factor); break;
            case OpKind::ColScale: w.scale_col(ring, op.i, op.factor); break;
            default: break;
        }
    }

    static ElementaryOp<R> inverted(const R& ring, const ElementaryOp<R>& op) {
        ElementaryOp<R> inv = op;
        if (op.kind == OpKind::RowAdd || op.kind == OpKind::ColAdd)
            inv.factor = ring.neg(op.factor);
        else if (op.kind == OpKind::RowScale || op.kind == OpKind::ColScale)
            inv.factor = ring.inv(op.factor);
        return inv;
    }

    Element det_of(const R& ring, bool row_side) const {
        Element det = ring.one();
        for (const auto& op : ops) {
            if (is_row_op(op.kind) != row_side) continue;
            if (op.kind == OpKind::RowSwap || op.kind == OpKind::ColSwap)
                det = ring.neg(det);
            else if (op.kind == OpKind::RowScale || op.kind == OpKind::ColScale)
                det = ring.mul(det, op.factor);
        }
        return det;
    }
};

namespace detail {

/// Shared elimination core. Fields take any non-zero pivot and scale it to 1;
/// over Z a non-unit pivot is first improved by Euclidean row/column steps
/// until it divides its row and column. Pivot choice prefers units minimizing
/// Markowitz fill (row_nnz-1)*(col_nnz-1).
template <typename R>
class Eliminator {
public:
    using Element = typename R::Element;

    Eliminator(const R& ring, WorkMatrix<R>&& w, bool track)
        : ring_(ring), w_(std::move(w)), track_(track) {}

    SnfResult<R> run() {
        SnfResult<R> result;
        result.rows = w_.nrows;
        result.cols = w_.ncols;
        result.tracked = track_;

        int limit = std::min(w_.nrows, w_.ncols);
        int t = 0;
        while (t < limit) {
            auto pivot = find_pivot(t);
            if (!pivot) break;
            row_swap(t, pivot->first);
            col_swap(t, pivot->second);
            improve_and_eliminate(t);
            observe_growth();
            ++t;
        }

        if constexpr (!R::is_field) {
            for (int i = 0; i < t; ++i)
                if (sgn(w_.get(ring_, i, i)) < 0) row_scale(i, ring_.neg(ring_.one()));
            enforce_divisibility_chain(t);
        }

        result.diagonal.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) result.diagonal.push_back(w_.get(ring_, i, i));
        result.ops = std::move(ops_);
        result.max_coefficient_bits = max_bits_;
        return result;
    }

private:
    std::optional<std::pair<int, int>> find_pivot(int t) const {
        std::optional<std::pair<int, int>> best_unit;
        std::size_t best_fill = 0;
        std::optional<std::pair<int, int>> best_small;
        Element best_abs = ring_.zero();
        for (int i = t; i < w_.nrows; ++i) {
            for (const auto& [j, v] : w_.rows[static_cast<std::size_t>(i)]) {
                if (j < t) continue;
                if (R::is_field || ring_.is_unit(v)) {
                    std::size_t fill = (w_.row_nnz(i) - 1) * (w_.col_nnz(j) - 1);
                    if (!best_unit || fill < best_fill) {
                        best_unit = {i, j};
                        best_fill = fill;
                    }
                } else if constexpr (!R::is_field) {
                    if (!best_unit && (!best_small || cmp_abs_less(v, best_abs))) {
                        best_small = {i, j};
                        best_abs = v;
                    }
                }
            }
        }
        return best_unit ? best_unit : best_small;
    }

    static bool cmp_abs_less(const mpz_class& a, const mpz_class& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
    }

    void improve_and_eliminate(int t) {
        if constexpr (!R::is_field) {
            bool improving = true;
            while (improving) {
                improving = false;
                Element pivot = w_.get(ring_, t, t);
                // Column entries not divisible by the pivot: one Euclidean
                // step leaves a smaller remainder, which becomes the pivot.
                for (int i : std::vector<int>(w_.cols[static_cast<std::size_t>(t)].begin(),
                                              w_.cols[static_cast<std::size_t>(t)].end())) {
                    if (i == t) continue;
                    Element a = w_.get(ring_, i, t);
                    if (ring_.divides(pivot, a)) continue;
                    row_add(i, t, ring_.neg(ring_.quot(a, pivot)));
                    row_swap(i, t);
                    improving = true;
                    break;
                }
                if (improving) continue;
                for (const auto& [j, v] :
                     std::map<int, Element>(w_.rows[static_cast<std::size_t>(t)])) {
                    if (j == t) continue;
                    if (ring_.divides(pivot, v)) continue;
                    col_add(j, t, ring_.neg(ring_.quot(v, pivot)));
                    col_swap(j, t);
                    improving = true;
                    break;
                }
            }
        } else {
            Element pivot = w_.get(ring_, t, t);
            if (!(pivot == ring_.one())) row_scale(t, ring_.inv(pivot));
        }

        Element pivot = w_.get(ring_, t, t);
        for (int i : std::vector<int>(w_.cols[static_cast<std::size_t>(t)].begin(),
                                      w_.cols[static_cast<std::size_t>(t)].end())) {
            if (i == t) continue;
            row_add(i, t, ring_.neg(ring_.div_exact(w_.get(ring_, i, t), pivot)));
        }
        for (const auto& [j, v] : std::map<int, Element>(w_.rows[static_cast<std::size_t>(t)])) {
            if (j == t) continue;
            col_add(j, t, ring_.neg(ring_.div_exact(v, pivot)));
        }
    }

    void enforce_divisibility_chain(int t) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < t; ++i) {
                Element a = w_.get(ring_, i, i);
                Element b = w_.get(ring_, i + 1, i + 1);
                if (ring_.divides(a, b)) continue;
                // Fold the pair into (gcd, lcm) with the same local routine.
                col_add(i, i + 1, ring_.one());
                improve_and_eliminate(i);
                if (sgn(w_.get(ring_, i, i)) < 0) row_scale(i, ring_.neg(ring_.one()));
                if (sgn(w_.get(ring_, i + 1, i + 1)) < 0)
                    row_scale(i + 1, ring_.neg(ring_.one()));
                changed = true;
            }
        }
    }

    void observe_growth() {
        if constexpr (!R::is_field) {
            for (const auto& row : w_.rows)
                for (const auto& [j, v] : row)
                    max_bits_ = std::max(max_bits_, element_bits(ring_, v));
        }
    }

    void row_swap(int i, int j) {
        if (i == j) return;
        w_.swap_rows(i, j);
        log({OpKind::RowSwap, i, j, ring_.zero()});
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        w_.swap_cols(i, j);
        log({OpKind::ColSwap, i, j, ring_.zero()});
    }
    void row_add(int i, int j, const Element& c) {
        if (ring_.is_zero(c)) return;
        w_.add_scaled_row(ring_, i, j, c);
        log({OpKind::RowAdd, i, j, c});
    }
    void col_add(int i, int j, const Element& c) {
        if (ring_.is_zero(c)) return;
        w_.add_scaled_col(ring_, i, j, c);
        log({OpKind::ColAdd, i, j, c});
    }
    void row_scale(int i, const Element& u) {
        w_.scale_row(ring_, i, u);
        log({OpKind::RowScale, i, i, u});
    }

    void log(ElementaryOp<R> op) {
        if (track_) ops_.push_back(std::move(op));
    }

    const R& ring_;
    WorkMatrix<R> w_;
    bool track_;
    std::vector<ElementaryOp<R>> ops_;
    std::size_t max_bits_ = 0;
};

} // namespace detail

/// Diagonalization by unimodular row/column operations. Over Z this is the
/// Smith Normal Form (invariant factors in divisibility order); over a field
/// the diagonal is all ones and only the rank carries information. The input
/// is taken by value; tracking records the elementary operation log.
template <typename R>
SnfResult<R> smith_normal_form(const R& ring, const SparseMatrix<R>& m, bool track = false) {
    detail::Eliminator<R> e(ring, detail::WorkMatrix<R>(m), track);
    return e.run();
}

/// Rank of a matrix over a field by Gaussian elimination on a working copy.
/// Throws DomainError when called with the integer ring.
template <typename R>
int field_rank(const R& ring, const SparseMatrix<R>& m) {
    if constexpr (!R::is_field)
        throw DomainError("field_rank requires a field coefficient ring (got " + ring.name() + ")");
    else
        return smith_normal_form(ring, m, false).rank();
}

/// Solves M*x = v over the ring, via tracked diagonalization: with U*M*V = D,
/// x = V*y where D*y = U*v. Over Z solvability requires each component to be
/// divisible by the matching invariant factor. Returns nullopt when v is not
/// in the column space.
template <typename R>
std::optional<std::vector<typename R::Element>>
column_space_member(const R& ring, const SparseMatrix<R>& m,
                    const std::vector<typename R::Element>& v) {
    if (static_cast<int>(v.size()) != m.rows())
        throw DomainError("column_space_member: vector length does not match row count");
    SnfResult<R> snf = smith_normal_form(ring, m, true);
    std::vector<typename R::Element> w = snf.apply_row_transform(ring, v);
    std::vector<typename R::Element> y(static_cast<std::size_t>(m.cols()), ring.zero());
    for (int i = 0; i < snf.rank(); ++i) {
        const auto& wi = w[static_cast<std::size_t>(i)];
        if (ring.is_zero(wi)) continue;
        if constexpr (!R::is_field) {
            if (!ring.divides(snf.diagonal[static_cast<std::size_t>(i)], wi))
                return std::nullopt;
        }
        y[static_cast<std::size_t>(i)] =
            ring.div_exact(wi, snf.diagonal[static_cast<std::size_t>(i)]);
    }
    for (int i = snf.rank(); i < m.rows(); ++i)
        if (!ring.is_zero(w[static_cast<std::size_t>(i)])) return std::nullopt;
    return snf.apply_col_transform(ring, std::move(y));
}

} // namespace sinv
