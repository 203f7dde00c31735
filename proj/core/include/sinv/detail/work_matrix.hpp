#pragma once

#include <map>
#include <set>
#include <vector>

#include "sinv/sparse_matrix.hpp"

namespace sinv::detail {

/// Mutable elimination workspace: rows as ordered column->value maps plus a
/// column-occupancy index so pivot search and column operations stay cheap.
template <typename R>
struct WorkMatrix {
    using Element = typename R::Element;

    int nrows = 0;
    int ncols = 0;
    std::vector<std::map<int, Element>> rows;
    std::vector<std::set<int>> cols;

    WorkMatrix() = default;
    WorkMatrix(int r, int c)
        : nrows(r), ncols(c), rows(static_cast<std::size_t>(r)), cols(static_cast<std::size_t>(c)) {}

    explicit WorkMatrix(const SparseMatrix<R>& m)
        : WorkMatrix(m.rows(), m.cols()) {
        for (int i = 0; i < m.rows(); ++i)
            for (const auto& e : m.row(i)) {
                rows[static_cast<std::size_t>(i)].emplace(e.col, e.value);
                cols[static_cast<std::size_t>(e.col)].insert(i);
            }
    }

    static WorkMatrix identity(const R& ring, int n) {
        WorkMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.put(ring, i, i, ring.one());
        return m;
    }

    SparseMatrix<R> to_sparse(const R& ring) const {
        SparseMatrix<R> m(nrows, ncols);
        for (int i = 0; i < nrows; ++i)
            for (const auto& [j, v] : rows[static_cast<std::size_t>(i)])
                m.set(ring, i, j, v);
        return m;
    }

    Element get(const R& ring, int i, int j) const {
        const auto& row = rows[static_cast<std::size_t>(i)];
        auto it = row.find(j);
        return it == row.end() ? ring.zero() : it->second;
    }

    void put(const R& ring, int i, int j, Element v) {
        auto& row = rows[static_cast<std::size_t>(i)];
        if (ring.is_zero(v)) {
            if (row.erase(j)) cols[static_cast<std::size_t>(j)].erase(i);
        } else {
            auto [it, inserted] = row.insert_or_assign(j, std::move(v));
            (void)it;
            if (inserted) cols[static_cast<std::size_t>(j)].insert(i);
        }
    }

    void add_to(const R& ring, int i, int j, const Element& delta) {
        if (ring.is_zero(delta)) return;
        put(ring, i, j, ring.add(get(ring, i, j), delta));
    }

    std::size_t row_nnz(int i) const { return rows[static_cast<std::size_t>(i)].size(); }
    std::size_t col_nnz(int j) const { return cols[static_cast<std::size_t>(j)].size(); }

    /// row_dst += c * row_src
    void add_scaled_row(const R& ring, int dst, int src, const Element& c) {
        if (ring.is_zero(c)) return;
        for (const auto& [j, v] : rows[static_cast<std::size_t>(src)])
            add_to(ring, dst, j, ring.mul(c, v));
    }

    /// col_dst += c * col_src
    void add_scaled_col(const R& ring, int dst, int src, const Element& c) {
        if (ring.is_zero(c)) return;
        // Copy: add_to mutates the occupancy set we are iterating.
        std::vector<int> src_rows(cols[static_cast<std::size_t>(src)].begin(),
                                  cols[static_cast<std::size_t>(src)].end());
        for (int i : src_rows)
            add_to(ring, i, dst, ring.mul(c, get(ring, i, src)));
    }

    void scale_row(const R& ring, int i, const Element& u) {
        for (auto& [j, v] : rows[static_cast<std::size_t>(i)]) v = ring.mul(u, v);
    }

    void scale_col(const R& ring, int j, const Element& u) {
        for (int i : cols[static_cast<std::size_t>(j)]) {
            auto& row = rows[static_cast<std::size_t>(i)];
            auto it = row.find(j);
            it->second = ring.mul(u, it->second);
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        auto& ra = rows[static_cast<std::size_t>(a)];
        auto& rb = rows[static_cast<std::size_t>(b)];
        for (const auto& [j, v] : ra) cols[static_cast<std::size_t>(j)].erase(a);
        for (const auto& [j, v] : rb) cols[static_cast<std::size_t>(j)].erase(b);
        std::swap(ra, rb);
        for (const auto& [j, v] : ra) cols[static_cast<std::size_t>(j)].insert(a);
        for (const auto& [j, v] : rb) cols[static_cast<std::size_t>(j)].insert(b);
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        auto rows_a = cols[static_cast<std::size_t>(a)];
        auto rows_b = cols[static_cast<std::size_t>(b)];
        std::map<int, Element> stash;
        for (int i : rows_a) {
            auto& row = rows[static_cast<std::size_t>(i)];
            stash.emplace(i, std::move(row.at(a)));
            row.erase(a);
        }
        for (int i : rows_b) {
            auto& row = rows[static_cast<std::size_t>(i)];
            row.emplace(a, std::move(row.at(b)));
            row.erase(b);
        }
        for (auto& [i, v] : stash) rows[static_cast<std::size_t>(i)].emplace(b, std::move(v));
        std::swap(cols[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
    }
};

} // namespace sinv::detail
