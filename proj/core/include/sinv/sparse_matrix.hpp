#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "sinv/errors.hpp"
#include "sinv/rings.hpp"

namespace sinv {

/// Row-major sparse matrix over an exact ring. Rows hold entries sorted by
/// column; zero entries are never stored. Value-like: copy freely, mutate only
/// what you own.
template <typename R>
class SparseMatrix {
public:
    using Element = typename R::Element;

    struct Entry {
        int col;
        Element value;
        bool operator==(const Entry&) const = default;
    };

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::vector<Entry>& row(int i) const { return data_[static_cast<std::size_t>(i)]; }

    Element get(const R& ring, int i, int j) const {
        const auto& r = data_[static_cast<std::size_t>(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, int col) { return e.col < col; });
        if (it == r.end() || it->col != j) return ring.zero();
        return it->value;
    }

    void set(const R& ring, int i, int j, Element v) {
        auto& r = data_[static_cast<std::size_t>(i)];
        auto it = std::lower_bound(r.begin(), r.end(), j,
                                   [](const Entry& e, int col) { return e.col < col; });
        if (it != r.end() && it->col == j) {
            if (ring.is_zero(v))
                r.erase(it);
            else
                it->value = std::move(v);
        } else if (!ring.is_zero(v)) {
            r.insert(it, Entry{j, std::move(v)});
        }
    }

    long nnz() const {
        long total = 0;
        for (const auto& r : data_) total += static_cast<long>(r.size());
        return total;
    }

    bool is_zero() const { return nnz() == 0; }

    std::vector<long> column_nnz() const {
        std::vector<long> counts(static_cast<std::size_t>(cols_), 0);
        for (const auto& r : data_)
            for (const Entry& e : r) ++counts[static_cast<std::size_t>(e.col)];
        return counts;
    }

    SparseMatrix transposed() const {
        SparseMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const Entry& e : row(i))
                t.data_[static_cast<std::size_t>(e.col)].push_back(Entry{i, e.value});
        return t;
    }

    SparseMatrix multiply(const R& ring, const SparseMatrix& other) const {
        if (cols_ != other.rows_) throw DomainError("matrix product: dimension mismatch");
        SparseMatrix out(rows_, other.cols_);
        std::vector<Element> acc(static_cast<std::size_t>(other.cols_), ring.zero());
        std::vector<int> touched;
        for (int i = 0; i < rows_; ++i) {
            touched.clear();
            for (const Entry& e : row(i)) {
                for (const Entry& f : other.row(e.col)) {
                    auto& slot = acc[static_cast<std::size_t>(f.col)];
                    if (ring.is_zero(slot)) touched.push_back(f.col);
                    slot = ring.add(slot, ring.mul(e.value, f.value));
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int j : touched) {
                auto& slot = acc[static_cast<std::size_t>(j)];
                if (!ring.is_zero(slot))
                    out.data_[static_cast<std::size_t>(i)].push_back(Entry{j, slot});
                slot = ring.zero();
            }
        }
        return out;
    }

    std::vector<Element> apply(const R& ring, const std::vector<Element>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw DomainError("matrix apply: dimension mismatch");
        std::vector<Element> y(static_cast<std::size_t>(rows_), ring.zero());
        for (int i = 0; i < rows_; ++i)
            for (const Entry& e : row(i))
                y[static_cast<std::size_t>(i)] = ring.add(
                    y[static_cast<std::size_t>(i)],
                    ring.mul(e.value, x[static_cast<std::size_t>(e.col)]));
        return y;
    }

    bool operator==(const SparseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    /// Dump format: header "rows cols ring", then one "row col value" line per
    /// non-zero, in row-major order.
    std::string dump(const R& ring) const {
        std::ostringstream out;
        out << rows_ << ' ' << cols_ << ' ' << ring.name() << '\n';
        for (int i = 0; i < rows_; ++i)
            for (const Entry& e : row(i))
                out << i << ' ' << e.col << ' ' << ring.to_string(e.value) << '\n';
        return out.str();
    }

    static SparseMatrix parse_dump(const R& ring, std::string_view text) {
        std::istringstream in{std::string(text)};
        int rows = 0, cols = 0;
        std::string ring_tag;
        if (!(in >> rows >> cols >> ring_tag))
            throw InputError("matrix dump: bad header");
        if (ring_tag != ring.name())
            throw InputError("matrix dump: ring mismatch (" + ring_tag + " vs " + ring.name() + ")");
        SparseMatrix m(rows, cols);
        int i = 0, j = 0;
        std::string value;
        while (in >> i >> j >> value) {
            if (i < 0 || i >= rows || j < 0 || j >= cols)
                throw InputError("matrix dump: entry out of range");
            m.set(ring, i, j, parse_element(ring, value));
        }
        return m;
    }

private:
    static Element parse_element(const IntegerRing&, const std::string& s) { return mpz_class(s); }
    static Element parse_element(const RationalField&, const std::string& s) {
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    static Element parse_element(const PrimeField& f, const std::string& s) {
        return f.from_long(std::stol(s));
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> data_;
};

} // namespace sinv
