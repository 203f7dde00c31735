#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sinv/boundary.hpp"
#include "sinv/detail/work_matrix.hpp"
#include "sinv/simplicial_complex.hpp"
#include "sinv/sparse_matrix.hpp"

namespace sinv {

/// An acyclic matching in the Hasse diagram: each pair joins a face to a
/// codimension-1 coface, no face appears twice, and reversing the matched
/// edges leaves the Hasse digraph acyclic.
struct MorseMatching {
    struct Pair {
        Simplex low;
        Simplex high;
        bool operator==(const Pair&) const = default;
    };
    std::vector<Pair> pairs;

    std::size_t size() const { return pairs.size(); }
    void add(Simplex low, Simplex high) { pairs.push_back({std::move(low), std::move(high)}); }
};

struct MatchingValidation {
    bool ok = true;
    /// Face occurring in two pairs, if any.
    std::optional<Simplex> doubly_matched;
    /// A closed alternating path sigma_0, tau_0, sigma_1, tau_1, ... witnessing
    /// a directed cycle, if any.
    std::vector<Simplex> cycle;
    std::string message;
};

/// Checks the matching and acyclicity conditions. Throws DomainError if a pair
/// is not a Hasse edge of the complex (wrong codimension or not a face).
MatchingValidation validate_matching(const SimplicialComplex& complex,
                                     const MorseMatching& matching);

/// All unmatched faces, sorted by (dimension, lex). Throws DomainError if the
/// matching does not validate.
std::vector<Simplex> critical_faces(const SimplicialComplex& complex,
                                    const MorseMatching& matching);

/// Builds an acyclic matching greedily, processing dimensions top-down:
/// free-face collapses first, otherwise the first locally acyclic pair in
/// order, otherwise the face is left critical. The face order is lexicographic
/// for seed 0 and a seed-keyed permutation otherwise; output is deterministic
/// for a fixed seed.
MorseMatching greedy_matching(const SimplicialComplex& complex, std::uint64_t seed = 0);

/// Matching exchange format: one pair per line, "low-vertices : high-vertices"
/// with vertices given by their labels.
MorseMatching parse_matching(const SimplicialComplex& complex, std::string_view text);
std::string format_matching(const SimplicialComplex& complex, const MorseMatching& matching);

/// A chain complex on the critical faces only, chain-equivalent to the full
/// complex. basis[k] maps critical k-columns back to chains in the original
/// complex (columns are the tracked basis vectors).
template <typename R>
struct ReducedChainComplex {
    std::vector<std::vector<Simplex>> critical;  // per dimension 0..d
    /// boundary[k]: critical (k-1)-faces x critical k-faces; boundary[0] is
    /// the augmentation row when built with augmentation, else 0 x c_0.
    std::vector<SparseMatrix<R>> boundary;
    std::vector<SparseMatrix<R>> basis;  // basis[k]: f_k x c_k
    bool augmented = false;
};

namespace detail {

/// Pivot eliminations shared by reduce_with_matching; kept separate so the
/// matching-order-independence property is easy to see: every pivot entry of a
/// valid matching stays a unit until its own elimination.
template <typename R>
class MatchingReducer {
public:
    MatchingReducer(const R& ring, const SimplicialComplex& complex, bool augmented)
        : ring_(ring), complex_(complex), augmented_(augmented) {
        int d = complex.dimension();
        m_.reserve(static_cast<std::size_t>(d) + 1);
        basis_t_.reserve(static_cast<std::size_t>(d) + 1);
        alive_.resize(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            int fk = static_cast<int>(complex.faces(k).size());
            if (k == 0) {
                WorkMatrix<R> aug(augmented ? 1 : 0, fk);
                if (augmented)
                    for (int j = 0; j < fk; ++j) aug.put(ring_, 0, j, ring_.one());
                m_.push_back(std::move(aug));
            } else {
                m_.push_back(WorkMatrix<R>(boundary_matrix(ring_, complex, k)));
            }
            basis_t_.push_back(WorkMatrix<R>::identity(ring_, fk));
            alive_[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(fk), true);
        }
    }

    void eliminate(const Simplex& low, const Simplex& high) {
        int k = high.dimension();
        int is = *complex_.face_index(low);
        int it = *complex_.face_index(high);
        WorkMatrix<R>& mk = m_[static_cast<std::size_t>(k)];
        typename R::Element a = mk.get(ring_, is, it);
        if (!ring_.is_unit(a))
            throw Error("matching reduction: pivot entry is not a unit");
        typename R::Element a_inv = ring_.inv(a);

        // Clear the pivot column with row operations; the induced basis change
        // of C_{k-1} right-multiplies the lower boundary matrix.
        std::vector<int> col_rows(mk.cols[static_cast<std::size_t>(it)].begin(),
                                  mk.cols[static_cast<std::size_t>(it)].end());
        for (int i2 : col_rows) {
            if (i2 == is) continue;
            auto q = ring_.mul(mk.get(ring_, i2, it), a_inv);
            mk.add_scaled_row(ring_, i2, is, ring_.neg(q));
            if (k >= 1) {
                m_[static_cast<std::size_t>(k - 1)].add_scaled_col(ring_, is, i2, q);
                basis_t_[static_cast<std::size_t>(k - 1)].add_scaled_row(ring_, is, i2, q);
            }
        }

        // Clear the pivot row with column operations; the induced basis change
        // of C_k left-multiplies the upper boundary matrix.
        std::map<int, typename R::Element> row_copy = mk.rows[static_cast<std::size_t>(is)];
        for (const auto& [j2, v] : row_copy) {
            if (j2 == it) continue;
            auto q = ring_.mul(v, a_inv);
            mk.add_scaled_col(ring_, j2, it, ring_.neg(q));
            if (k + 1 <= complex_.dimension())
                m_[static_cast<std::size_t>(k + 1)].add_scaled_row(ring_, it, j2, q);
            basis_t_[static_cast<std::size_t>(k)].add_scaled_row(ring_, j2, it, ring_.neg(q));
        }

        mk.put(ring_, is, it, ring_.zero());
        if (k + 1 <= complex_.dimension() && m_[static_cast<std::size_t>(k + 1)].row_nnz(it) != 0)
            throw Error("matching reduction: upper boundary row did not vanish");
        if (k >= 1 && m_[static_cast<std::size_t>(k - 1)].col_nnz(is) != 0)
            throw Error("matching reduction: lower boundary column did not vanish");
        alive_[static_cast<std::size_t>(k)][static_cast<std::size_t>(it)] = false;
        alive_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(is)] = false;
    }

    ReducedChainComplex<R> finish() {
        int d = complex_.dimension();
        ReducedChainComplex<R> out;
        out.augmented = augmented_;
        out.critical.resize(static_cast<std::size_t>(d) + 1);
        out.boundary.reserve(static_cast<std::size_t>(d) + 1);
        out.basis.reserve(static_cast<std::size_t>(d) + 1);

        std::vector<std::vector<int>> new_index(static_cast<std::size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) {
            const auto& faces = complex_.faces(k);
            auto& idx = new_index[static_cast<std::size_t>(k)];
            idx.assign(faces.size(), -1);
            for (std::size_t i = 0; i < faces.size(); ++i) {
                if (!alive_[static_cast<std::size_t>(k)][i]) continue;
                idx[i] = static_cast<int>(out.critical[static_cast<std::size_t>(k)].size());
                out.critical[static_cast<std::size_t>(k)].push_back(faces[i]);
            }
        }

        for (int k = 0; k <= d; ++k) {
            int crit_k = static_cast<int>(out.critical[static_cast<std::size_t>(k)].size());
            int nrows;
            if (k == 0)
                nrows = augmented_ ? 1 : 0;
            else
                nrows = static_cast<int>(out.critical[static_cast<std::size_t>(k - 1)].size());
            SparseMatrix<R> b(nrows, crit_k);
            const WorkMatrix<R>& mk = m_[static_cast<std::size_t>(k)];
            for (int i = 0; i < mk.nrows; ++i) {
                int ri = k == 0 ? i : new_index[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i)];
                for (const auto& [j, v] : mk.rows[static_cast<std::size_t>(i)]) {
                    int cj = new_index[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (ri < 0 || cj < 0)
                        throw Error("matching reduction: dead face with surviving entries");
                    b.set(ring_, ri, cj, v);
                }
            }
            out.boundary.push_back(std::move(b));

            int fk = static_cast<int>(complex_.faces(k).size());
            SparseMatrix<R> basis(fk, crit_k);
            const WorkMatrix<R>& bt = basis_t_[static_cast<std::size_t>(k)];
            for (int j = 0; j < fk; ++j) {
                int cj = new_index[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (cj < 0) continue;
                for (const auto& [orig, v] : bt.rows[static_cast<std::size_t>(j)])
                    basis.set(ring_, orig, cj, v);
            }
            out.basis.push_back(std::move(basis));
        }
        return out;
    }

private:
    const R& ring_;
    const SimplicialComplex& complex_;
    bool augmented_;
    std::vector<WorkMatrix<R>> m_;
    std::vector<WorkMatrix<R>> basis_t_;
    std::vector<std::vector<bool>> alive_;
};

} // namespace detail

/// Performs one unit-pivot elimination per matched pair across the graded
/// boundary matrices. Pairs of a valid matching never disturb each other's
/// pivot entries, so any order yields a chain-equivalent complex on the
/// critical faces. Throws DomainError if the matching does not validate.
template <typename R>
ReducedChainComplex<R> reduce_with_matching(const R& ring, const SimplicialComplex& complex,
                                            const MorseMatching& matching,
                                            bool augmented = false) {
    MatchingValidation validation = validate_matching(complex, matching);
    if (!validation.ok)
        throw DomainError("reduce_with_matching: invalid matching: " + validation.message);
    detail::MatchingReducer<R> reducer(ring, complex, augmented);
    for (const auto& pair : matching.pairs) reducer.eliminate(pair.low, pair.high);
    return reducer.finish();
}

} // namespace sinv
