#pragma once

#include "sinv/chain.hpp"
#include "sinv/simplicial_complex.hpp"
#include "sinv/sparse_matrix.hpp"

namespace sinv {

/// Sign of sigma in the boundary of tau, for a codimension-1 pair: (-1)^i
/// where tau's i-th vertex is the one missing from sigma. Throws DomainError
/// if the pair is not a codimension-1 face pair.
template <typename R>
typename R::Element incidence_coefficient(const R& ring, const Simplex& sigma,
                                          const Simplex& tau) {
    if (tau.dimension() != sigma.dimension() + 1 || !tau.contains(sigma))
        throw DomainError("incidence coefficient: not a codimension-1 face pair");
    int missing = -1;
    auto tv = tau.vertices();
    for (std::size_t i = 0; i < tv.size(); ++i) {
        if (!sigma.has_vertex(tv[i])) {
            missing = static_cast<int>(i);
            break;
        }
    }
    return missing % 2 == 0 ? ring.one() : ring.neg(ring.one());
}

/// Matrix of the boundary operator in degree k: rows indexed by (k-1)-faces,
/// columns by k-faces, both in lexicographic order. k = 0 gives the zero map
/// (no rows); the reduced-homology augmentation row is added by the homology
/// engine, not here. Requires 0 <= k <= dim.
template <typename R>
SparseMatrix<R> boundary_matrix(const R& ring, const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.dimension())
        throw DomainError("boundary matrix: degree " + std::to_string(k) + " out of range");
    const auto& cols = complex.faces(k);
    if (k == 0) return SparseMatrix<R>(0, static_cast<int>(cols.size()));

    const auto& rows = complex.faces(k - 1);
    SparseMatrix<R> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    typename R::Element one = ring.one();
    typename R::Element minus_one = ring.neg(ring.one());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto faces = cols[j].boundary_faces();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            int row = *complex.face_index(faces[i]);
            m.set(ring, row, static_cast<int>(j), i % 2 == 0 ? one : minus_one);
        }
    }
    return m;
}

/// Matrix of the coboundary operator in degree k: the transpose of the
/// boundary matrix in degree k+1. For k = dim the matrix has no rows.
template <typename R>
SparseMatrix<R> coboundary_matrix(const R& ring, const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.dimension())
        throw DomainError("coboundary matrix: degree " + std::to_string(k) + " out of range");
    if (k == complex.dimension())
        return SparseMatrix<R>(0, static_cast<int>(complex.faces(k).size()));
    return boundary_matrix(ring, complex, k + 1).transposed();
}

/// Boundary of a chain, by direct expansion of the alternating-sign formula.
template <typename R>
Chain<R> boundary_of(const R& ring, const Chain<R>& c) {
    Chain<R> out(c.dimension() - 1);
    for (const auto& [s, coeff] : c.terms()) {
        auto faces = s.boundary_faces();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            auto signed_coeff = i % 2 == 0 ? coeff : ring.neg(coeff);
            out.add_term(ring, faces[i], signed_coeff);
        }
    }
    return out;
}

/// Chain as a coefficient vector against faces(k) of the complex.
template <typename R>
std::vector<typename R::Element> chain_to_vector(const R& ring,
                                                 const SimplicialComplex& complex,
                                                 const Chain<R>& c) {
    std::vector<typename R::Element> v(complex.faces(c.dimension()).size(), ring.zero());
    for (const auto& [s, coeff] : c.terms()) {
        auto idx = complex.face_index(s);
        if (!idx) throw DomainError("chain supported outside the complex");
        v[static_cast<std::size_t>(*idx)] = coeff;
    }
    return v;
}

template <typename R>
Chain<R> vector_to_chain(const R& ring, const SimplicialComplex& complex, int k,
                         const std::vector<typename R::Element>& v) {
    const auto& faces = complex.faces(k);
    Chain<R> c(k);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!ring.is_zero(v[i])) c.add_term(ring, faces[i], v[i]);
    return c;
}

} // namespace sinv
