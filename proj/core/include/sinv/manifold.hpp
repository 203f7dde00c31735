#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sinv/chain.hpp"
#include "sinv/homology.hpp"
#include "sinv/simplicial_complex.hpp"
#include "sinv/smith.hpp"

namespace sinv {

struct PseudomanifoldReport {
    bool pure = false;
    /// Every codimension-1 face lies in exactly two facets.
    bool ridges_two_facets = false;
    /// Facet graph through shared ridges is connected.
    bool strongly_connected = false;
    /// Every vertex link has the integral homology of a (d-1)-sphere. A
    /// necessary manifold condition only; sphere recognition is out of scope.
    bool links_spherical = false;
    std::vector<std::string> failures;

    bool closed_pseudomanifold() const { return pure && ridges_two_facets && strongly_connected; }
    bool passes() const { return closed_pseudomanifold() && links_spherical; }
};

PseudomanifoldReport check_closed_pseudomanifold(const SimplicialComplex& complex);

/// Coherent facet orientation: a signed sum of all facets that is a cycle.
struct FundamentalClass {
    int degree = 0;
    Chain<IntegerRing> chain;
};

/// Propagates facet signs across ridges, normalized so the lexicographically
/// greatest facet is +1 (on boundary_simplex(d) this is the standard boundary
/// orientation). Returns nullopt for a non-orientable pseudomanifold. Throws
/// DomainError unless the complex is a closed pseudomanifold.
std::optional<FundamentalClass> orientation(const SimplicialComplex& complex);

/// The mod-2 fundamental class: the sum of all facets, always a cycle on a
/// closed pseudomanifold.
Chain<PrimeField> fundamental_class_mod2(const PrimeField& f2, const SimplicialComplex& complex);

/// Cup product on cochains: <f cup g, v_0..v_{i+k}> =
/// (-1)^{ik} <f, v_0..v_i> <g, v_i..v_{i+k}>.
template <typename R>
Cochain<R> cup(const R& ring, const SimplicialComplex& complex, const Cochain<R>& f,
               const Cochain<R>& g) {
    int i = f.dimension();
    int k = g.dimension();
    Cochain<R> out(i + k);
    if (i + k > complex.dimension()) return out;
    bool flip = (i % 2 == 1) && (k % 2 == 1);
    for (const Simplex& s : complex.faces(i + k)) {
        auto front = std::vector<int>(s.vertices().begin(), s.vertices().begin() + i + 1);
        auto back = std::vector<int>(s.vertices().begin() + i, s.vertices().end());
        auto value = ring.mul(f.coefficient(ring, Simplex::from_vertices(std::move(front))),
                              g.coefficient(ring, Simplex::from_vertices(std::move(back))));
        if (ring.is_zero(value)) continue;
        out.add_term(ring, s, flip ? ring.neg(value) : value);
    }
    return out;
}

/// Cap product: f cap (v_0..v_k) = (-1)^{i(k-i)} <f, v_0..v_i> v_i..v_k,
/// extended linearly over the chain. Requires deg f <= deg c.
template <typename R>
Chain<R> cap(const R& ring, const SimplicialComplex& complex, const Cochain<R>& f,
             const Chain<R>& c) {
    (void)complex;
    int i = f.dimension();
    int k = c.dimension();
    if (i > k) throw DomainError("cap product: cochain degree exceeds chain degree");
    bool flip = (i % 2 == 1) && ((k - i) % 2 == 1);
    Chain<R> out(k - i);
    for (const auto& [s, coeff] : c.terms()) {
        auto front = std::vector<int>(s.vertices().begin(), s.vertices().begin() + i + 1);
        auto value = ring.mul(f.coefficient(ring, Simplex::from_vertices(std::move(front))), coeff);
        if (ring.is_zero(value)) continue;
        auto back = std::vector<int>(s.vertices().begin() + i, s.vertices().end());
        out.add_term(ring, Simplex::from_vertices(std::move(back)),
                     flip ? ring.neg(value) : value);
    }
    return out;
}

/// Multiplication table of the cohomology algebra on module generators.
template <typename R>
struct CupTable {
    std::vector<AbelianGroup> groups;  // per degree
    /// Per degree: free generators first, then torsion generators (orders from
    /// the group's torsion list).
    std::vector<std::vector<Cochain<R>>> generators;
    /// (degree a, index a, degree b, index b) -> coordinates of the cup
    /// product in the generator basis of degree a+b (torsion coordinates
    /// reduced modulo their order).
    std::map<std::tuple<int, int, int, int>, std::vector<typename R::Element>> products;
};

template <typename R>
CupTable<R> cohomology_ring_table(const R& ring, const SimplicialComplex& complex) {
    int d = complex.dimension();
    auto cohom = cohomology(ring, complex, true);

    CupTable<R> table;
    table.groups = cohom.groups();
    table.generators.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        auto& degree = cohom.degrees[static_cast<std::size_t>(k)];
        auto& gens = table.generators[static_cast<std::size_t>(k)];
        gens = degree.free_reps;
        for (const auto& rep : degree.torsion_reps) gens.push_back(rep);
    }

    // Solving [generators | coboundaries] * x = product expresses the class;
    // free coordinates are unique, torsion ones get reduced mod their order.
    for (int i = 0; i <= d; ++i) {
        for (int k = 0; i + k <= d; ++k) {
            int t = i + k;
            const auto& gens_t = table.generators[static_cast<std::size_t>(t)];
            const auto& group_t = table.groups[static_cast<std::size_t>(t)];
            SparseMatrix<R> delta = t >= 1 ? coboundary_matrix(ring, complex, t - 1)
                                           : SparseMatrix<R>(static_cast<int>(complex.faces(0).size()), 0);
            int faces_t = static_cast<int>(complex.faces(t).size());
            int g_count = static_cast<int>(gens_t.size());
            SparseMatrix<R> m(faces_t, g_count + delta.cols());
            for (int g = 0; g < g_count; ++g) {
                auto vec = chain_to_vector(ring, complex, gens_t[static_cast<std::size_t>(g)]);
                for (int r = 0; r < faces_t; ++r)
                    if (!ring.is_zero(vec[static_cast<std::size_t>(r)]))
                        m.set(ring, r, g, vec[static_cast<std::size_t>(r)]);
            }
            for (int r = 0; r < delta.rows(); ++r)
                for (const auto& e : delta.row(r)) m.set(ring, r, g_count + e.col, e.value);

            for (std::size_t a = 0; a < table.generators[static_cast<std::size_t>(i)].size(); ++a) {
                for (std::size_t b = 0; b < table.generators[static_cast<std::size_t>(k)].size(); ++b) {
                    auto product = cup(ring, complex,
                                       table.generators[static_cast<std::size_t>(i)][a],
                                       table.generators[static_cast<std::size_t>(k)][b]);
                    std::vector<typename R::Element> coords(static_cast<std::size_t>(g_count),
                                                            ring.zero());
                    if (!product.is_zero()) {
                        auto v = chain_to_vector(ring, complex, product);
                        auto x = column_space_member(ring, m, v);
                        if (!x)
                            throw Error("cup table: product is not expressible;"
                                        " generators do not span");
                        for (int g = 0; g < g_count; ++g)
                            coords[static_cast<std::size_t>(g)] = (*x)[static_cast<std::size_t>(g)];
                        if constexpr (!R::is_field) {
                            long free_count = group_t.free_rank;
                            for (std::size_t j = 0; j < group_t.torsion.size(); ++j) {
                                auto& coord = coords[static_cast<std::size_t>(free_count) + j];
                                mpz_class order = group_t.torsion[j];
                                mpz_class reduced;
                                mpz_fdiv_r(reduced.get_mpz_t(), coord.get_mpz_t(),
                                           order.get_mpz_t());
                                coord = reduced;
                            }
                        }
                    }
                    table.products[{i, static_cast<int>(a), k, static_cast<int>(b)}] =
                        std::move(coords);
                }
            }
        }
    }
    return table;
}

/// Gram data of the intersection form of a closed oriented 4-pseudomanifold.
struct BilinearFormReport {
    std::vector<std::vector<mpz_class>> gram;
    bool even = false;
    long signature = 0;
    bool unimodular = false;
    /// Free H^2 generators used as the basis (torsion classes pair to zero
    /// and are dropped).
    std::vector<Cochain<IntegerRing>> basis;
};

/// Q(f,g) = <f cup g, [M]> on the free part of H^2. Throws DomainError unless
/// the complex is a closed oriented 4-dimensional pseudomanifold.
BilinearFormReport intersection_form(const SimplicialComplex& complex);

/// Signature of a symmetric integer matrix by exact rational congruence
/// diagonalization (a zero diagonal against a non-zero off-diagonal entry
/// contributes a hyperbolic +1/-1 pair). Throws DomainError on non-symmetric
/// input.
long signature(const std::vector<std::vector<mpz_class>>& gram);

struct StiefelWhitneyReport {
    struct ClassData {
        Chain<PrimeField> raw;
        Chain<PrimeField> sparse;
        bool null_homologous = false;
    };
    std::vector<ClassData> classes;  // omega_0 .. omega_d
};

/// Goldstein-Turner Stiefel-Whitney homology classes: omega_k is the mod-2 sum
/// of k-faces with an odd number of regular cofaces, where (sigma, tau) is
/// regular when every odd-indexed vertex gap G_1, G_3, ... is empty. The
/// combinatorial-manifold hypothesis behind the theorem is the caller's
/// responsibility; this computes on any closed pseudomanifold.
StiefelWhitneyReport stiefel_whitney_classes(const SimplicialComplex& complex);

} // namespace sinv
