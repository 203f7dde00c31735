#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "sinv/boundary.hpp"
#include "sinv/chain.hpp"
#include "sinv/morse.hpp"
#include "sinv/simplicial_complex.hpp"
#include "sinv/smith.hpp"

namespace sinv {

/// Canonical form of a finitely generated abelian group: free rank plus
/// torsion coefficients t_i >= 2 with t_i | t_{i+1}.
struct AbelianGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;

    /// "Z^2 + Z/2 + Z/6", "Z", "Z/5", or "0".
    std::string to_string() const {
        if (trivial()) return "0";
        std::string out;
        if (free_rank == 1)
            out = "Z";
        else if (free_rank > 1)
            out = "Z^" + std::to_string(free_rank);
        for (const auto& t : torsion) {
            if (!out.empty()) out += " + ";
            out += "Z/" + t.get_str();
        }
        return out;
    }
};

enum class Strategy { raw, morse };

struct HomologyOptions {
    bool reduced = false;
    Strategy strategy = Strategy::raw;
    bool with_reps = false;
    std::uint64_t seed = 0;
    int jobs = 1;
};

template <typename R>
struct HomologyDegree {
    AbelianGroup group;
    /// Representatives are cycles (or cocycles); torsion_rep[i] has the order
    /// of group.torsion[i].
    std::vector<Chain<R>> free_reps;
    std::vector<Chain<R>> torsion_reps;
};

template <typename R>
struct HomologyResult {
    bool cohomological = false;
    bool reduced = false;
    Strategy strategy = Strategy::raw;
    std::vector<HomologyDegree<R>> degrees;  // index = degree 0..dim

    std::vector<AbelianGroup> groups() const {
        std::vector<AbelianGroup> out;
        out.reserve(degrees.size());
        for (const auto& d : degrees) out.push_back(d.group);
        return out;
    }
};

namespace detail {

/// Degree data in abstract coordinates: `out` maps degree-k generators down
/// (or up, for cohomology), `in` maps into degree k. ambient = generator count.
template <typename R>
struct DegreePair {
    int ambient = 0;
    SparseMatrix<R> out;
    SparseMatrix<R> in;
};

/// Group + representative coordinate vectors for one degree. Kernel basis
/// columns of `out`'s column transform span the cycles; boundaries are
/// rewritten in that basis and diagonalized once more, so the surviving
/// basis vectors generate the quotient with known orders.
template <typename R>
struct DegreeOutcome {
    AbelianGroup group;
    std::vector<std::vector<typename R::Element>> free_vectors;
    std::vector<std::vector<typename R::Element>> torsion_vectors;
};

template <typename R>
DegreeOutcome<R> homology_of_pair(const R& ring, const DegreePair<R>& pair, bool with_reps) {
    DegreeOutcome<R> outcome;
    SnfResult<R> snf_out = smith_normal_form(ring, pair.out, with_reps);
    int kernel_rank = pair.ambient - snf_out.rank();

    if (!with_reps) {
        SnfResult<R> snf_in = smith_normal_form(ring, pair.in, false);
        outcome.group.free_rank = kernel_rank - snf_in.rank();
        if constexpr (!R::is_field) {
            for (const auto& d : snf_in.diagonal)
                if (!(d == ring.one())) outcome.group.torsion.push_back(d);
        }
        return outcome;
    }

    // Boundaries in kernel coordinates: bottom rows of V^{-1} * in.
    SparseMatrix<R> v_inv = snf_out.col_transform_inverse(ring);
    SparseMatrix<R> in_coords_full = v_inv.multiply(ring, pair.in);
    SparseMatrix<R> in_coords(kernel_rank, pair.in.cols());
    for (int i = 0; i < kernel_rank; ++i)
        for (const auto& e : in_coords_full.row(snf_out.rank() + i))
            in_coords.set(ring, i, e.col, e.value);
    for (int i = 0; i < snf_out.rank(); ++i)
        if (!in_coords_full.row(i).empty())
            throw Error("homology: boundary columns are not cycles");

    SnfResult<R> snf_quot = smith_normal_form(ring, in_coords, true);
    outcome.group.free_rank = kernel_rank - snf_quot.rank();
    if constexpr (!R::is_field) {
        for (const auto& d : snf_quot.diagonal)
            if (!(d == ring.one())) outcome.group.torsion.push_back(d);
    }

    // Generators: kernel basis columns recombined by U'^{-1}.
    SparseMatrix<R> v = snf_out.col_transform(ring);
    SparseMatrix<R> kernel_basis(pair.ambient, kernel_rank);
    for (int i = 0; i < pair.ambient; ++i)
        for (const auto& e : v.row(i))
            if (e.col >= snf_out.rank())
                kernel_basis.set(ring, i, e.col - snf_out.rank(), e.value);
    SparseMatrix<R> gens = kernel_basis.multiply(ring, snf_quot.row_transform_inverse(ring));

    auto column_of = [&](int j) {
        std::vector<typename R::Element> col(static_cast<std::size_t>(pair.ambient), ring.zero());
        for (int i = 0; i < pair.ambient; ++i) {
            auto v2 = gens.get(ring, i, j);
            col[static_cast<std::size_t>(i)] = v2;
        }
        for (const auto& image : pair.out.apply(ring, col))
            if (!ring.is_zero(image)) throw Error("homology: representative is not a cycle");
        // Sign/scale normalization: first non-zero coefficient positive (Z)
        // or one (fields).
        for (auto& c : col) {
            if (ring.is_zero(c)) continue;
            typename R::Element unit;
            if constexpr (R::is_field)
                unit = ring.inv(c);
            else
                unit = sgn(c) < 0 ? ring.neg(ring.one()) : ring.one();
            if (!(unit == ring.one()))
                for (auto& x : col) x = ring.mul(unit, x);
            break;
        }
        return col;
    };

    for (int j = 0; j < snf_quot.rank(); ++j) {
        if (snf_quot.diagonal[static_cast<std::size_t>(j)] == ring.one()) continue;
        outcome.torsion_vectors.push_back(column_of(j));
    }
    for (int j = snf_quot.rank(); j < kernel_rank; ++j)
        outcome.free_vectors.push_back(column_of(j));
    return outcome;
}

template <typename R>
std::vector<DegreeOutcome<R>> run_degrees(const R& ring,
                                          const std::vector<DegreePair<R>>& pairs,
                                          bool with_reps, int jobs) {
    std::vector<DegreeOutcome<R>> out(pairs.size());
    if (jobs <= 1 || pairs.size() <= 1) {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            out[k] = homology_of_pair(ring, pairs[k], with_reps);
        return out;
    }
    std::vector<std::future<DegreeOutcome<R>>> futures;
    futures.reserve(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        futures.push_back(std::async(std::launch::async, [&, k] {
            return homology_of_pair(ring, pairs[k], with_reps);
        }));
    for (std::size_t k = 0; k < pairs.size(); ++k) out[k] = futures[k].get();
    return out;
}

} // namespace detail

/// Homology of the complex over the ring, one group per degree 0..dim.
/// Reduced mode augments the degree-0 boundary with the all-ones row of the
/// empty simplex. The morse strategy pre-reduces all boundary matrices with a
/// greedy acyclic matching; results agree with the raw strategy.
template <typename R>
HomologyResult<R> homology(const R& ring, const SimplicialComplex& complex,
                           const HomologyOptions& options = {}) {
    int d = complex.dimension();
    HomologyResult<R> result;
    result.reduced = options.reduced;
    result.strategy = options.strategy;

    std::vector<detail::DegreePair<R>> pairs(static_cast<std::size_t>(d) + 1);
    std::optional<ReducedChainComplex<R>> reduced_complex;

    if (options.strategy == Strategy::morse) {
        MorseMatching matching = greedy_matching(complex, options.seed);
        reduced_complex = reduce_with_matching(ring, complex, matching, options.reduced);
        for (int k = 0; k <= d; ++k) {
            auto& pair = pairs[static_cast<std::size_t>(k)];
            pair.ambient = static_cast<int>(reduced_complex->critical[static_cast<std::size_t>(k)].size());
            pair.out = reduced_complex->boundary[static_cast<std::size_t>(k)];
            pair.in = k < d ? reduced_complex->boundary[static_cast<std::size_t>(k + 1)]
                            : SparseMatrix<R>(pair.ambient, 0);
        }
    } else {
        for (int k = 0; k <= d; ++k) {
            auto& pair = pairs[static_cast<std::size_t>(k)];
            pair.ambient = static_cast<int>(complex.faces(k).size());
            if (k == 0) {
                SparseMatrix<R> aug(options.reduced ? 1 : 0, pair.ambient);
                if (options.reduced)
                    for (int j = 0; j < pair.ambient; ++j) aug.set(ring, 0, j, ring.one());
                pair.out = std::move(aug);
            } else {
                pair.out = boundary_matrix(ring, complex, k);
            }
            pair.in = k < d ? boundary_matrix(ring, complex, k + 1)
                            : SparseMatrix<R>(pair.ambient, 0);
        }
    }

    auto outcomes = detail::run_degrees(ring, pairs, options.with_reps, options.jobs);
    result.degrees.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        auto& degree = result.degrees[static_cast<std::size_t>(k)];
        auto& outcome = outcomes[static_cast<std::size_t>(k)];
        degree.group = std::move(outcome.group);
        if (!options.with_reps) continue;
        auto to_chain = [&](const std::vector<typename R::Element>& vec) {
            if (options.strategy == Strategy::morse) {
                const auto& basis = reduced_complex->basis[static_cast<std::size_t>(k)];
                return vector_to_chain(ring, complex, k, basis.apply(ring, vec));
            }
            return vector_to_chain(ring, complex, k, vec);
        };
        for (const auto& vec : outcome.free_vectors) degree.free_reps.push_back(to_chain(vec));
        for (const auto& vec : outcome.torsion_vectors)
            degree.torsion_reps.push_back(to_chain(vec));
    }
    return result;
}

/// Cohomology via coboundary (transposed) matrices; same report shape, graded
/// by superscript. Representatives are cochains.
template <typename R>
HomologyResult<R> cohomology(const R& ring, const SimplicialComplex& complex,
                             bool with_reps = false, int jobs = 1) {
    int d = complex.dimension();
    std::vector<detail::DegreePair<R>> pairs(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        auto& pair = pairs[static_cast<std::size_t>(k)];
        pair.ambient = static_cast<int>(complex.faces(k).size());
        pair.out = coboundary_matrix(ring, complex, k);
        pair.in = k >= 1 ? coboundary_matrix(ring, complex, k - 1)
                         : SparseMatrix<R>(pair.ambient, 0);
    }
    auto outcomes = detail::run_degrees(ring, pairs, with_reps, jobs);

    HomologyResult<R> result;
    result.cohomological = true;
    result.degrees.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        auto& degree = result.degrees[static_cast<std::size_t>(k)];
        auto& outcome = outcomes[static_cast<std::size_t>(k)];
        degree.group = std::move(outcome.group);
        if (!with_reps) continue;
        for (const auto& vec : outcome.free_vectors)
            degree.free_reps.push_back(vector_to_chain(ring, complex, k, vec));
        for (const auto& vec : outcome.torsion_vectors)
            degree.torsion_reps.push_back(vector_to_chain(ring, complex, k, vec));
    }
    return result;
}

/// Free-then-torsion generating cycles (or cocycles) in degree k.
template <typename R>
std::vector<Chain<R>> representative_generators(const R& ring, const SimplicialComplex& complex,
                                                int k, bool cohomological = false) {
    if (k < 0 || k > complex.dimension())
        throw DomainError("representative_generators: degree out of range");
    HomologyResult<R> result;
    if (cohomological) {
        result = cohomology(ring, complex, true);
    } else {
        HomologyOptions options;
        options.with_reps = true;
        result = homology(ring, complex, options);
    }
    auto& degree = result.degrees[static_cast<std::size_t>(k)];
    std::vector<Chain<R>> out = std::move(degree.free_reps);
    for (auto& rep : degree.torsion_reps) out.push_back(std::move(rep));
    return out;
}

/// Homologous cycle with support no larger than the input, found by greedily
/// adding facet boundaries that strictly shrink the support. Throws
/// DomainError if the input is not a cycle.
template <typename R>
Chain<R> reduce_mod_boundaries(const R& ring, const SimplicialComplex& complex,
                               const Chain<R>& chain) {
    int k = chain.dimension();
    if (k < 0 || k > complex.dimension())
        throw DomainError("reduce_mod_boundaries: degree out of range");
    for (const auto& [s, c] : chain.terms())
        if (!complex.face_index(s))
            throw DomainError("reduce_mod_boundaries: chain supported outside the complex");
    if (k >= 1 && !boundary_of(ring, chain).is_zero())
        throw DomainError("reduce_mod_boundaries: input is not a cycle");
    if (k == complex.dimension() || chain.is_zero()) return chain;

    const auto& cofaces = complex.faces(k + 1);
    std::vector<Chain<R>> boundaries;
    boundaries.reserve(cofaces.size());
    for (const Simplex& tau : cofaces) {
        Chain<R> b(k + 1);
        b.add_term(ring, tau, ring.one());
        boundaries.push_back(boundary_of(ring, b));
    }

    Chain<R> current = chain;
    bool improved = true;
    while (improved) {
        improved = false;
        std::size_t best_size = current.support_size();
        std::optional<std::pair<std::size_t, typename R::Element>> best;
        for (std::size_t t = 0; t < boundaries.size(); ++t) {
            const Chain<R>& b = boundaries[t];
            for (const auto& [sigma, bc] : b.terms()) {
                auto cc = current.coefficient(ring, sigma);
                if (ring.is_zero(cc)) continue;
                if constexpr (!R::is_field) {
                    if (!ring.divides(bc, cc)) continue;
                }
                auto lambda = ring.div_exact(cc, bc);
                // Support size after subtracting lambda * b.
                std::size_t size = current.support_size();
                for (const auto& [s2, b2] : b.terms()) {
                    auto old_c = current.coefficient(ring, s2);
                    auto new_c = ring.sub(old_c, ring.mul(lambda, b2));
                    if (ring.is_zero(old_c) && !ring.is_zero(new_c)) ++size;
                    if (!ring.is_zero(old_c) && ring.is_zero(new_c)) --size;
                }
                if (size < best_size) {
                    best_size = size;
                    best = {t, lambda};
                }
            }
        }
        if (best) {
            current.add_scaled(ring, ring.neg(best->second), boundaries[best->first]);
            improved = true;
        }
    }
    return current;
}

} // namespace sinv
