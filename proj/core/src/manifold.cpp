#include "sinv/manifold.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "sinv/boundary.hpp"
#include "sinv/errors.hpp"

namespace sinv {

namespace {

struct RidgeData {
    // ridge face index -> facets containing it
    std::vector<std::vector<int>> facets_of_ridge;
    bool two_facets = true;
    bool connected = true;
};

RidgeData ridge_structure(const SimplicialComplex& complex,
                          std::vector<std::string>* failures) {
    RidgeData data;
    int d = complex.dimension();
    const auto& ridges = complex.faces(d - 1);
    data.facets_of_ridge.resize(ridges.size());
    const auto& facets = complex.facets();
    for (std::size_t f = 0; f < facets.size(); ++f) {
        if (facets[f].dimension() != d) continue;
        for (const Simplex& r : facets[f].boundary_faces()) {
            auto idx = complex.face_index(r);
            data.facets_of_ridge[static_cast<std::size_t>(*idx)].push_back(static_cast<int>(f));
        }
    }
    for (std::size_t r = 0; r < ridges.size(); ++r) {
        if (data.facets_of_ridge[r].size() != 2) {
            data.two_facets = false;
            if (failures)
                failures->push_back("ridge " + complex.format_simplex(ridges[r]) + " lies in " +
                                    std::to_string(data.facets_of_ridge[r].size()) + " facets");
        }
    }

    // Connectivity of the facet graph through shared ridges.
    std::size_t n = facets.size();
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& fs : data.facets_of_ridge)
        for (std::size_t a = 0; a < fs.size(); ++a)
            for (std::size_t b = a + 1; b < fs.size(); ++b) {
                adjacency[static_cast<std::size_t>(fs[a])].push_back(fs[b]);
                adjacency[static_cast<std::size_t>(fs[b])].push_back(fs[a]);
            }
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop();
        for (int g : adjacency[f]) {
            if (seen[static_cast<std::size_t>(g)]) continue;
            seen[static_cast<std::size_t>(g)] = true;
            ++reached;
            queue.push(static_cast<std::size_t>(g));
        }
    }
    if (reached != n) {
        data.connected = false;
        if (failures) failures->push_back("facet graph is not connected through ridges");
    }
    return data;
}

bool link_is_homology_sphere(const SimplicialComplex& link, int expected_dim) {
    if (link.dimension() != expected_dim) return false;
    IntegerRing z;
    auto groups = homology(z, link).groups();
    if (expected_dim == 0) return groups[0] == AbelianGroup{2, {}};
    for (int k = 0; k <= expected_dim; ++k) {
        const AbelianGroup& g = groups[static_cast<std::size_t>(k)];
        long want = (k == 0 || k == expected_dim) ? 1 : 0;
        if (g.free_rank != want || !g.torsion.empty()) return false;
    }
    return true;
}

} // namespace

PseudomanifoldReport check_closed_pseudomanifold(const SimplicialComplex& complex) {
    PseudomanifoldReport report;
    report.pure = complex.is_pure();
    if (!report.pure) report.failures.push_back("complex is not pure");

    RidgeData ridges = ridge_structure(complex, &report.failures);
    report.ridges_two_facets = ridges.two_facets;
    report.strongly_connected = ridges.connected;

    report.links_spherical = true;
    int d = complex.dimension();
    for (int v = 0; v < complex.vertex_count(); ++v) {
        SimplicialComplex link = complex.link(Simplex{v});
        if (!link_is_homology_sphere(link, d - 1)) {
            report.links_spherical = false;
            report.failures.push_back("link of vertex " + complex.label(v) +
                                      " is not a homology (d-1)-sphere");
        }
    }
    return report;
}

std::optional<FundamentalClass> orientation(const SimplicialComplex& complex) {
    std::vector<std::string> failures;
    bool pure = complex.is_pure();
    RidgeData ridges = ridge_structure(complex, &failures);
    if (!pure || !ridges.two_facets || !ridges.connected)
        throw DomainError("orientation: not a closed pseudomanifold");

    IntegerRing z;
    int d = complex.dimension();
    const auto& facets = complex.facets();
    const auto& ridge_faces = complex.faces(d - 1);
    std::vector<int> sign(facets.size(), 0);
    sign[0] = 1;  // facets are sorted, so index 0 is the lexicographic least
    std::queue<std::size_t> queue;
    queue.push(0);
    while (!queue.empty()) {
        std::size_t f = queue.front();
        queue.pop();
        for (const Simplex& r : facets[f].boundary_faces()) {
            std::size_t ri = static_cast<std::size_t>(*complex.face_index(r));
            for (int g : ridges.facets_of_ridge[ri]) {
                std::size_t gi = static_cast<std::size_t>(g);
                if (gi == f) continue;
                // Coherence: the shared ridge must cancel in the signed sum.
                mpz_class ef = incidence_coefficient(z, ridge_faces[ri], facets[f]);
                mpz_class eg = incidence_coefficient(z, ridge_faces[ri], facets[gi]);
                int needed = -sign[f] * static_cast<int>(ef.get_si()) *
                             static_cast<int>(eg.get_si());
                if (sign[gi] == 0) {
                    sign[gi] = needed;
                    queue.push(gi);
                } else if (sign[gi] != needed) {
                    return std::nullopt;
                }
            }
        }
    }

    // Normalize the free global sign: the lexicographically greatest facet is
    // positive. On every boundary_simplex(d) this agrees with the standard
    // orientation of the simplex boundary (the facet omitting vertex 0 is +1).
    if (sign[facets.size() - 1] < 0)
        for (auto& s : sign) s = -s;

    FundamentalClass result;
    result.degree = d;
    result.chain = Chain<IntegerRing>(d);
    for (std::size_t f = 0; f < facets.size(); ++f)
        result.chain.add_term(z, facets[f], mpz_class(sign[f]));
    if (!boundary_of(z, result.chain).is_zero())
        throw Error("orientation: signed facet sum is not a cycle");
    return result;
}

Chain<PrimeField> fundamental_class_mod2(const PrimeField& f2, const SimplicialComplex& complex) {
    Chain<PrimeField> top(complex.dimension());
    for (const Simplex& f : complex.facets()) top.add_term(f2, f, f2.one());
    return top;
}

namespace {

mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (a[t][t] == 0) {
            std::size_t pivot = t + 1;
            while (pivot < n && a[pivot][t] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[t], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[t][t] - a[i][t] * a[t][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[t][t];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

long signature(const std::vector<std::vector<mpz_class>>& gram) {
    std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw DomainError("signature: matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw DomainError("signature: matrix is not symmetric");
    }

    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(gram[i][j]);
    std::vector<bool> active(n, true);
    long positive = 0, negative = 0;

    auto eliminate_with_diagonal = [&](std::size_t p) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == p) continue;
            if (a[i][p] == 0) continue;
            mpq_class factor = a[i][p] / a[p][p];
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == p) continue;
                a[i][j] -= factor * a[p][j];
            }
            a[i][p] = 0;
        }
    };

    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n && pivot == n; ++i)
            if (active[i] && a[i][i] != 0) pivot = i;
        if (pivot < n) {
            (sgn(a[pivot][pivot]) > 0 ? positive : negative) += 1;
            eliminate_with_diagonal(pivot);
            active[pivot] = false;
            --remaining;
            continue;
        }
        // All active diagonal entries vanish: any off-diagonal entry gives a
        // hyperbolic block [[0,b],[b,0]] contributing a +1/-1 pair.
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (active[j] && a[i][j] != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi == n) break;  // zero form on the rest
        ++positive;
        ++negative;
        mpq_class b = a[bi][bj];
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == bi || k == bj) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (!active[l] || l == bi || l == bj) continue;
                a[k][l] -= (a[k][bi] * a[bj][l] + a[k][bj] * a[bi][l]) / b;
            }
        }
        active[bi] = false;
        active[bj] = false;
        remaining -= 2;
    }
    return positive - negative;
}

BilinearFormReport intersection_form(const SimplicialComplex& complex) {
    if (complex.dimension() != 4)
        throw DomainError("intersection form: complex is not 4-dimensional");
    PseudomanifoldReport check = check_closed_pseudomanifold(complex);
    if (!check.passes()) {
        std::string reason = check.failures.empty() ? "pseudomanifold check failed"
                                                    : check.failures.front();
        throw DomainError("intersection form: " + reason);
    }
    auto fundamental = orientation(complex);
    if (!fundamental) throw DomainError("intersection form: complex is not orientable");

    IntegerRing z;
    auto cohom = cohomology(z, complex, true);
    const auto& h2 = cohom.degrees[2];

    BilinearFormReport report;
    report.basis = h2.free_reps;
    std::size_t r = report.basis.size();
    report.gram.assign(r, std::vector<mpz_class>(r, 0));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a; b < r; ++b) {
            auto product = cup(z, complex, report.basis[a], report.basis[b]);
            mpz_class value = evaluate(z, product, fundamental->chain);
            report.gram[a][b] = value;
            if (a != b) {
                auto flipped = cup(z, complex, report.basis[b], report.basis[a]);
                mpz_class other = evaluate(z, flipped, fundamental->chain);
                if (other != value)
                    throw Error("intersection form: pairing is not symmetric");
                report.gram[b][a] = other;
            }
        }

    report.even = true;
    for (std::size_t i = 0; i < r; ++i)
        if (report.gram[i][i] % 2 != 0) report.even = false;
    report.signature = signature(report.gram);
    report.unimodular = abs(bareiss_determinant(report.gram)) == 1;
    return report;
}

namespace {

// A vertex w of tau strictly between sigma's i-th and (i+1)-th vertices lands
// in gap G_i; below all of sigma in G_{-1}, above all in G_k. Regularity
// requires every odd-indexed gap ..., G_{-1}, G_1, G_3, ... to be empty
// (-1 counts as odd; only then is each omega_k a mod-2 cycle).
bool regular_pair(const Simplex& sigma, const Simplex& tau) {
    for (int w : tau.vertices()) {
        if (sigma.has_vertex(w)) continue;
        int below = 0;
        for (int v : sigma.vertices()) {
            if (v < w)
                ++below;
            else
                break;
        }
        int gap = below - 1;
        if (gap % 2 != 0) return false;
    }
    return true;
}

} // namespace

StiefelWhitneyReport stiefel_whitney_classes(const SimplicialComplex& complex) {
    std::vector<std::string> failures;
    RidgeData ridges = ridge_structure(complex, &failures);
    if (!complex.is_pure() || !ridges.two_facets || !ridges.connected)
        throw DomainError("stiefel-whitney classes: not a closed pseudomanifold");

    PrimeField f2(2);
    int d = complex.dimension();
    StiefelWhitneyReport report;
    report.classes.resize(static_cast<std::size_t>(d) + 1);

    // All cofaces of sigma, collected through the facets containing it.
    auto cofaces_of = [&](const Simplex& sigma) {
        std::set<Simplex> out;
        std::vector<int> rest;
        for (const Simplex& f : complex.facets()) {
            if (!f.contains(sigma)) continue;
            rest.clear();
            for (int v : f.vertices())
                if (!sigma.has_vertex(v)) rest.push_back(v);
            std::size_t subsets = std::size_t{1} << rest.size();
            for (std::size_t mask = 0; mask < subsets; ++mask) {
                Simplex tau = sigma;
                for (std::size_t b = 0; b < rest.size(); ++b)
                    if (mask & (std::size_t{1} << b)) tau = tau.with(rest[b]);
                out.insert(std::move(tau));
            }
        }
        return out;
    };

    for (int k = 0; k <= d; ++k) {
        Chain<PrimeField> omega(k);
        for (const Simplex& sigma : complex.faces(k)) {
            long regular = 0;
            for (const Simplex& tau : cofaces_of(sigma))
                if (regular_pair(sigma, tau)) ++regular;
            if (regular % 2 == 1) omega.add_term(f2, sigma, f2.one());
        }
        auto& data = report.classes[static_cast<std::size_t>(k)];
        if (k >= 1 && !boundary_of(f2, omega).is_zero())
            throw Error("stiefel-whitney: omega_" + std::to_string(k) + " is not a mod-2 cycle");
        data.sparse = reduce_mod_boundaries(f2, complex, omega);
        if (k < d) {
            auto v = chain_to_vector(f2, complex, omega);
            data.null_homologous =
                column_space_member(f2, boundary_matrix(f2, complex, k + 1), v).has_value();
        } else {
            data.null_homologous = omega.is_zero();
        }
        data.raw = std::move(omega);
    }
    return report;
}

} // namespace sinv
