#include "sinv/generators.hpp"

#include <algorithm>
#include <charconv>

#include "sinv/errors.hpp"

namespace sinv {

SimplicialComplex boundary_simplex(int d) {
    if (d < 1) throw InputError("boundary_simplex: dimension must be >= 1");
    int n = d + 2;
    std::vector<Simplex> facets;
    // All (d+1)-subsets of {0..d+1}: drop each vertex once.
    for (int skip = 0; skip < n; ++skip) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (v != skip) vs.push_back(v);
        facets.push_back(Simplex::from_vertices(std::move(vs)));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex ck_complex(int k) {
    if (k < 2) throw InputError("ck_complex: k must be >= 2");
    int m = 3 * k;
    auto hub = 0;
    auto inner = [&](int j) { return 1 + ((j % m) + m) % m; };
    auto outer = [&](int j) { return m + 1 + (((j % 3) + 3) % 3); };

    std::vector<Simplex> facets;
    facets.reserve(static_cast<std::size_t>(9 * k));
    for (int j = 0; j < m; ++j) {
        facets.push_back(Simplex::from_vertices({hub, inner(j), inner(j + 1)}));
        facets.push_back(Simplex::from_vertices({inner(j), inner(j + 1), outer(j + 1)}));
        facets.push_back(Simplex::from_vertices({inner(j), outer(j), outer(j + 1)}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex rp2_6() {
    std::vector<Simplex> facets = {
        {0, 1, 2}, {0, 1, 4}, {0, 2, 3}, {0, 3, 5}, {0, 4, 5},
        {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 4, 5},
    };
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cp2_9() {
    std::vector<Simplex> facets = {
        {0, 1, 2, 3, 4}, {0, 1, 2, 3, 6}, {0, 1, 2, 4, 7}, {0, 1, 2, 6, 7},
        {0, 1, 3, 4, 5}, {0, 1, 3, 5, 6}, {0, 1, 4, 5, 7}, {0, 1, 5, 6, 8},
        {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8}, {0, 2, 3, 4, 8}, {0, 2, 3, 6, 7},
        {0, 2, 3, 7, 8}, {0, 2, 4, 5, 7}, {0, 2, 4, 5, 8}, {0, 2, 5, 7, 8},
        {0, 3, 4, 5, 6}, {0, 3, 4, 6, 8}, {0, 3, 6, 7, 8}, {0, 4, 5, 6, 8},
        {1, 2, 3, 4, 8}, {1, 2, 3, 5, 6}, {1, 2, 3, 5, 8}, {1, 2, 4, 6, 7},
        {1, 2, 4, 6, 8}, {1, 2, 5, 6, 8}, {1, 3, 4, 5, 7}, {1, 3, 4, 7, 8},
        {1, 3, 5, 7, 8}, {1, 4, 6, 7, 8}, {2, 3, 5, 6, 7}, {2, 3, 5, 7, 8},
        {2, 4, 5, 6, 7}, {2, 4, 5, 6, 8}, {3, 4, 5, 6, 7}, {3, 4, 6, 7, 8},
    };
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cylinder() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        facets.push_back(Simplex::from_vertices({i, j, 3 + j}));
        facets.push_back(Simplex::from_vertices({i, 3 + i, 3 + j}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

namespace {

// Monotone staircases through the grid of a facet pair.
void staircases(std::span<const int> av, std::span<const int> bv, int nb,
                std::size_t i, std::size_t j, std::vector<int>& path,
                std::vector<Simplex>& out) {
    path.push_back(av[i] * nb + bv[j]);
    if (i + 1 == av.size() && j + 1 == bv.size()) {
        out.push_back(Simplex::from_vertices(path));
    } else {
        if (i + 1 < av.size()) staircases(av, bv, nb, i + 1, j, path, out);
        if (j + 1 < bv.size()) staircases(av, bv, nb, i, j + 1, path, out);
    }
    path.pop_back();
}

} // namespace

SimplicialComplex simplicial_product(const SimplicialComplex& a,
                                     const SimplicialComplex& b) {
    int nb = b.vertex_count();
    std::vector<Simplex> facets;
    std::vector<int> path;
    for (const Simplex& fa : a.facets())
        for (const Simplex& fb : b.facets())
            staircases(fa.vertices(), fb.vertices(), nb, 0, 0, path, facets);
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex s2xs2() {
    SimplicialComplex s2 = boundary_simplex(2);
    return simplicial_product(s2, s2);
}

namespace {

int parse_int_param(std::string_view text, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InputError(std::string("bad ") + what + " parameter: " + std::string(text));
    return value;
}

} // namespace

std::optional<SimplicialComplex> make_builtin(std::string_view name) {
    if (name == "rp2_6") return rp2_6();
    if (name == "cp2_9") return cp2_9();
    if (name == "cylinder") return cylinder();
    if (name == "s2xs2") return s2xs2();
    if (name.starts_with("boundary_simplex:"))
        return boundary_simplex(parse_int_param(name.substr(17), "boundary_simplex"));
    if (name.starts_with("ck:"))
        return ck_complex(parse_int_param(name.substr(3), "ck"));
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    return {"boundary_simplex:<d>", "ck:<k>", "rp2_6", "cp2_9", "cylinder", "s2xs2"};
}

} // namespace sinv
