#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sinv/generators.hpp"
#include "sinv/manifold.hpp"
#include "support/checks.hpp"

using namespace sinv;

// A generating cocycle for the degree-2 cohomology of cp2_9, fixed as a fixture.
static Cochain<IntegerRing> reference_cocycle_b() {
    IntegerRing z;
    Cochain<IntegerRing> b(2);
    auto add = [&](int x, int y, int w, int s) { b.add_term(z, Simplex{x, y, w}, mpz_class(s)); };
    add(1, 2, 5, 1); add(1, 2, 8, 1); add(1, 3, 7, 1); add(1, 3, 8, 1);
    add(1, 4, 6, 1); add(1, 4, 8, 1); add(2, 3, 5, -1); add(2, 4, 6, 1);
    add(2, 5, 6, 1); add(2, 6, 8, -1); add(3, 4, 7, -1); add(3, 5, 7, -1);
    add(3, 5, 8, -1); add(4, 6, 7, 1); add(4, 7, 8, -1); add(5, 6, 7, 1);
    return b;
}

static Chain<PrimeField> mod2_chain(const std::vector<std::vector<int>>& faces) {
    PrimeField f2(2);
    Chain<PrimeField> c(static_cast<int>(faces.front().size()) - 1);
    for (const auto& f : faces) c.add_term(f2, Simplex::from_vertices(std::vector<int>(f)), 1);
    return c;
}

TEST_CASE("pseudomanifold checks") {
    auto s3 = check_closed_pseudomanifold(boundary_simplex(3));
    CHECK(s3.passes());

    auto cp2 = check_closed_pseudomanifold(cp2_9());
    CHECK(cp2.passes());
    CHECK(cp2.links_spherical);  // all 9 vertex links are homology 3-spheres

    auto c3 = check_closed_pseudomanifold(ck_complex(3));
    CHECK_FALSE(c3.passes());
    CHECK_FALSE(c3.ridges_two_facets);
    // The pinned construction puts the outer edges in three triangles each.
    bool found = false;
    for (const auto& f : c3.failures)
        if (f.find("3 facets") != std::string::npos) found = true;
    CHECK(found);

    auto cyl = check_closed_pseudomanifold(cylinder());
    CHECK_FALSE(cyl.passes());  // boundary edges lie in one facet

    auto s2s2 = check_closed_pseudomanifold(s2xs2());
    CHECK(s2s2.passes());
}

TEST_CASE("orientation of spheres, cp2_9, and non-orientability of rp2_6") {
    IntegerRing z;

    CHECK_FALSE(orientation(rp2_6()).has_value());

    auto cp2 = orientation(cp2_9());
    REQUIRE(cp2.has_value());
    CHECK(cp2->chain.support_size() == 36);

    auto s2 = orientation(boundary_simplex(2));
    REQUIRE(s2.has_value());
    // Standard boundary orientation of the 3-simplex: facet omitting vertex i
    // carries sign (-1)^i.
    auto tetra = Simplex{0, 1, 2, 3};
    auto faces = tetra.boundary_faces();
    for (std::size_t i = 0; i < faces.size(); ++i)
        CHECK(s2->chain.coefficient(z, faces[i]) == (i % 2 == 0 ? 1 : -1));

    CHECK_THROWS_AS(orientation(cylinder()), DomainError);
}

TEST_CASE("mod-2 fundamental class is a cycle on closed pseudomanifolds") {
    PrimeField f2(2);
    for (const auto& c : {boundary_simplex(2), rp2_6(), cp2_9()}) {
        auto m2 = fundamental_class_mod2(f2, c);
        CHECK(m2.support_size() == static_cast<std::size_t>(c.facet_count()));
        CHECK(boundary_of(f2, m2).is_zero());
    }
}

TEST_CASE("cup with the unit cochain is the identity") {
    IntegerRing z;
    auto c = rp2_6();
    Cochain<IntegerRing> unit(0);
    for (const auto& v : c.faces(0)) unit.add_term(z, v, 1);

    Cochain<IntegerRing> g(1);
    g.add_term(z, Simplex{0, 1}, 2);
    g.add_term(z, Simplex{3, 5}, -1);
    auto prod = cup(z, c, unit, g);
    // Equality after restriction: cup lands on faces of the complex.
    CHECK(prod == g);
    auto prod2 = cup(z, c, g, unit);
    CHECK(prod2 == g);
}

TEST_CASE("cup of the reference cocycle with itself evaluates to +1 on [M]") {
    IntegerRing z;
    auto c = cp2_9();
    auto b = reference_cocycle_b();
    // b really is a cocycle.
    auto delta = coboundary_matrix(z, c, 2);
    for (const auto& e : delta.apply(z, chain_to_vector(z, c, b))) CHECK(e == 0);

    auto fundamental = orientation(c);
    REQUIRE(fundamental.has_value());
    auto bb = cup(z, c, b, b);
    CHECK(evaluate(z, bb, fundamental->chain) == 1);
}

TEST_CASE("cap with the unit cochain is the identity; reference cap value") {
    IntegerRing z;
    auto c = cp2_9();
    Cochain<IntegerRing> unit(0);
    for (const auto& v : c.faces(0)) unit.add_term(z, v, 1);
    auto fundamental = orientation(c);
    REQUIRE(fundamental.has_value());
    CHECK(cap(z, c, unit, fundamental->chain) == fundamental->chain);

    auto b = reference_cocycle_b();
    auto image = cap(z, c, b, fundamental->chain);
    Chain<IntegerRing> expected(2);
    expected.add_term(z, Simplex{5, 6, 7}, 1);
    expected.add_term(z, Simplex{5, 6, 8}, -1);
    expected.add_term(z, Simplex{5, 7, 8}, 1);
    expected.add_term(z, Simplex{6, 7, 8}, -1);
    CHECK(image == expected);

    Chain<IntegerRing> low(1);
    low.add_term(z, Simplex{0, 1}, 1);
    CHECK_THROWS_AS(cap(z, c, b, low), DomainError);
}

TEST_CASE("random cocycle products are cocycles (mod 2, rp2_6)") {
    PrimeField f2(2);
    auto c = rp2_6();
    auto cohom = cohomology(f2, c, true);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = checks::random_cocycle(c, 1, cohom.degrees[1].free_reps, rng);
        auto g = checks::random_cocycle(c, 1, cohom.degrees[1].free_reps, rng);
        auto prod = cup(f2, c, f, g);
        auto delta = coboundary_matrix(f2, c, 2);
        for (const auto& e : delta.apply(f2, chain_to_vector(f2, c, prod))) CHECK(e == 0);
    }
}

TEST_CASE("termwise adjunction <g cup f, c> = <f, g cap c>") {
    IntegerRing z;
    auto c = cp2_9();
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain<IntegerRing> f(2), g(2);
        Chain<IntegerRing> chain(4);
        for (const auto& s : c.faces(2)) {
            int a = coeff(rng);
            if (a) f.add_term(z, s, mpz_class(a));
            int b = coeff(rng);
            if (b) g.add_term(z, s, mpz_class(b));
        }
        for (const auto& s : c.faces(4)) {
            int a = coeff(rng);
            if (a) chain.add_term(z, s, mpz_class(a));
        }
        CHECK(evaluate(z, cup(z, c, g, f), chain) == evaluate(z, f, cap(z, c, g, chain)));
    }
}

TEST_CASE("adjunction on classes: <f cup g, [M]> = <f, g cap [M]> for cocycles") {
    IntegerRing z;
    auto c = cp2_9();
    auto fundamental = orientation(c);
    REQUIRE(fundamental.has_value());
    auto cohom = cohomology(z, c, true);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = checks::random_integer_cocycle(c, 2, cohom.degrees[2].free_reps, rng);
        auto g = checks::random_integer_cocycle(c, 2, cohom.degrees[2].free_reps, rng);
        CHECK(evaluate(z, cup(z, c, f, g), fundamental->chain) ==
              evaluate(z, f, cap(z, c, g, fundamental->chain)));
    }
}

TEST_CASE("anticommutativity up to coboundary on classes") {
    PrimeField f2(2);
    IntegerRing z;
    auto c = rp2_6();
    auto cohom2 = cohomology(f2, c, true);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = checks::random_cocycle(c, 1, cohom2.degrees[1].free_reps, rng);
        auto g = checks::random_cocycle(c, 1, cohom2.degrees[1].free_reps, rng);
        auto diff = cup(f2, c, g, f);
        diff.add(f2, cup(f2, c, f, g));  // mod 2: g.f - (-1)^{ik} f.g = g.f + f.g
        CHECK(checks::is_coboundary(f2, c, diff));
    }

    // Integral check on cp2_9 in degree 2 x 2: difference of the two products
    // is an integral coboundary.
    auto cp2 = cp2_9();
    auto cohom = cohomology(z, cp2, true);
    std::mt19937 rng2(6);
    for (int trial = 0; trial < 5; ++trial) {
        auto f = checks::random_integer_cocycle(cp2, 2, cohom.degrees[2].free_reps, rng2);
        auto g = checks::random_integer_cocycle(cp2, 2, cohom.degrees[2].free_reps, rng2);
        auto diff = cup(z, cp2, g, f);
        diff.add_scaled(z, mpz_class(-1), cup(z, cp2, f, g));
        CHECK(checks::is_coboundary(z, cp2, diff));
    }
}

TEST_CASE("cohomology ring of cp2_9 is Z[b]/(b^3)") {
    IntegerRing z;
    auto c = cp2_9();
    auto table = cohomology_ring_table(z, c);
    REQUIRE(table.generators[0].size() == 1);
    REQUIRE(table.generators[2].size() == 1);
    REQUIRE(table.generators[4].size() == 1);
    CHECK(table.generators[1].empty());
    CHECK(table.generators[3].empty());

    // Unit acts as identity.
    auto unit_sq = table.products.at({0, 0, 0, 0});
    CHECK(unit_sq[0] == 1);
    auto unit_g2 = table.products.at({0, 0, 2, 0});
    CHECK(unit_g2[0] == 1);

    // The degree-2 generator squares to a generator of degree 4.
    auto square = table.products.at({2, 0, 2, 0});
    CHECK(abs(square[0]) == 1);
}

TEST_CASE("cohomology ring of a sphere is trivial in positive degrees") {
    IntegerRing z;
    auto table = cohomology_ring_table(z, boundary_simplex(2));
    REQUIRE(table.generators[2].size() == 1);
    // No room for non-trivial products: 2+2 exceeds the dimension, and
    // 0 x k products are unit multiples.
    auto with_unit = table.products.at({0, 0, 2, 0});
    CHECK(abs(with_unit[0]) == 1);
    CHECK(table.products.find({2, 0, 2, 0}) == table.products.end());
}

TEST_CASE("cohomology ring of rp2_6 mod 2 is the truncated polynomial pattern") {
    PrimeField f2(2);
    auto table = cohomology_ring_table(f2, rp2_6());
    REQUIRE(table.generators[1].size() == 1);
    REQUIRE(table.generators[2].size() == 1);
    auto square = table.products.at({1, 0, 1, 0});
    CHECK(square[0] == 1);  // a^1 cup a^1 = a^2 != 0
}

TEST_CASE("intersection form of cp2_9") {
    auto report = intersection_form(cp2_9());
    REQUIRE(report.gram.size() == 1);
    CHECK(report.gram[0][0] == 1);
    CHECK_FALSE(report.even);
    CHECK(report.signature == 1);
    CHECK(report.unimodular);
    REQUIRE(report.basis.size() == 1);
}

TEST_CASE("intersection form of the 4-sphere is empty") {
    auto report = intersection_form(boundary_simplex(4));
    CHECK(report.gram.empty());
    CHECK(report.signature == 0);
    CHECK(report.even);
    CHECK(report.unimodular);
}

TEST_CASE("intersection form of s2xs2 is the even hyperbolic form") {
    auto report = intersection_form(s2xs2());
    REQUIRE(report.gram.size() == 2);
    CHECK(report.even);
    CHECK(report.signature == 0);
    CHECK(report.unimodular);
    // det = -1 for the hyperbolic plane.
    mpz_class det = report.gram[0][0] * report.gram[1][1] - report.gram[0][1] * report.gram[1][0];
    CHECK(det == -1);
}

TEST_CASE("intersection form rejects bad inputs") {
    CHECK_THROWS_AS(intersection_form(rp2_6()), DomainError);       // not 4-dimensional
    CHECK_THROWS_AS(intersection_form(ck_complex(3)), DomainError); // not a pseudomanifold
}

TEST_CASE("signature of small forms") {
    using M = std::vector<std::vector<mpz_class>>;
    CHECK(signature(M{{mpz_class(1)}}) == 1);
    CHECK(signature(M{{mpz_class(0), mpz_class(1)}, {mpz_class(1), mpz_class(0)}}) == 0);
    CHECK(signature(M{{mpz_class(1), mpz_class(0), mpz_class(0)},
                      {mpz_class(0), mpz_class(1), mpz_class(0)},
                      {mpz_class(0), mpz_class(0), mpz_class(-1)}}) == 1);
    CHECK(signature(M{}) == 0);
    // E8-like small check: diag(2) has signature 1.
    CHECK(signature(M{{mpz_class(2)}}) == 1);
    CHECK_THROWS_AS(signature(M{{mpz_class(0), mpz_class(1)}, {mpz_class(2), mpz_class(0)}}),
                    DomainError);
}

TEST_CASE("stiefel-whitney classes of cp2_9 match the worked values") {
    PrimeField f2(2);
    auto c = cp2_9();
    auto report = stiefel_whitney_classes(c);
    REQUIRE(report.classes.size() == 5);

    // omega_0 = {0} + {5} + {8}.
    CHECK(report.classes[0].raw == mod2_chain({{0}, {5}, {8}}));

    // omega_1 and omega_3 vanish as classes.
    CHECK(report.classes[1].null_homologous);
    CHECK(report.classes[3].null_homologous);

    // Raw omega_2 is the printed 34-triangle chain, verbatim.
    auto expected_omega2 = mod2_chain({
        {0, 1, 2}, {0, 1, 8}, {0, 2, 3}, {0, 2, 7}, {0, 2, 8}, {0, 3, 4}, {0, 4, 5},
        {0, 5, 6}, {0, 5, 7}, {0, 5, 8}, {0, 6, 7}, {0, 7, 8}, {1, 2, 6}, {1, 2, 7},
        {1, 2, 8}, {1, 4, 6}, {1, 4, 7}, {2, 3, 8}, {2, 4, 6}, {2, 4, 7}, {2, 5, 7},
        {2, 5, 8}, {3, 4, 8}, {3, 5, 7}, {3, 5, 8}, {3, 7, 8}, {4, 5, 6}, {4, 5, 7},
        {4, 5, 8}, {4, 6, 7}, {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
    CHECK(report.classes[2].raw == expected_omega2);
    CHECK_FALSE(report.classes[2].null_homologous);

    // The sparsified omega_2 is homologous to the 4-triangle reference chain.
    auto reference_sparse = mod2_chain({{5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}});
    CHECK(report.classes[2].sparse.support_size() <= 34);
    Chain<PrimeField> diff = report.classes[2].sparse;
    diff.add(f2, reference_sparse);
    CHECK(checks::is_boundary(f2, c, diff));

    // omega_4 = [M]_2.
    CHECK(report.classes[4].raw == fundamental_class_mod2(f2, c));
}

TEST_CASE("omega_d equals the mod-2 fundamental class on closed pseudomanifolds") {
    PrimeField f2(2);
    for (const auto& c : {boundary_simplex(2), boundary_simplex(3), boundary_simplex(4), rp2_6(),
                          cp2_9(), s2xs2()}) {
        auto report = stiefel_whitney_classes(c);
        CHECK(report.classes.back().raw == fundamental_class_mod2(f2, c));
        for (const auto& data : report.classes) {
            if (data.raw.dimension() >= 1) CHECK(boundary_of(f2, data.raw).is_zero());
        }
    }
    CHECK_THROWS_AS(stiefel_whitney_classes(cylinder()), DomainError);
}

TEST_CASE("omega_1 of rp2_6 witnesses non-orientability") {
    PrimeField f2(2);
    auto c = rp2_6();
    auto report = stiefel_whitney_classes(c);
    CHECK_FALSE(report.classes[1].null_homologous);
    CHECK_FALSE(checks::is_boundary(f2, c, report.classes[1].raw));
}

TEST_CASE("omega_0 parity equals the euler characteristic mod 2") {
    for (const auto& c : {boundary_simplex(2), boundary_simplex(3), boundary_simplex(4), rp2_6(),
                          cp2_9(), s2xs2()}) {
        auto report = stiefel_whitney_classes(c);
        long omega0 = static_cast<long>(report.classes[0].raw.support_size());
        CHECK(omega0 % 2 == ((c.euler_characteristic() % 2) + 2) % 2);
    }
}

TEST_CASE("wu formula: parity of Q matches vanishing of omega_2") {
    auto cp2 = cp2_9();
    auto cp2_form = intersection_form(cp2);
    auto cp2_sw = stiefel_whitney_classes(cp2);
    CHECK_FALSE(cp2_form.even);
    CHECK_FALSE(cp2_sw.classes[2].null_homologous);

    auto s4 = boundary_simplex(4);
    auto s4_form = intersection_form(s4);
    auto s4_sw = stiefel_whitney_classes(s4);
    CHECK(s4_form.even);
    CHECK(s4_sw.classes[2].null_homologous);

    auto prod = s2xs2();
    auto prod_form = intersection_form(prod);
    auto prod_sw = stiefel_whitney_classes(prod);
    CHECK(prod_form.even);
    CHECK(prod_sw.classes[2].null_homologous);
}

TEST_CASE("mod-2 poincare duality on the five fixtures") {
    CHECK(checks::poincare_duality_mod2(rp2_6()));
    CHECK(checks::poincare_duality_mod2(boundary_simplex(2)));
    CHECK(checks::poincare_duality_mod2(boundary_simplex(4)));
    CHECK(checks::poincare_duality_mod2(cp2_9()));
    CHECK(checks::poincare_duality_mod2(s2xs2()));
}

TEST_CASE("link of vertex 0 in cp2_9 is a rational homology 3-sphere") {
    RationalField q;
    auto link = cp2_9().link(Simplex{0});
    CHECK(link.facet_count() == 20);
    auto pm = check_closed_pseudomanifold(link);
    CHECK(pm.closed_pseudomanifold());
    auto groups = homology(q, link).groups();
    REQUIRE(groups.size() == 4);
    CHECK(groups[0].free_rank == 1);
    CHECK(groups[1].free_rank == 0);
    CHECK(groups[2].free_rank == 0);
    CHECK(groups[3].free_rank == 1);
}

TEST_CASE("orientability agrees with the top integral homology group") {
    IntegerRing z;
    for (const auto& c : {boundary_simplex(2), boundary_simplex(4), rp2_6(), cp2_9(), s2xs2()}) {
        auto pm = check_closed_pseudomanifold(c);
        REQUIRE(pm.closed_pseudomanifold());
        auto top = homology(z, c).degrees.back().group;
        if (orientation(c).has_value())
            CHECK(top == AbelianGroup{1, {}});
        else
            CHECK(top.free_rank == 0);
    }
}
