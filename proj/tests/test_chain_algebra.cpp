#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "sinv/boundary.hpp"
#include "sinv/errors.hpp"
#include "sinv/generators.hpp"
#include "sinv/rings.hpp"

using namespace sinv;

TEST_CASE("ring parsing") {
    CHECK(ring_name(parse_ring("z")) == "Z");
    CHECK(ring_name(parse_ring("q")) == "Q");
    CHECK(ring_name(parse_ring("zp:7")) == "Z/7");
    CHECK_THROWS_AS(parse_ring("zp:4"), InputError);
    CHECK_THROWS_AS(parse_ring("zp:one"), InputError);
    CHECK_THROWS_AS(parse_ring("gf2"), InputError);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.from_long(-1) == 6);
    CHECK(f.mul(f.inv(4), 4) == 1);
    CHECK_THROWS_AS(f.inv(0), DomainError);
}

TEST_CASE("incidence coefficients follow the alternating-sign expansion") {
    IntegerRing z;
    // d(012) = 12 - 02 + 01
    CHECK(incidence_coefficient(z, Simplex{1, 2}, Simplex{0, 1, 2}) == 1);
    CHECK(incidence_coefficient(z, Simplex{0, 2}, Simplex{0, 1, 2}) == -1);
    CHECK(incidence_coefficient(z, Simplex{0, 1}, Simplex{0, 1, 2}) == 1);
    CHECK_THROWS_AS(incidence_coefficient(z, Simplex{0}, Simplex{0, 1, 2}), DomainError);
    CHECK_THROWS_AS(incidence_coefficient(z, Simplex{3}, Simplex{0, 1}), DomainError);
}

TEST_CASE("boundary of boundary of a triangle is zero") {
    IntegerRing z;
    Chain<IntegerRing> c(2);
    c.add_term(z, Simplex{0, 1, 2}, 1);
    auto d = boundary_of(z, c);
    CHECK(d.support_size() == 3);
    CHECK(boundary_of(z, d).is_zero());
}

TEST_CASE("boundary matrix of the triangle cycle") {
    IntegerRing z;
    auto c = boundary_simplex(1);
    auto m = boundary_matrix(z, c, 1);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    for (long n : m.column_nnz()) CHECK(n == 2);
    // Each column has one +1 and one -1.
    for (int j = 0; j < 3; ++j) {
        mpz_class sum = 0;
        for (int i = 0; i < 3; ++i) sum += m.get(z, i, j);
        CHECK(sum == 0);
    }
}

// Boundary matrix of rp2_6 in degree 2 as printed (rows = triangles,
// columns = edges), transcribed entry by entry.
static const std::map<std::string, std::map<std::string, int>> kRp2Del2 = {
    {"012", {{"01", 1}, {"02", -1}, {"12", 1}}},
    {"014", {{"01", 1}, {"04", -1}, {"14", 1}}},
    {"023", {{"02", 1}, {"03", -1}, {"23", 1}}},
    {"035", {{"03", 1}, {"05", -1}, {"35", 1}}},
    {"045", {{"04", 1}, {"05", -1}, {"45", 1}}},
    {"125", {{"12", 1}, {"15", -1}, {"25", 1}}},
    {"134", {{"13", 1}, {"14", -1}, {"34", 1}}},
    {"135", {{"13", 1}, {"15", -1}, {"35", 1}}},
    {"234", {{"23", 1}, {"24", -1}, {"34", 1}}},
    {"245", {{"24", 1}, {"25", -1}, {"45", 1}}},
};

static Simplex simplex_of_digits(const std::string& digits) {
    std::vector<int> vs;
    for (char ch : digits) vs.push_back(ch - '0');
    return Simplex::from_vertices(std::move(vs));
}

TEST_CASE("rp2_6 boundary matrix in degree 2 matches the printed table") {
    IntegerRing z;
    auto c = rp2_6();
    auto m = boundary_matrix(z, c, 2);
    REQUIRE(m.rows() == 15);
    REQUIRE(m.cols() == 10);
    long checked = 0;
    for (const auto& [tri, row] : kRp2Del2) {
        int col = *c.face_index(simplex_of_digits(tri));
        for (const auto& [edge, value] : row) {
            int r = *c.face_index(simplex_of_digits(edge));
            CHECK(m.get(z, r, col) == value);
            ++checked;
        }
    }
    CHECK(checked == m.nnz());
}

TEST_CASE("cp2_9 top boundary matrix has five entries per column") {
    IntegerRing z;
    auto c = cp2_9();
    auto m = boundary_matrix(z, c, 4);
    CHECK(m.rows() == 90);
    CHECK(m.cols() == 36);
    for (long n : m.column_nnz()) CHECK(n == 5);
}

TEST_CASE("coboundary is the transpose of the boundary one degree up") {
    IntegerRing z;
    auto c = rp2_6();
    CHECK(coboundary_matrix(z, c, 1) == boundary_matrix(z, c, 2).transposed());

    auto edge = parse_facets("0 1");
    auto cob = coboundary_matrix(z, edge, 0);
    REQUIRE(cob.rows() == 1);
    CHECK(cob.get(z, 0, 0) == -1);
    CHECK(cob.get(z, 0, 1) == 1);

    auto top = coboundary_matrix(z, c, 2);
    CHECK(top.rows() == 0);
    CHECK(top.cols() == 10);
}

TEST_CASE("boundary matrix degree range errors") {
    IntegerRing z;
    auto c = rp2_6();
    CHECK_THROWS_AS(boundary_matrix(z, c, 3), DomainError);
    CHECK_THROWS_AS(boundary_matrix(z, c, -1), DomainError);
}

template <typename R>
static void check_complex_property(const R& ring, const SimplicialComplex& c) {
    for (int k = 1; k < c.dimension(); ++k) {
        auto lower = boundary_matrix(ring, c, k);
        auto upper = boundary_matrix(ring, c, k + 1);
        CHECK(lower.multiply(ring, upper).is_zero());
        for (int i = 0; i < upper.rows(); ++i)
            for (const auto& e : upper.row(i))
                CHECK(ring.is_unit(e.value));
    }
}

TEST_CASE("d o d = 0 and entries are units, over all rings and builtins") {
    IntegerRing z;
    RationalField q;
    PrimeField f2(2);
    for (const auto& c : {boundary_simplex(2), rp2_6(), ck_complex(3), cylinder(), cp2_9()}) {
        check_complex_property(z, c);
        check_complex_property(q, c);
        check_complex_property(f2, c);
    }
}

TEST_CASE("matrix dump round-trip") {
    IntegerRing z;
    auto m = boundary_matrix(z, rp2_6(), 2);
    auto text = m.dump(z);
    CHECK(text.starts_with("15 10 Z\n"));
    auto back = SparseMatrix<IntegerRing>::parse_dump(z, text);
    CHECK(back == m);

    PrimeField f3(3);
    CHECK_THROWS_AS(SparseMatrix<PrimeField>::parse_dump(f3, text), InputError);
}

TEST_CASE("chain printing uses labels") {
    IntegerRing z;
    auto c = parse_facets("0 1 2");
    Chain<IntegerRing> chain(1);
    chain.add_term(z, Simplex{0, 1}, 1);
    chain.add_term(z, Simplex{1, 2}, -2);
    CHECK(chain.to_string(z, c) == "{0 1} - 2*{1 2}");
}
