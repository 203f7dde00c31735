#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sinv/boundary.hpp"
#include "sinv/generators.hpp"
#include "sinv/smith.hpp"
#include "support/oracles.hpp"

using namespace sinv;

namespace {

SparseMatrix<IntegerRing> diag_matrix(const std::vector<long>& values) {
    IntegerRing z;
    int n = static_cast<int>(values.size());
    SparseMatrix<IntegerRing> m(n, n);
    for (int i = 0; i < n; ++i) m.set(z, i, i, mpz_class(values[static_cast<std::size_t>(i)]));
    return m;
}

} // namespace

TEST_CASE("field rank basics") {
    RationalField q;
    auto c = boundary_simplex(1);
    CHECK(field_rank(q, boundary_matrix(q, c, 1)) == 2);

    SparseMatrix<RationalField> zero(4, 7);
    CHECK(field_rank(q, zero) == 0);

    IntegerRing z;
    CHECK_THROWS_AS(field_rank(z, boundary_matrix(z, c, 1)), DomainError);
}

TEST_CASE("rank of rp2_6 degree-2 boundary mod 2 is 9") {
    PrimeField f2(2);
    IntegerRing z;
    auto c = rp2_6();
    auto m = boundary_matrix(f2, c, 2);
    CHECK(field_rank(f2, m) == 9);
    CHECK(oracle::dense_rank_mod_p(boundary_matrix(z, c, 2), 2) == 9);
}

TEST_CASE("snf of diag(2,3) is (1,6)") {
    IntegerRing z;
    auto result = smith_normal_form(z, diag_matrix({2, 3}));
    REQUIRE(result.diagonal.size() == 2);
    CHECK(result.diagonal[0] == 1);
    CHECK(result.diagonal[1] == 6);
}

TEST_CASE("snf of the identity") {
    IntegerRing z;
    auto result = smith_normal_form(z, diag_matrix({1, 1, 1, 1}));
    CHECK(result.rank() == 4);
    for (const auto& d : result.diagonal) CHECK(d == 1);
}

TEST_CASE("snf of an empty and a zero matrix") {
    IntegerRing z;
    CHECK(smith_normal_form(z, SparseMatrix<IntegerRing>(0, 5)).rank() == 0);
    CHECK(smith_normal_form(z, SparseMatrix<IntegerRing>(3, 4)).rank() == 0);
}

TEST_CASE("snf of the rp2_6 degree-2 boundary: ones and a single two") {
    IntegerRing z;
    auto m = boundary_matrix(z, rp2_6(), 2);
    auto result = smith_normal_form(z, m);
    auto expected = oracle::dense_snf(m);
    REQUIRE(result.diagonal.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(result.diagonal[i] == expected[i]);
    // No 2-cycles (no 3-faces, H_2 = 0), so the rank is full; the single
    // invariant factor 2 is the Z/2 torsion of H_1.
    REQUIRE(result.rank() == 10);
    for (int i = 0; i < 9; ++i) CHECK(result.diagonal[static_cast<std::size_t>(i)] == 1);
    CHECK(result.diagonal[9] == 2);
}

TEST_CASE("tracked transforms reproduce the diagonal") {
    IntegerRing z;
    auto m = boundary_matrix(z, rp2_6(), 2);
    auto result = smith_normal_form(z, m, true);
    auto u = result.row_transform(z);
    auto v = result.col_transform(z);
    auto d = u.multiply(z, m).multiply(z, v);
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j) {
            mpz_class expected = 0;
            if (i == j && i < result.rank()) expected = result.diagonal[static_cast<std::size_t>(i)];
            CHECK(d.get(z, i, j) == expected);
        }
    CHECK(abs(result.det_row_transform(z)) == 1);
    CHECK(abs(result.det_col_transform(z)) == 1);

    // Inverses really invert.
    auto uinv = result.row_transform_inverse(z);
    auto id = u.multiply(z, uinv);
    for (int i = 0; i < id.rows(); ++i)
        for (int j = 0; j < id.cols(); ++j) CHECK(id.get(z, i, j) == (i == j ? 1 : 0));
    auto vinv = result.col_transform_inverse(z);
    auto id2 = vinv.multiply(z, v);
    for (int i = 0; i < id2.rows(); ++i)
        for (int j = 0; j < id2.cols(); ++j) CHECK(id2.get(z, i, j) == (i == j ? 1 : 0));
}

TEST_CASE("column space membership") {
    IntegerRing z;
    auto c = boundary_simplex(2);
    auto m = boundary_matrix(z, c, 2);

    // The boundary of the 012-cycle is in the image.
    Chain<IntegerRing> top(2);
    top.add_term(z, Simplex{0, 1, 2}, 1);
    auto v = chain_to_vector(z, c, boundary_of(z, top));
    auto x = column_space_member(z, m, v);
    REQUIRE(x.has_value());
    CHECK(m.apply(z, *x) == v);

    // The zero vector is a member with x = 0.
    std::vector<mpz_class> zero(static_cast<std::size_t>(m.rows()), 0);
    auto x0 = column_space_member(z, m, zero);
    REQUIRE(x0.has_value());
    for (const auto& e : *x0) CHECK(e == 0);

    std::vector<mpz_class> wrong_size(3, 0);
    CHECK_THROWS_AS(column_space_member(z, m, wrong_size), DomainError);
}

TEST_CASE("order-2 torsion witness in rp2_6") {
    IntegerRing z;
    auto c = rp2_6();
    auto m = boundary_matrix(z, c, 2);
    // 013 is not a face, so 01 + 13 - 03 is a length-3 cycle generating H_1:
    // not a boundary, but twice it is.
    Chain<IntegerRing> cycle(1);
    cycle.add_term(z, Simplex{0, 1}, 1);
    cycle.add_term(z, Simplex{1, 3}, 1);
    cycle.add_term(z, Simplex{0, 3}, -1);
    CHECK(boundary_of(z, cycle).is_zero());
    auto v = chain_to_vector(z, c, cycle);
    CHECK_FALSE(column_space_member(z, m, v).has_value());
    std::vector<mpz_class> doubled = v;
    for (auto& e : doubled) e *= 2;
    auto x = column_space_member(z, m, doubled);
    REQUIRE(x.has_value());
    CHECK(m.apply(z, *x) == doubled);
}

TEST_CASE("field-side membership over Z/5") {
    PrimeField f5(5);
    auto c = rp2_6();
    auto m = boundary_matrix(f5, c, 2);
    Chain<PrimeField> cycle(1);
    cycle.add_term(f5, Simplex{0, 1}, 1);
    cycle.add_term(f5, Simplex{1, 2}, 1);
    cycle.add_term(f5, Simplex{0, 2}, f5.from_long(-1));
    // Over Z/5 the torsion vanishes, so the cycle is a boundary.
    auto v = chain_to_vector(f5, c, cycle);
    auto x = column_space_member(f5, m, v);
    REQUIRE(x.has_value());
    CHECK(m.apply(f5, *x) == v);
}

TEST_CASE("snf and rational rank agree on all builtin boundary matrices") {
    IntegerRing z;
    RationalField q;
    for (const auto& c : {boundary_simplex(2), boundary_simplex(3), rp2_6(), ck_complex(3),
                          cylinder(), cp2_9()}) {
        for (int k = 1; k <= c.dimension(); ++k) {
            auto mz = boundary_matrix(z, c, k);
            auto mq = boundary_matrix(q, c, k);
            CHECK(smith_normal_form(z, mz).rank() == field_rank(q, mq));
        }
    }
}

TEST_CASE("random matrix property suite (unit-test sized)") {
    IntegerRing z;
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        auto dense = oracle::random_int_matrix(rng);
        auto m = oracle::to_sparse(dense);
        auto result = smith_normal_form(z, m, true);

        // Divisibility chain.
        for (std::size_t i = 0; i + 1 < result.diagonal.size(); ++i)
            CHECK(result.diagonal[i + 1] % result.diagonal[i] == 0);

        // Determinantal-divisor identity against the brute-force minor oracle.
        mpz_class product = 1;
        for (std::size_t k = 1; k <= result.diagonal.size(); ++k) {
            product *= result.diagonal[k - 1];
            CHECK(product == oracle::minor_gcd(dense, k));
        }
        if (result.rank() < std::min(m.rows(), m.cols()))
            CHECK(oracle::minor_gcd(dense, static_cast<std::size_t>(result.rank()) + 1) == 0);

        // Tracked transforms: U*A*V = D with unit determinants.
        auto d = result.row_transform(z).multiply(z, m).multiply(z, result.col_transform(z));
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j) {
                mpz_class expected = 0;
                if (i == j && i < result.rank())
                    expected = result.diagonal[static_cast<std::size_t>(i)];
                CHECK(d.get(z, i, j) == expected);
            }
        CHECK(abs(result.det_row_transform(z)) == 1);
        CHECK(abs(result.det_col_transform(z)) == 1);
    }
}

TEST_CASE("intermediate growth is observed but stays modest here") {
    IntegerRing z;
    auto result = smith_normal_form(z, boundary_matrix(z, cp2_9(), 3));
    CHECK(result.max_coefficient_bits >= 1);
}
