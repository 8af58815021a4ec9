#include <random>

#include <gtest/gtest.h>

#include "qgamble/error.hpp"
#include "qgamble/linalg.hpp"
#include "test_support.hpp"

namespace qgamble {
namespace {

Matrix rational_matrix(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Scalar>> z;
    for (const auto& r : rows) z.emplace_back(r.begin(), r.end());
    return Matrix::from_rows(z);
}

void expect_projector_laws(const Subspace& s) {
    const Projector p = projector(s);
    const Matrix& m = p.matrix();
    EXPECT_EQ(m * m, m);
    EXPECT_EQ(m.adjoint(), m);
    EXPECT_EQ(m.trace(), Scalar(Rational(static_cast<long>(s.rank()))));
    EXPECT_EQ(p.rank(), s.rank());
}

TEST(Projector, StandardRay) {
    const Projector p = projector(Subspace::ray({1, 0, 0}));
    EXPECT_EQ(p.matrix(), rational_matrix({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
}

TEST(Projector, DiagonalRay) {
    // v v^T / (v^T v) with v = (1,1,0).
    const Rational h(1, 2);
    const Projector p = projector(Subspace::ray({1, 1, 0}));
    EXPECT_EQ(p.matrix(), rational_matrix({{h, h, 0}, {h, h, 0}, {0, 0, 0}}));
}

TEST(Projector, FullSpaceIsIdentity) {
    for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(projector(Subspace::full(n)).matrix(), Matrix::identity(n));
    // A non-orthogonal basis of the full space still projects to I.
    const Subspace s(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    EXPECT_EQ(projector(s).matrix(), Matrix::identity(3));
}

TEST(Projector, LawsOnRandomSubspaces) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> rank(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Vector> vs;
        const bool complex = trial % 2 == 1;
        for (std::size_t k = rank(rng); k > 0; --k) vs.push_back(testing::random_vector(rng, 4, complex));
        expect_projector_laws(Subspace::spanned_by(4, vs));
    }
}

TEST(Subspace, DependentBasisRejected) {
    try {
        Subspace(3, {{1, 0, 0}, {2, 0, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DependentBasis);
    }
    EXPECT_EQ(Subspace::spanned_by(3, std::vector<Vector>{{1, 0, 0}, {2, 0, 0}}).rank(), 1U);
    EXPECT_THROW(Subspace(3, {{1, 0}}), Error);
}

TEST(Subspace, EqualityIsMutualContainment) {
    EXPECT_EQ(Subspace(3, {{1, 0, 0}, {0, 1, 0}}), Subspace(3, {{1, 1, 0}, {1, -1, 0}}));
    EXPECT_NE(Subspace::ray({1, 0, 0}), Subspace::ray({0, 1, 0}));
    EXPECT_EQ(Subspace::ray({1, 2, 3}), Subspace::ray({-2, -4, -6}));
}

TEST(Orthogonal, Examples) {
    const auto e1 = Subspace::ray({1, 0, 2});
    EXPECT_TRUE(orthogonal(e1, Subspace::ray({0, 1, 0})));
    EXPECT_FALSE(orthogonal(e1, Subspace::ray({1, 1, 0})));
    EXPECT_TRUE(orthogonal(e1, Subspace::zero(3)));
    EXPECT_THROW(orthogonal(e1, Subspace::ray({1, 0})), Error);
}

TEST(Orthogonal, ComplexInnerProductConjugates) {
    // (1, i) and (1, -i) are orthogonal eigenvectors of sigma_y.
    const Vector plus{1, Scalar::i()};
    const Vector minus{1, -Scalar::i()};
    EXPECT_TRUE(inner(plus, minus).is_zero());
    EXPECT_EQ(inner(plus, plus), Scalar(2));
}

TEST(Compatible, Examples) {
    const auto a = Subspace::ray({1, 0, 2});
    const auto b = Subspace::ray({1, 1, 0});
    EXPECT_TRUE(compatible(a, a));
    EXPECT_FALSE(compatible(a, b));
    EXPECT_TRUE(compatible(Subspace::ray({1, 0, 0}), Subspace::ray({0, 1, 1})));
    // A ray inside a plane commutes with it.
    EXPECT_TRUE(compatible(Subspace::ray({1, 1, 0}), Subspace(3, {{1, 0, 0}, {0, 1, 0}})));
}

TEST(Compatible, OrthogonalImpliesCompatible) {
    std::mt19937_64 rng(3);
    int orthogonal_pairs = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<long> small(-2, 2);
        Vector u(3), v(3);
        for (std::size_t k = 0; k < 3; ++k) {
            u[k] = small(rng);
            v[k] = small(rng);
        }
        if (u.is_zero() || v.is_zero()) continue;
        const auto a = Subspace::ray(u), b = Subspace::ray(v);
        if (orthogonal(a, b)) {
            ++orthogonal_pairs;
            EXPECT_TRUE(compatible(a, b));
        }
    }
    EXPECT_GT(orthogonal_pairs, 10);
}

TEST(DirectSum, Examples) {
    EXPECT_TRUE(direct_sum(std::vector<Subspace>{}, 3).is_zero());
    std::vector<Subspace> rays;
    for (std::size_t k = 0; k < 4; ++k) rays.push_back(Subspace::ray(Vector::unit(4, k)));
    EXPECT_EQ(direct_sum(rays, 4), Subspace::full(4));

    const Subspace e23 = direct_sum(std::vector{Subspace::ray({1, 0, 0}), Subspace::ray({0, 1, 0})}, 3);
    const Subspace e45 = direct_sum(std::vector{Subspace::ray({1, 1, 0}), Subspace::ray({1, -1, 0})}, 3);
    EXPECT_EQ(e23, e45);
    EXPECT_EQ(e23.rank(), 2U);

    try {
        direct_sum(std::vector{Subspace::ray({1, 0, 0}), Subspace::ray({1, 1, 0})}, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotOrthogonal);
    }
}

TEST(Orthocomplement, Examples) {
    EXPECT_EQ(orthocomplement(Subspace::zero(3)), Subspace::full(3));
    EXPECT_EQ(orthocomplement(Subspace::ray({1, 0, 0})), Subspace(3, {{0, 1, 0}, {0, 0, 1}}));
    EXPECT_TRUE(orthocomplement(Subspace::full(2)).is_zero());
}

TEST(Orthocomplement, Involution) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vector> vs;
        for (int k = trial % 4; k > 0; --k) vs.push_back(testing::random_vector(rng, 5, trial % 3 == 0));
        const Subspace s = Subspace::spanned_by(5, vs);
        const Subspace c = orthocomplement(s);
        EXPECT_EQ(s.rank() + c.rank(), 5U);
        EXPECT_TRUE(orthogonal(s, c));
        EXPECT_EQ(orthocomplement(c), s);
    }
}

TEST(Tensor, KroneckerOrder) {
    const Vector a{1, 2};
    const Vector b{3, 5};
    EXPECT_EQ(tensor(a, b), (Vector{3, 5, 6, 10}));
}

} // namespace
} // namespace qgamble
