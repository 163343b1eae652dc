#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhopf/matrix.hpp"

using namespace qhopf;

namespace {

ExactMatrix from_ints(std::size_t n, std::initializer_list<int> values)
{
    std::vector<CycloNumber> entries;
    for (int v : values)
        entries.emplace_back(v);
    return ExactMatrix(n, entries);
}

} // namespace

TEST(Matrix, AntidiagPlacement)
{
    const auto xi = CycloNumber::zeta(5);
    std::vector<CycloNumber> vals(6, CycloNumber(1, 5));
    vals[0] = xi;
    const auto e = antidiag(vals);
    EXPECT_EQ(e.at(5, 0), xi);
    EXPECT_EQ(e.at(0, 5), CycloNumber(1, 5));
    EXPECT_EQ(antidiag({CycloNumber(1)}), ExactMatrix::identity(1));
    EXPECT_EQ(antidiag({CycloNumber(1), CycloNumber(-1)}), from_ints(2, {0, -1, 1, 0}));
    EXPECT_THROW(antidiag({CycloNumber(1), CycloNumber(0)}), Error);
}

TEST(Matrix, CompanionExamples)
{
    const auto xi = CycloNumber::zeta(5);
    std::vector<CycloNumber> vals(6, CycloNumber(1, 5));
    vals[0] = xi;
    std::vector<CycloNumber> f(6, CycloNumber(1, 5));
    f[0] = xi.inverse();
    f[5] = xi;
    EXPECT_EQ(companion(antidiag(vals)), ExactMatrix::diag(f));
    EXPECT_EQ(companion(ExactMatrix::identity(4)), ExactMatrix::identity(4));

    const auto x7 = CycloNumber::zeta(7);
    const auto one = CycloNumber(1, 7);
    const auto c = companion(antidiag({one, one, x7}));
    EXPECT_EQ(c, ExactMatrix::diag({x7, one, x7.inverse()}));
    EXPECT_EQ(c.trace(), one + x7 + x7.inverse());
}

TEST(Matrix, TraceExamples)
{
    EXPECT_EQ(ExactMatrix::identity(5).trace(), CycloNumber(5));
    const auto xi = CycloNumber::zeta(3);
    EXPECT_EQ(ExactMatrix::diag({xi, xi, xi.inverse(), xi.inverse()}).trace(), CycloNumber(-2, 3));
    for (int n = 3; n <= 9; n += 2) {
        const int k = (n - 1) / 2;
        std::vector<CycloNumber> vals(2 * n, CycloNumber(1));
        for (int i = 0; i < k; ++i)
            vals[i] = CycloNumber(-1);
        EXPECT_EQ(companion(antidiag(vals)).trace(), CycloNumber(2)) << n;
    }
}

TEST(Matrix, InverseAndDeterminant)
{
    const auto e = from_ints(2, {0, -1, 1, 0});
    EXPECT_EQ(e.inverse(), from_ints(2, {0, 1, -1, 0}));
    EXPECT_EQ(e.determinant(), CycloNumber(1));
    EXPECT_EQ(from_ints(3, {2, 0, 0, 0, 3, 0, 0, 0, 4}).determinant(), CycloNumber(24));
    EXPECT_EQ(from_ints(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}).determinant(), CycloNumber(-1));
    try {
        (void)from_ints(2, {1, 2, 2, 4}).inverse();
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::SingularMatrix);
    }
}

TEST(Matrix, CompanionInvariantsRandomized)
{
    std::mt19937 rng(3);
    int count = 0;
    for (std::uint64_t m : {1u, 3u, 4u, 5u}) {
        for (int trial = 0; trial < 13 && count < 50; ++trial, ++count) {
            const std::size_t n = 2 + trial % 3;
            const auto e = oracle::random_invertible(rng, n, m, 2);
            const auto f = companion(e);
            EXPECT_EQ(f.determinant(), CycloNumber(1, m));
            EXPECT_EQ(f.trace(), (e * e.inverse().transpose()).trace());
            EXPECT_EQ((e * e.inverse().transpose()).transpose(), e.inverse() * e.transpose());
            EXPECT_EQ(e * e.inverse(), ExactMatrix::identity(n, m));
        }
    }
    EXPECT_EQ(count, 50);
}

TEST(Matrix, CompanionClosedFormOnAntidiagonals)
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const std::uint64_t m = 1 + trial % 8;
        std::vector<CycloNumber> alpha;
        for (std::size_t i = 0; i < n; ++i)
            alpha.push_back(oracle::random_nonzero_cyclo(rng, m, 3));
        // D(alpha_n / alpha_1, ..., alpha_1 / alpha_n)
        std::vector<CycloNumber> expected;
        for (std::size_t i = 0; i < n; ++i)
            expected.push_back(alpha[n - 1 - i] / alpha[i]);
        EXPECT_EQ(companion(antidiag(alpha)), ExactMatrix::diag(expected));
    }
}

TEST(Matrix, BareissAgreesWithCofactorInverse)
{
    // all 3x3 matrices over {-1, 0, 1, xi} with xi = zeta_3, subsampled deterministically
    const CycloNumber values[] = {CycloNumber(-1, 3), CycloNumber(0, 3), CycloNumber(1, 3), CycloNumber::zeta(3)};
    std::size_t invertible = 0;
    for (std::uint32_t code = 0; code < (1u << 18); code += 37) {
        std::vector<CycloNumber> entries;
        std::uint32_t c = code;
        for (int k = 0; k < 9; ++k, c >>= 2)
            entries.push_back(values[c & 3]);
        const ExactMatrix a(3, entries, 3);
        if (a.determinant().is_zero()) {
            EXPECT_THROW(a.inverse(), Error);
            continue;
        }
        ++invertible;
        EXPECT_EQ(a.inverse(), oracle::cofactor_inverse_3x3(a));
    }
    EXPECT_GT(invertible, 1000u);
}

TEST(Matrix, ProjectiveOrderExamples)
{
    for (std::uint64_t m = 1; m <= 10; ++m) {
        const auto xi = CycloNumber::zeta(m);
        std::vector<CycloNumber> f(6, CycloNumber(1, m));
        f[0] = xi.inverse();
        f[5] = xi;
        const auto v = projective_order(ExactMatrix::diag(f));
        ASSERT_TRUE(v.is_finite());
        EXPECT_EQ(v.finite().k, m);
    }
    const auto id = projective_order(ExactMatrix::identity(3));
    ASSERT_TRUE(id.is_finite());
    EXPECT_EQ(id.finite().k, 1u);
    EXPECT_EQ(id.finite().lambda, CycloNumber(1));

    const auto t = CycloNumber::zeta(5) + CycloNumber::zeta(5, 4) - CycloNumber(1, 5);
    EXPECT_EQ(t * t + CycloNumber(3) * t + CycloNumber(1), CycloNumber(0, 5));
    EXPECT_TRUE(projective_order(ExactMatrix::diag({t, CycloNumber(1, 5), t.inverse()})).is_infinite());
}

TEST(Matrix, ProjectiveOrderMinimality)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::uint64_t m = 2 + trial % 11;
        std::uniform_int_distribution<int> k(0, static_cast<int>(m) - 1);
        std::vector<CycloNumber> d;
        const CycloNumber scale = oracle::random_nonzero_cyclo(rng, m, 2);
        for (int i = 0; i < 4; ++i)
            d.push_back(scale * CycloNumber::zeta(m, k(rng)));
        const auto f = ExactMatrix::diag(d);
        const auto v = projective_order(f);
        ASSERT_TRUE(v.is_finite());
        const auto order = v.finite().k;
        ASSERT_LE(order, 24u);
        for (std::uint64_t j = 1; j < order; ++j)
            EXPECT_FALSE(f.pow(j).scalar_value().has_value()) << j;
        const auto s = f.pow(order).scalar_value();
        ASSERT_TRUE(s.has_value());
        EXPECT_EQ(*s, v.finite().lambda);
    }
}

TEST(Matrix, ProjectiveOrderNonDiagonalFallback)
{
    // rotation by 90 degrees: F^2 = -I
    const auto r = from_ints(2, {0, -1, 1, 0});
    const auto v = projective_order(r, 8);
    ASSERT_TRUE(v.is_finite());
    EXPECT_EQ(v.finite().k, 2u);
    EXPECT_EQ(v.finite().lambda, CycloNumber(-1));
    // unipotent: never scalar
    const auto u = from_ints(2, {1, 1, 0, 1});
    const auto w = projective_order(u, 16);
    ASSERT_TRUE(w.is_unknown());
    EXPECT_EQ(std::get<ProjOrderVerdict::Unknown>(w.value).bound_reached, 16u);
}
