#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhopf/haar.hpp"

using namespace qhopf;

namespace {

BEPresentation ad_1_m1()
{
    return BEPresentation(antidiag({CycloNumber(1), CycloNumber(-1)}));
}

// Standard 4x4 skew form: two 2x2 blocks [[0,1],[-1,0]].
BEPresentation skew4()
{
    std::vector<CycloNumber> e(16, CycloNumber(0));
    e[0 * 4 + 1] = 1;
    e[1 * 4 + 0] = -1;
    e[2 * 4 + 3] = 1;
    e[3 * 4 + 2] = -1;
    return BEPresentation(ExactMatrix(4, e));
}

// Sum_{i,j} Einv_ij E_ji computed by direct double loop.
CycloNumber trace_einv_e(const ExactMatrix& e)
{
    const ExactMatrix inv = e.inverse();
    CycloNumber s;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            s += inv.at(i, j) * e.at(j, i);
    return s;
}

} // namespace

TEST(Haar, MomentExamples)
{
    const auto p = ad_1_m1();
    EXPECT_EQ(haar_moment(p, 1, 0, 0, 1), CycloNumber(Rational(-1, 2)));
    const BEPresentation id(ExactMatrix::identity(2));
    EXPECT_EQ(haar_moment(id, 0, 0, 0, 0), CycloNumber(Rational(1, 2)));
    const HaarMomentTable table(p);
    EXPECT_EQ(table.evaluate(NCPolynomial::constant(CycloNumber(1))), CycloNumber(1));
    EXPECT_EQ(table.evaluate(NCPolynomial::generator(0, 1)), CycloNumber(0));
    EXPECT_EQ(table.denominator(), CycloNumber(-2));
}

TEST(Haar, MomentSExamples)
{
    const BEPresentation id(ExactMatrix::identity(2));
    EXPECT_EQ(haar_moment_s(id, 0, 0, 0, 0), CycloNumber(Rational(1, 2)));
    EXPECT_EQ(haar_moment_s(id, 0, 0, 0, 1), CycloNumber(0));
    EXPECT_EQ(haar_moment_s(remark5(), 1, 2, 0, 0), CycloNumber(0, 5));
}

TEST(Haar, ExpandingAntipodeReproducesMomentS)
{
    for (const BEPresentation& p : {ad_1_m1(), remark5(), BEPresentation(ExactMatrix::identity(3)), remark4(7)}) {
        const std::size_t n = p.size();
        const HaarMomentTable table(p);
        const auto s = antipode_images(p.e());
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const auto poly = NCPolynomial::generator(k, l) * s[i * n + j];
                        EXPECT_EQ(table.evaluate(poly), haar_moment_s(p, k, l, i, j));
                    }
    }
}

TEST(Haar, TableMatchesDirectMoments)
{
    const auto p = remark5();
    const HaarMomentTable table(p);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    EXPECT_EQ(table.at(k, l, i, j), haar_moment(p, k, l, i, j));
}

TEST(Haar, DegenerateTrace)
{
    const BEPresentation p(antidiag({CycloNumber(1, 3), CycloNumber(1, 3), CycloNumber::zeta(3)}));
    ASSERT_TRUE(p.trace_f().is_zero());
    for (auto call : {+[](const BEPresentation& q) { (void)haar_moment(q, 0, 0, 0, 0); },
                      +[](const BEPresentation& q) { (void)HaarMomentTable(q); },
                      +[](const BEPresentation& q) { (void)schur_indicator(q); },
                      +[](const BEPresentation& q) { (void)invariance_check(q); }}) {
        try {
            call(p);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::DegenerateDenominator);
        }
    }
}

TEST(Haar, NoHaarStateWhenNotCosemisimple)
{
    // trace 1: q of order 3
    const BEPresentation p(antidiag({CycloNumber(1, 4), CycloNumber(1, 4), CycloNumber::zeta(4)}));
    ASSERT_EQ(p.trace_f(), CycloNumber(1, 4));
    try {
        (void)schur_indicator(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoHaarState);
    }
}

TEST(Schur, Examples)
{
    for (std::uint64_t n : {3u, 5u, 7u})
        EXPECT_EQ(schur_indicator(example7(n)), CycloNumber(static_cast<long>(n)));
    for (std::size_t n = 2; n <= 5; ++n)
        EXPECT_EQ(schur_indicator(BEPresentation(ExactMatrix::identity(n))), CycloNumber(1));
    EXPECT_EQ(schur_indicator(ad_1_m1()), CycloNumber(-1));
    EXPECT_EQ(schur_indicator_via_character(ad_1_m1()), CycloNumber(-1));
    EXPECT_EQ(schur_indicator_via_character(BEPresentation(ExactMatrix::identity(3))), CycloNumber(1));
    EXPECT_EQ(schur_indicator(skew4()), CycloNumber(-1));
}

TEST(Schur, CharacterRouteMatchesClosedFormRandomized)
{
    std::mt19937 rng(51);
    int checked = 0;
    while (checked < 20) {
        const std::size_t n = 2 + checked % 3;
        const auto e = oracle::random_integer_matrix(rng, n, 3);
        if (e.determinant().is_zero())
            continue;
        const BEPresentation p(e);
        if (p.trace_f().is_zero() || !cosemisimple(p).first)
            continue;
        EXPECT_EQ(trace_einv_e(e), CycloNumber(static_cast<long>(n)));
        EXPECT_EQ(schur_indicator_via_character(p), schur_indicator(p));
        EXPECT_EQ(schur_indicator(p), CycloNumber(static_cast<long>(n)) / p.trace_f());
        ++checked;
    }
}

TEST(Schur, ScalarFDichotomy)
{
    std::mt19937 rng(52);
    // symmetric and skew-symmetric integer forms give scalar F = +-I
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + 2 * (trial % 2);
        const auto base = oracle::random_integer_matrix(rng, n, 3);
        for (int sign : {1, -1}) {
            const ExactMatrix e = base + CycloNumber(sign) * base.transpose() +
                                  (sign == 1 ? CycloNumber(7) * ExactMatrix::identity(n) : ExactMatrix::zero(n));
            if (e.determinant().is_zero())
                continue;
            const BEPresentation p(e);
            ASSERT_TRUE(p.f().scalar_value().has_value());
            EXPECT_EQ(schur_indicator(p), CycloNumber(sign));
            EXPECT_EQ(e.transpose() == e, sign == 1);
        }
    }
}

TEST(Invariance, N2AndN3)
{
    const auto r2 = invariance_check(ad_1_m1(), 2);
    EXPECT_TRUE(r2.passed());
    EXPECT_EQ(r2.tuples_checked, 16u);
    const auto r3 = invariance_check(remark5(), 2);
    EXPECT_TRUE(r3.passed());
    EXPECT_EQ(r3.tuples_checked, 81u);
}

TEST(Invariance, WrongMomentsFail)
{
    // Moments for a different E do not satisfy the invariance identities for AD(1,-1).
    const HaarMomentTable wrong(BEPresentation(ExactMatrix::identity(2)));
    const IdealTruncation t(build_relations(ad_1_m1().e()), 2, 2, 2);
    bool any_fail = false;
    for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    any_fail = any_fail ||
                               t.reduces_to_zero(right_invariance_identity(wrong, k, l, i, j)) != Membership::InIdeal;
    EXPECT_TRUE(any_fail);
}

TEST(Invariance, SizeGuard)
{
    EXPECT_THROW(invariance_check(skew4()), Error);
}
