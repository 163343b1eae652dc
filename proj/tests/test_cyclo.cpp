#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qhopf/cyclo.hpp"

using namespace qhopf;

TEST(Cyclo, SpecExamples)
{
    const auto z3 = CycloNumber::zeta(3);
    EXPECT_EQ(z3 + z3 * z3, CycloNumber(-1, 3));
    const auto z4 = CycloNumber::zeta(4);
    EXPECT_EQ(z4 * z4, CycloNumber(-1, 4));
    const auto z5 = CycloNumber::zeta(5);
    const auto inv = z5.inverse();
    EXPECT_EQ(inv, CycloNumber::from_poly(5, {-1, -1, -1, -1}));
    EXPECT_EQ(inv * z5, CycloNumber(1, 5));
    EXPECT_EQ(inv, CycloNumber::zeta(5, 4));
}

TEST(Cyclo, ZetaNegativePowers)
{
    for (std::uint64_t m = 1; m <= 12; ++m)
        for (std::int64_t k = -15; k <= 15; ++k)
            EXPECT_EQ(CycloNumber::zeta(m, k) * CycloNumber::zeta(m, -k), CycloNumber(1, m));
}

TEST(Cyclo, FieldAxiomsRandomized)
{
    std::mt19937 rng(20240601);
    for (std::uint64_t m = 1; m <= 12; ++m) {
        for (int trial = 0; trial < 8; ++trial) {
            const auto a = oracle::random_cyclo(rng, m);
            const auto b = oracle::random_cyclo(rng, m);
            const auto c = oracle::random_cyclo(rng, m);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a - a, CycloNumber(0, m));
            if (!a.is_zero()) {
                EXPECT_EQ(a * a.inverse(), CycloNumber(1, m));
                EXPECT_EQ((b / a) * a, b);
            }
            EXPECT_EQ(a.conjugate().conjugate(), a);
            EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
        }
    }
}

TEST(Cyclo, MixedConductorsPromote)
{
    const auto z3 = CycloNumber::zeta(3);
    const auto z4 = CycloNumber::zeta(4);
    const auto p = z3 * z4;
    EXPECT_EQ(p.conductor(), 12u);
    EXPECT_EQ(p, CycloNumber::zeta(12, 7));
    EXPECT_EQ(CycloNumber(2) + z3, CycloNumber::from_poly(3, {2, 1}));
    EXPECT_EQ(z3.promote(6), CycloNumber::zeta(6, 2));
    EXPECT_THROW(z3.promote(4), Error);
}

TEST(Cyclo, DivisionByZero)
{
    EXPECT_THROW(CycloNumber(0, 5).inverse(), Error);
    try {
        (void)(CycloNumber(1, 5) / CycloNumber(0, 5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(Cyclo, ToString)
{
    EXPECT_EQ(CycloNumber(0, 7).to_string(), "0");
    EXPECT_EQ(CycloNumber::from_poly(5, {3, Rational(1, 2)}).to_string(), "1/2*z+3");
    EXPECT_EQ((-CycloNumber::zeta(5, 2)).to_string(), "-z^2");
    EXPECT_EQ(CycloNumber(-2).to_string(), "-2");
}

TEST(Cyclo, RootOfUnityExamples)
{
    EXPECT_EQ(is_root_of_unity(-CycloNumber::zeta(3)), std::optional<std::uint64_t>(6));
    EXPECT_EQ(is_root_of_unity(CycloNumber::zeta(5) + CycloNumber::zeta(5, 4)), std::nullopt);
    for (std::uint64_t m = 1; m <= 12; ++m)
        EXPECT_EQ(is_root_of_unity(CycloNumber(1, m)), std::optional<std::uint64_t>(1));
    EXPECT_EQ(is_root_of_unity(CycloNumber(0, 4)), std::nullopt);
    const auto golden = CycloNumber::zeta(5) + CycloNumber::zeta(5, 4);
    EXPECT_FALSE(golden.pow(10) == CycloNumber(1, 5));
}

TEST(Cyclo, RootOfUnityMatchesBruteForce)
{
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick_m(1, 12);
    std::uniform_int_distribution<int> kind(0, 2);
    int units = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t m = pick_m(rng);
        CycloNumber x(0, m);
        switch (kind(rng)) {
        case 0: {
            // +-zeta^k, always a root of unity
            std::uniform_int_distribution<int> k(0, 2 * static_cast<int>(m));
            x = CycloNumber::zeta(m, k(rng));
            if (trial % 2)
                x = -x;
            break;
        }
        case 1: {
            // products of two roots of unity in the field, still units of finite order
            std::uniform_int_distribution<int> k(0, 2 * static_cast<int>(m));
            x = CycloNumber::zeta(m, k(rng)) * (-CycloNumber::zeta(m, k(rng)));
            break;
        }
        default: x = oracle::random_nonzero_cyclo(rng, m, 2); break;
        }
        const auto expected = oracle::root_order_brute(x);
        units += expected.has_value();
        EXPECT_EQ(is_root_of_unity(x), expected) << x << " in conductor " << m;
    }
    EXPECT_GT(units, 50);
}

TEST(Cyclo, PowMatchesRepeatedProduct)
{
    std::mt19937 rng(5);
    for (std::uint64_t m : {3u, 5u, 8u}) {
        const auto x = oracle::random_nonzero_cyclo(rng, m, 2);
        CycloNumber acc(1, m);
        for (int k = 0; k <= 9; ++k) {
            EXPECT_EQ(x.pow(k), acc);
            EXPECT_EQ(x.pow(-k) * acc, CycloNumber(1, m));
            acc = acc * x;
        }
    }
}
