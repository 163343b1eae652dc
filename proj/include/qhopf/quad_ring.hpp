#pragma once

#include <cstdint>
#include <string>

#include "qhopf/cyclo.hpp"

namespace qhopf {

/// c0 + c1*x in Q(zeta_m)[x]/(x^2 + t*x + 1).
class QuadRingElement {
public:
    QuadRingElement(CycloNumber trace_param, CycloNumber c0, CycloNumber c1)
        : t_(std::move(trace_param)), c0_(std::move(c0)), c1_(std::move(c1))
    {
        const std::uint64_t m = std::lcm(t_.conductor(), std::lcm(c0_.conductor(), c1_.conductor()));
        t_ = t_.promote(m);
        c0_ = c0_.promote(m);
        c1_ = c1_.promote(m);
    }

    /// The class of x itself, i.e. a root q of q^2 + t*q + 1.
    static QuadRingElement generator(const CycloNumber& trace_param)
    {
        const auto m = trace_param.conductor();
        return {trace_param, CycloNumber(0, m), CycloNumber(1, m)};
    }

    static QuadRingElement one(const CycloNumber& trace_param)
    {
        const auto m = trace_param.conductor();
        return {trace_param, CycloNumber(1, m), CycloNumber(0, m)};
    }

    const CycloNumber& trace_param() const noexcept { return t_; }
    const CycloNumber& c0() const noexcept { return c0_; }
    const CycloNumber& c1() const noexcept { return c1_; }

    friend QuadRingElement operator*(const QuadRingElement& a, const QuadRingElement& b)
    {
        check_same_ring(a, b);
        CycloNumber hi = a.c1_ * b.c1_;
        return {a.t_, a.c0_ * b.c0_ - hi, a.c0_ * b.c1_ + a.c1_ * b.c0_ - a.t_ * hi};
    }

    friend QuadRingElement operator+(const QuadRingElement& a, const QuadRingElement& b)
    {
        check_same_ring(a, b);
        return {a.t_, a.c0_ + b.c0_, a.c1_ + b.c1_};
    }

    friend bool operator==(const QuadRingElement& a, const QuadRingElement& b)
    {
        check_same_ring(a, b);
        return a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }

private:
    static void check_same_ring(const QuadRingElement& a, const QuadRingElement& b)
    {
        if (!(a.t_ == b.t_))
            throw Error(ErrorCode::ConductorMismatch,
                        "quadratic ring elements over different trace parameters");
    }

    CycloNumber t_;
    CycloNumber c0_;
    CycloNumber c1_;
};

struct QClass {
    enum class Kind { One, MinusOne, RootOfUnity, NotRootOfUnity };
    Kind kind;
    std::uint64_t order = 0; // set for RootOfUnity

    friend bool operator==(const QClass&, const QClass&) = default;

    std::string to_string() const
    {
        switch (kind) {
        case Kind::One: return "one";
        case Kind::MinusOne: return "minus_one";
        case Kind::RootOfUnity: return "root_of_unity_order_" + std::to_string(order);
        case Kind::NotRootOfUnity: return "not_root_of_unity";
        }
        return "?";
    }
};

/**
 * Classifies q with q^2 + t q + 1 = 0.
 *
 * Works in the quotient ring without asking whether x^2 + t x + 1 is
 * irreducible: the two roots multiply to 1, so either both or neither are
 * roots of unity. Any root of unity q has degree <= 2 phi(m) over Q, which
 * bounds the orders to test.
 */
inline QClass q_class(const CycloNumber& t)
{
    const auto m = t.conductor();
    if (t == CycloNumber(-2, m))
        return {QClass::Kind::One};
    if (t == CycloNumber(2, m))
        return {QClass::Kind::MinusOne};

    const auto candidates = root_of_unity_candidates(2 * euler_phi(m));
    const QuadRingElement q = QuadRingElement::generator(t);
    const QuadRingElement one = QuadRingElement::one(t);
    QuadRingElement power = one;
    std::uint64_t exponent = 0;
    for (std::uint64_t n : candidates) {
        while (exponent < n) {
            power = power * q;
            ++exponent;
        }
        if (power == one)
            return {QClass::Kind::RootOfUnity, n};
    }
    return {QClass::Kind::NotRootOfUnity};
}

} // namespace qhopf
