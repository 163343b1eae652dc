#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "qhopf/cyclo.hpp"

namespace qhopf {

/// Owning wrapper around an mpfr_t.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }
    Mpfr(const Mpfr& other)
    {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& other) noexcept : Mpfr(mpfr_get_prec(other.value_)) { mpfr_swap(value_, other.value_); }
    Mpfr& operator=(Mpfr other) noexcept
    {
        mpfr_swap(value_, other.value_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(value_); }

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t prec() const noexcept { return mpfr_get_prec(value_); }
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

private:
    mpfr_t value_;
};

/// Closed interval [lo, hi] with dyadic endpoints.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

    static Interval from_rational(const Rational& r, mpfr_prec_t prec)
    {
        Interval out(prec);
        mpfr_set_q(out.lo_.get(), r.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi_.get(), r.get_mpq_t(), MPFR_RNDU);
        return out;
    }

    const Mpfr& lo() const noexcept { return lo_; }
    const Mpfr& hi() const noexcept { return hi_; }
    Mpfr& lo() noexcept { return lo_; }
    Mpfr& hi() noexcept { return hi_; }

    Mpfr width() const
    {
        Mpfr w(lo_.prec());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }

    bool contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

    bool contains(double v) const
    {
        return mpfr_cmp_d(lo_.get(), v) <= 0 && mpfr_cmp_d(hi_.get(), v) >= 0;
    }

    friend Interval operator+(const Interval& a, const Interval& b)
    {
        Interval out(a.lo_.prec());
        mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return out;
    }

    friend Interval operator-(const Interval& a, const Interval& b)
    {
        Interval out(a.lo_.prec());
        mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return out;
    }

    friend Interval operator*(const Interval& a, const Interval& b)
    {
        const mpfr_prec_t prec = a.lo_.prec();
        Interval out(prec);
        Mpfr tmp(prec);
        mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
        mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
        bool first = true;
        for (auto x : xs) {
            for (auto y : ys) {
                mpfr_mul(tmp.get(), x, y, MPFR_RNDD);
                if (first || mpfr_less_p(tmp.get(), out.lo_.get()))
                    mpfr_set(out.lo_.get(), tmp.get(), MPFR_RNDD);
                mpfr_mul(tmp.get(), x, y, MPFR_RNDU);
                if (first || mpfr_greater_p(tmp.get(), out.hi_.get()))
                    mpfr_set(out.hi_.get(), tmp.get(), MPFR_RNDU);
                first = false;
            }
        }
        return out;
    }

private:
    Mpfr lo_;
    Mpfr hi_;
};

struct ComplexInterval {
    Interval real;
    Interval imag;

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b)
    {
        return {a.real + b.real, a.imag + b.imag};
    }

    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b)
    {
        return {a.real * b.real - a.imag * b.imag, a.real * b.imag + a.imag * b.real};
    }

    /// Larger of the two component widths, rounded up.
    double width() const
    {
        return std::max(real.width().to_double(MPFR_RNDU), imag.width().to_double(MPFR_RNDU));
    }

    /// Lower bound on |z| over the box.
    double abs_lower_bound() const
    {
        const mpfr_prec_t prec = real.lo().prec();
        auto gap = [prec](const Interval& iv) {
            Mpfr g(prec);
            if (iv.contains_zero())
                return g;
            if (mpfr_sgn(iv.lo().get()) > 0)
                mpfr_set(g.get(), iv.lo().get(), MPFR_RNDD);
            else
                mpfr_neg(g.get(), iv.hi().get(), MPFR_RNDD);
            return g;
        };
        Mpfr r = gap(real);
        Mpfr i = gap(imag);
        mpfr_sqr(r.get(), r.get(), MPFR_RNDD);
        mpfr_sqr(i.get(), i.get(), MPFR_RNDD);
        mpfr_add(r.get(), r.get(), i.get(), MPFR_RNDD);
        mpfr_sqrt(r.get(), r.get(), MPFR_RNDD);
        return r.to_double(MPFR_RNDD);
    }
};

namespace detail {

inline mpfr_prec_t working_precision(std::uint64_t precision_bits)
{
    return static_cast<mpfr_prec_t>(precision_bits + 32);
}

// Enclosures of cos and sin of 2*pi*j/m. The angle itself is an interval
// [a, a + w]; cos and sin are 1-Lipschitz, so evaluating at a with directed
// rounding and widening by w encloses the true value.
inline std::pair<Interval, Interval> unit_root(std::uint64_t j, std::uint64_t m, mpfr_prec_t prec)
{
    Interval angle(prec);
    mpfr_const_pi(angle.lo().get(), MPFR_RNDD);
    mpfr_const_pi(angle.hi().get(), MPFR_RNDU);
    for (Mpfr* end : {&angle.lo(), &angle.hi()}) {
        const mpfr_rnd_t rnd = end == &angle.lo() ? MPFR_RNDD : MPFR_RNDU;
        mpfr_mul_ui(end->get(), end->get(), 2 * j, rnd);
        mpfr_div_ui(end->get(), end->get(), m, rnd);
    }
    const Mpfr w = angle.width();

    Interval c(prec), s(prec);
    mpfr_cos(c.lo().get(), angle.lo().get(), MPFR_RNDD);
    mpfr_cos(c.hi().get(), angle.lo().get(), MPFR_RNDU);
    mpfr_sin(s.lo().get(), angle.lo().get(), MPFR_RNDD);
    mpfr_sin(s.hi().get(), angle.lo().get(), MPFR_RNDU);
    for (Interval* iv : {&c, &s}) {
        mpfr_sub(iv->lo().get(), iv->lo().get(), w.get(), MPFR_RNDD);
        mpfr_add(iv->hi().get(), iv->hi().get(), w.get(), MPFR_RNDU);
    }
    return {std::move(c), std::move(s)};
}

} // namespace detail

/// Certified enclosure of x under zeta_m -> exp(2 pi i / m).
inline ComplexInterval embed(const CycloNumber& x, std::uint64_t precision_bits)
{
    if (precision_bits < 8)
        throw Error(ErrorCode::InvalidParameter, "precision_bits must be >= 8");
    const mpfr_prec_t prec = detail::working_precision(precision_bits);
    ComplexInterval acc{Interval::from_rational(0, prec), Interval::from_rational(0, prec)};
    const auto& coeffs = x.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0)
            continue;
        Interval c = Interval::from_rational(coeffs[j], prec);
        if (j == 0) {
            acc.real = acc.real + c;
            continue;
        }
        auto [cs, sn] = detail::unit_root(j, x.conductor(), prec);
        acc.real = acc.real + c * cs;
        acc.imag = acc.imag + c * sn;
    }
    return acc;
}

enum class Sign { Zero, PositiveReal, NegativeReal, NotReal };

inline std::string to_string(Sign s)
{
    switch (s) {
    case Sign::Zero: return "zero";
    case Sign::PositiveReal: return "positive_real";
    case Sign::NegativeReal: return "negative_real";
    case Sign::NotReal: return "not_real";
    }
    return "?";
}

/// Exact zero and reality tests; the sign of a nonzero real value comes from
/// embeddings at doubling precision until the enclosure excludes zero.
inline Sign certified_sign(const CycloNumber& x)
{
    if (x.is_zero())
        return Sign::Zero;
    if (!(x.conjugate() == x))
        return Sign::NotReal;
    if (x.is_rational())
        return x.rational_part() > 0 ? Sign::PositiveReal : Sign::NegativeReal;
    for (std::uint64_t bits = 64;; bits *= 2) {
        ComplexInterval z = embed(x, bits);
        if (!z.real.contains_zero())
            return mpfr_sgn(z.real.lo().get()) > 0 ? Sign::PositiveReal : Sign::NegativeReal;
    }
}

/// Decimal rendering of the embedded value's midpoint, for report "approx" fields.
inline std::string approx_string(const CycloNumber& x, std::uint64_t precision_bits)
{
    ComplexInterval z = embed(x, precision_bits);
    const mpfr_prec_t prec = z.real.lo().prec();
    auto mid = [prec](const Interval& iv) {
        Mpfr m(prec);
        mpfr_add(m.get(), iv.lo().get(), iv.hi().get(), MPFR_RNDN);
        mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
        return m;
    };
    // Decimal digits carried by precision_bits.
    const auto digits = static_cast<int>(static_cast<double>(precision_bits) * 0.30103);
    auto fmt = [digits](const Mpfr& v) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v.get());
        std::string out(s);
        mpfr_free_str(s);
        return out;
    };
    std::string out = fmt(mid(z.real));
    if (!(x.conjugate() == x)) {
        Mpfr im = mid(z.imag);
        std::string imag = fmt(im);
        if (imag.front() != '-')
            imag = "+" + imag;
        out += imag + "i";
    }
    return out;
}

} // namespace qhopf
