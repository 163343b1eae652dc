#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/cyclotomic.hpp"
#include "qhopf/error.hpp"
#include "qhopf/rational.hpp"

namespace qhopf {

/**
 * Exact element of the cyclotomic field Q(zeta_m).
 *
 * Stored on the power basis {1, zeta, ..., zeta^(phi(m)-1)} modulo the m-th
 * cyclotomic polynomial. Values of different conductors are promoted to the
 * lcm conductor before any binary operation, via zeta_a -> zeta_L^(L/a).
 */
class CycloNumber {
public:
    CycloNumber() : conductor_(1), coeffs_(1) {}

    CycloNumber(const Rational& value, std::uint64_t conductor = 1)
        : conductor_(conductor), coeffs_(euler_phi(conductor))
    {
        coeffs_[0] = value;
    }

    CycloNumber(long value, std::uint64_t conductor = 1)
        : CycloNumber(Rational(value), conductor) {}

    CycloNumber(int value, std::uint64_t conductor = 1)
        : CycloNumber(Rational(value), conductor) {}

    /// zeta_m^power, power taken modulo m.
    static CycloNumber zeta(std::uint64_t conductor, std::int64_t power = 1)
    {
        if (conductor == 0)
            throw Error(ErrorCode::InvalidParameter, "conductor must be positive");
        auto m = static_cast<std::int64_t>(conductor);
        auto e = static_cast<std::size_t>(((power % m) + m) % m);
        std::vector<Rational> poly(e + 1);
        poly[e] = 1;
        return from_poly(conductor, std::move(poly));
    }

    /// Reduces an arbitrary-length coefficient vector in zeta modulo Phi_m.
    static CycloNumber from_poly(std::uint64_t conductor, std::vector<Rational> poly)
    {
        CycloNumber out;
        out.conductor_ = conductor;
        out.coeffs_ = reduce(conductor, std::move(poly));
        return out;
    }

    std::uint64_t conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t j = 1; j < coeffs_.size(); ++j)
            if (coeffs_[j] != 0)
                return false;
        return true;
    }

    /// Constant coefficient; meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    /// Re-expresses the value in Q(zeta_target); target must be a multiple.
    CycloNumber promote(std::uint64_t target) const
    {
        if (target == conductor_)
            return *this;
        if (target % conductor_ != 0)
            throw Error(ErrorCode::ConductorMismatch,
                        "cannot embed conductor " + std::to_string(conductor_) + " into " +
                            std::to_string(target));
        const std::uint64_t step = target / conductor_;
        std::vector<Rational> poly(step * (coeffs_.size() - 1) + 1);
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            poly[j * step] = coeffs_[j];
        return from_poly(target, std::move(poly));
    }

    CycloNumber operator-() const
    {
        CycloNumber out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    CycloNumber& operator+=(const CycloNumber& rhs)
    {
        if (rhs.conductor_ != conductor_)
            return *this = *this + rhs;
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            coeffs_[j] += rhs.coeffs_[j];
        return *this;
    }

    CycloNumber& operator-=(const CycloNumber& rhs)
    {
        if (rhs.conductor_ != conductor_)
            return *this = *this - rhs;
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            coeffs_[j] -= rhs.coeffs_[j];
        return *this;
    }

    CycloNumber& operator*=(const CycloNumber& rhs) { return *this = *this * rhs; }
    CycloNumber& operator/=(const CycloNumber& rhs) { return *this = *this / rhs; }

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b)
    {
        if (a.conductor_ != b.conductor_) {
            auto [x, y] = common(a, b);
            return x += y;
        }
        CycloNumber out = a;
        return out += b;
    }

    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b)
    {
        if (a.conductor_ != b.conductor_) {
            auto [x, y] = common(a, b);
            return x -= y;
        }
        CycloNumber out = a;
        return out -= b;
    }

    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b)
    {
        if (a.conductor_ != b.conductor_) {
            auto [x, y] = common(a, b);
            return x * y;
        }
        const std::size_t phi = a.coeffs_.size();
        if (phi == 1) {
            CycloNumber out = a;
            out.coeffs_[0] *= b.coeffs_[0];
            return out;
        }
        std::vector<Rational> prod(2 * phi - 1);
        for (std::size_t i = 0; i < phi; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < phi; ++j)
                if (b.coeffs_[j] != 0)
                    prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return from_poly(a.conductor_, std::move(prod));
    }

    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b)
    {
        if (b.is_rational()) {
            if (b.coeffs_[0] == 0)
                throw Error(ErrorCode::DivisionByZero, "division by zero in Q(zeta)");
            CycloNumber out = a;
            for (auto& c : out.coeffs_)
                c /= b.coeffs_[0];
            return out;
        }
        return a * b.inverse();
    }

    /// Multiplicative inverse, by solving (a * x = 1) on the power basis.
    CycloNumber inverse() const
    {
        if (is_zero())
            throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta)");
        const std::size_t phi = coeffs_.size();
        if (phi == 1)
            return CycloNumber(Rational(1) / coeffs_[0], conductor_);

        // Column j of the multiplication-by-this map is this * zeta^j.
        std::vector<std::vector<Rational>> aug(phi, std::vector<Rational>(phi + 1));
        CycloNumber col = *this;
        const CycloNumber z = zeta(conductor_);
        for (std::size_t j = 0; j < phi; ++j) {
            for (std::size_t i = 0; i < phi; ++i)
                aug[i][j] = col.coeffs_[i];
            col = col * z;
        }
        aug[0][phi] = 1;

        for (std::size_t c = 0; c < phi; ++c) {
            std::size_t p = c;
            while (p < phi && aug[p][c] == 0)
                ++p;
            if (p == phi)
                throw Error(ErrorCode::DivisionByZero, "singular multiplication map");
            std::swap(aug[p], aug[c]);
            Rational inv = Rational(1) / aug[c][c];
            for (std::size_t k = c; k <= phi; ++k)
                aug[c][k] *= inv;
            for (std::size_t r = 0; r < phi; ++r) {
                if (r == c || aug[r][c] == 0)
                    continue;
                Rational f = aug[r][c];
                for (std::size_t k = c; k <= phi; ++k)
                    aug[r][k] -= f * aug[c][k];
            }
        }
        CycloNumber out;
        out.conductor_ = conductor_;
        out.coeffs_.resize(phi);
        for (std::size_t i = 0; i < phi; ++i)
            out.coeffs_[i] = aug[i][phi];
        return out;
    }

    /// Complex conjugation, zeta -> zeta^-1.
    CycloNumber conjugate() const
    {
        const std::size_t m = conductor_;
        std::vector<Rational> poly(m);
        for (std::size_t j = 0; j < coeffs_.size(); ++j)
            poly[(m - j) % m] += coeffs_[j];
        return from_poly(conductor_, std::move(poly));
    }

    CycloNumber pow(std::int64_t exponent) const
    {
        if (exponent < 0)
            return inverse().pow(-exponent);
        CycloNumber result(1, conductor_);
        CycloNumber base = *this;
        auto e = static_cast<std::uint64_t>(exponent);
        while (e != 0) {
            if (e & 1u)
                result = result * base;
            e >>= 1;
            if (e != 0)
                base = base * base;
        }
        return result;
    }

    friend bool operator==(const CycloNumber& a, const CycloNumber& b)
    {
        if (a.conductor_ == b.conductor_)
            return a.coeffs_ == b.coeffs_;
        auto [x, y] = common(a, b);
        return x.coeffs_ == y.coeffs_;
    }

    /// Polynomial in z with descending powers, e.g. "1/2*z+3" or "-z^2".
    std::string to_string() const
    {
        std::string out;
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            const Rational& c = coeffs_[j];
            if (c == 0)
                continue;
            Rational mag = abs(c);
            if (c < 0)
                out += "-";
            else if (!out.empty())
                out += "+";
            if (j == 0) {
                out += qhopf::to_string(mag);
                continue;
            }
            if (mag != 1)
                out += qhopf::to_string(mag) + "*";
            out += "z";
            if (j > 1)
                out += "^" + std::to_string(j);
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycloNumber& x)
    {
        return os << x.to_string();
    }

    /// Both operands re-expressed over lcm(conductors).
    static std::pair<CycloNumber, CycloNumber> common(const CycloNumber& a, const CycloNumber& b)
    {
        const std::uint64_t l = std::lcm(a.conductor_, b.conductor_);
        return {a.promote(l), b.promote(l)};
    }

private:
    static std::vector<Rational> reduce(std::uint64_t conductor, std::vector<Rational> poly)
    {
        const IntPoly& phi_m = detail::cyclotomic_ref(conductor);
        const std::size_t deg = phi_m.size() - 1;
        for (std::size_t k = poly.size(); k-- > deg;) {
            if (poly[k] == 0)
                continue;
            Rational c = poly[k];
            for (std::size_t i = 0; i <= deg; ++i)
                if (phi_m[i] != 0)
                    poly[k - deg + i] -= c * phi_m[i];
        }
        poly.resize(deg);
        return poly;
    }

    std::uint64_t conductor_;
    std::vector<Rational> coeffs_;
};

/// Multiplicative order of x if x is a root of unity. Roots of unity in
/// Q(zeta_m) form a cyclic group of order lcm(2, m), so x^lcm(2,m) = 1 decides.
inline std::optional<std::uint64_t> is_root_of_unity(const CycloNumber& x)
{
    if (x.is_zero())
        return std::nullopt;
    const CycloNumber one(1, x.conductor());
    const std::uint64_t group = std::lcm<std::uint64_t>(2, x.conductor());
    if (!(x.pow(static_cast<std::int64_t>(group)) == one))
        return std::nullopt;
    for (std::uint64_t d : divisors(group))
        if (x.pow(static_cast<std::int64_t>(d)) == one)
            return d;
    return group;
}

} // namespace qhopf
