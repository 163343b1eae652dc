#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "qhopf/error.hpp"
#include "qhopf/rational.hpp"

namespace qhopf {

/// Dense integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Integer>;

inline std::uint64_t euler_phi(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidParameter, "euler_phi(0)");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

namespace detail {

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size())
        return {Integer(0)};
    IntPoly quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        Integer c = num[k];
        if (c == 0)
            continue;
        quot[k - dd] = c;
        for (std::size_t i = 0; i <= dd; ++i)
            num[k - dd + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0)
            throw Error(ErrorCode::InvalidParameter, "inexact cyclotomic division");
    return quot;
}

} // namespace detail

namespace detail {

// Cached Phi_m; map nodes are stable, so the returned reference stays valid.
inline const IntPoly& cyclotomic_ref(std::uint64_t m)
{
    if (m == 0)
        throw Error(ErrorCode::InvalidParameter, "cyclotomic_polynomial requires m >= 1");
    static std::mutex mutex;
    static std::map<std::uint64_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end())
            return it->second;
    }
    IntPoly poly(m + 1, Integer(0));
    poly[0] = -1;
    poly[m] = 1;
    for (std::uint64_t d : divisors(m))
        if (d != m)
            poly = divide_monic(std::move(poly), cyclotomic_ref(d));
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

} // namespace detail

/// The m-th cyclotomic polynomial, obtained by dividing x^m - 1 by every
/// Phi_d for proper divisors d of m.
inline IntPoly cyclotomic_polynomial(std::uint64_t m)
{
    return detail::cyclotomic_ref(m);
}

/// All N with phi(N) <= bound. Since phi(N) >= sqrt(N/2), scanning up to
/// 2(bound+1)^2 is exhaustive.
inline std::vector<std::uint64_t> root_of_unity_candidates(std::uint64_t bound)
{
    if (bound == 0)
        throw Error(ErrorCode::InvalidParameter, "root_of_unity_candidates requires D >= 1");
    std::vector<std::uint64_t> out;
    const std::uint64_t limit = 2 * (bound + 1) * (bound + 1);
    for (std::uint64_t n = 1; n <= limit; ++n)
        if (euler_phi(n) <= bound)
            out.push_back(n);
    return out;
}

} // namespace qhopf
