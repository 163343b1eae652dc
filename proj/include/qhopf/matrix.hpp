#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qhopf/cyclo.hpp"

namespace qhopf {

/// Dense square matrix over Q(zeta_m); all entries share one conductor.
class ExactMatrix {
public:
    ExactMatrix() = default;

    /// Row-major entries; promoted to the lcm of their conductors and of min_conductor.
    ExactMatrix(std::size_t size, std::vector<CycloNumber> entries, std::uint64_t min_conductor = 1)
        : size_(size), entries_(std::move(entries))
    {
        if (entries_.size() != size_ * size_)
            throw Error(ErrorCode::InvalidParameter, "matrix entry count is not size^2");
        std::uint64_t m = min_conductor;
        for (const auto& e : entries_)
            m = std::lcm(m, e.conductor());
        conductor_ = m;
        for (auto& e : entries_)
            e = e.promote(m);
    }

    static ExactMatrix zero(std::size_t n, std::uint64_t conductor = 1)
    {
        return {n, std::vector<CycloNumber>(n * n, CycloNumber(0, conductor)), conductor};
    }

    static ExactMatrix identity(std::size_t n, std::uint64_t conductor = 1)
    {
        ExactMatrix out = zero(n, conductor);
        for (std::size_t i = 0; i < n; ++i)
            out.at(i, i) = CycloNumber(1, conductor);
        return out;
    }

    /// D(values): values[i] at position (i, i).
    static ExactMatrix diag(const std::vector<CycloNumber>& values)
    {
        const std::size_t n = values.size();
        std::vector<CycloNumber> entries(n * n);
        for (std::size_t i = 0; i < n; ++i)
            entries[i * n + i] = values[i];
        return {n, std::move(entries)};
    }

    std::size_t size() const noexcept { return size_; }
    std::uint64_t conductor() const noexcept { return conductor_; }

    const CycloNumber& at(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
    CycloNumber& at(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
    const std::vector<CycloNumber>& entries() const noexcept { return entries_; }

    ExactMatrix transpose() const
    {
        ExactMatrix out = *this;
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                out.at(i, j) = at(j, i);
        return out;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.size_ != b.size_)
            throw Error(ErrorCode::InvalidParameter, "matrix size mismatch");
        const std::uint64_t m = std::lcm(a.conductor_, b.conductor_);
        ExactMatrix out = zero(a.size_, m);
        for (std::size_t i = 0; i < a.size_; ++i)
            for (std::size_t k = 0; k < a.size_; ++k) {
                const CycloNumber& aik = a.at(i, k);
                if (aik.is_zero())
                    continue;
                for (std::size_t j = 0; j < a.size_; ++j)
                    if (!b.at(k, j).is_zero())
                        out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

    friend ExactMatrix operator*(const CycloNumber& s, const ExactMatrix& a)
    {
        std::vector<CycloNumber> entries = a.entries_;
        for (auto& e : entries)
            e = s * e;
        return {a.size_, std::move(entries)};
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.size_ != b.size_)
            throw Error(ErrorCode::InvalidParameter, "matrix size mismatch");
        std::vector<CycloNumber> entries = a.entries_;
        for (std::size_t i = 0; i < entries.size(); ++i)
            entries[i] += b.entries_[i];
        return {a.size_, std::move(entries)};
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.size_ != b.size_)
            return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (!(a.entries_[i] == b.entries_[i]))
                return false;
        return true;
    }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j)
                if (i != j && !at(i, j).is_zero())
                    return false;
        return true;
    }

    /// The scalar lambda with M = lambda I, if any.
    std::optional<CycloNumber> scalar_value() const
    {
        if (!is_diagonal())
            return std::nullopt;
        for (std::size_t i = 1; i < size_; ++i)
            if (!(at(i, i) == at(0, 0)))
                return std::nullopt;
        return at(0, 0);
    }

    CycloNumber trace() const
    {
        CycloNumber sum(0, conductor_);
        for (std::size_t i = 0; i < size_; ++i)
            sum += at(i, i);
        return sum;
    }

    /// Fraction-free (Bareiss) determinant.
    CycloNumber determinant() const
    {
        if (size_ == 0)
            return CycloNumber(1, conductor_);
        ExactMatrix a = *this;
        CycloNumber prev(1, conductor_);
        bool negate = false;
        for (std::size_t k = 0; k + 1 < size_; ++k) {
            std::size_t p = k;
            while (p < size_ && a.at(p, k).is_zero())
                ++p;
            if (p == size_)
                return CycloNumber(0, conductor_);
            if (p != k) {
                for (std::size_t j = 0; j < size_; ++j)
                    std::swap(a.at(p, j), a.at(k, j));
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < size_; ++i) {
                for (std::size_t j = k + 1; j < size_; ++j)
                    a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
                a.at(i, k) = CycloNumber(0, conductor_);
            }
            prev = a.at(k, k);
        }
        CycloNumber det = a.at(size_ - 1, size_ - 1);
        return negate ? -det : det;
    }

    /// Fraction-free Gauss-Jordan on [M | I]; the left block ends diagonal.
    ExactMatrix inverse() const
    {
        const std::size_t n = size_;
        const std::size_t w = 2 * n;
        std::vector<CycloNumber> aug(n * w, CycloNumber(0, conductor_));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                aug[i * w + j] = at(i, j);
            aug[i * w + n + i] = CycloNumber(1, conductor_);
        }
        auto cell = [&](std::size_t i, std::size_t j) -> CycloNumber& { return aug[i * w + j]; };
        CycloNumber prev(1, conductor_);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t p = k;
            while (p < n && cell(p, k).is_zero())
                ++p;
            if (p == n)
                throw Error(ErrorCode::SingularMatrix, "matrix is singular");
            if (p != k)
                for (std::size_t j = 0; j < w; ++j)
                    std::swap(cell(p, j), cell(k, j));
            for (std::size_t i = 0; i < n; ++i) {
                if (i == k)
                    continue;
                for (std::size_t j = 0; j < w; ++j) {
                    if (j == k)
                        continue;
                    cell(i, j) = (cell(k, k) * cell(i, j) - cell(i, k) * cell(k, j)) / prev;
                }
                cell(i, k) = CycloNumber(0, conductor_);
            }
            prev = cell(k, k);
        }
        ExactMatrix out = zero(n, conductor_);
        for (std::size_t i = 0; i < n; ++i) {
            const CycloNumber inv = cell(i, i).inverse();
            for (std::size_t j = 0; j < n; ++j)
                out.at(i, j) = cell(i, n + j) * inv;
        }
        return out;
    }

    ExactMatrix pow(std::uint64_t k) const
    {
        ExactMatrix result = identity(size_, conductor_);
        for (std::uint64_t i = 0; i < k; ++i)
            result = result * *this;
        return result;
    }

private:
    std::size_t size_ = 0;
    std::uint64_t conductor_ = 1;
    std::vector<CycloNumber> entries_;
};

/// AD(values): values[0] bottom-left, ..., values[n-1] top-right.
inline ExactMatrix antidiag(const std::vector<CycloNumber>& values)
{
    const std::size_t n = values.size();
    if (n == 0)
        throw Error(ErrorCode::InvalidParameter, "empty anti-diagonal");
    std::vector<CycloNumber> entries(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (values[k].is_zero())
            throw Error(ErrorCode::SingularMatrix,
                        "anti-diagonal entry " + std::to_string(k + 1) + " is zero");
        // values[k] sits in row n-1-k, column k.
        entries[(n - 1 - k) * n + k] = values[k];
    }
    return {n, std::move(entries)};
}

/// F = E^-1 * transpose(E).
inline ExactMatrix companion(const ExactMatrix& e)
{
    if (e.determinant().is_zero())
        throw Error(ErrorCode::SingularMatrix, "E is singular");
    return e.inverse() * e.transpose();
}

/// Least k with F^k = lambda I, or evidence that none exists.
struct ProjOrderVerdict {
    struct Finite {
        std::uint64_t k;
        CycloNumber lambda;
    };
    struct Infinite {
        std::string witness;
        CycloNumber ratio;
    };
    struct Unknown {
        std::uint64_t bound_reached;
    };
    std::variant<Finite, Infinite, Unknown> value;

    bool is_finite() const { return std::holds_alternative<Finite>(value); }
    bool is_infinite() const { return std::holds_alternative<Infinite>(value); }
    bool is_unknown() const { return std::holds_alternative<Unknown>(value); }
    const Finite& finite() const { return std::get<Finite>(value); }
};

/**
 * Projective order of F.
 *
 * Diagonal F is decided exactly: F^k is scalar iff every ratio F_ii / F_00
 * satisfies r^k = 1, so k is the lcm of the ratio orders, and a ratio that is
 * not a root of unity certifies infinite order. Non-diagonal F falls back to
 * testing F, F^2, ..., F^max_k for scalarity.
 */
inline ProjOrderVerdict projective_order(const ExactMatrix& f, std::uint64_t max_k = 256)
{
    if (f.determinant().is_zero())
        throw Error(ErrorCode::SingularMatrix, "F is singular");
    const std::size_t n = f.size();
    if (f.is_diagonal()) {
        const CycloNumber& base = f.at(0, 0);
        std::uint64_t k = 1;
        for (std::size_t i = 1; i < n; ++i) {
            CycloNumber ratio = f.at(i, i) / base;
            auto order = is_root_of_unity(ratio);
            if (!order) {
                return {ProjOrderVerdict::Infinite{
                    "F[" + std::to_string(i + 1) + "][" + std::to_string(i + 1) + "]/F[1][1] = " +
                        ratio.to_string() + " is not a root of unity",
                    ratio}};
            }
            k = std::lcm(k, *order);
        }
        return {ProjOrderVerdict::Finite{k, base.pow(static_cast<std::int64_t>(k))}};
    }
    ExactMatrix power = f;
    for (std::uint64_t k = 1; k <= max_k; ++k) {
        if (auto lambda = power.scalar_value())
            return {ProjOrderVerdict::Finite{k, *lambda}};
        power = power * f;
    }
    return {ProjOrderVerdict::Unknown{max_k}};
}

} // namespace qhopf
