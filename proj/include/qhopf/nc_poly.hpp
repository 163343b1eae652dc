#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/cyclo.hpp"

namespace qhopf {

/// Generator a_ij, stored 0-based.
struct Gen {
    std::uint8_t row;
    std::uint8_t col;

    friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Word in the generators; the empty word is the unit monomial.
class NCMonomial {
public:
    NCMonomial() = default;
    explicit NCMonomial(std::vector<Gen> word) : word_(std::move(word)) {}

    static NCMonomial generator(std::size_t i, std::size_t j)
    {
        return NCMonomial({Gen{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)}});
    }

    const std::vector<Gen>& word() const noexcept { return word_; }
    std::size_t degree() const noexcept { return word_.size(); }

    friend NCMonomial operator*(const NCMonomial& a, const NCMonomial& b)
    {
        std::vector<Gen> w = a.word_;
        w.insert(w.end(), b.word_.begin(), b.word_.end());
        return NCMonomial(std::move(w));
    }

    /// Degree-lexicographic: shorter words first, then a_11 < a_12 < ... < a_nn letterwise.
    friend std::strong_ordering operator<=>(const NCMonomial& a, const NCMonomial& b)
    {
        if (auto c = a.word_.size() <=> b.word_.size(); c != 0)
            return c;
        return a.word_ <=> b.word_;
    }
    friend bool operator==(const NCMonomial&, const NCMonomial&) = default;

    std::string to_string() const
    {
        if (word_.empty())
            return "1";
        std::string out;
        for (const Gen& g : word_)
            out += "a[" + std::to_string(g.row + 1) + "," + std::to_string(g.col + 1) + "]";
        return out;
    }

private:
    std::vector<Gen> word_;
};

/// Noncommutative polynomial in the a_ij with coefficients in Q(zeta_m).
class NCPolynomial {
public:
    using Terms = std::map<NCMonomial, CycloNumber>;

    NCPolynomial() = default;

    static NCPolynomial constant(const CycloNumber& c)
    {
        NCPolynomial p;
        p.add_term(NCMonomial(), c);
        return p;
    }

    static NCPolynomial monomial(const NCMonomial& m, const CycloNumber& c = CycloNumber(1))
    {
        NCPolynomial p;
        p.add_term(m, c);
        return p;
    }

    static NCPolynomial generator(std::size_t i, std::size_t j)
    {
        return monomial(NCMonomial::generator(i, j));
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Maximum term degree; 0 for the zero polynomial.
    std::size_t degree() const
    {
        return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
    }

    void add_term(const NCMonomial& m, const CycloNumber& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    NCPolynomial& operator+=(const NCPolynomial& rhs)
    {
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, c);
        return *this;
    }

    NCPolynomial& operator-=(const NCPolynomial& rhs)
    {
        for (const auto& [m, c] : rhs.terms_)
            add_term(m, -c);
        return *this;
    }

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }

    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b)
    {
        NCPolynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend NCPolynomial operator*(const CycloNumber& s, const NCPolynomial& p)
    {
        NCPolynomial out;
        for (const auto& [m, c] : p.terms_)
            out.add_term(m, s * c);
        return out;
    }

    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b)
    {
        if (a.terms_.size() != b.terms_.size())
            return false;
        for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
            if (!(ia->first == ib->first) || !(ia->second == ib->second))
                return false;
        return true;
    }

    /// Value under a_ij -> delta_ij.
    CycloNumber counit() const
    {
        CycloNumber sum;
        for (const auto& [m, c] : terms_) {
            bool diagonal = true;
            for (const Gen& g : m.word())
                diagonal = diagonal && g.row == g.col;
            if (diagonal)
                sum += c;
        }
        return sum;
    }

    /// Canonical form "c * a[i,j]a[k,l] + ..." in ascending monomial order.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty())
                out += " + ";
            std::string coeff = c.to_string();
            bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
            if (compound)
                coeff = "(" + coeff + ")";
            out += m.degree() == 0 ? coeff : coeff + " * " + m.to_string();
        }
        return out;
    }

private:
    Terms terms_;
};

/**
 * Extends a_ij -> images[i*n + j] to an algebra anti-homomorphism: a word
 * g1 g2 ... gk is sent to image(gk) ... image(g1).
 */
inline NCPolynomial apply_antihom(const NCPolynomial& p, const std::vector<NCPolynomial>& images,
                                  std::size_t n)
{
    if (images.size() != n * n)
        throw Error(ErrorCode::InvalidParameter, "antihomomorphism needs n*n images");
    for (const auto& img : images)
        if (img.degree() > 1)
            throw Error(ErrorCode::InvalidParameter, "antihomomorphism images must have degree <= 1");
    NCPolynomial out;
    for (const auto& [m, c] : p.terms()) {
        NCPolynomial acc = NCPolynomial::constant(c);
        const auto& w = m.word();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = acc * images[it->row * n + it->col];
        out += acc;
    }
    return out;
}

} // namespace qhopf
