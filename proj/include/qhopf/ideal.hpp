#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/matrix.hpp"
#include "qhopf/nc_poly.hpp"

namespace qhopf {

/// The generator matrix a, row-major, as degree-1 polynomials.
inline std::vector<NCPolynomial> generator_matrix(std::size_t n)
{
    std::vector<NCPolynomial> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.push_back(NCPolynomial::generator(i, j));
    return a;
}

/// S(a) = E^-1 * transpose(a) * E, entrywise as degree-1 polynomials.
inline std::vector<NCPolynomial> antipode_images(const ExactMatrix& e)
{
    const std::size_t n = e.size();
    const ExactMatrix inv = e.inverse();
    std::vector<NCPolynomial> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (inv.at(i, k).is_zero())
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    if (!e.at(l, j).is_zero())
                        out[i * n + j].add_term(NCMonomial::generator(l, k), inv.at(i, k) * e.at(l, j));
            }
    return out;
}

/**
 * The 2n^2 defining relations of B(E): the entries of
 * E^-1 transpose(a) E a - I (row-major), followed by those of
 * a E^-1 transpose(a) E - I.
 */
inline std::vector<NCPolynomial> build_relations(const ExactMatrix& e)
{
    const std::size_t n = e.size();
    if (n < 2)
        throw Error(ErrorCode::UnsupportedSize, "B(E) analysis requires n >= 2");
    if (e.determinant().is_zero())
        throw Error(ErrorCode::SingularMatrix, "E is singular");
    const ExactMatrix inv = e.inverse();
    const std::uint64_t m = e.conductor();
    std::vector<NCPolynomial> rels;
    rels.reserve(2 * n * n);

    // (E^-1 transpose(a) E a)_ij = sum_{k,l,p} Einv_ik E_lp a_lk a_pj
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            NCPolynomial r;
            for (std::size_t k = 0; k < n; ++k) {
                if (inv.at(i, k).is_zero())
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t p = 0; p < n; ++p)
                        if (!e.at(l, p).is_zero())
                            r.add_term(NCMonomial::generator(l, k) * NCMonomial::generator(p, j),
                                       inv.at(i, k) * e.at(l, p));
            }
            if (i == j)
                r.add_term(NCMonomial(), CycloNumber(-1, m));
            rels.push_back(std::move(r));
        }

    // (a E^-1 transpose(a) E)_ij = sum_{k,l,p} Einv_kl E_pj a_ik a_pl
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            NCPolynomial r;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    if (inv.at(k, l).is_zero())
                        continue;
                    for (std::size_t p = 0; p < n; ++p)
                        if (!e.at(p, j).is_zero())
                            r.add_term(NCMonomial::generator(i, k) * NCMonomial::generator(p, l),
                                       inv.at(k, l) * e.at(p, j));
                }
            if (i == j)
                r.add_term(NCMonomial(), CycloNumber(-1, m));
            rels.push_back(std::move(r));
        }
    return rels;
}

enum class Membership { InIdeal, NotInIdealUpToClosure };

inline std::string to_string(Membership v)
{
    return v == Membership::InIdeal ? "in_ideal" : "not_in_ideal_up_to_closure";
}

/**
 * Linear-algebra model of the two-sided ideal in degrees <= target.
 *
 * All products u*r*v with deg(u) + deg(r) + deg(v) <= closure degree are
 * row-reduced with monomials ordered degree-descending, so the echelon rows
 * whose leading monomial has degree <= target span exactly the part of the
 * generated subspace lying in degree <= target. A zero normal form is a
 * certificate of membership; a nonzero one only says no certificate exists
 * up to the closure degree.
 */
class IdealTruncation {
public:
    static constexpr std::size_t kDefaultCellLimit = 200'000;

    IdealTruncation(std::vector<NCPolynomial> relations, std::size_t n, std::size_t target_degree,
                    std::size_t margin, std::size_t cell_limit = kDefaultCellLimit)
        : relations_(std::move(relations)), n_(n), target_(target_degree),
          closure_(target_degree + margin), cell_limit_(cell_limit)
    {
        if (n_ == 0 || n_ > 15)
            throw Error(ErrorCode::UnsupportedSize, "generator matrix size out of range");
        alphabet_ = n_ * n_;
        offsets_.push_back(0);
        std::uint64_t layer = 1;
        for (std::size_t d = 0; d <= closure_; ++d) {
            offsets_.push_back(offsets_.back() + layer);
            layer *= alphabet_;
        }
        build();
    }

    std::size_t target_degree() const noexcept { return target_; }
    std::size_t closure_degree() const noexcept { return closure_; }
    std::size_t matrix_size() const noexcept { return n_; }
    const std::vector<NCPolynomial>& relations() const noexcept { return relations_; }

    /// Number of monomials of degree <= d.
    std::uint64_t monomial_count(std::size_t d) const { return offsets_.at(d + 1); }

    /// Echelon rows whose leading monomial has degree <= target.
    std::size_t basis_rank() const
    {
        const std::uint64_t bound = monomial_count(target_);
        std::size_t count = 0;
        for (const auto& row : rows_)
            if (row.front().first < bound)
                ++count;
        return count;
    }

    /// Total echelon rows up to the closure degree.
    std::size_t closure_rank() const noexcept { return rows_.size(); }

    std::size_t stored_cells() const noexcept { return cells_; }

    /// The truncated basis as polynomials (rows with leading degree <= target).
    std::vector<NCPolynomial> basis() const
    {
        const std::uint64_t bound = monomial_count(target_);
        std::vector<NCPolynomial> out;
        for (const auto& row : rows_)
            if (row.front().first < bound)
                out.push_back(to_poly(row));
        return out;
    }

    std::uint64_t quotient_dimension() const { return monomial_count(target_) - basis_rank(); }

    /// Remainder of p after eliminating every pivot monomial.
    NCPolynomial normal_form(const NCPolynomial& p) const
    {
        if (p.degree() > target_)
            throw Error(ErrorCode::DegreeExceedsTruncation,
                        "polynomial degree " + std::to_string(p.degree()) +
                            " exceeds truncation degree " + std::to_string(target_));
        Accumulator acc;
        for (const auto& [m, c] : p.terms())
            acc.emplace(rank_of(m.word()), c);
        auto it = acc.begin();
        while (it != acc.end()) {
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) {
                ++it;
                continue;
            }
            const std::uint64_t key = it->first;
            const CycloNumber c = it->second;
            subtract_scaled(acc, rows_[piv->second], c);
            it = acc.upper_bound(key);
        }
        NCPolynomial out;
        for (const auto& [r, c] : acc)
            out.add_term(word_of(r), c);
        return out;
    }

    Membership reduces_to_zero(const NCPolynomial& p) const
    {
        return normal_form(p).is_zero() ? Membership::InIdeal : Membership::NotInIdealUpToClosure;
    }

    std::uint64_t rank_of(const std::vector<Gen>& word) const
    {
        std::uint64_t lex = 0;
        for (const Gen& g : word)
            lex = lex * alphabet_ + g.row * n_ + g.col;
        return offsets_.at(word.size()) + lex;
    }

    NCMonomial word_of(std::uint64_t rank) const
    {
        std::size_t d = 0;
        while (offsets_[d + 1] <= rank)
            ++d;
        std::uint64_t lex = rank - offsets_[d];
        std::vector<Gen> w(d);
        for (std::size_t k = d; k-- > 0;) {
            const auto letter = static_cast<std::size_t>(lex % alphabet_);
            lex /= alphabet_;
            w[k] = Gen{static_cast<std::uint8_t>(letter / n_), static_cast<std::uint8_t>(letter % n_)};
        }
        return NCMonomial(std::move(w));
    }

private:
    using Row = std::vector<std::pair<std::uint64_t, CycloNumber>>; // descending rank
    using Accumulator = std::map<std::uint64_t, CycloNumber, std::greater<>>;

    static void subtract_scaled(Accumulator& acc, const Row& row, const CycloNumber& c)
    {
        for (const auto& [r, v] : row) {
            CycloNumber delta = c * v;
            auto [it, inserted] = acc.try_emplace(r, -delta);
            if (!inserted) {
                it->second -= delta;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }

    NCPolynomial to_poly(const Row& row) const
    {
        NCPolynomial p;
        for (const auto& [r, c] : row)
            p.add_term(word_of(r), c);
        return p;
    }

    void insert(Accumulator acc)
    {
        while (!acc.empty()) {
            auto lead = acc.begin();
            auto piv = pivots_.find(lead->first);
            if (piv == pivots_.end())
                break;
            const CycloNumber c = lead->second;
            subtract_scaled(acc, rows_[piv->second], c);
        }
        if (acc.empty())
            return;
        const CycloNumber inv = acc.begin()->second.inverse();
        Row row;
        row.reserve(acc.size());
        for (const auto& [r, c] : acc)
            row.emplace_back(r, c * inv);
        cells_ += row.size();
        if (cells_ > cell_limit_)
            throw Error(ErrorCode::TruncationTooLarge,
                        "ideal truncation exceeds " + std::to_string(cell_limit_) +
                            " stored cells (" + std::to_string(cells_) + " at " +
                            std::to_string(rows_.size() + 1) + " rows, " +
                            std::to_string(monomial_count(closure_)) + " columns)");
        pivots_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
    }

    void build()
    {
        struct Term {
            std::vector<Gen> word;
            CycloNumber coeff;
        };
        // Products u*r*v are enumerated by increasing deg(u) + deg(v).
        for (std::size_t extra = 0; extra <= closure_; ++extra) {
            for (const auto& rel : relations_) {
                if (rel.is_zero() || rel.degree() + extra > closure_)
                    continue;
                std::vector<Term> terms;
                for (const auto& [m, c] : rel.terms())
                    terms.push_back({m.word(), c});
                for (std::size_t left = 0; left <= extra; ++left) {
                    const std::size_t right = extra - left;
                    for_each_word(left, [&](const std::vector<Gen>& u) {
                        for_each_word(right, [&](const std::vector<Gen>& v) {
                            Accumulator acc;
                            std::vector<Gen> w;
                            for (const auto& t : terms) {
                                w.assign(u.begin(), u.end());
                                w.insert(w.end(), t.word.begin(), t.word.end());
                                w.insert(w.end(), v.begin(), v.end());
                                acc.emplace(rank_of(w), t.coeff);
                            }
                            insert(std::move(acc));
                        });
                    });
                }
            }
        }
    }

    template <class F>
    void for_each_word(std::size_t len, F&& f) const
    {
        std::vector<Gen> w(len);
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            for (std::size_t k = 0; k < len; ++k)
                w[k] = Gen{static_cast<std::uint8_t>(digits[k] / n_),
                           static_cast<std::uint8_t>(digits[k] % n_)};
            f(w);
            std::size_t k = len;
            while (k > 0 && ++digits[k - 1] == alphabet_)
                digits[--k] = 0;
            if (k == 0)
                return;
        }
    }

    std::vector<NCPolynomial> relations_;
    std::size_t n_;
    std::size_t target_;
    std::size_t closure_;
    std::size_t cell_limit_;
    std::size_t alphabet_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<Row> rows_;
    std::unordered_map<std::uint64_t, std::size_t> pivots_;
    std::size_t cells_ = 0;
};

} // namespace qhopf
