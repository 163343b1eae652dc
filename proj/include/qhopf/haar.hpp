#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

namespace detail {

inline void require_nonzero_trace(const BEPresentation& p)
{
    if (p.trace_f().is_zero())
        throw Error(ErrorCode::DegenerateDenominator,
                    "orthogonality denominator vanishes; B(E) is not cosemisimple at this trace");
}

inline void require_index(const BEPresentation& p, std::initializer_list<std::size_t> idx)
{
    for (std::size_t i : idx)
        if (i >= p.size())
            throw Error(ErrorCode::InvalidParameter, "index out of range");
}

} // namespace detail

/// h(a_kl a_ij) = Einv_ki E_lj / tr(F). Indices are 0-based.
inline CycloNumber haar_moment(const BEPresentation& p, std::size_t k, std::size_t l, std::size_t i,
                               std::size_t j)
{
    detail::require_nonzero_trace(p);
    detail::require_index(p, {k, l, i, j});
    const ExactMatrix inv = p.e().inverse();
    return inv.at(k, i) * p.e().at(l, j) / p.trace_f();
}

/// h(a_kl S(a_ij)) = delta_kj F_il / tr(F), from the orthogonality relations.
inline CycloNumber haar_moment_s(const BEPresentation& p, std::size_t k, std::size_t l, std::size_t i,
                                 std::size_t j)
{
    detail::require_nonzero_trace(p);
    detail::require_index(p, {k, l, i, j});
    if (k != j)
        return CycloNumber(0, p.conductor());
    return p.f().at(i, l) / p.trace_f();
}

/// Degree <= 2 moments of the Haar state on the fundamental coefficients.
class HaarMomentTable {
public:
    explicit HaarMomentTable(const BEPresentation& p)
        : n_(p.size()), denominator_(p.trace_f())
    {
        detail::require_nonzero_trace(p);
        const ExactMatrix inv = p.e().inverse();
        const CycloNumber scale = denominator_.inverse();
        entries_.reserve(n_ * n_ * n_ * n_);
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t l = 0; l < n_; ++l)
                for (std::size_t i = 0; i < n_; ++i)
                    for (std::size_t j = 0; j < n_; ++j)
                        entries_.push_back(inv.at(k, i) * p.e().at(l, j) * scale);
    }

    std::size_t size() const noexcept { return n_; }
    const CycloNumber& denominator() const noexcept { return denominator_; }

    /// h(a_kl a_ij), 0-based.
    const CycloNumber& at(std::size_t k, std::size_t l, std::size_t i, std::size_t j) const
    {
        return entries_[((k * n_ + l) * n_ + i) * n_ + j];
    }

    /// h on a polynomial of degree <= 2: h(1) = 1 and h(a_ij) = 0.
    CycloNumber evaluate(const NCPolynomial& poly) const
    {
        CycloNumber sum(0, denominator_.conductor());
        for (const auto& [m, c] : poly.terms()) {
            const auto& w = m.word();
            if (w.size() > 2)
                throw Error(ErrorCode::DegreeExceedsTruncation, "Haar moments are tabulated up to degree 2");
            if (w.empty())
                sum += c;
            else if (w.size() == 2)
                sum += c * at(w[0].row, w[0].col, w[1].row, w[1].col);
        }
        return sum;
    }

private:
    std::size_t n_;
    CycloNumber denominator_;
    std::vector<CycloNumber> entries_;
};

namespace detail {

inline void require_haar_state(const BEPresentation& p)
{
    require_nonzero_trace(p);
    if (!cosemisimple(p).first)
        throw Error(ErrorCode::NoHaarState, "B(E) is not cosemisimple; no Haar state");
}

} // namespace detail

/// nu_2 of the fundamental comodule, closed form n / tr(F).
inline CycloNumber schur_indicator(const BEPresentation& p)
{
    detail::require_haar_state(p);
    return CycloNumber(static_cast<long>(p.size()), p.conductor()) / p.trace_f();
}

/// nu_2 = h(chi_(1) chi_(2)) with Delta(chi) = sum_{i,j} a_ij (x) a_ji.
inline CycloNumber schur_indicator_via_character(const BEPresentation& p)
{
    detail::require_haar_state(p);
    const HaarMomentTable table(p);
    NCPolynomial product;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            product.add_term(NCMonomial::generator(i, j) * NCMonomial::generator(j, i), CycloNumber(1));
    return table.evaluate(product);
}

struct InvarianceReport {
    bool right_invariant = true;
    bool left_invariant = true;
    std::size_t tuples_checked = 0;
    std::size_t margin = 0;
    std::vector<std::string> failures;

    bool passed() const { return right_invariant && left_invariant; }
};

/// Right invariance: sum_{p,q} h(a_kp a_iq) a_pl a_qj - h(a_kl a_ij).
inline NCPolynomial right_invariance_identity(const HaarMomentTable& h, std::size_t k, std::size_t l,
                                              std::size_t i, std::size_t j)
{
    const std::size_t n = h.size();
    NCPolynomial poly = NCPolynomial::constant(-h.at(k, l, i, j));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            poly.add_term(NCMonomial::generator(p, l) * NCMonomial::generator(q, j), h.at(k, p, i, q));
    return poly;
}

/// Left invariance: sum_{p,q} h(a_pl a_qj) a_kp a_iq - h(a_kl a_ij).
inline NCPolynomial left_invariance_identity(const HaarMomentTable& h, std::size_t k, std::size_t l,
                                             std::size_t i, std::size_t j)
{
    const std::size_t n = h.size();
    NCPolynomial poly = NCPolynomial::constant(-h.at(k, l, i, j));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            poly.add_term(NCMonomial::generator(k, p) * NCMonomial::generator(i, q), h.at(p, l, q, j));
    return poly;
}

/// Certifies both invariance families modulo the relation ideal for every (k,l,i,j).
inline InvarianceReport invariance_check(const BEPresentation& p, std::size_t margin = 2,
                                         std::size_t degree = 2,
                                         std::size_t cell_limit = IdealTruncation::kDefaultCellLimit)
{
    detail::require_nonzero_trace(p);
    const std::size_t n = p.size();
    if (n > 3)
        throw Error(ErrorCode::UnsupportedSize, "invariance check supports n <= 3");
    if (degree < 2)
        throw Error(ErrorCode::InvalidParameter, "invariance check needs truncation degree >= 2");
    const HaarMomentTable h(p);
    const IdealTruncation trunc(build_relations(p.e()), n, degree, margin, cell_limit);
    InvarianceReport report;
    report.margin = margin;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    ++report.tuples_checked;
                    const std::string tag = "(" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                            "," + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    if (trunc.reduces_to_zero(right_invariance_identity(h, k, l, i, j)) != Membership::InIdeal) {
                        report.right_invariant = false;
                        report.failures.push_back("right invariance " + tag);
                    }
                    if (trunc.reduces_to_zero(left_invariance_identity(h, k, l, i, j)) != Membership::InIdeal) {
                        report.left_invariant = false;
                        report.failures.push_back("left invariance " + tag);
                    }
                }
    return report;
}

} // namespace qhopf
