#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qhopf/ideal.hpp"
#include "qhopf/interval.hpp"
#include "qhopf/matrix.hpp"
#include "qhopf/quad_ring.hpp"

namespace qhopf {

/// B(E) for invertible E of size n >= 2, with F = E^-1 transpose(E) and trace(F) cached.
class BEPresentation {
public:
    explicit BEPresentation(ExactMatrix e, std::string label = {})
        : e_(std::move(e)), label_(std::move(label))
    {
        if (e_.size() < 2)
            throw Error(ErrorCode::UnsupportedSize,
                        "B(E) analysis requires n >= 2 (got n = " + std::to_string(e_.size()) + ")");
        f_ = companion(e_);
        trace_f_ = f_.trace();
    }

    const ExactMatrix& e() const noexcept { return e_; }
    const ExactMatrix& f() const noexcept { return f_; }
    const CycloNumber& trace_f() const noexcept { return trace_f_; }
    std::size_t size() const noexcept { return e_.size(); }
    std::uint64_t conductor() const noexcept { return e_.conductor(); }
    const std::string& label() const noexcept { return label_; }

private:
    ExactMatrix e_;
    ExactMatrix f_;
    CycloNumber trace_f_;
    std::string label_;
};

inline BEPresentation make_presentation(const ExactMatrix& e, std::string label = {})
{
    return BEPresentation(e, std::move(label));
}

/// Cosemisimple iff q = 1, q = -1 or q is not a root of unity.
inline std::pair<bool, QClass> cosemisimple(const BEPresentation& p)
{
    const QClass cls = q_class(p.trace_f());
    return {cls.kind != QClass::Kind::RootOfUnity, cls};
}

struct AntipodeOrder {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind;
    std::uint64_t value = 0; // the order when Finite, the search bound when Unknown
    std::string witness;     // set when Infinite

    bool operator==(const AntipodeOrder& o) const { return kind == o.kind && value == o.value; }
};

/// S^2(a) = F a F^-1, so the antipode order is twice the projective order of F.
inline AntipodeOrder antipode_order(const BEPresentation& p, std::uint64_t max_k = 256)
{
    const ProjOrderVerdict v = projective_order(p.f(), max_k);
    if (v.is_finite())
        return {AntipodeOrder::Kind::Finite, 2 * v.finite().k, {}};
    if (v.is_infinite())
        return {AntipodeOrder::Kind::Infinite, 0, std::get<ProjOrderVerdict::Infinite>(v.value).witness};
    return {AntipodeOrder::Kind::Unknown, std::get<ProjOrderVerdict::Unknown>(v.value).bound_reached, {}};
}

/// Eigenvalues of S^2 on the a_ij: f_i / f_j, listed row-major in (i, j).
inline std::vector<CycloNumber> s_squared_spectrum(const BEPresentation& p)
{
    const ExactMatrix& f = p.f();
    if (!f.is_diagonal())
        throw Error(ErrorCode::UnsupportedShape, "S^2 spectrum requires diagonal F");
    const std::size_t n = p.size();
    std::vector<CycloNumber> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.push_back(f.at(i, i) / f.at(j, j));
    return out;
}

enum class CqgVerdict { Obstructed, NoObstructionFound, Unknown };

inline std::string to_string(CqgVerdict v)
{
    switch (v) {
    case CqgVerdict::Obstructed: return "obstructed";
    case CqgVerdict::NoObstructionFound: return "no_obstruction_found";
    case CqgVerdict::Unknown: return "unknown";
    }
    return "?";
}

/// Necessary condition only: a CQG structure forces every ratio f_i / f_j of
/// a diagonal F to be a positive real.
inline CqgVerdict cqg_obstruction(const BEPresentation& p)
{
    if (!p.f().is_diagonal())
        return CqgVerdict::Unknown;
    std::vector<CycloNumber> seen;
    for (const CycloNumber& ratio : s_squared_spectrum(p)) {
        bool repeated = false;
        for (const auto& s : seen)
            repeated = repeated || s == ratio;
        if (repeated)
            continue;
        if (certified_sign(ratio) != Sign::PositiveReal)
            return CqgVerdict::Obstructed;
        seen.push_back(ratio);
    }
    return CqgVerdict::NoObstructionFound;
}

// Constructors for the worked examples.

/// E = AD(xi, 1, 1, 1, 1, 1) with xi = zeta_m.
inline BEPresentation prop2(std::uint64_t m)
{
    if (m < 1)
        throw Error(ErrorCode::InvalidParameter, "prop2 requires m >= 1");
    std::vector<CycloNumber> vals(6, CycloNumber(1, m));
    vals[0] = CycloNumber::zeta(m);
    return BEPresentation(antidiag(vals), "prop2(m=" + std::to_string(m) + ")");
}

/// AD(1,1,xi,xi) for m = 3, AD(1,1,1,xi) for m = 4, AD(1,1,xi) for m >= 5.
inline BEPresentation remark4(std::uint64_t m)
{
    if (m < 3)
        throw Error(ErrorCode::InvalidParameter, "remark4 requires m >= 3");
    const CycloNumber one(1, m);
    const CycloNumber xi = CycloNumber::zeta(m);
    std::vector<CycloNumber> vals;
    if (m == 3)
        vals = {one, one, xi, xi};
    else if (m == 4)
        vals = {one, one, one, xi};
    else
        vals = {one, one, xi};
    return BEPresentation(antidiag(vals), "remark4(m=" + std::to_string(m) + ")");
}

/// The root t = zeta_5 + zeta_5^4 - 1 = (-3 + sqrt 5)/2 of t^2 + 3t + 1.
inline CycloNumber remark5_parameter()
{
    return CycloNumber::zeta(5, 1) + CycloNumber::zeta(5, 4) - CycloNumber(1, 5);
}

/// E = AD(1, 1, t).
inline BEPresentation remark5()
{
    const CycloNumber one(1, 5);
    return BEPresentation(antidiag({one, one, remark5_parameter()}), "remark5()");
}

/// E = AD(-1 (k times), 1 (2n-k times)) with k = (n-1)/2, n odd >= 3.
inline BEPresentation example7(std::uint64_t n)
{
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorCode::InvalidParameter, "example7 requires odd n >= 3");
    const std::uint64_t k = (n - 1) / 2;
    std::vector<CycloNumber> vals(2 * n, CycloNumber(1));
    for (std::uint64_t i = 0; i < k; ++i)
        vals[i] = CycloNumber(-1);
    return BEPresentation(antidiag(vals), "example7(n=" + std::to_string(n) + ")");
}

struct AnalysisReport {
    CycloNumber trace_f;
    QClass q_class;
    bool cosemisimple;
    bool cotriangular_hint;
    AntipodeOrder antipode_order;
    std::optional<CycloNumber> nu2;
    CqgVerdict cqg;
    std::optional<std::vector<CycloNumber>> s_squared_spectrum;
};

/// All verdicts that do not need the ideal truncation.
inline AnalysisReport analyze(const BEPresentation& p, std::uint64_t max_k = 256)
{
    AnalysisReport r{p.trace_f(), {}, false, false, {}, std::nullopt, CqgVerdict::Unknown, std::nullopt};
    std::tie(r.cosemisimple, r.q_class) = cosemisimple(p);
    r.cotriangular_hint = r.q_class.kind == QClass::Kind::One;
    r.antipode_order = antipode_order(p, max_k);
    if (r.cosemisimple && !p.trace_f().is_zero())
        r.nu2 = CycloNumber(static_cast<long>(p.size()), p.conductor()) / p.trace_f();
    r.cqg = cqg_obstruction(p);
    if (p.f().is_diagonal())
        r.s_squared_spectrum = s_squared_spectrum(p);
    return r;
}

struct AxiomReport {
    enum class Status { Pass, Fail, Skipped };
    bool counit = false;
    bool antipode_axiom = false;
    bool s_preserves_ideal = false;
    Status comult_compatible = Status::Skipped;
    std::size_t margin = 0;
    std::vector<std::string> failures;
};

inline std::string to_string(AxiomReport::Status s)
{
    switch (s) {
    case AxiomReport::Status::Pass: return "pass";
    case AxiomReport::Status::Fail: return "fail";
    case AxiomReport::Status::Skipped: return "skipped";
    }
    return "?";
}

namespace detail {

using TensorTerms = std::map<std::pair<NCMonomial, NCMonomial>, CycloNumber>;

// Delta(w) for a word w, with Delta(a_ij) = sum_p a_ip (x) a_pj.
inline void add_coproduct(TensorTerms& acc, const NCMonomial& w, const CycloNumber& c, std::size_t n)
{
    const auto& word = w.word();
    std::vector<std::size_t> mid(word.size(), 0);
    while (true) {
        std::vector<Gen> left(word.size()), right(word.size());
        for (std::size_t k = 0; k < word.size(); ++k) {
            const auto p = static_cast<std::uint8_t>(mid[k]);
            left[k] = Gen{word[k].row, p};
            right[k] = Gen{p, word[k].col};
        }
        auto key = std::make_pair(NCMonomial(std::move(left)), NCMonomial(std::move(right)));
        auto [it, inserted] = acc.try_emplace(std::move(key), c);
        if (!inserted)
            it->second += c;
        std::size_t k = word.size();
        while (k > 0 && ++mid[k - 1] == n)
            mid[--k] = 0;
        if (k == 0)
            return;
    }
}

// Delta(r) lies in I(x)A + A(x)I iff (NF (x) NF)(Delta r) = 0, since NF is a
// projection whose kernel is the ideal.
inline bool coproduct_in_ideal(const NCPolynomial& r, const IdealTruncation& trunc, std::size_t n)
{
    TensorTerms delta;
    for (const auto& [m, c] : r.terms())
        add_coproduct(delta, m, c, n);
    std::map<NCMonomial, NCPolynomial> nf_cache;
    auto nf = [&](const NCMonomial& m) -> const NCPolynomial& {
        auto it = nf_cache.find(m);
        if (it == nf_cache.end())
            it = nf_cache.emplace(m, trunc.normal_form(NCPolynomial::monomial(m))).first;
        return it->second;
    };
    TensorTerms image;
    for (const auto& [key, c] : delta) {
        if (c.is_zero())
            continue;
        const NCPolynomial& l = nf(key.first);
        const NCPolynomial& rr = nf(key.second);
        for (const auto& [ml, cl] : l.terms())
            for (const auto& [mr, cr] : rr.terms()) {
                auto [it, inserted] = image.try_emplace({ml, mr}, c * cl * cr);
                if (!inserted)
                    it->second += c * cl * cr;
            }
    }
    for (const auto& [key, c] : image)
        if (!c.is_zero())
            return false;
    return true;
}

} // namespace detail

/**
 * Symbolic check of the Hopf structure maps against the relations, using a
 * degree-2 (or higher) ideal truncation with the given closure margin.
 */
inline AxiomReport verify_hopf_axioms(const BEPresentation& p, std::size_t margin = 2,
                                      std::size_t degree = 2,
                                      std::size_t cell_limit = IdealTruncation::kDefaultCellLimit)
{
    const std::size_t n = p.size();
    if (n > 4)
        throw Error(ErrorCode::UnsupportedSize, "axiom verification supports n <= 4");
    if (degree < 2)
        throw Error(ErrorCode::InvalidParameter, "axiom verification needs truncation degree >= 2");
    AxiomReport report;
    report.margin = margin;
    const auto relations = build_relations(p.e());
    const IdealTruncation trunc(relations, n, degree, margin, cell_limit);

    report.counit = true;
    for (std::size_t r = 0; r < relations.size(); ++r)
        if (!relations[r].counit().is_zero()) {
            report.counit = false;
            report.failures.push_back("counit does not kill relation " + std::to_string(r));
        }

    const auto s = antipode_images(p.e());
    const auto a = generator_matrix(n);
    report.antipode_axiom = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            NCPolynomial left, right;
            for (std::size_t k = 0; k < n; ++k) {
                left += s[i * n + k] * a[k * n + j];
                right += a[i * n + k] * s[k * n + j];
            }
            if (i == j) {
                left -= NCPolynomial::constant(CycloNumber(1, p.conductor()));
                right -= NCPolynomial::constant(CycloNumber(1, p.conductor()));
            }
            for (const NCPolynomial* poly : {&left, &right})
                if (trunc.reduces_to_zero(*poly) != Membership::InIdeal) {
                    report.antipode_axiom = false;
                    report.failures.push_back("antipode axiom fails at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
                }
        }

    report.s_preserves_ideal = true;
    for (std::size_t r = 0; r < relations.size(); ++r)
        if (trunc.reduces_to_zero(apply_antihom(relations[r], s, n)) != Membership::InIdeal) {
            report.s_preserves_ideal = false;
            report.failures.push_back("S(relation " + std::to_string(r) + ") not certified in ideal");
        }

    if (n <= 3) {
        report.comult_compatible = AxiomReport::Status::Pass;
        for (std::size_t r = 0; r < relations.size(); ++r)
            if (!detail::coproduct_in_ideal(relations[r], trunc, n)) {
                report.comult_compatible = AxiomReport::Status::Fail;
                report.failures.push_back("Delta(relation " + std::to_string(r) + ") not certified");
            }
    }
    return report;
}

} // namespace qhopf
