#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "qhopf/haar.hpp"
#include "qhopf/interval.hpp"
#include "qhopf/io.hpp"

namespace qhopf {

inline json to_json(const AntipodeOrder& order)
{
    switch (order.kind) {
    case AntipodeOrder::Kind::Finite: return json{{"finite", order.value}};
    case AntipodeOrder::Kind::Infinite: return json{{"infinite", order.witness}};
    case AntipodeOrder::Kind::Unknown: return json{{"unknown", order.value}};
    }
    return nullptr;
}

inline std::string to_string(const AntipodeOrder& order)
{
    switch (order.kind) {
    case AntipodeOrder::Kind::Finite: return std::to_string(order.value);
    case AntipodeOrder::Kind::Infinite: return "infinite (" + order.witness + ")";
    case AntipodeOrder::Kind::Unknown: return "unknown (F^k not scalar for k <= " + std::to_string(order.value) + ")";
    }
    return "?";
}

struct ReportOptions {
    bool approx = false;
    std::uint64_t precision_bits = 64;
};

/// Machine-readable analysis report; keys appear in a fixed order.
inline json report_json(const BEPresentation& p, const AnalysisReport& r, json input,
                        const ReportOptions& opts = {})
{
    json out;
    out["input"] = std::move(input);
    out["conductor"] = p.conductor();
    out["size"] = p.size();
    out["trace_f"] = r.trace_f.to_string();
    out["q_class"] = r.q_class.to_string();
    out["cosemisimple"] = r.cosemisimple;
    out["cotriangular_hint"] = r.cotriangular_hint;
    out["antipode_order"] = to_json(r.antipode_order);
    if (r.nu2) {
        out["nu2"] = r.nu2->to_string();
        out["nu2_rational_integer"] = r.nu2->is_rational() && r.nu2->rational_part().get_den() == 1;
    } else {
        out["nu2"] = nullptr;
    }
    out["cqg"] = to_string(r.cqg);
    if (r.s_squared_spectrum) {
        json spec = json::array();
        for (const auto& v : *r.s_squared_spectrum)
            spec.push_back(v.to_string());
        out["s_squared_spectrum"] = spec;
    }
    if (opts.approx) {
        json approx{{"precision_bits", opts.precision_bits},
                    {"trace_f", approx_string(r.trace_f, opts.precision_bits)}};
        approx["nu2"] = r.nu2 ? json(approx_string(*r.nu2, opts.precision_bits)) : json(nullptr);
        out["approx"] = approx;
    }
    return out;
}

inline json to_json(const AxiomReport& a)
{
    return json{{"margin", a.margin},
                {"counit", a.counit ? "pass" : "fail"},
                {"antipode_axiom", a.antipode_axiom ? "pass" : "fail"},
                {"s_preserves_ideal", a.s_preserves_ideal ? "pass" : "fail"},
                {"comult_compatible", to_string(a.comult_compatible)},
                {"failures", a.failures}};
}

inline json to_json(const InvarianceReport& r)
{
    return json{{"margin", r.margin},
                {"tuples_checked", r.tuples_checked},
                {"right_invariance", r.right_invariant ? "pass" : "fail"},
                {"left_invariance", r.left_invariant ? "pass" : "fail"},
                {"failures", r.failures}};
}

namespace detail {

inline void text_value(std::ostringstream& os, const std::string& prefix, const json& v)
{
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            text_value(os, prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
        return;
    }
    os << prefix << ": ";
    if (v.is_string())
        os << v.get<std::string>();
    else if (v.is_array()) {
        bool first = true;
        for (const auto& e : v) {
            os << (first ? "" : ", ") << (e.is_string() ? e.get<std::string>() : e.dump());
            first = false;
        }
    } else if (v.is_null())
        os << "none";
    else
        os << v.dump();
    os << "\n";
}

} // namespace detail

/// Flattened "key: value" lines carrying the same verdicts as the JSON form.
inline std::string report_text(const json& report)
{
    std::ostringstream os;
    detail::text_value(os, "", report);
    return os.str();
}

} // namespace qhopf
