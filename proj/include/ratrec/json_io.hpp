#pragma once

#include "ratrec/sensitivity.hpp"
#include "ratrec/types.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace ratrec {

// Writers emit the numbers themselves so that every value carries 17
// significant digits; the reader side is plain nlohmann parsing.

namespace detail {

inline void append_number(std::string& out, double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    out += buf;
}

inline void append_complex(std::string& out, const std::complex<double>& z)
{
    out += "{\"re\":";
    append_number(out, z.real());
    out += ",\"im\":";
    append_number(out, z.imag());
    out += "}";
}

inline void append_complex_array(std::string& out, const Eigen::VectorXcd& v)
{
    out += "[";
    for (Index i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        append_complex(out, v(i));
    }
    out += "]";
}

inline void append_real_array(std::string& out, const Eigen::VectorXd& v)
{
    out += "[";
    for (Index i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        append_number(out, v(i));
    }
    out += "]";
}

inline Eigen::VectorXcd parse_complex_array(const nlohmann::json& node, const char* what)
{
    if (!node.is_array())
        throw invalid_input(std::string(what) + ": expected an array");
    Eigen::VectorXcd v(static_cast<Index>(node.size()));
    Index i = 0;
    for (const auto& entry : node) {
        if (!entry.is_object() || !entry.contains("re") || !entry.contains("im"))
            throw invalid_input(std::string(what) + ": expected objects with re/im fields");
        v(i++) = {entry["re"].get<double>(), entry["im"].get<double>()};
    }
    return v;
}

inline nlohmann::json parse(const std::string& text)
{
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
        throw invalid_input("malformed JSON input");
    return doc;
}

} // namespace detail

inline std::string save_rational(const RationalFunction<double>& r)
{
    std::string out = "{\"poles\":";
    detail::append_complex_array(out, r.poles);
    out += ",\"residues\":";
    detail::append_complex_array(out, r.residues);
    out += "}";
    return out;
}

inline RationalFunction<double> load_rational(const std::string& text)
{
    const nlohmann::json doc = detail::parse(text);
    if (!doc.contains("poles") || !doc.contains("residues"))
        throw invalid_input("rational function JSON: need poles and residues");
    return {detail::parse_complex_array(doc["poles"], "poles"),
            detail::parse_complex_array(doc["residues"], "residues")};
}

inline std::string save_window(const FourierWindow<double>& fw)
{
    std::string out = "{\"N\":" + std::to_string(fw.half_order) + ",\"neg\":";
    detail::append_complex_array(out, fw.neg);
    out += ",\"pos\":";
    detail::append_complex_array(out, fw.pos);
    out += "}";
    return out;
}

inline FourierWindow<double> load_window(const std::string& text)
{
    const nlohmann::json doc = detail::parse(text);
    if (!doc.contains("N") || !doc.contains("neg") || !doc.contains("pos"))
        throw invalid_input("coefficient window JSON: need N, neg, pos");
    return {doc["N"].get<Index>(), detail::parse_complex_array(doc["neg"], "neg"),
            detail::parse_complex_array(doc["pos"], "pos")};
}

inline std::string save_samples(const UnitCircleSamples<double>& samples)
{
    std::string out = "{\"count\":" + std::to_string(samples.count()) + ",\"values\":";
    detail::append_complex_array(out, samples.values);
    out += "}";
    return out;
}

inline UnitCircleSamples<double> load_samples(const std::string& text)
{
    const nlohmann::json doc = detail::parse(text);
    if (!doc.contains("values"))
        throw invalid_input("sample JSON: need values");
    UnitCircleSamples<double> samples(detail::parse_complex_array(doc["values"], "values"));
    if (doc.contains("count") && doc["count"].get<Index>() != samples.count())
        throw invalid_input("sample JSON: count disagrees with the value list");
    return samples;
}

/// Kind sniffing for the recover CLI: windows have "neg", sample sets have
/// "values".
inline bool looks_like_window(const std::string& text)
{
    const nlohmann::json doc = detail::parse(text);
    return doc.contains("neg");
}

namespace detail {

inline void append_side(std::string& out, const SideSensitivity<double>& side)
{
    out += "{\"poles\":";
    append_complex_array(out, side.poles);
    out += ",\"measurements\":[";
    for (std::size_t i = 0; i < side.measurement_indices.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(side.measurement_indices[i]);
    }
    out += "],\"rho\":";
    append_real_array(out, side.unstructured.rho);
    out += ",\"zeta\":";
    append_real_array(out, side.unstructured.zeta);
    out += ",\"bound\":";
    append_real_array(out, side.unstructured.bound);
    out += ",\"kappaV\":";
    append_number(out, side.unstructured.kappa_v);
    out += ",\"l1_rho\":";
    append_number(out, side.unstructured.l1_rho);
    out += ",\"l1_bound\":";
    append_number(out, side.unstructured.l1_bound);
    out += ",\"l2_rho\":";
    append_number(out, side.unstructured.l2_rho);
    out += ",\"l2_bound\":";
    append_number(out, side.unstructured.l2_bound);
    out += ",\"eta\":";
    append_real_array(out, side.structured.eta);
    out += ",\"eta_per_measurement\":[";
    for (Index j = 0; j < side.structured.eta_per_measurement.rows(); ++j) {
        if (j)
            out += ",";
        append_real_array(out, side.structured.eta_per_measurement.row(j).transpose());
    }
    out += "]}";
}

} // namespace detail

inline std::string save_sensitivity(const SensitivityReport<double>& report)
{
    std::string out = "{\"inside\":";
    detail::append_side(out, report.inside);
    out += ",\"outside\":";
    detail::append_side(out, report.outside);
    out += "}";
    return out;
}

} // namespace ratrec
