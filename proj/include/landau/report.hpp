#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace landau::report {

inline constexpr const char* kToolVersion = "0.1.0";

/// Ordered document type: keys serialize in insertion order, so reports are
/// byte-stable run to run.
using json = nlohmann::ordered_json;

/// %.17g: shortest text that still round-trips any finite double exactly.
/// -0 is normalized to 0 and non-finite values map to null so the emitted
/// text always re-parses to the value it came from.
inline std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // collapse -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

inline void write_value(const json& v, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad1(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) { out += "{}"; return; }
            out += "{\n";
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                escape_string(it.key(), out);
                out += ": ";
                write_value(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case json::value_t::array: {
            if (v.empty()) { out += "[]"; return; }
            out += "[\n";
            bool first = true;
            for (const auto& el : v) {
                if (!first) out += ",\n";
                first = false;
                out += pad1;
                write_value(el, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case json::value_t::string: escape_string(v.get<std::string>(), out); return;
        case json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; return;
        case json::value_t::number_integer:
            out += std::to_string(v.get<long long>());
            return;
        case json::value_t::number_unsigned:
            out += std::to_string(v.get<unsigned long long>());
            return;
        case json::value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) { out += "null"; return; }
            out += format_double(d);
            return;
        }
        default: out += "null"; return;
    }
}

} // namespace detail

/// Serialize with 2-space indentation and %.17g floats.  Re-parsing the
/// output and serializing again reproduces the same bytes.
inline std::string dump(const json& doc) {
    std::string out;
    detail::write_value(doc, out, 0);
    out += "\n";
    return out;
}

/// A double for a JSON report; non-finite values become null explicitly.
inline json number_or_null(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

} // namespace landau::report
