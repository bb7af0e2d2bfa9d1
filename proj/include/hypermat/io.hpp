#pragma once

#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "hypermatrix.hpp"
#include "matrix.hpp"
#include "permutation.hpp"

namespace hypermat {

using AnyHypermatrix = std::variant<Hypermatrix<Int>, Hypermatrix<double>>;

/// Parses a `.hm` document: {"shape": [...], "data": [...], "scalar_kind": "int"|"float"}.
/// Without scalar_kind the document is int when every datum is an integer literal.
inline AnyHypermatrix parse_hm(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) throw format_error("document must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "shape" && key != "data" && key != "scalar_kind")
            throw format_error("unknown field \"" + key + "\"");
    if (!doc.contains("shape") || !doc["shape"].is_array()) throw format_error("field \"shape\": expected an array");
    if (!doc.contains("data") || !doc["data"].is_array()) throw format_error("field \"data\": expected an array");

    std::vector<index_t> dims;
    for (index_t k = 0; k < doc["shape"].size(); ++k) {
        const json& v = doc["shape"][k];
        if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
            throw format_error("shape[" + std::to_string(k) + "]: expected a positive integer");
        dims.push_back(v.get<index_t>());
    }
    Shape shape(std::move(dims));

    const json& data = doc["data"];
    std::string kind;
    if (doc.contains("scalar_kind")) {
        if (!doc["scalar_kind"].is_string()) throw format_error("field \"scalar_kind\": expected a string");
        kind = doc["scalar_kind"].get<std::string>();
        if (kind != "int" && kind != "float")
            throw format_error("field \"scalar_kind\": expected \"int\" or \"float\", got \"" + kind + "\"");
    } else {
        kind = "int";
        for (const json& v : data)
            if (!v.is_number_integer()) kind = "float";
    }
    if (data.size() != shape.size())
        throw format_error("field \"data\": length " + std::to_string(data.size()) + " does not match shape " +
                           shape.to_string() + " of size " + std::to_string(shape.size()));

    if (kind == "int") {
        std::vector<Int> values;
        values.reserve(data.size());
        for (index_t k = 0; k < data.size(); ++k) {
            const json& v = data[k];
            if (v.is_number_unsigned() && v.get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max())
                throw format_error("data[" + std::to_string(k) + "]: integer out of 64-bit range");
            if (!v.is_number_integer()) throw format_error("data[" + std::to_string(k) + "]: expected an integer");
            values.emplace_back(v.get<std::int64_t>());
        }
        return Hypermatrix<Int>(std::move(shape), std::move(values));
    }
    std::vector<double> values;
    values.reserve(data.size());
    for (index_t k = 0; k < data.size(); ++k) {
        const json& v = data[k];
        if (!v.is_number()) throw format_error("data[" + std::to_string(k) + "]: expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw format_error("data[" + std::to_string(k) + "]: non-finite value");
        values.push_back(x);
    }
    return Hypermatrix<double>(std::move(shape), std::move(values));
}

/// Serializes with shortest round-trip decimals for floats.
template <Scalar T>
std::string format_hm(const Hypermatrix<T>& a) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["shape"] = a.shape().dims();
    ordered_json data = ordered_json::array();
    for (const T& v : a.flat()) {
        if constexpr (is_exact_v<T>) {
            data.push_back(v.value());
        } else {
            if (!std::isfinite(v)) throw format_error("cannot serialize a non-finite value");
            data.push_back(v);
        }
    }
    doc["data"] = std::move(data);
    doc["scalar_kind"] = is_exact_v<T> ? "int" : "float";
    return doc.dump() + "\n";
}

inline std::string format_hm(const AnyHypermatrix& a) {
    return std::visit([](const auto& h) { return format_hm(h); }, a);
}

inline AnyHypermatrix read_hm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_hm(text);
    } catch (const error& e) {
        throw format_error(path + ": " + e.what());
    }
}

template <Scalar T>
void write_hm(const Hypermatrix<T>& a, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write " + path);
    out << format_hm(a);
    if (!out) throw format_error("write failed for " + path);
}

inline void write_hm(const AnyHypermatrix& a, const std::string& path) {
    std::visit([&](const auto& h) { write_hm(h, path); }, a);
}

// δ-notation: d<m>[c1,...,cn].

inline LogicalMatrix parse_delta(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    index_t pos = 0;
    auto fail = [&](const std::string& msg) -> format_error {
        return format_error("delta notation at position " + std::to_string(pos) + ": " + msg);
    };
    auto number = [&]() {
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw fail("expected a number");
        index_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (v > (std::numeric_limits<index_t>::max() - 9) / 10) throw fail("number too large");
            v = v * 10 + static_cast<index_t>(s[pos++] - '0');
        }
        return v;
    };
    if (pos >= s.size() || s[pos] != 'd') throw fail("expected 'd'");
    ++pos;
    const index_t m = number();
    if (pos >= s.size() || s[pos] != '[') throw fail("expected '['");
    ++pos;
    std::vector<index_t> cols;
    cols.push_back(number());
    while (pos < s.size() && s[pos] == ',') {
        ++pos;
        cols.push_back(number());
    }
    if (pos >= s.size() || s[pos] != ']') throw fail("expected ',' or ']'");
    ++pos;
    if (pos != s.size()) throw fail("trailing characters");
    for (index_t j = 0; j < cols.size(); ++j)
        if (cols[j] < 1 || cols[j] > m)
            throw format_error("delta notation: entry " + std::to_string(j + 1) + " = " + std::to_string(cols[j]) +
                               " outside 1.." + std::to_string(m));
    return {m, std::move(cols)};
}

inline std::string print_delta(const LogicalMatrix& w) {
    std::string s = "d" + std::to_string(w.rows()) + "[";
    for (index_t j = 0; j < w.cols(); ++j) {
        if (j) s += ",";
        s += std::to_string(w.columns()[j]);
    }
    return s + "]";
}

template <Scalar T = Int>
Matrix<T> densify(const LogicalMatrix& w) {
    Matrix<T> m(w.rows(), w.cols());
    for (index_t j = 0; j < w.cols(); ++j) m.at(w.columns()[j], j + 1) = T{1};
    return m;
}

}  // namespace hypermat
