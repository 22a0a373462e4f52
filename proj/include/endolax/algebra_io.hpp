#pragma once

// JSON loader for algebra files:
//   {"name": str, "dim": int, "structure": [{"i": int, "j": int, "k": int, "c": "p" | "p/q"}]}
// Indices are 1-based. Only i < j keys are accepted (i > j is an error, not
// canonicalized) and the Jacobi identity is verified exactly before the
// algebra is returned.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"

#include "endolax/lie_algebra.hpp"

namespace endolax {

/// Semantic rejection of an algebra document (schema or Jacobi failure).
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The document is not JSON at all.
struct JsonSyntaxError : LoadError {
    explicit JsonSyntaxError(const std::string& msg) : LoadError(msg) {}
};

/// Filesystem-level failure (missing or unreadable file).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

inline LieAlgebra load_algebra(const nlohmann::json& doc) {
    if (!doc.is_object()) throw LoadError("algebra document must be a JSON object");
    if (!doc.contains("name") || !doc["name"].is_string()) throw LoadError("missing string field 'name'");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw LoadError("missing integer field 'dim'");
    const int dim = doc["dim"].get<int>();
    if (dim < 1 || dim > kMaxDim)
        throw LoadError("'dim' must be in [1, " + std::to_string(kMaxDim) + "]");
    if (!doc.contains("structure") || !doc["structure"].is_array())
        throw LoadError("missing array field 'structure'");

    LieAlgebra L(doc["name"].get<std::string>(), dim);
    std::set<std::array<int, 3>> seen;
    for (const auto& entry : doc["structure"]) {
        if (!entry.is_object()) throw LoadError("structure entries must be objects");
        for (const char* f : {"i", "j", "k"})
            if (!entry.contains(f) || !entry[f].is_number_integer())
                throw LoadError(std::string("structure entry missing integer field '") + f + "'");
        if (!entry.contains("c") || !entry["c"].is_string())
            throw LoadError("structure entry field 'c' must be a rational literal string");
        const int i = entry["i"].get<int>();
        const int j = entry["j"].get<int>();
        const int k = entry["k"].get<int>();
        auto index_ok = [&](int v) { return v >= 1 && v <= dim; };
        if (!index_ok(i) || !index_ok(j) || !index_ok(k))
            throw LoadError("structure indices out of range at (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + ")");
        Rational value;
        try {
            value = parse_rational(entry["c"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw LoadError(e.what());
        }
        if (i > j)
            throw LoadError("entry (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                            ") has i > j; only canonical i < j keys are accepted");
        if (i == j) {
            if (!value.is_zero())
                throw LoadError("entry (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                ") has i = j with nonzero value");
            continue;
        }
        if (!seen.insert({i, j, k}).second)
            throw LoadError("duplicate structure key (" + std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
        L.set(i, j, k, value);
    }

    auto defect = jacobi_defect(L);
    if (!defect.empty()) {
        const auto& [key, residual] = *defect.begin();
        std::ostringstream os;
        os << "Jacobi identity fails at triple (" << key[0] << "," << key[1] << "," << key[2] << "), component "
           << key[3] << ", residual " << residual;
        throw LoadError(os.str());
    }
    return L;
}

inline LieAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open algebra file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonSyntaxError(std::string("malformed JSON: ") + e.what());
    }
    return load_algebra(doc);
}

}  // namespace endolax
