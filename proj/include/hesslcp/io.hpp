#ifndef HESSLCP_IO_HPP
#define HESSLCP_IO_HPP

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hesslcp/analysis.hpp"
#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/matrix.hpp"
#include "hesslcp/rational.hpp"
#include "hesslcp/solver.hpp"

namespace hesslcp {

// Instance files are JSON documents:
//
//   {
//     "name": "optional label",
//     "matrix": [[36, -81], ["147", "7/3"]],
//     "rhs": [1, "-1/2"]
//   }
//
// Entries are JSON integers or rational literal strings; floating-point
// numbers are rejected.

struct InstanceFile {
    std::string name;
    Matrix matrix;
    Vector rhs;

    LCPInstance instance() const { return LCPInstance(matrix, rhs); }
};

namespace detail {

inline Scalar parse_entry(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Scalar(v.dump());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": expected an integer or a rational literal string, got " + v.dump());
}

inline nlohmann::json entry_json(const Scalar& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
    return to_string(x);
}

inline std::string entry_text(const Scalar& x) { return entry_json(x).dump(); }

} // namespace detail

inline InstanceFile parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("instance file must be a JSON object");
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("missing array \"matrix\"");
    if (!doc.contains("rhs") || !doc["rhs"].is_array()) throw ParseError("missing array \"rhs\"");

    InstanceFile f;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
        f.name = doc["name"].get<std::string>();
    }
    const auto& rows = doc["matrix"];
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("matrix is empty");
    f.matrix = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array()) throw ParseError("matrix row " + std::to_string(i + 1) + " is not an array");
        if (rows[i].size() != n)
            throw ParseError("matrix is not square: row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j)
            f.matrix(i, j) = detail::parse_entry(rows[i][j], "matrix[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
    const auto& rhs = doc["rhs"];
    if (rhs.size() != n) throw ParseError("rhs has " + std::to_string(rhs.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) f.rhs.push_back(detail::parse_entry(rhs[i], "rhs[" + std::to_string(i + 1) + "]"));
    return f;
}

/// One matrix row per line; integers bare, fractions as strings.
inline std::string format_instance(const InstanceFile& f) {
    std::ostringstream os;
    os << "{\n";
    if (!f.name.empty()) os << "  \"name\": " << nlohmann::json(f.name).dump() << ",\n";
    os << "  \"matrix\": [\n";
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        os << "    [";
        for (std::size_t j = 0; j < f.matrix.cols(); ++j) os << (j ? ", " : "") << detail::entry_text(f.matrix(i, j));
        os << (i + 1 < f.matrix.rows() ? "],\n" : "]\n");
    }
    os << "  ],\n  \"rhs\": [";
    for (std::size_t i = 0; i < f.rhs.size(); ++i) os << (i ? ", " : "") << detail::entry_text(f.rhs[i]);
    os << "]\n}\n";
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline InstanceFile load_instance(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Cycle files: a JSON array of 1-based index arrays, one per vertex.
inline std::vector<Basis> parse_cycle(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("cycle file must be a JSON array of index arrays");
    std::vector<Basis> cycle;
    for (const auto& v : doc) {
        if (!v.is_array()) throw ParseError("cycle vertex " + v.dump() + " is not an array");
        std::vector<std::size_t> idx;
        for (const auto& i : v) {
            if (!i.is_number_unsigned() || i.get<std::size_t>() == 0) throw ParseError("cycle index " + i.dump() + " is not a positive integer");
            idx.push_back(i.get<std::size_t>());
        }
        cycle.push_back(Basis::one_based(idx));
    }
    return cycle;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline nlohmann::json basis_json(const Basis& b) { return b.one_based_members(); }

inline nlohmann::json vector_json(const Vector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const Scalar& x : v) a.push_back(to_string(x));
    return a;
}

inline std::size_t basis_test_bound(std::size_t n) { return n * (n + 1) / 2; }

inline nlohmann::json report_json(const SolveReport& r, std::size_t n, bool with_prefix_bases) {
    nlohmann::json j;
    j["structure"] = std::string(to_string(r.structure));
    j["optimal_basis"] = basis_json(r.optimal_basis);
    j["w"] = vector_json(r.pair.w);
    j["z"] = vector_json(r.pair.z);
    j["basis_test_count"] = r.basis_test_count;
    if (r.structure != Route::general) j["basis_test_bound"] = basis_test_bound(n);
    if (with_prefix_bases && r.structure != Route::general) {
        nlohmann::json pb = nlohmann::json::array();
        for (std::size_t k = 1; k <= r.prefix_bases.filled(); ++k) pb.push_back(basis_json(r.prefix_bases.at(static_cast<std::ptrdiff_t>(k))));
        j["prefix_bases"] = pb;
    }
    return j;
}

inline std::string report_text(const SolveReport& r, std::size_t n, bool with_prefix_bases) {
    std::ostringstream os;
    auto vec = [&os](const char* label, const Vector& v) {
        os << label << ":";
        for (const Scalar& x : v) os << ' ' << to_string(x);
        os << '\n';
    };
    os << "structure: " << to_string(r.structure) << '\n';
    os << "optimal basis: " << r.optimal_basis << '\n';
    vec("w", r.pair.w);
    vec("z", r.pair.z);
    os << "basis tests: " << r.basis_test_count;
    if (r.structure != Route::general) os << " (bound " << basis_test_bound(n) << ')';
    os << '\n';
    if (with_prefix_bases && r.structure != Route::general) {
        const char* what = r.structure == Route::upper_hessenberg ? "trailing" : "leading";
        for (std::size_t k = 1; k <= r.prefix_bases.filled(); ++k)
            os << "B(" << k << ") [" << what << "]: " << r.prefix_bases.at(static_cast<std::ptrdiff_t>(k)) << '\n';
    }
    return os.str();
}

inline nlohmann::json profile_json(const StructureProfile& p) {
    return {{"tridiagonal", p.is_tridiagonal},
            {"lower_hessenberg", p.is_lower_hessenberg},
            {"upper_hessenberg", p.is_upper_hessenberg},
            {"bandwidth", p.bandwidth},
            {"left_half_bandwidth", p.left_half_bandwidth},
            {"right_half_bandwidth", p.right_half_bandwidth}};
}

} // namespace hesslcp

#endif // HESSLCP_IO_HPP
