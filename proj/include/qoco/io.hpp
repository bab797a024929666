#pragma once
// Text and JSON forms for the library types: sign strings, the run-length
// codec hookup, JSON-lines records for search hits and pairs, certificate
// dumps with their census, and small CSV helpers.  All emitters are
// deterministic so parallel runs produce identical bytes.

#include <json.hpp>

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qoco/array.hpp"
#include "qoco/cocycle.hpp"
#include "qoco/errors.hpp"
#include "qoco/group.hpp"
#include "qoco/pairs.hpp"
#include "qoco/search.hpp"
#include "qoco/sign_matrix.hpp"

namespace qoco {

using ojson = nlohmann::ordered_json;

// Accepts either a bare sign string ("++-+-...") or run-length text.
inline SignVector parse_sequence(const std::string& text, int expected_length = -1) {
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) throw usage_error("empty sequence");
    bool plain = true;
    for (char ch : trimmed) plain &= ch == '+' || ch == '-';
    if (plain) {
        SignVector v = parse_signs(trimmed);
        if (expected_length >= 0 && v.size() != std::size_t(expected_length))
            throw usage_error("sequence has length " + std::to_string(v.size()) +
                              ", expected " + std::to_string(expected_length));
        return v;
    }
    return rl_decode(text, expected_length);
}

inline ojson sequence_json(const SignVector& v) {
    ojson j;
    j["signs"] = signs_to_string(v);
    if (!v.empty() && v.front() > 0) j["rle"] = rl_encode(v);
    return j;
}

inline ojson pair_json(const NGPair& p) {
    ojson j;
    j["length"] = p.phi1.size();
    j["phi1"] = sequence_json(p.phi1);
    j["phi2"] = sequence_json(p.phi2);
    return j;
}

inline ojson array_json(const BinaryArray& a, const std::vector<int>* z = nullptr) {
    ojson j;
    j["s"] = a.s;
    j["values"] = signs_to_string(a.values);
    if (z) j["z"] = *z;
    return j;
}

inline ojson cocycle_json(const Cocycle& c) {
    ojson j;
    j["group"] = c.group->label();
    std::vector<std::string> rows;
    rows.reserve(std::size_t(c.m.n()));
    for (int i = 0; i < c.m.n(); ++i) rows.push_back(c.m.row_string(i));
    j["rows"] = rows;
    return j;
}

// Rebuilds the group from its spec label; the matrix is not revalidated here.
inline Cocycle cocycle_from_json(const ojson& j) {
    auto g = build_group(j.at("group").get<std::string>());
    int n = g->order();
    const auto& rows = j.at("rows");
    if (int(rows.size()) != n) throw usage_error("row count does not match the group order");
    SignMatrix m(n);
    for (int i = 0; i < n; ++i) {
        SignVector row = parse_signs(rows.at(std::size_t(i)).get<std::string>());
        if (int(row.size()) != n) throw usage_error("row length does not match the group order");
        for (int k = 0; k < n; ++k) m.at(i, k) = row[std::size_t(k)];
    }
    return Cocycle{g, std::move(m)};
}

inline ojson hit_json(const SearchSpace& sp, const SearchHit& hit,
                      const std::string& representative_name,
                      const std::string* goba_rle = nullptr) {
    ojson j;
    j["group"] = sp.group->label();
    j["representative"] = representative_name;
    j["subset"] = hit.subset;
    j["row_sums"] = hit.row_sums;
    j["re"] = hit.re;
    if (goba_rle) j["goba"] = *goba_rle;
    return j;
}

inline ojson certificate_json(const DesignCertificate& cert) {
    ojson j;
    j["kind"] = design_kind_str(cert.kind);
    j["group"] = cert.ambient->label();
    j["forbidden"] = cert.forbidden;
    j["subset"] = cert.subset;
    j["v"] = cert.v;
    if (cert.kind == DesignKind::relative_difference_set ||
        cert.kind == DesignKind::relative_quasi_difference_set)
        j["m"] = cert.m;
    j["k"] = cert.k;
    j["lambda"] = cert.lambda;
    if (cert.kind == DesignKind::almost_difference_set) j["extra"] = cert.extra;
    if (cert.kind == DesignKind::relative_quasi_difference_set) {
        j["s_set"] = cert.s_set;
        j["extremal"] = cert.extremal;
    }
    j["verified"] = cert.verified;
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    ojson census = ojson::object();
    for (const auto& [value, times] : cert.census) census[std::to_string(value)] = times;
    j["census"] = census;
    // ambient groups without a spec-string label (central extensions, Z_2 x G
    // products) carry their multiplication table so the dump re-verifies standalone
    bool labeled = true;
    try {
        GroupSpec::parse(cert.ambient->label());
    } catch (const usage_error&) {
        labeled = false;
    }
    if (!labeled) {
        int n = cert.ambient->order();
        std::vector<int> flat(std::size_t(n) * std::size_t(n));
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                flat[std::size_t(a) * std::size_t(n) + std::size_t(b)] = cert.ambient->mul(a, b);
        j["table"] = flat;
    }
    return j;
}

// Certificate dumps come back unverified; callers rerun the census.
inline DesignCertificate design_from_json(const ojson& j) {
    DesignCertificate cert;
    cert.kind = design_kind_from_str(j.at("kind").get<std::string>());
    std::string label = j.at("group").get<std::string>();
    if (j.contains("table")) {
        auto flat = j.at("table").get<std::vector<int>>();
        std::size_t n = 1;
        while (n * n < flat.size()) ++n;
        if (n * n != flat.size() || n == 0 || n > std::size_t(Group::max_table_order))
            throw usage_error("group table is not square");
        std::vector<std::uint16_t> table(flat.size());
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (flat[i] < 0 || flat[i] >= int(n)) throw usage_error("group table entry out of range");
            table[i] = std::uint16_t(flat[i]);
        }
        std::vector<std::string> names(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
        cert.ambient = Group::from_table(std::move(label), std::move(table), std::move(names));
    } else {
        cert.ambient = build_group(label);
    }
    cert.forbidden = j.at("forbidden").get<std::vector<Elem>>();
    cert.subset = j.at("subset").get<std::vector<Elem>>();
    cert.v = j.at("v").get<long long>();
    cert.k = j.at("k").get<long long>();
    cert.lambda = j.at("lambda").get<long long>();
    if (j.contains("m")) cert.m = j.at("m").get<long long>();
    if (j.contains("extra")) cert.extra = j.at("extra").get<long long>();
    return cert;
}

inline std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}

inline std::string csv_table(const std::vector<std::string>& header,
                             const std::vector<std::vector<long long>>& rows) {
    std::string out = csv_line(header) + "\n";
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (long long v : row) cells.push_back(std::to_string(v));
        out += csv_line(cells) + "\n";
    }
    return out;
}

// One-line run descriptor echoed at the top of every command's output.
inline std::string config_line(const std::string& command,
                               const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string line = "# qoco " + command;
    for (const auto& [key, value] : kv) line += " " + key + "=" + value;
    return line;
}

}  // namespace qoco
