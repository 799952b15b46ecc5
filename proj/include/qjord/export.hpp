#pragma once

// Matrix and report serialization: JSON (schema below) and aligned tables.
// Matrices must be s-free (post-limit) before JSON export.
//
//   {"family": ..., "reps": [r1, r2], "route": ..., "rows": n, "cols": n,
//    "parity": [...], "entries": [[canonical scalar strings]]}

#include <nlohmann/json.hpp>

#include "verify.hpp"

namespace qjord {

struct ExportBeforeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const char* route_str(RRoute r) {
    switch (r) {
        case RRoute::contracted: return "contracted";
        case RRoute::closed_form: return "closed_form";
        case RRoute::universal: return "universal";
    }
    return "?";
}

inline nlohmann::json matrix_to_json(const RMatrixResult& r) {
    nlohmann::json j;
    j["family"] = r.family;
    j["reps"] = {r.rep1, r.rep2};
    j["route"] = route_str(r.route);
    j["rows"] = r.matrix.dim();
    j["cols"] = r.matrix.dim();
    j["parity"] = r.matrix.parity();
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < r.matrix.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < r.matrix.dim(); ++jj) {
            const Scalar& s = r.matrix.at(i, jj);
            if (!s.is_s_free())
                throw ExportBeforeLimit("matrix entry still depends on s; take the limit first");
            row.push_back(s.to_string());
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

inline std::string export_matrix(const RMatrixResult& r, const std::string& format) {
    if (format == "json") return matrix_to_json(r).dump(1) + "\n";
    // aligned table
    const int n = r.matrix.dim();
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    std::vector<size_t> width(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cells[i][j] = r.matrix.at(i, j).to_string();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            os << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
            os << (j + 1 == n ? "\n" : "  ");
        }
    }
    return os.str();
}

// a bare generator matrix export (same schema, synthetic metadata)
inline std::string export_generator(const GradedMatrix& m, const std::string& family,
                                    const std::string& label, const std::string& format) {
    RMatrixResult r{m, family, label, label, m.parity(), m.parity(), m.dim(), m.dim(),
                    RRoute::closed_form};
    return export_matrix(r, format);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : r.entries) {
        nlohmann::json je;
        je["identity"] = e.name;
        je["verdict"] = verdict_str(e.verdict);
        if (!e.residual.empty()) je["residual"] = e.residual;
        if (!e.variant_note.empty()) je["variant_note"] = e.variant_note;
        arr.push_back(std::move(je));
    }
    j["entries"] = std::move(arr);
    return j;
}

inline std::string render_report(const VerificationReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r).dump(1) + "\n";
    std::ostringstream os;
    os << "suite: " << r.suite << "\n";
    size_t w = 8;
    for (const auto& e : r.entries) w = std::max(w, e.name.size());
    for (const auto& e : r.entries) {
        os << "  " << e.name << std::string(w - e.name.size() + 2, ' ')
           << verdict_str(e.verdict);
        if (!e.variant_note.empty()) os << "  [variant: " << e.variant_note << "]";
        if (!e.residual.empty()) os << "  residual: " << e.residual;
        os << "\n";
    }
    os << "  => " << (r.all_hold() ? "PASS" : "FAIL") << " (" << r.entries.size()
       << " identities, " << r.count(Verdict::holds_with_variant) << " variant)\n";
    return os.str();
}

}  // namespace qjord
