#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "appendix_tables.hpp"
#include "error.hpp"
#include "hypermat/appendix_errata_data.hpp"
#include "permutation.hpp"
#include "stp.hpp"

namespace hypermat {

struct AppendixTable {
    LogicalMatrix matrix;
    Permutation sigma;
};

inline const AppendixEntry& appendix_entry(index_t d, index_t n, index_t label) {
    for (const auto& e : appendix_entries())
        if (e.d == d && e.n == n && e.label == label) return e;
    throw bounds_error("no published table for d=" + std::to_string(d) + " n=" + std::to_string(n) +
                       " label=" + std::to_string(label));
}

/// The table exactly as published, with its claimed σ. The row count is the true n^d.
inline AppendixTable appendix_table(index_t d, index_t n, index_t label) {
    const AppendixEntry& e = appendix_entry(d, n, label);
    return {LogicalMatrix(e.cols.size(), e.cols), Permutation(e.sigma)};
}

/// Checks ⋉ x_{σ(i)} = W ⋉ xᵢ for every tuple of standard basis vectors.
inline bool satisfies_defining_property(const Shape& dims, const Permutation& sigma, const LogicalMatrix& w) {
    const index_t d = dims.order();
    if (sigma.size() != d || w.cols() != dims.size() || w.rows() != dims.size()) return false;
    auto basis = [](index_t n, index_t i) {
        std::vector<Int> v(n, Int{0});
        v[i - 1] = Int{1};
        return v;
    };
    for (const MultiIndex& idx : index_range(dims)) {
        std::vector<std::vector<Int>> plain, permuted;
        for (index_t k = 0; k < d; ++k) {
            plain.push_back(basis(dims.dims()[k], idx[k]));
            const index_t s = sigma.image()[k] - 1;
            permuted.push_back(basis(dims.dims()[s], idx[s]));
        }
        if (hypermat::apply(w, kron_chain(plain)) != kron_chain(permuted)) return false;
    }
    return true;
}

enum class ErratumKind { inverse, duplicate, garbled, label };

struct Erratum {
    index_t d = 0;
    index_t n = 0;
    index_t label = 0;
    ErratumKind kind = ErratumKind::garbled;
    /// duplicate: label of the table that is repeated.
    index_t of = 0;
    /// label: which printed field is wrong ("w_subscript", "sigma_label" or "rows").
    std::string field;
    index_t printed = 0;
    std::string reason;
};

inline std::vector<Erratum> parse_errata(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(std::string("errata registry: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("errata") || !doc["errata"].is_array())
        throw format_error("errata registry: expected an object with an \"errata\" array");
    std::vector<Erratum> out;
    index_t pos = 0;
    for (const json& j : doc["errata"]) {
        const std::string where = "errata[" + std::to_string(pos++) + "]";
        try {
            Erratum e;
            e.d = j.at("d").get<index_t>();
            e.n = j.at("n").get<index_t>();
            e.label = j.at("label").get<index_t>();
            const std::string kind = j.at("kind").get<std::string>();
            if (kind == "inverse") {
                e.kind = ErratumKind::inverse;
            } else if (kind == "duplicate") {
                e.kind = ErratumKind::duplicate;
                e.of = j.at("of").get<index_t>();
            } else if (kind == "garbled") {
                e.kind = ErratumKind::garbled;
            } else if (kind == "label") {
                e.kind = ErratumKind::label;
                e.field = j.at("field").get<std::string>();
                if (e.field != "w_subscript" && e.field != "sigma_label" && e.field != "rows")
                    throw format_error(where + ".field: unknown value \"" + e.field + "\"");
                e.printed = j.at("printed").get<index_t>();
            } else {
                throw format_error(where + ".kind: unknown value \"" + kind + "\"");
            }
            e.reason = j.value("reason", "");
            out.push_back(std::move(e));
        } catch (const json::exception& ex) {
            throw format_error(where + ": " + ex.what());
        }
    }
    return out;
}

inline const std::vector<Erratum>& builtin_errata() {
    static const std::vector<Erratum> registry = parse_errata(detail::appendix_errata_json);
    return registry;
}

enum class TableStatus { pass, expected_mismatch, mismatch };

struct TableReport {
    const AppendixEntry* entry = nullptr;
    TableStatus status = TableStatus::pass;
    bool content_matches = false;
    bool defining_property_holds = false;
    /// Verified errata and unexplained discrepancies, one line each.
    std::vector<std::string> notes;
    /// Unified diff of published vs generated column indices; empty when they agree.
    std::string diff;
};

struct AppendixReport {
    std::vector<TableReport> tables;
    /// Registry entries whose claim does not hold or that name no table.
    std::vector<std::string> stale;

    [[nodiscard]] bool ok() const {
        return stale.empty() && std::none_of(tables.begin(), tables.end(), [](const TableReport& t) {
                   return t.status == TableStatus::mismatch;
               });
    }
};

/// Hunks of differing positions with two values of context.
inline std::string column_diff(const std::vector<index_t>& published, const std::vector<index_t>& generated) {
    std::ostringstream os;
    const index_t len = std::min(published.size(), generated.size());
    std::vector<index_t> diffs;
    for (index_t k = 0; k < len; ++k)
        if (published[k] != generated[k]) diffs.push_back(k);
    if (diffs.empty() && published.size() == generated.size()) return "";
    os << "--- published\n+++ generated\n";
    constexpr index_t ctx = 2;
    index_t h = 0;
    while (h < diffs.size()) {
        index_t last = h;
        while (last + 1 < diffs.size() && diffs[last + 1] - diffs[last] <= 2 * ctx + 1) ++last;
        const index_t lo = diffs[h] >= ctx ? diffs[h] - ctx : 0;
        const index_t hi = std::min(len, diffs[last] + ctx + 1);
        os << "@@ -" << lo + 1 << "," << hi - lo << " +" << lo + 1 << "," << hi - lo << " @@\n";
        for (index_t k = lo; k < hi; ++k) {
            if (published[k] == generated[k]) {
                os << " " << published[k] << "\n";
            } else {
                os << "-" << published[k] << "\n+" << generated[k] << "\n";
            }
        }
        h = last + 1;
    }
    if (published.size() != generated.size())
        os << "@@ length " << published.size() << " vs " << generated.size() << " @@\n";
    return os.str();
}

/// Regenerates every published table and reconciles the differences with the registry.
inline AppendixReport verify_appendix(const std::vector<Erratum>& registry) {
    AppendixReport report;
    std::vector<bool> used(registry.size(), false);

    for (const AppendixEntry& e : appendix_entries()) {
        TableReport tr;
        tr.entry = &e;
        const Shape dims(std::vector<index_t>(e.d, e.n));
        const Permutation sigma(e.sigma);
        const LogicalMatrix generated = build_perm_matrix(dims, sigma);
        tr.defining_property_holds = satisfies_defining_property(dims, sigma, generated);
        tr.content_matches = e.cols == generated.columns();
        if (!tr.content_matches) tr.diff = column_diff(e.cols, generated.columns());

        bool content_explained = tr.content_matches;
        bool w_ok = e.printed_w == e.n;
        bool sigma_ok = e.printed_sigma == e.label;
        bool rows_ok = e.printed_rows == dims.size();
        bool any_erratum = false;

        for (index_t r = 0; r < registry.size(); ++r) {
            const Erratum& er = registry[r];
            if (er.d != e.d || er.n != e.n || er.label != e.label) continue;
            used[r] = true;
            bool holds = false;
            std::string what;
            switch (er.kind) {
                case ErratumKind::inverse:
                    holds = !tr.content_matches && e.cols == build_perm_matrix(dims, perm_invert(sigma)).columns();
                    what = "inverse";
                    break;
                case ErratumKind::duplicate: {
                    holds = !tr.content_matches;
                    try {
                        holds = holds && appendix_entry(e.d, e.n, er.of).cols == e.cols;
                    } catch (const bounds_error&) {
                        holds = false;
                    }
                    what = "duplicate of #" + std::to_string(er.of);
                    break;
                }
                case ErratumKind::garbled: {
                    std::vector<index_t> sorted = e.cols;
                    std::sort(sorted.begin(), sorted.end());
                    bool is_perm = sorted.size() == dims.size();
                    for (index_t k = 0; is_perm && k < sorted.size(); ++k) is_perm = sorted[k] == k + 1;
                    holds = !tr.content_matches && !is_perm;
                    what = "garbled";
                    break;
                }
                case ErratumKind::label: {
                    index_t actual = 0, expected = 0;
                    bool* flag = nullptr;
                    if (er.field == "w_subscript") {
                        actual = e.printed_w, expected = e.n, flag = &w_ok;
                    } else if (er.field == "sigma_label") {
                        actual = e.printed_sigma, expected = e.label, flag = &sigma_ok;
                    } else {
                        actual = e.printed_rows, expected = dims.size(), flag = &rows_ok;
                    }
                    holds = actual == er.printed && actual != expected;
                    if (holds) *flag = true;
                    what = "label " + er.field + " printed " + std::to_string(actual) + ", should be " +
                           std::to_string(expected);
                    break;
                }
            }
            const std::string id = "d=" + std::to_string(e.d) + " n=" + std::to_string(e.n) + " #" +
                                   std::to_string(e.label) + ": " + what;
            if (holds) {
                any_erratum = true;
                if (er.kind != ErratumKind::label) content_explained = true;
                tr.notes.push_back(what + (er.reason.empty() ? "" : " (" + er.reason + ")"));
            } else {
                report.stale.push_back(id + " is registered but does not hold");
            }
        }

        bool bad = !tr.defining_property_holds;
        if (bad) tr.notes.push_back("generated matrix violates the defining property");
        if (!content_explained) {
            bad = true;
            tr.notes.push_back("published columns differ from the construction");
        }
        if (!w_ok || !sigma_ok || !rows_ok) {
            bad = true;
            tr.notes.push_back("unregistered label discrepancy");
        }
        tr.status = bad ? TableStatus::mismatch : any_erratum ? TableStatus::expected_mismatch : TableStatus::pass;
        report.tables.push_back(std::move(tr));
    }

    for (index_t r = 0; r < registry.size(); ++r)
        if (!used[r])
            report.stale.push_back("d=" + std::to_string(registry[r].d) + " n=" + std::to_string(registry[r].n) +
                                   " #" + std::to_string(registry[r].label) + " names no published table");
    return report;
}

inline const char* to_string(TableStatus s) {
    switch (s) {
        case TableStatus::pass: return "PASS";
        case TableStatus::expected_mismatch: return "EXPECTED-MISMATCH";
        case TableStatus::mismatch: return "MISMATCH";
    }
    return "?";
}

}  // namespace hypermat
