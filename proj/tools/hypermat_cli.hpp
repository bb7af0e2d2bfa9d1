#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypermat/hypermat.hpp"

namespace hypermat::cli {

enum ExitCode { ok = 0, usage = 1, data = 2, verification = 3 };

/// Raised when a command ran but its result failed a consistency check.
class verification_failure : public error {
public:
    using error::error;
};

inline std::string format_number(Int v) { return std::to_string(v.value()); }

/// Shortest round-trip decimal, always with a '.' separator.
inline std::string format_number(double v) { return nlohmann::json(v).dump(); }

inline IndexTuple to_tuple(const std::vector<std::size_t>& v) { return IndexTuple(v.begin(), v.end()); }

template <Scalar T>
Matrix<T> as_matrix(const Hypermatrix<T>& a, const char* what) {
    if (a.order() == 2) return Matrix<T>(a.shape().dims()[0], a.shape().dims()[1], a.flat());
    if (a.order() == 1) return Matrix<T>::column(a.flat());
    throw shape_error(std::string(what) + ": expected a matrix or vector, got order " + std::to_string(a.order()));
}

template <Scalar T>
std::vector<T> as_vector(const Hypermatrix<T>& a, const char* what) {
    if (a.order() == 1) return a.flat();
    if (a.order() == 2 && (a.shape().dims()[0] == 1 || a.shape().dims()[1] == 1)) return a.flat();
    throw shape_error(std::string(what) + ": expected a vector, got shape " + a.shape().to_string());
}

template <Scalar T>
Hypermatrix<T> matrix_to_hm(const Matrix<T>& m) {
    return Hypermatrix<T>(Shape{m.rows(), m.cols()}, m.flat());
}

/// Both operands on a common backend: integer only when both are.
template <typename F>
auto with_common_backend(const AnyHypermatrix& a, const AnyHypermatrix& b, F&& f) {
    if (std::holds_alternative<Hypermatrix<Int>>(a) && std::holds_alternative<Hypermatrix<Int>>(b))
        return f(std::get<Hypermatrix<Int>>(a), std::get<Hypermatrix<Int>>(b));
    auto promote = [](const AnyHypermatrix& x) {
        return std::visit([](const auto& h) { return to_float(h); }, x);
    };
    return f(promote(a), promote(b));
}

template <Scalar T>
void print_matrix_json(std::ostream& out, const MatrixExpression<T>& m) {
    nlohmann::ordered_json doc;
    doc["rows"] = m.rows;
    doc["cols"] = m.cols;
    doc["dims"] = m.dims.dims();
    nlohmann::ordered_json mat = nlohmann::ordered_json::array();
    for (index_t i = 1; i <= m.mat.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (index_t j = 1; j <= m.mat.cols(); ++j) {
            if constexpr (is_exact_v<T>) {
                row.push_back(m.mat.at(i, j).value());
            } else {
                row.push_back(m.mat.at(i, j));
            }
        }
        mat.push_back(std::move(row));
    }
    doc["matrix"] = std::move(mat);
    doc["scalar_kind"] = is_exact_v<T> ? "int" : "float";
    out << doc.dump() << "\n";
}

inline int print_appendix_report(const AppendixReport& report, bool verbose, std::ostream& out) {
    index_t counts[3] = {0, 0, 0};
    for (const TableReport& t : report.tables) {
        const AppendixEntry& e = *t.entry;
        ++counts[static_cast<int>(t.status)];
        out << to_string(t.status) << " d=" << e.d << " n=" << e.n << " #" << e.label << " (" << e.roman
            << ") sigma=" << Permutation(e.sigma).to_string();
        for (const auto& note : t.notes) out << "; " << note;
        out << "\n";
        if (!t.diff.empty() && (verbose || t.status == TableStatus::mismatch)) out << t.diff;
    }
    for (const auto& s : report.stale) out << "STALE " << s << "\n";
    out << "summary: " << counts[0] << " pass, " << counts[1] << " expected-mismatch, " << counts[2]
        << " mismatch, " << report.stale.size() << " stale\n";
    return report.ok() ? ExitCode::ok : ExitCode::verification;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Runs one command line (args excludes the program name). Returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dense hypermatrix algebra: permutation matrices, matrix expressions, STP and contraction"};
    app.require_subcommand(1);

    std::vector<std::size_t> dims, sigma;
    bool dense = false;
    auto* permmat = app.add_subcommand("permmat", "Print the sigma-permutation matrix in delta notation");
    permmat->add_option("--dims", dims, "Dimensions n1,...,nd")->required()->delimiter(',');
    permmat->add_option("--sigma", sigma, "Permutation image s1,...,sd")->required()->delimiter(',');
    permmat->add_flag("--dense", dense, "Print the dense 0/1 matrix instead");

    std::string in_path, out_path;
    auto* transpose_cmd = app.add_subcommand("transpose", "Write the sigma-transpose of a hypermatrix");
    transpose_cmd->add_option("--sigma", sigma, "Permutation image")->required()->delimiter(',');
    transpose_cmd->add_option("input", in_path, "Input .hm file")->required();
    transpose_cmd->add_option("output", out_path, "Output .hm file")->required();

    std::string rows_arg;
    auto* mexpr = app.add_subcommand("mexpr", "Print a matrix expression with its axis metadata as JSON");
    mexpr->add_option("--rows", rows_arg, "Row axes, comma separated; empty for the vector expression")
        ->required();
    mexpr->add_option("input", in_path, "Input .hm file")->required();

    std::string a_path, b_path, method = "brute";
    std::vector<std::size_t> a_axes, b_axes;
    auto* contract = app.add_subcommand("contract", "Contracted product; both methods are run and compared");
    contract->add_option("--a", a_path, "Left operand .hm")->required();
    contract->add_option("--b", b_path, "Right operand .hm")->required();
    contract->add_option("--a-axes", a_axes, "Contracted axes of A")->delimiter(',');
    contract->add_option("--b-axes", b_axes, "Contracted axes of B")->delimiter(',');
    contract->add_option("--method", method, "Method whose result is written")
        ->check(CLI::IsMember({"brute", "expr"}));
    contract->add_option("output", out_path, "Output .hm file")->required();

    std::string op;
    auto* stp_cmd = app.add_subcommand("stp", "Semi-tensor product of two .hm operands");
    stp_cmd->add_option("--op", op, "mm, mv or vv")->required()->check(CLI::IsMember({"mm", "mv", "vv"}));
    stp_cmd->add_option("A", a_path, "Left operand .hm")->required();
    stp_cmd->add_option("B", b_path, "Right operand .hm")->required();

    std::string r_path, side, ybe_method = "brute";
    auto* ybe = app.add_subcommand("ybe", "Yang-Baxter sides or residual for R in R^{N x N x N x N}");
    ybe->add_option("--r", r_path, "R .hm file")->required();
    ybe->add_option("--side", side, "Print this side instead of the residual")->check(CLI::IsMember({"lhs", "rhs"}));
    ybe->add_option("--method", ybe_method, "Evaluation method")->check(CLI::IsMember({"brute", "matrix"}));

    std::string errata_path;
    bool verbose = false;
    auto* verify = app.add_subcommand("verify-appendix", "Regenerate every embedded table and compare");
    verify->add_option("--errata", errata_path, "Errata registry to use instead of the built-in one");
    verify->add_flag("--verbose", verbose, "Show column diffs for expected mismatches too");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        if (*permmat) {
            const PermMatrixBuild b = build_perm_matrix_report(Shape(std::vector<index_t>(dims.begin(), dims.end())),
                                                               Permutation(std::vector<index_t>(sigma.begin(), sigma.end())));
            if (b.degenerate_axes) err << "warning: some dimension is 1\n";
            if (dense) {
                const Matrix<Int> m = densify(b.matrix);
                for (index_t i = 1; i <= m.rows(); ++i) {
                    for (index_t j = 1; j <= m.cols(); ++j) out << (j > 1 ? " " : "") << m.at(i, j);
                    out << "\n";
                }
            } else {
                out << print_delta(b.matrix) << "\n";
            }
        } else if (*transpose_cmd) {
            const Permutation p(std::vector<index_t>(sigma.begin(), sigma.end()));
            const AnyHypermatrix a = read_hm(in_path);
            std::visit([&](const auto& h) { write_hm(sigma_transpose(h, p), out_path); }, a);
        } else if (*mexpr) {
            IndexTuple rows;
            if (!rows_arg.empty()) {
                std::string token;
                for (char c : rows_arg + ",") {
                    if (c == ',') {
                        if (token.empty()) throw format_error("--rows: empty axis label");
                        try {
                            rows.push_back(std::stoul(token));
                        } catch (const std::exception&) {
                            throw format_error("--rows: bad axis label \"" + token + "\"");
                        }
                        token.clear();
                    } else {
                        token += c;
                    }
                }
            }
            const AnyHypermatrix a = read_hm(in_path);
            std::visit([&](const auto& h) { print_matrix_json(out, matrix_expression(h, rows)); }, a);
        } else if (*contract) {
            const ContractionSpec spec{to_tuple(a_axes), to_tuple(b_axes)};
            const AnyHypermatrix a = read_hm(a_path), b = read_hm(b_path);
            with_common_backend(a, b, [&](const auto& ha, const auto& hb) {
                const auto brute = contract_bruteforce(ha, hb, spec);
                const auto expr = contract_via_expression(ha, hb, spec);
                if (!approx_equal(brute, expr))
                    throw verification_failure("brute-force and expression contractions disagree");
                write_hm(method == "brute" ? brute : expr, out_path);
                return 0;
            });
        } else if (*stp_cmd) {
            const AnyHypermatrix a = read_hm(a_path), b = read_hm(b_path);
            with_common_backend(a, b, [&](const auto& ha, const auto& hb) {
                if (op == "vv") {
                    out << format_number(vv_stp(as_vector(ha, "A"), as_vector(hb, "B"))) << "\n";
                } else if (op == "mv") {
                    const auto v = mv_stp(as_matrix(ha, "A"), as_vector(hb, "B"));
                    using T = typename std::decay_t<decltype(v)>::value_type;
                    out << format_hm(Hypermatrix<T>(Shape{v.size()}, v));
                } else {
                    out << format_hm(matrix_to_hm(mm_stp(as_matrix(ha, "A"), as_matrix(hb, "B"))));
                }
                return 0;
            });
        } else if (*ybe) {
            const AnyHypermatrix r = read_hm(r_path);
            const YbeMethod m = ybe_method == "brute" ? YbeMethod::bruteforce : YbeMethod::matrix;
            if (!side.empty()) {
                const YbeSide s = side == "lhs" ? YbeSide::lhs : YbeSide::rhs;
                std::visit([&](const auto& h) { out << format_hm(ybe_sides(make_ybe(h), s, m)); }, r);
            } else {
                const auto inst = make_ybe(std::visit([](const auto& h) { return to_float(h); }, r));
                out << format_number(ybe_residual(inst, m)) << "\n";
            }
        } else if (*verify) {
            const std::vector<Erratum> registry =
                errata_path.empty() ? builtin_errata() : parse_errata(read_text_file(errata_path));
            return print_appendix_report(verify_appendix(registry), verbose, out);
        }
    } catch (const verification_failure& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::verification;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return ExitCode::data;
    }
    return ExitCode::ok;
}

}  // namespace hypermat::cli
