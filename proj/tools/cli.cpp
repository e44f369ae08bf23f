#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sft/certificates.hpp"
#include "sft/cylinder.hpp"
#include "sft/error.hpp"
#include "sft/graph.hpp"
#include "sft/transfer.hpp"
#include "sft/verdict.hpp"
#include "sft/word.hpp"

namespace sft::cli {

  namespace {
    constexpr int input_error = 2;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    AdjacencyMatrix read_matrix(std::string const& path) {
      return parse_matrix(read_file(path));
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }
  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Exact transfer operators and simplicity certificates for "
                 "subshifts of finite type"};
    app.require_subcommand(1);

    std::string matrix_path, out_path, report_path;
    std::string weight_path, weight2_path, function_path;
    std::string w_text, z_text;
    std::size_t depth = default_depth_budget;
    std::size_t i_exp = 0, j_exp = 0, k = 0;
    bool        periodic = false;

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Decide the simplicity dichotomy and emit a JSON report");
    analyze_cmd->add_option("matrix", matrix_path, "matrix file")->required();
    analyze_cmd->add_option("--depth", depth, "certificate depth budget (>= 2)");
    analyze_cmd->add_option("--out", out_path, "write the report here");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Re-check every certificate in a JSON report");
    verify_cmd->add_option("report", report_path, "report file")->required();

    auto* transfer_cmd = app.add_subcommand("transfer", "Transfer operators");
    transfer_cmd->require_subcommand(1);
    auto* apply_cmd = transfer_cmd->add_subcommand("apply", "Print L_rho(f)");
    apply_cmd->add_option("matrix", matrix_path)->required();
    apply_cmd->add_option("weight", weight_path)->required();
    apply_cmd->add_option("function", function_path)->required();
    auto* recover_cmd = transfer_cmd->add_subcommand(
        "recover", "Rebuild rho from the operator L_rho, queried as a black box");
    recover_cmd->add_option("matrix", matrix_path)->required();
    recover_cmd->add_option("weight", weight_path)->required();
    auto* equiv_cmd = transfer_cmd->add_subcommand(
        "equiv", "Decide whether rho = r rho' for some nowhere-zero r");
    equiv_cmd->add_option("matrix", matrix_path)->required();
    equiv_cmd->add_option("weight", weight_path)->required();
    equiv_cmd->add_option("weight2", weight2_path)->required();

    auto* witness_cmd = app.add_subcommand("witness", "Single certificates");
    witness_cmd->require_subcommand(1);
    auto* invariant_cmd = witness_cmd->add_subcommand(
        "invariant", "Nontrivial invariant open set of the two-sided shift");
    invariant_cmd->add_option("matrix", matrix_path)->required();
    auto* minimal_cmd = witness_cmd->add_subcommand(
        "minimal", "A power of the shift carrying [w] onto [z]");
    minimal_cmd->add_option("matrix", matrix_path)->required();
    minimal_cmd->add_option("w", w_text)->required();
    minimal_cmd->add_option("z", z_text)->required();
    auto* freeness_cmd = witness_cmd->add_subcommand(
        "freeness", "Per-cylinder table for sigma^i != sigma^j");
    freeness_cmd->add_option("matrix", matrix_path)->required();
    freeness_cmd->add_option("i", i_exp)->required();
    freeness_cmd->add_option("j", j_exp)->required();

    auto* words_cmd
        = app.add_subcommand("words", "List admissible words of length k");
    words_cmd->add_option("matrix", matrix_path)->required();
    words_cmd->add_option("k", k)->required();
    words_cmd->add_flag("--periodic", periodic,
                        "only words w with w w w ... admissible");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? 0 : input_error;
    }

    try {
      if (*analyze_cmd) {
        auto const v      = analyze(read_matrix(matrix_path), depth);
        auto const report = render_report(v);
        if (out_path.empty()) {
          out << report;
        } else {
          std::ofstream file(out_path, std::ios::binary);
          if (!(file << report)) {
            throw Error(ErrorKind::MalformedInput,
                        "cannot write '" + out_path + "'");
          }
          out << "conclusion: " << to_string(v.conclusion) << "\n";
        }
        return 0;
      }
      if (*verify_cmd) {
        auto const v        = parse_report(read_file(report_path));
        auto const problems = audit(v);
        for (auto const& p : problems) {
          out << "FAIL " << p << "\n";
        }
        if (!problems.empty()) {
          return 1;
        }
        out << "ok: conclusion " << to_string(v.conclusion) << " re-verified\n";
        return 0;
      }
      if (*apply_cmd) {
        auto const A   = read_matrix(matrix_path);
        auto const rho = parse_weight(A, read_file(weight_path));
        auto const f   = parse_function(A, read_file(function_path));
        out << format_function(transfer_apply(rho, f));
        return 0;
      }
      if (*recover_cmd) {
        auto const A   = read_matrix(matrix_path);
        auto const rho = parse_weight(A, read_file(weight_path));
        AbstractTransferOp L
            = [&rho](CylinderFunction const& f) { return transfer_apply(rho, f); };
        out << format_weight(recover_weight(A, L, rho.domain()));
        return 0;
      }
      if (*equiv_cmd) {
        auto const A      = read_matrix(matrix_path);
        auto const result = weights_equivalent(
            parse_weight(A, read_file(weight_path)),
            parse_weight(A, read_file(weight2_path)));
        out << "equivalent: " << (result.equivalent ? "true" : "false") << "\n";
        if (result.ratio) {
          out << format_function(*result.ratio);
        }
        return 0;
      }
      if (*invariant_cmd) {
        auto const A    = read_matrix(matrix_path);
        auto const cert = find_nontrivial_invariant(A);
        out << "r: " << format_word(cert.r) << "\n"
            << "member: " << format_sequence(cert.member) << "\n"
            << "non_member: " << format_sequence(cert.non_member) << "\n"
            << "verified: " << yes_no(verify(A, cert)) << "\n";
        return 0;
      }
      if (*minimal_cmd) {
        auto const A = read_matrix(matrix_path);
        auto const m
            = minimality_witness(A, parse_word(w_text), parse_word(z_text));
        out << "s_prefix: " << format_word(m.s_prefix) << "\n"
            << "t: " << m.t << "\n"
            << "verified: " << yes_no(verify(A, m)) << "\n";
        return 0;
      }
      if (*freeness_cmd) {
        auto const A    = read_matrix(matrix_path);
        auto const cert = freeness_certificate(A, i_exp, j_exp);
        out << "i: " << cert.i << " j: " << cert.j << "\n";
        for (auto const& e : cert.entries) {
          out << format_word(e.word) << "  forced: "
              << (e.forced_point ? format_sequence(*e.forced_point) : "none")
              << "  witness: " << format_sequence(e.witness)
              << "  differs_at: " << e.difference_at << "\n";
        }
        out << "verified: " << yes_no(verify(A, cert)) << "\n";
        return 0;
      }
      if (*words_cmd) {
        auto const A = read_matrix(matrix_path);
        for (auto const& w :
             periodic ? periodic_points(A, k) : enumerate_words(A, k)) {
          out << format_word(w) << "\n";
        }
        return 0;
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return input_error;
    }
    return input_error;
  }

}  // namespace sft::cli
