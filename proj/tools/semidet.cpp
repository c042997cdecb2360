// semidet: command line front end.
//
//   semidet analyze FILE            JSON classification report
//   semidet det FILE [--contracted] semigroup determinant
//   semidet factor FILE             block factorisation of the determinant
//   semidet verify FILE             property suite with witnesses
//   semidet scan --order N [--up-to-iso] [--out PATH]
//
// Exit status: 0 on success, 1 when a checked property fails, 2 on bad input.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "semidet/factorization.hpp"
#include "semidet/io.hpp"
#include "semidet/scan.hpp"
#include "semidet/verify.hpp"

namespace {

  constexpr int exit_ok        = 0;
  constexpr int exit_violation = 1;
  constexpr int exit_input     = 2;

  std::string join(std::vector<std::string> const& xs) {
    std::string out;
    for (auto const& x : xs) {
      out += (out.empty() ? "" : " ") + x;
    }
    return out;
  }

  int cmd_analyze(std::string const& file, std::size_t max_dim) {
    auto S = semidet::load_semigroup(file);
    std::cout << semidet::emit_report(semidet::classify(S, file, max_dim), 2)
              << "\n";
    return exit_ok;
  }

  int cmd_det(std::string const& file, bool contracted, std::size_t max_dim) {
    auto S = semidet::load_semigroup(file);
    auto p = contracted ? semidet::theta_contracted(S, max_dim)
                        : semidet::theta(S, max_dim);
    std::cout << semidet::render(p, S.names()) << "\n";
    return exit_ok;
  }

  int cmd_factor(std::string const& file, std::size_t max_dim) {
    auto S = semidet::load_semigroup(file);
    auto F = semidet::factorize(S, max_dim);
    auto R = semidet::report_factorization(S, F);
    auto const& names = S.names();
    std::cout << "semigroup: " << file << "\n";
    std::cout << "contracted: " << (F.contracted ? "true" : "false") << "\n";
    std::cout << "determinant: " << semidet::render(F.reference(), names) << "\n";
    std::cout << "blocks: " << R.blocks.size() << "\n";
    for (auto const& b : R.blocks) {
      std::cout << "  " << b.idempotent << ": rows " << join(b.rows)
                << " | cols " << join(b.cols) << "\n";
      std::cout << "    det " << b.det << "\n";
      std::cout << "    substituted " << b.det_substituted << "\n";
    }
    std::cout << "eta iterations: " << F.eta_iterations << "\n";
    std::cout << "product: " << R.product << "\n";
    std::cout << "sign: " << R.sign << "\n";
    std::cout << "verified: " << (R.verified ? "true" : "false") << "\n";
    return R.verified ? exit_ok : exit_violation;
  }

  int cmd_verify(std::string const& file) {
    auto S   = semidet::load_semigroup(file);
    auto rep = semidet::verify_semigroup(S, file);
    std::cout << semidet::format_verify(rep);
    return rep.ok() ? exit_ok : exit_violation;
  }

  int cmd_scan(semidet::ScanTask const& task) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!task.output.empty()) {
      file.open(task.output);
      if (!file) {
        std::cerr << "semidet: cannot write '" << task.output << "'\n";
        return exit_input;
      }
      out = &file;
    }
    auto sum = semidet::scan(task, [&](std::string const& line) {
      *out << line << "\n";
    });
    out->flush();
    std::cerr << "order " << task.order << ": " << sum.tables << " tables, "
              << sum.emitted << " emitted, " << sum.singleton_rich
              << " singleton-rich, " << sum.ll_transitive << " transitive, "
              << sum.smooth << " smooth, " << sum.imposed
              << " imposed condition, " << sum.verified << " verified, "
              << sum.claim_failures << " failures\n";
    return sum.claim_failures == 0 ? exit_ok : exit_violation;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup determinants and their factorisation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t max_dim = semidet::default_max_dim;
  app.add_option("--max-dim", max_dim, "Largest matrix dimension for determinants")
      ->check(CLI::PositiveNumber);

  std::string file;
  bool        contracted = false;

  auto* analyze = app.add_subcommand("analyze", "Classify a semigroup (JSON)");
  analyze->add_option("file", file, "Semigroup table")->required();

  auto* det = app.add_subcommand("det", "Print the semigroup determinant");
  det->add_option("file", file, "Semigroup table")->required();
  det->add_flag("--contracted", contracted, "Drop the zero row, column and variable");

  auto* factor = app.add_subcommand("factor", "Factorise the determinant");
  factor->add_option("file", file, "Semigroup table")->required();

  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("file", file, "Semigroup table")->required();

  semidet::ScanTask task;
  bool              iso_only = false;
  auto*             scan = app.add_subcommand("scan", "Enumerate semigroups of a given order");
  scan->add_option("--order", task.order, "Order")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--up-to-iso", task.up_to_iso,
                 "One table per isomorphism and anti-isomorphism class");
  scan->add_flag("--iso-only", iso_only,
                 "With --up-to-iso, do not identify anti-isomorphic tables");
  scan->add_option("--filter", task.filters,
                   "Only emit reports with this flag set (repeatable)");
  scan->add_option("--out", task.output, "Output file (JSON lines)");
  scan->add_option("--max-order", task.max_order, "Largest order accepted");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*analyze) {
      return cmd_analyze(file, max_dim);
    }
    if (*det) {
      return cmd_det(file, contracted, max_dim);
    }
    if (*factor) {
      return cmd_factor(file, max_dim);
    }
    if (*verify) {
      return cmd_verify(file);
    }
    task.anti    = !iso_only;
    task.max_dim = max_dim;
    return cmd_scan(task);
  } catch (semidet::Error const& e) {
    std::cerr << "semidet: " << e.what() << "\n";
    return exit_input;
  }
}
