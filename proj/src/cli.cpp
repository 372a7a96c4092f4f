#include "c1p/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "c1p/bounds.hpp"
#include "c1p/certify.hpp"
#include "c1p/graph.hpp"
#include "c1p/matrix.hpp"
#include "c1p/tucker.hpp"

namespace c1p::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

BinaryMatrix read_matrix(const std::string& path) {
  try {
    return parse_matrix(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string join_one_based(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (t > 0) out += ' ';
    out += std::to_string(idx[t] + 1);
  }
  return out;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_check(const Streams& io, const std::string& file, std::size_t cap) {
  const BinaryMatrix m = read_matrix(file);
  if (auto cycle = shortest_odd_cycle(build_incompatibility_graph(m))) {
    io.out << "not C1P\n"
           << "odd cycle of length " << cycle->vertices.size() << "\n"
           << serialize_certificate(*cycle);
    return kNotC1P;
  }
  if (m.cols() > cap) {
    io.out << "C1P (bipartite); witness omitted, n > cap\n";
    return kSuccess;
  }
  auto order = brute_force_c1p(m, cap);
  if (!order) {
    throw InternalConsistencyError("incompatibility graph is bipartite but no ordering exists");
  }
  io.out << "C1P\npermutation: " << join_one_based(order->order) << "\n";
  return kSuccess;
}

int cmd_certify(const Streams& io, const std::string& file, const std::string& out_path,
                const std::string& kind) {
  const BinaryMatrix m = read_matrix(file);
  std::optional<Certificate> cert;
  if (kind == "odd-cycle") {
    if (auto c = shortest_odd_cycle(build_incompatibility_graph(m))) cert = *c;
  } else {
    if (auto p = shortest_forcing_path(build_forcing_graph(m))) cert = *p;
  }
  if (!cert) {
    io.out << "C1P; no certificate\n";
    return kSuccess;
  }
  const std::string text = serialize_certificate(*cert);
  if (out_path.empty()) {
    io.out << text;
  } else {
    write_file(out_path, text);
  }
  return kSuccess;
}

int cmd_tucker(const Streams& io, const std::string& file) {
  const BinaryMatrix m = read_matrix(file);
  if (has_c1p(m)) {
    io.err << "error: matrix is C1P; it contains no Tucker pattern\n";
    return kUsageError;
  }
  io.out << format_match(find_tucker(m));
  return kSuccess;
}

int cmd_gen(const Streams& io, const std::string& kind_text, const std::optional<std::size_t>& k) {
  const auto family = parse_family(kind_text);
  if (!family) {
    io.err << "error: unknown Tucker kind '" << kind_text << "' (expected I, II, III, IV or V)\n";
    return kUsageError;
  }
  TuckerKind kind{*family, 0};
  if (kind.has_parameter()) {
    if (!k) {
      io.err << "error: kind " << kind_text << " needs a size parameter K\n";
      return kUsageError;
    }
    kind.k = *k;
  } else if (k) {
    io.err << "error: kind " << kind_text << " has a fixed size and takes no K\n";
    return kUsageError;
  }
  io.out << serialize_matrix(tucker_pattern(kind));
  return kSuccess;
}

int cmd_verify(const Streams& io, const std::string& file, const std::string& cert_path) {
  const BinaryMatrix m = read_matrix(file);
  Certificate cert;
  try {
    cert = parse_certificate(read_file(cert_path), m.cols());
  } catch (const ParseError& e) {
    throw ParseError(cert_path + ": " + e.what());
  }
  const Verdict verdict = verify_certificate(m, cert);
  if (!verdict) {
    io.out << "INVALID: " << verdict.reason << "\n";
    return kVerificationFailed;
  }
  if (const auto* cycle = std::get_if<OddCycleCertificate>(&cert)) {
    io.out << "VALID: odd cycle of length " << cycle->vertices.size() << "\n";
  } else {
    io.out << "VALID: forcing path with " << std::get<ForcingPathCertificate>(cert).vertices.size()
           << " vertices\n";
  }
  return kSuccess;
}

int cmd_bounds(const Streams& io, std::size_t k_min, std::size_t k_max, bool csv,
               std::size_t cap) {
  const BoundReport report = reproduce_table(k_min, k_max, cap);
  io.out << (csv ? format_csv(report) : format_table(report));
  return report.pass ? kSuccess : kVerificationFailed;
}

int cmd_stress(const Streams& io, std::size_t rows, std::size_t cols, double density,
               std::size_t trials, std::uint64_t seed) {
  const StressReport report = stress_bound(trials, rows, cols, density, seed);
  io.out << format_stress(report);
  return report.pass() ? kSuccess : kVerificationFailed;
}

int cmd_export(const Streams& io, const std::string& file, const std::string& graph,
               const std::string& dot_path) {
  const BinaryMatrix m = read_matrix(file);
  const std::string text = graph == "incompat" ? to_dot(build_incompatibility_graph(m))
                                               : to_dot(build_forcing_graph(m));
  if (dot_path == "-") {
    io.out << text;
  } else {
    write_file(dot_path, text);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const Streams io{out, err};
  CLI::App app{"Consecutive-ones certificates: incompatibility graphs, odd cycles, Tucker patterns",
               "c1p"};
  app.require_subcommand(1);

  std::function<int()> action;

  std::string file;
  std::size_t oracle_cap = kDefaultOracleCap;
  auto* check = app.add_subcommand("check", "Decide C1P; print a witness ordering or odd cycle");
  check->add_option("FILE", file, "Matrix file")->required();
  check->add_option("--oracle-cap", oracle_cap, "Largest n for the witness permutation search")
      ->capture_default_str();
  check->callback([&] { action = [&] { return cmd_check(io, file, oracle_cap); }; });

  std::string cert_out;
  std::string cert_kind = "odd-cycle";
  auto* certify = app.add_subcommand("certify", "Write a shortest non-C1P certificate");
  certify->add_option("FILE", file, "Matrix file")->required();
  certify->add_option("--out", cert_out, "Certificate output path (default: stdout)");
  certify->add_option("--kind", cert_kind, "Certificate kind")
      ->check(CLI::IsMember({"odd-cycle", "forcing-path"}))
      ->capture_default_str();
  certify->callback([&] { action = [&] { return cmd_certify(io, file, cert_out, cert_kind); }; });

  auto* tucker = app.add_subcommand("tucker", "Locate a Tucker pattern in a non-C1P matrix");
  tucker->add_option("FILE", file, "Matrix file")->required();
  tucker->callback([&] { action = [&] { return cmd_tucker(io, file); }; });

  std::string gen_kind;
  std::optional<std::size_t> gen_k;
  auto* gen = app.add_subcommand("gen", "Print a canonical Tucker pattern");
  gen->add_option("KIND", gen_kind, "I, II, III, IV or V")->required();
  gen->add_option("K", gen_k, "Size parameter for I, II and III");
  gen->callback([&] { action = [&] { return cmd_gen(io, gen_kind, gen_k); }; });

  std::string cert_file;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a matrix");
  verify->add_option("FILE", file, "Matrix file")->required();
  verify->add_option("CERT", cert_file, "Certificate file")->required();
  verify->callback([&] { action = [&] { return cmd_verify(io, file, cert_file); }; });

  std::size_t k_min = 0;
  std::size_t k_max = 0;
  std::size_t table_cap = kDefaultTableCap;
  bool csv = false;
  auto* bounds = app.add_subcommand("bounds", "Tabulate shortest odd cycles of Tucker patterns");
  bounds->add_option("--kmin", k_min, "Smallest k")->required();
  bounds->add_option("--kmax", k_max, "Largest k")->required();
  bounds->add_option("--cap", table_cap, "Largest permitted k")->capture_default_str();
  bounds->add_flag("--csv", csv, "CSV output");
  bounds->callback([&] { action = [&] { return cmd_bounds(io, k_min, k_max, csv, table_cap); }; });

  std::size_t rows = 0;
  std::size_t cols = 0;
  double density = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  auto* stress = app.add_subcommand("stress", "Check the odd-cycle bound on random matrices");
  stress->add_option("--rows", rows, "Rows per matrix")->required()->check(CLI::PositiveNumber);
  stress->add_option("--cols", cols, "Columns per matrix")->required();
  stress->add_option("--density", density, "Probability of a 1")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  stress->add_option("--trials", trials, "Number of matrices")->required();
  stress->add_option("--seed", seed, "Seed of trial 0; trial t uses seed + t")->required();
  stress->callback(
      [&] { action = [&] { return cmd_stress(io, rows, cols, density, trials, seed); }; });

  std::string graph_kind;
  std::string dot_path;
  auto* export_graph = app.add_subcommand("export-graph", "Write a graph in Graphviz DOT format");
  export_graph->add_option("FILE", file, "Matrix file")->required();
  export_graph->add_option("--graph", graph_kind, "incompat or forcing")
      ->required()
      ->check(CLI::IsMember({"incompat", "forcing"}));
  export_graph->add_option("--dot", dot_path, "Output path, or - for stdout")->required();
  export_graph->callback(
      [&] { action = [&] { return cmd_export(io, file, graph_kind, dot_path); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action();
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace c1p::cli
