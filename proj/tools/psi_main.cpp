// Command-line front end: construct plane-based colorings, verify
// certificates, evaluate the analytic bounds, and run the exact small-n
// search. Exit codes: 0 pass, 1 verification failure, 2 usage/parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "psi/bounds.hpp"
#include "psi/certificate.hpp"
#include "psi/constructions.hpp"
#include "psi/plane.hpp"
#include "psi/search.hpp"
#include "psi/verifier.hpp"

namespace {

std::string histogram_text(const std::vector<long long>& sizes) {
  std::map<long long, int> hist;
  for (size_t c = 1; c < sizes.size(); ++c) ++hist[sizes[c]];
  std::ostringstream os;
  bool first = true;
  for (const auto& [size, count] : hist) {
    if (!first) os << ", ";
    os << count << " x " << size;
    first = false;
  }
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw psi::Error("cannot write " + path);
  out << text;
}

int run_construct(const std::string& kind, int q, int n, const std::string& out_path) {
  psi::EdgeColoring coloring;
  psi::ColorPartition partition;
  bool has_partition = false;
  bool connected_expected = false;

  if (kind == "theorem3") {
    psi::Construction built = psi::theorem3_coloring(q);
    coloring = std::move(built.coloring);
    partition = std::move(built.partition);
    has_partition = true;
    connected_expected = true;
  } else if (kind == "theorem5") {
    psi::Construction built = psi::theorem5_coloring(q);
    coloring = std::move(built.coloring);
    partition = std::move(built.partition);
    has_partition = true;
  } else if (kind == "best-connected") {
    coloring = psi::connected_coloring_best(n);
    connected_expected = true;
  } else {
    throw CLI::ValidationError("unknown construction kind: " + kind);
  }

  psi::VerifyReport report = psi::verify(coloring);
  std::cout << "construction " << kind << (coloring.q ? " q=" : "")
            << (coloring.q ? std::to_string(coloring.q) : "") << ": n=" << coloring.n
            << " k=" << coloring.k << "\n";
  std::cout << "class sizes: " << histogram_text(report.sizes) << "\n";
  std::cout << "complete: " << (report.completeness.complete ? "yes" : "NO")
            << "  connected: " << (report.connectivity.connected ? "yes" : "NO")
            << "\n";
  if (!report.completeness.complete ||
      (connected_expected && !report.connectivity.connected)) {
    std::cerr << "error: construction failed verification\n";
    return 1;
  }

  psi::Certificate cert =
      psi::Certificate::from_coloring(coloring, has_partition ? &partition : nullptr);
  cert.save(out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int run_verify(const std::string& path, bool want_connected, bool as_json) {
  psi::Certificate cert = psi::Certificate::load(path);
  psi::EdgeColoring coloring = cert.to_coloring();

  // Rebuild the plane when the certificate carries a palette partition, so
  // the per-line ownership premise can be rechecked.
  psi::LineRepresentation rep;
  bool have_rep = false;
  if (!cert.palette_partition.empty() && cert.q >= 2 &&
      cert.q * cert.q + cert.q + 1 == cert.n) {
    rep = psi::realize(psi::build_plane(psi::make_field(cert.q)));
    have_rep = true;
  }
  psi::ColorPartition partition{cert.palette_partition};

  psi::VerifyReport report;
  try {
    report = psi::verify(coloring, have_rep ? &rep : nullptr,
                         have_rep ? &partition : nullptr, true);
  } catch (const psi::PartialColoringError& err) {
    std::cerr << "verification failed: " << err.what() << "\n";
    return 1;
  }

  bool pass = report.completeness.complete &&
              (!want_connected || report.connectivity.connected);
  if (as_json) {
    std::ostringstream os;
    os << "{\n  \"n\": " << coloring.n << ",\n  \"k\": " << coloring.k << ",\n";
    os << "  \"complete\": " << (report.completeness.complete ? "true" : "false");
    if (!report.completeness.complete) {
      os << ",\n  \"first_unmet_pair\": [" << report.completeness.witness.a << ", "
         << report.completeness.witness.b << "]";
    }
    os << ",\n  \"connected\": " << (report.connectivity.connected ? "true" : "false");
    if (!report.connectivity.connected) {
      os << ",\n  \"first_disconnected_class\": " << report.connectivity.witness_class;
    }
    if (report.lemma2_checked) {
      os << ",\n  \"lemma2_premise\": " << (report.lemma2.holds ? "true" : "false");
    }
    os << ",\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
    std::cout << os.str();
  } else {
    std::cout << "certificate: " << cert.construction << " n=" << cert.n
              << " q=" << cert.q << " k=" << cert.k << "\n";
    std::cout << "complete: " << (report.completeness.complete ? "yes" : "NO");
    if (!report.completeness.complete) {
      std::cout << "  (colors " << report.completeness.witness.a << " and "
                << report.completeness.witness.b << " never meet)";
    }
    std::cout << "\n";
    std::cout << "connected: " << (report.connectivity.connected ? "yes" : "NO");
    if (!report.connectivity.connected) {
      std::cout << "  (class " << report.connectivity.witness_class
                << " is disconnected)";
    }
    std::cout << "\n";
    if (report.lemma2_checked) {
      std::cout << "per-line palette ownership: "
                << (report.lemma2.holds ? "holds" : "FAILS");
      if (!report.lemma2.holds) {
        std::cout << " (line " << report.lemma2.line << ", vertex "
                  << report.lemma2.vertex << ", color " << report.lemma2.color << ")";
      }
      std::cout << "\n";
      if (!report.internally_consistent) {
        std::cerr << "internal error: ownership premise held but completeness failed\n";
        return 1;
      }
    }
    std::cout << "class sizes: " << histogram_text(report.sizes) << "\n";
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int run_bounds(long long n_single, const std::string& range, bool csv) {
  long long lo = n_single, hi = n_single;
  if (!range.empty()) {
    auto dots = range.find("..");
    if (dots == std::string::npos) {
      throw CLI::ValidationError("range must look like A..B");
    }
    lo = std::stoll(range.substr(0, dots));
    hi = std::stoll(range.substr(dots + 2));
  }
  if (lo < 2 || hi < lo) throw CLI::ValidationError("need 2 <= A <= B");

  if (csv) {
    std::cout << "n,theorem1_bound,x_star,x0,theorem2_value,best_q,best_lower\n";
  } else {
    std::printf("%8s %14s %7s %12s %15s %7s %11s\n", "n", "theorem1_bound", "x_star",
                "x0", "theorem2_value", "best_q", "best_lower");
  }
  for (long long n = lo; n <= hi; ++n) {
    psi::BoundReport r = psi::bound_report(n);
    if (csv) {
      std::cout << n << ',' << r.theorem1 << ',' << r.x_star << ',' << r.x0 << ','
                << r.theorem2 << ',' << r.best_lower.q << ',' << r.best_lower.value
                << "\n";
    } else {
      std::printf("%8lld %14lld %7lld %12.6f %15.6f %7d %11lld\n", n, r.theorem1,
                  r.x_star, r.x0, r.theorem2, r.best_lower.q, r.best_lower.value);
    }
  }
  if (!csv && lo < 8) {
    std::cout << "note: the upper bound is only proven for n >= 8; smaller rows are informational\n";
  }
  return 0;
}

int run_search(int n, const std::string& mode_name, double budget, int threads,
               bool no_symmetry, const std::string& witness_path) {
  psi::SearchConfig cfg;
  cfg.n = n;
  cfg.mode = mode_name == "connected" ? psi::SearchMode::connected
                                      : psi::SearchMode::pseudoachromatic;
  cfg.time_budget_seconds = budget;
  cfg.threads = threads;
  cfg.symmetry_breaking = !no_symmetry;

  psi::SearchResult result = psi::exact_index(cfg);
  std::cout << "n=" << result.n << " mode=" << psi::to_string(result.mode);
  if (result.exact) {
    std::cout << " value=" << result.value() << " status=exact";
  } else {
    std::cout << " bracket=[" << result.value_lower << "," << result.value_upper
              << "] status=timeout";
  }
  std::cout << " nodes=" << result.nodes << " seconds=" << result.seconds << "\n";

  if (!witness_path.empty()) {
    psi::Certificate cert = psi::Certificate::from_coloring(result.witness);
    cert.save(witness_path);
    std::cout << "wrote witness " << witness_path << "\n";
  }
  return 0;
}

int run_table(int max_n, double budget) {
  psi::TableComparison cmp = psi::verify_table_prefix(max_n, budget);
  std::printf("%4s %16s %16s %16s %16s %7s\n", "n", "connected", "connected_ref",
              "pseudo", "pseudo_ref", "match");
  for (const auto& row : cmp.rows) {
    auto cell = [](const psi::SearchResult& r) {
      if (r.exact) return std::to_string(r.value());
      return "[" + std::to_string(r.value_lower) + "," +
             std::to_string(r.value_upper) + "]";
    };
    std::printf("%4d %16s %16d %16s %16d %7s\n", row.n, cell(row.connected).c_str(),
                row.connected_ref, cell(row.pseudo).c_str(), row.pseudo_ref,
                row.match ? "yes" : "NO");
  }
  std::cout << (cmp.all_match ? "all rows match\n" : "MISMATCH against reference values\n");
  return cmp.all_match ? 0 : 1;
}

int run_export(const std::string& path, const std::string& format,
               const std::string& out_path) {
  psi::Certificate cert = psi::Certificate::load(path);
  if (format == "dot") {
    write_text(out_path, cert.to_dot());
  } else if (format == "csv") {
    write_text(out_path, cert.to_csv());
  } else {
    throw CLI::ValidationError("unknown format: " + format + " (use dot|csv)");
  }
  return 0;
}

int run_plane(int q, const std::string& out_path) {
  psi::ProjectivePlane plane = psi::build_plane(psi::make_field(q));
  std::ostringstream os;
  psi::dump_plane(plane, os);
  write_text(out_path, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complete edge colorings of complete graphs via projective planes"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand(
      "construct", "build a coloring and write its certificate");
  std::string kind;
  int q = 0, n = 0;
  std::string out_path = "certificate.json";
  construct->add_option("kind", kind, "theorem3 | theorem5 | best-connected")
      ->required();
  construct->add_option("--q", q, "plane order (theorem3, theorem5)");
  construct->add_option("--n", n, "host size (best-connected)");
  construct->add_option("--out", out_path, "output certificate path");

  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  std::string verify_path;
  bool want_connected = false, as_json = false;
  verify->add_option("path", verify_path, "certificate file")->required();
  verify->add_flag("--connected", want_connected, "also require connected classes");
  verify->add_flag("--json", as_json, "machine-readable report");

  auto* bounds = app.add_subcommand("bounds", "print the analytic bound table");
  long long bounds_n = 0;
  std::string bounds_range;
  bool bounds_csv = false;
  bounds->add_option("--n", bounds_n, "single n");
  bounds->add_option("--range", bounds_range, "inclusive range A..B");
  bounds->add_flag("--csv", bounds_csv, "CSV output");

  auto* search = app.add_subcommand("search", "exact index by branch and bound");
  int search_n = 0, search_threads = 1;
  std::string mode = "pseudoachromatic";
  double budget = 60.0;
  bool no_symmetry = false;
  std::string witness_path;
  search->add_option("--n", search_n, "complete graph order (2..7)")->required();
  search->add_option("--mode", mode, "pseudoachromatic | connected")
      ->check(CLI::IsMember({"pseudoachromatic", "connected"}));
  search->add_option("--budget", budget, "time budget in seconds");
  search->add_option("--threads", search_threads, "parallel subtree workers");
  search->add_flag("--no-symmetry", no_symmetry, "disable color symmetry breaking");
  search->add_option("--witness", witness_path, "write the witness certificate here");

  auto* table = app.add_subcommand("table", "compare search output against reference values");
  int max_n = 5;
  double table_budget = 60.0;
  table->add_option("--max-n", max_n, "last n to recompute (<= 7)");
  table->add_option("--budget", table_budget, "seconds per search run");

  auto* exportc = app.add_subcommand("export", "re-emit a certificate as DOT or CSV");
  std::string export_path, export_format = "dot", export_out;
  exportc->add_option("path", export_path, "certificate file")->required();
  exportc->add_option("--format", export_format, "dot | csv");
  exportc->add_option("--out", export_out, "output path (default stdout)");

  auto* plane = app.add_subcommand("plane", "dump plane incidence, one line per row");
  int plane_q = 2;
  std::string plane_out;
  plane->add_option("--q", plane_q, "plane order")->required();
  plane->add_option("--out", plane_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return run_construct(kind, q, n, out_path);
    if (verify->parsed()) return run_verify(verify_path, want_connected, as_json);
    if (bounds->parsed()) {
      if (bounds_n == 0 && bounds_range.empty()) {
        throw CLI::ValidationError("bounds needs --n or --range");
      }
      return run_bounds(bounds_n, bounds_range, bounds_csv);
    }
    if (search->parsed()) {
      return run_search(search_n, mode, budget, search_threads, no_symmetry,
                        witness_path);
    }
    if (table->parsed()) return run_table(max_n, table_budget);
    if (exportc->parsed()) return run_export(export_path, export_format, export_out);
    if (plane->parsed()) return run_plane(plane_q, plane_out);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const psi::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const psi::NotAPrimePower& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psi::UnsupportedOrder& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psi::TooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const psi::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
