// Command-line surface for the generalized Tonnetz toolkit: classify a triad
// shape, survey a scale, export complexes, run the exhaustive verification
// sweep, and explore the desingularized tritone assemblies.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tonnetz/classifier.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/peck.hpp"
#include "tonnetz/report.hpp"
#include "tonnetz/serialize.hpp"
#include "tonnetz/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIo = 3;

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  out << text;
  if (!out) {
    std::cerr << "error: failed writing to '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_classify(const std::vector<int>& intervals, const std::string& format) {
  const tonnetz::TriadShape shape =
      tonnetz::normalize_shape(intervals[0], intervals[1], intervals[2]);
  const tonnetz::ClassificationRecord record = tonnetz::classify_closed_form(shape);
  if (format == "json") {
    std::cout << tonnetz::render_classification_json(record);
  } else {
    std::cout << tonnetz::render_classify_line(record) << "\n";
  }
  return kExitOk;
}

int run_enumerate(int scale, const std::string& format) {
  const std::vector<tonnetz::ReportRow> rows = tonnetz::enumerate_rows(scale);
  if (format == "json") {
    std::cout << tonnetz::render_rows_json(rows);
  } else if (format == "csv") {
    std::cout << tonnetz::render_csv(rows);
  } else {
    std::cout << tonnetz::render_table(rows);
  }
  return kExitOk;
}

int run_export(const std::vector<int>& intervals, const std::string& format,
               const std::string& out_path) {
  const tonnetz::TriadShape shape =
      tonnetz::normalize_shape(intervals[0], intervals[1], intervals[2]);
  const tonnetz::TonnetzComplex complex = tonnetz::build_complex(shape);
  const std::string text =
      format == "dot" ? tonnetz::face_graph_dot(complex) : tonnetz::complex_to_json(complex);
  return write_output(text, out_path);
}

int run_verify(int max_scale, bool serial) {
  const tonnetz::SweepReport report = tonnetz::run_verification_sweep(max_scale, !serial);
  std::cout << "N=3.." << max_scale << ": " << report.shapes_checked << " shapes checked, "
            << report.failures.size() << " mismatches\n";
  for (const tonnetz::SweepFailure& failure : report.failures) {
    std::cout << "  " << tonnetz::shape_label(failure.shape) << ": " << failure.detail << "\n";
  }
  const int gcd_mismatches = tonnetz::gcd_identity_mismatches(max_scale, max_scale);
  std::cout << "gcd identity checked for 1 <= n,k <= " << max_scale << ": "
            << max_scale * max_scale << " pairs, " << gcd_mismatches << " mismatches\n";
  return (report.ok() && gcd_mismatches == 0) ? kExitOk : kExitMismatch;
}

int run_peck(int n1, int n2, const std::string& sequence, bool all) {
  const tonnetz::TriadShape shape = tonnetz::normalize_shape(n1, n2, n1 + n2);
  if (all) {
    const int length = shape.scale_size() / 2;
    if (length > 16) {
      std::cerr << "error: --all sweeps are limited to circles of length 16 (2^" << length
                << " assemblies requested)\n";
      return kExitUsage;
    }
    int tori = 0;
    int klein = 0;
    for (int bits = 0; bits < (1 << length); ++bits) {
      std::vector<tonnetz::PeckChoice> choices(length, tonnetz::PeckChoice::S);
      for (int p = 0; p < length; ++p) {
        if (bits & (1 << p)) choices[p] = tonnetz::PeckChoice::F;
      }
      const auto kind = tonnetz::classify_assembly(tonnetz::assemble(shape, choices));
      const bool is_torus = kind == tonnetz::ClosedSurfaceKind::Torus;
      (is_torus ? tori : klein)++;
      std::cout << tonnetz::choices_label(choices) << ": "
                << (is_torus ? "torus" : "Klein bottle") << "\n";
    }
    std::cout << tori << (tori == 1 ? " torus, " : " tori, ") << klein << " Klein bottle"
              << (klein == 1 ? "" : "s") << "\n";
    return kExitOk;
  }
  const std::vector<tonnetz::PeckChoice> choices = tonnetz::parse_choices(sequence);
  const auto kind = tonnetz::classify_assembly(tonnetz::assemble(shape, choices));
  std::cout << tonnetz::choices_label(choices) << ": "
            << (kind == tonnetz::ClosedSurfaceKind::Torus ? "torus" : "Klein bottle") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Tonnetz toolkit: triad-shape complexes in N-tone scales"};
  app.require_subcommand(1);

  std::vector<int> intervals;
  std::string format_classify = "text";
  auto* classify = app.add_subcommand("classify", "Classify the space of one triad shape");
  classify->add_option("intervals", intervals, "three step intervals, any order")
      ->expected(3)
      ->required();
  classify->add_option("--format", format_classify, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  int scale = 12;
  std::string format_enum = "table";
  auto* enumerate = app.add_subcommand("enumerate", "Survey every triad shape of one scale size");
  enumerate->add_option("--edo", scale, "scale size N (>= 3)")->required();
  enumerate->add_option("--format", format_enum, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  std::vector<int> export_intervals;
  std::string format_export = "json";
  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "Write a complex as JSON or DOT");
  export_cmd->add_option("intervals", export_intervals, "three step intervals, any order")
      ->expected(3)
      ->required();
  export_cmd->add_option("--format", format_export, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_option("--out", out_path, "output file (default: stdout)");

  int max_scale = 24;
  bool serial = false;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check closed forms against the built complexes for all N up to a bound");
  verify->add_option("--max-edo", max_scale, "largest scale size to sweep (>= 3)")->required();
  verify->add_flag("--serial", serial, "use the serial reference sweep");

  int peck_n1 = 1;
  int peck_n2 = 2;
  std::string sequence;
  bool all_sequences = false;
  auto* peck = app.add_subcommand(
      "peck", "Classify desingularized assemblies of the circle of tetrahedra C(n1,n2,n1+n2)");
  peck->add_option("n1", peck_n1, "smallest interval")->required();
  peck->add_option("n2", peck_n2, "second interval (coprime to n1, larger)")->required();
  auto* seq_opt = peck->add_option("--sequence", sequence, "gluing word over {S,F}, length n1+n2");
  auto* all_opt = peck->add_flag("--all", all_sequences, "sweep all 2^(n1+n2) gluing words");
  seq_opt->excludes(all_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
  }

  try {
    if (*classify) return run_classify(intervals, format_classify);
    if (*enumerate) {
      if (scale < 3) {
        std::cerr << "error: --edo must be at least 3\n";
        return kExitUsage;
      }
      return run_enumerate(scale, format_enum);
    }
    if (*export_cmd) return run_export(export_intervals, format_export, out_path);
    if (*verify) {
      if (max_scale < 3) {
        std::cerr << "error: --max-edo must be at least 3\n";
        return kExitUsage;
      }
      return run_verify(max_scale, serial);
    }
    if (*peck) {
      if (!all_sequences && sequence.empty()) {
        std::cerr << "error: peck needs --sequence WORD or --all\n";
        return kExitUsage;
      }
      return run_peck(peck_n1, peck_n2, sequence, all_sequences);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
