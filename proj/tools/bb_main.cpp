#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bb/bb_fill.hpp"
#include "bb/bench.hpp"
#include "bb/builtin.hpp"
#include "bb/oracle.hpp"

namespace {

std::unique_ptr<bb::Context> open_context(const std::string& spec, const std::string& base,
                                          bool with_fillings) {
  bb::FlagComplex cx = bb::resolve_complex(spec);
  auto ctx = bb::make_context(std::move(cx),
                              base.empty() ? std::nullopt : std::optional<std::string>(base));
  if (with_fillings) {
    bb::prepare_fillings(*ctx, bb::SearchBudget::from_env());
  }
  return ctx;
}

std::vector<bb::Word> read_words_file(const bb::Context& ctx, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bb::Error("cannot open words file: " + path);
  std::vector<bb::Word> words;
  std::string line;
  while (std::getline(in, line)) {
    words.push_back(ctx.alphabet.parse_word(line));
  }
  return words;
}

void print_constants_report(const bb::Context& ctx) {
  const bb::ConstantsRecord& c = ctx.constants;
  std::cout << "complex-hash: " << ctx.hash << "\n";
  std::cout << "vertices: " << ctx.complex.vertex_count() << "\n";
  std::cout << "directed-edges: " << ctx.edge_gens.size() << "\n";
  std::cout << "triangles: " << ctx.complex.triangles.size() << "\n";
  std::cout << "base: " << ctx.complex.vertex_names[static_cast<size_t>(ctx.base_vertex)] << "\n";
  std::cout << "relators-vertex: " << ctx.pa.relator_count() << "\n";
  std::cout << "relators-edge: " << ctx.ph.relator_count() << "\n";
  std::cout << "relators-extended: " << ctx.pa_ext.relator_count() << "\n";
  std::cout << "L: " << c.tree_diameter << "\n";
  std::cout << "K: " << c.k_constant << "\n";
  std::cout << "rarea: " << c.rarea_a << " n^2 + " << c.rarea_b << " n + " << c.rarea_c << "\n";
  std::cout << "transport-area: " << c.transport_area_per_relator
            << " per relator + " << c.transport_area_per_letter << " per letter\n";
  std::cout << "transport-radius: commutator " << c.transport_radius_commutator << ", letter "
            << c.transport_radius_letter << "\n";
  std::cout << "alpha'(n) = " << c.transport_area_per_relator << " * ceil((2n)^2/2) + "
            << c.transport_area_per_letter << " * n\n";
  std::cout << "pi'(n) = max(n + 1 + " << c.transport_radius_letter << ", "
            << 2 * (c.tree_diameter + 1) << " n + " << c.transport_radius_commutator << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive filling engine for kernel subgroups of graph groups"};
  app.require_subcommand(1);

  std::string complex_spec, base, words_path, out_path, cert_path, csv_path, family = "brady";
  int kmax = 8, max_len = 12, max_area = 6, sample_len = 6;
  bool no_timing = false;

  auto* build = app.add_subcommand("build", "constants report for a complex");
  build->add_option("-c,--complex", complex_spec, "complex file or builtin:NAME")->required();
  build->add_option("-q,--base", base, "base vertex");

  auto* fill = app.add_subcommand("fill", "fill words and write certificates");
  fill->add_option("-c,--complex", complex_spec)->required();
  fill->add_option("-q,--base", base);
  fill->add_option("-w,--words", words_path, "words file, one word per line")->required();
  fill->add_option("-o,--out", out_path, "certificate output file")->required();

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("-c,--complex", complex_spec)->required();
  verify->add_option("-q,--base", base);
  verify->add_option("--cert", cert_path, "certificate file")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force minimal areas at tiny scale");
  oracle->add_option("-c,--complex", complex_spec)->required();
  oracle->add_option("-q,--base", base);
  oracle->add_option("-w,--words", words_path)->required();
  oracle->add_option("--max-len", max_len, "intermediate word length cap");
  oracle->add_option("--max-area", max_area, "search depth cap");

  auto* bench = app.add_subcommand("bench", "benchmark family areas to CSV");
  bench->add_option("-c,--complex", complex_spec)->required();
  bench->add_option("-q,--base", base);
  bench->add_option("--family", family, "benchmark family (brady)");
  bench->add_option("--kmax", kmax, "largest family parameter");
  bench->add_option("--csv", csv_path, "CSV output file")->required();
  bench->add_flag("--no-timing", no_timing, "zero the millis column for bit-exact output");

  auto* exponent = app.add_subcommand("exponent", "log-log slope of a bench CSV");
  exponent->add_option("--csv", csv_path)->required();

  auto* check = app.add_subcommand("check", "simple-connectivity report");
  check->add_option("-c,--complex", complex_spec)->required();
  check->add_option("-q,--base", base);

  auto* sample = app.add_subcommand("sample", "exhaustive max-area table at tiny lengths");
  sample->add_option("-c,--complex", complex_spec)->required();
  sample->add_option("-q,--base", base);
  sample->add_option("--max-len", sample_len, "maximal word length (<= 8)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      auto ctx = open_context(complex_spec, base, true);
      print_constants_report(*ctx);
      return 0;
    }
    if (fill->parsed()) {
      auto ctx = open_context(complex_spec, base, true);
      std::vector<bb::Word> words = read_words_file(*ctx, words_path);
      std::ofstream out(out_path);
      if (!out) throw bb::Error("cannot open output file: " + out_path);
      bb::FillPipeline pipeline(*ctx);
      for (const bb::Word& w : words) {
        bb::FillingCertificate cert = pipeline.fill(w);
        bb::write_certificate(out, *ctx, cert);
        std::cout << "filled |w|=" << w.size() << " area=" << cert.final.area
                  << " penetration=" << cert.indexed.penetration
                  << " bound=" << cert.dehn_bound_at_n << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      auto ctx = open_context(complex_spec, base, false);
      std::ifstream in(cert_path);
      if (!in) throw bb::Error("cannot open certificate file: " + cert_path);
      auto certs = bb::read_certificates(in, *ctx);
      bool all_ok = !certs.empty();
      for (size_t i = 0; i < certs.size(); ++i) {
        std::string why;
        bool ok = bb::recheck_certificate(*ctx, certs[i], &why);
        std::cout << "certificate " << i << ": " << (ok ? "OK" : "FAIL " + why) << "\n";
        all_ok = all_ok && ok;
      }
      return all_ok ? 0 : 1;
    }
    if (oracle->parsed()) {
      auto ctx = open_context(complex_spec, base, false);
      bb::OracleCaps caps;
      caps.max_len = static_cast<size_t>(max_len);
      caps.max_area = static_cast<size_t>(max_area);
      for (const bb::Word& w : read_words_file(*ctx, words_path)) {
        bb::OracleResult r = bb::brute_force_area(ctx->ph, w, caps);
        std::cout << "word: " << ctx->alphabet.format_word(w) << "\n";
        if (r.filled) {
          std::cout << "  area: " << r.area << " ("
                    << (r.exactness == bb::OracleExactness::exact ? "exact" : "upper-bound-only")
                    << ")\n";
        } else {
          std::cout << "  not filled within caps (len " << caps.max_len << ", area "
                    << caps.max_area << ")\n";
        }
      }
      return 0;
    }
    if (bench->parsed()) {
      if (family != "brady") throw bb::Error("unknown benchmark family: " + family);
      auto ctx = open_context(complex_spec, base, true);
      bb::BenchOptions options;
      options.kmax = kmax;
      options.timing = !no_timing;
      auto rows = bb::run_brady_bench(*ctx, options);
      std::ofstream out(csv_path);
      if (!out) throw bb::Error("cannot open CSV output: " + csv_path);
      bb::write_csv(out, rows);
      std::cout << "wrote " << rows.size() << " rows to " << csv_path << "\n";
      return 0;
    }
    if (exponent->parsed()) {
      std::ifstream in(csv_path);
      if (!in) throw bb::Error("cannot open CSV: " + csv_path);
      auto rows = bb::read_csv(in);
      bb::ExponentFit fit = bb::estimate_exponent(rows);
      std::cout << "slope: " << fit.slope << "\n";
      std::cout << "intercept: " << fit.intercept << "\n";
      std::cout << "max-residual: " << fit.max_residual << "\n";
      std::cout << "points: " << fit.points << "\n";
      return 0;
    }
    if (check->parsed()) {
      auto ctx = open_context(complex_spec, base, false);
      auto report = bb::simple_connectivity_report(*ctx, bb::SearchBudget::from_env());
      std::cout << "cycles-checked: " << report.cycles_checked << "\n";
      if (report.pass) {
        std::cout << "result: PASS (all fundamental cycles contract)\n";
        return 0;
      }
      std::cout << "result: UNKNOWN (budget exhausted on " << report.failed_cycles_text.size()
                << " cycles)\n";
      for (const std::string& c : report.failed_cycles_text) {
        std::cout << "  obstructing-cycle: " << c << "\n";
      }
      return 1;
    }
    if (sample->parsed()) {
      auto ctx = open_context(complex_spec, base, false);
      bb::OracleCaps caps;
      auto rows = bb::enumerate_dehn_sample(*ctx, sample_len, caps);
      std::cout << "n,max_area,exact,complete,words\n";
      for (const auto& r : rows) {
        std::cout << r.length << ',' << r.max_area << ',' << (r.exact ? 1 : 0) << ','
                  << (r.complete ? 1 : 0) << ',' << r.words_checked << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
