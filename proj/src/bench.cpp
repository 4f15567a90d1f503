#include "bb/bench.hpp"

#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace bb {

std::vector<BenchmarkRow> run_brady_bench(const Context& ctx, const BenchOptions& options) {
  BradyEdges labels = default_brady_edges(ctx);
  FillPipeline pipeline(ctx);
  FillOptions fill_options;
  fill_options.materialize_final = false;  // metrics and streamed verification only
  std::vector<BenchmarkRow> rows;
  for (int k = 1; k <= options.kmax; ++k) {
    Word w = brady_word(ctx, k, labels.a, labels.b, labels.c, labels.d);
    auto t0 = std::chrono::steady_clock::now();
    FillingCertificate cert = pipeline.fill(w, fill_options);
    auto t1 = std::chrono::steady_clock::now();
    BenchmarkRow row;
    row.k = k;
    row.word_len = static_cast<long long>(w.size());
    row.area = cert.final.area;
    row.radius = cert.final.radius;
    row.penetration = cert.indexed.penetration;
    row.rarea_bound = cert.rarea_at_penetration;
    row.dehn_bound = cert.dehn_bound_at_n;
    row.millis = options.timing
                     ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
                     : 0;
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
  out << "k,word_len,area,radius,penetration,rarea_bound,dehn_bound,millis\n";
  for (const BenchmarkRow& r : rows) {
    out << r.k << ',' << r.word_len << ',' << r.area << ',' << r.radius << ',' << r.penetration
        << ',' << r.rarea_bound << ',' << r.dehn_bound << ',' << r.millis << "\n";
  }
}

std::vector<BenchmarkRow> read_csv(std::istream& in) {
  std::vector<BenchmarkRow> rows;
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV");
  if (line != "k,word_len,area,radius,penetration,rarea_bound,dehn_bound,millis") {
    throw Error("unexpected CSV header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    BenchmarkRow r;
    std::stringstream ss(line);
    char comma;
    ss >> r.k >> comma >> r.word_len >> comma >> r.area >> comma >> r.radius >> comma >>
        r.penetration >> comma >> r.rarea_bound >> comma >> r.dehn_bound >> comma >> r.millis;
    if (!ss) throw Error("malformed CSV row: " + line);
    rows.push_back(r);
  }
  return rows;
}

ExponentFit estimate_exponent(const std::vector<std::pair<long long, long long>>& len_area) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [len, area] : len_area) {
    if (len < 2 || area < 1) continue;
    pts.emplace_back(std::log(static_cast<double>(len)), std::log(static_cast<double>(area)));
  }
  if (pts.size() < 4) throw Error("exponent fit needs at least 4 usable rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12) throw Error("degenerate exponent fit (constant lengths)");
  ExponentFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.points = pts.size();
  for (const auto& [x, y] : pts) {
    fit.max_residual = std::max(fit.max_residual, std::abs(y - (fit.slope * x + fit.intercept)));
  }
  return fit;
}

ExponentFit estimate_exponent(const std::vector<BenchmarkRow>& rows) {
  std::vector<std::pair<long long, long long>> pts;
  for (const BenchmarkRow& r : rows) pts.emplace_back(r.word_len, r.area);
  return estimate_exponent(pts);
}

}  // namespace bb
