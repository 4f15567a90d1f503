#ifndef BB_BENCH_HPP
#define BB_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bb/bb_fill.hpp"
#include "bb/builtin.hpp"

namespace bb {

struct BenchmarkRow {
  int k = 0;
  long long word_len = 0;
  long long area = 0;
  long long radius = 0;
  long long penetration = 0;
  long long rarea_bound = 0;
  long long dehn_bound = 0;
  long long millis = 0;
};

struct BenchOptions {
  int kmax = 8;
  bool timing = true;  // false zeroes the millis column for bit-exact output
};

/// Runs the end-to-end filler on the benchmark family for k = 1..kmax.
std::vector<BenchmarkRow> run_brady_bench(const Context& ctx, const BenchOptions& options);

void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
std::vector<BenchmarkRow> read_csv(std::istream& in);

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  size_t points = 0;
};

/// Least-squares slope of log(area) against log(word length); rows with
/// area < 1 or length < 2 are skipped. Throws on fewer than 4 usable rows.
ExponentFit estimate_exponent(const std::vector<std::pair<long long, long long>>& len_area);
ExponentFit estimate_exponent(const std::vector<BenchmarkRow>& rows);

}  // namespace bb

#endif
