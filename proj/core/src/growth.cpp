#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "foldtrack/automorphism.hpp"
#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

double slope(const std::vector<double>& ys, std::size_t from) {
  double n = static_cast<double>(ys.size() - from);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = from; i < ys.size(); ++i) {
    double x = static_cast<double>(i);
    sx += x;
    sy += ys[i];
    sxx += x * x;
    sxy += x * ys[i];
  }
  double den = n * sxx - sx * sx;
  return den == 0 ? 0.0 : (n * sxy - sx * sy) / den;
}

// log cyclic length of phi^k(w) for k = 1..k_max.
std::vector<double> log_lengths(const Automorphism& phi, const IntMatrix& m, Word w, const GrowthOptions& opt) {
  std::vector<double> out;
  int k = 1;
  for (; k <= opt.k_max; ++k) {
    w = cyclic_reduce(phi.apply(w));
    if (w.empty()) throw ArgumentError("seed word became trivial");
    out.push_back(std::log(static_cast<double>(w.size())));
    if (w.size() > opt.length_cap) break;
  }
  if (k >= opt.k_max) return out;
  // Occurrence-vector mode: iterate the transition matrix on letter counts.
  int n = phi.rank();
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (int x : w) v[static_cast<std::size_t>(std::abs(x) - 1)] += 1.0;
  double log_scale = 0.0;
  {
    double s = 0;
    for (double x : v) s += x;
    for (double& x : v) x /= s;
    log_scale = std::log(s);
  }
  for (++k; k <= opt.k_max; ++k) {
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(j)] += static_cast<double>(m(j, i)) * v[static_cast<std::size_t>(i)];
    double s = 0;
    for (double x : next) s += x;
    for (double& x : next) x /= s;
    log_scale += std::log(s);
    v = std::move(next);
    out.push_back(log_scale);
  }
  return out;
}

}  // namespace

double word_growth_rate(const Automorphism& phi, const std::vector<Word>& seeds, GrowthOptions options) {
  if (options.k_max < 8) throw ArgumentError("k_max must be at least 8");
  std::vector<Word> ws = seeds;
  if (ws.empty()) {
    for (int i = 0; i < phi.rank(); ++i) ws.push_back({i + 1});
  }
  IntMatrix m = transition_matrix(tighten_map(rose_representative(phi)));
  double best = 0.0;
  for (const auto& w : ws) {
    if (cyclic_reduce(w) != reduce(w) || w.empty()) throw ArgumentError("seed words must be cyclically reduced");
    auto ys = log_lengths(phi, m, w, options);
    std::size_t from = ys.size() - static_cast<std::size_t>(options.k_max / 2);
    best = std::max(best, std::exp(slope(ys, from)));
  }
  return best;
}

}  // namespace foldtrack
