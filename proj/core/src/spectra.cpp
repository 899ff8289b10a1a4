#include "foldtrack/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// Tarjan's algorithm on k -> j for M(j,k) > 0. Components come out sinks
// first, which is the invariant-first order.
std::vector<std::vector<int>> tarjan(const IntMatrix& m) {
  int n = m.rows();
  std::vector<int> index(ix(n), -1), low(ix(n), 0);
  std::vector<bool> on_stack(ix(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;
  std::function<void(int)> visit = [&](int k) {
    index[ix(k)] = low[ix(k)] = counter++;
    stack.push_back(k);
    on_stack[ix(k)] = true;
    for (int j = 0; j < n; ++j) {
      if (m(j, k) <= 0) continue;
      if (index[ix(j)] < 0) {
        visit(j);
        low[ix(k)] = std::min(low[ix(k)], low[ix(j)]);
      } else if (on_stack[ix(j)]) {
        low[ix(k)] = std::min(low[ix(k)], index[ix(j)]);
      }
    }
    if (low[ix(k)] == index[ix(k)]) {
      std::vector<int> comp;
      int x;
      do {
        x = stack.back();
        stack.pop_back();
        on_stack[ix(x)] = false;
        comp.push_back(x);
      } while (x != k);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (int k = 0; k < n; ++k) {
    if (index[ix(k)] < 0) visit(k);
  }
  return comps;
}

void require_irreducible(const IntMatrix& m) {
  if (!m.square()) throw ArgumentError("matrix is not square");
  if (!is_irreducible(m)) throw ArgumentError("matrix is reducible");
}

// BFS levels from index 0 along k -> j.
std::vector<int> bfs_levels(const IntMatrix& m) {
  int n = m.rows();
  std::vector<int> level(ix(n), -1);
  std::queue<int> q;
  level[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int k = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (m(j, k) > 0 && level[ix(j)] < 0) {
        level[ix(j)] = level[ix(k)] + 1;
        q.push(j);
      }
    }
  }
  return level;
}

bool is_permutation_block(const IntMatrix& m) {
  for (int j = 0; j < m.rows(); ++j) {
    std::int64_t row = 0;
    for (int k = 0; k < m.cols(); ++k) row += m(j, k);
    if (row != 1) return false;
  }
  return true;
}

double power_iteration(const IntMatrix& a, const PfOptions& opt, long* iterations) {
  int n = a.rows();
  std::vector<double> x(ix(n), 1.0 / n), y(ix(n));
  double prev = 0.0;
  for (long it = 1; it <= opt.max_iterations; ++it) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += static_cast<double>(a(j, k)) * x[ix(k)];
      y[ix(j)] = s;
      sum += s;
    }
    double diff = 0.0;
    for (int j = 0; j < n; ++j) {
      y[ix(j)] /= sum;
      diff = std::max(diff, std::abs(y[ix(j)] - x[ix(j)]));
    }
    std::swap(x, y);
    if (diff <= opt.tolerance && std::abs(sum - prev) <= opt.tolerance * sum) {
      if (iterations) *iterations = it;
      return sum;
    }
    prev = sum;
  }
  throw NumericError("power iteration did not converge", opt.max_iterations);
}

}  // namespace

BlockStructure block_structure(const IntMatrix& m) {
  if (!m.square()) throw ArgumentError("block structure needs a square matrix");
  BlockStructure bs;
  if (m.rows() == 0) return bs;
  for (auto& comp : tarjan(m)) {
    Block b;
    b.zero = comp.size() == 1 && m(comp[0], comp[0]) == 0;
    b.indices = std::move(comp);
    bs.blocks.push_back(std::move(b));
  }
  return bs;
}

bool is_irreducible(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  auto bs = block_structure(m);
  return bs.blocks.size() == 1 && !bs.blocks[0].zero;
}

int period(const IntMatrix& m) {
  require_irreducible(m);
  auto level = bfs_levels(m);
  int g = 0;
  for (int k = 0; k < m.rows(); ++k) {
    for (int j = 0; j < m.rows(); ++j) {
      if (m(j, k) > 0) g = std::gcd(g, std::abs(level[ix(k)] + 1 - level[ix(j)]));
    }
  }
  return g == 0 ? 1 : g;
}

std::vector<long double> characteristic_polynomial(const IntMatrix& m) {
  if (!m.square()) throw ArgumentError("characteristic polynomial of a non-square matrix");
  int n = m.rows();
  __extension__ typedef __int128 Big;
  std::vector<Big> a(ix(n * n)), mk(ix(n * n), 0), tmp(ix(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[ix(i * n + j)] = m(i, j);
  // Faddeev-LeVerrier: coeff[k] multiplies x^(n-k).
  std::vector<Big> coeff(ix(n + 1), 0);
  coeff[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) mk[ix(i * n + i)] += coeff[ix(k - 1)];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Big s = 0;
        for (int l = 0; l < n; ++l) s += a[ix(i * n + l)] * mk[ix(l * n + j)];
        tmp[ix(i * n + j)] = s;
      }
    }
    mk = tmp;
    Big trace = 0;
    for (int i = 0; i < n; ++i) trace += mk[ix(i * n + i)];
    coeff[ix(k)] = -trace / k;
  }
  std::vector<long double> out;
  for (Big c : coeff) out.push_back(static_cast<long double>(c));
  return out;
}

double pf_by_bisection(const IntMatrix& m) {
  auto poly = characteristic_polynomial(m);
  int n = m.rows();
  // Derivatives of the polynomial, each highest degree first.
  std::vector<std::vector<long double>> ders{poly};
  for (int d = 1; d <= n; ++d) {
    const auto& prev = ders.back();
    std::vector<long double> next;
    int deg = static_cast<int>(prev.size()) - 1;
    for (int i = 0; i < deg; ++i) next.push_back(prev[ix(i)] * (deg - i));
    ders.push_back(std::move(next));
  }
  auto eval = [](const std::vector<long double>& p, long double x) {
    long double v = 0;
    for (long double c : p) v = v * x + c;
    return v;
  };
  // Every derivative is positive exactly to the right of the largest real root.
  auto beyond = [&](long double x) {
    for (const auto& p : ders) {
      if (eval(p, x) <= 0) return false;
    }
    return true;
  };
  long double lo = 0, hi = static_cast<long double>(n) * static_cast<long double>(std::max<std::int64_t>(lc(m), 1)) + 1;
  for (int it = 0; it < 200 && hi - lo > 1e-15L * hi; ++it) {
    long double mid = (lo + hi) / 2;
    if (beyond(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

double pf_value(const IntMatrix& m, const PfOptions& options, long* iterations) {
  require_irreducible(m);
  int n = m.rows();
  double lambda;
  if (n == 1) {
    lambda = static_cast<double>(m(0, 0));
    if (iterations) *iterations = 0;
  } else if (is_permutation_block(m)) {
    lambda = 1.0;
    if (iterations) *iterations = 0;
  } else {
    int p = period(m);
    if (p == 1) {
      lambda = power_iteration(m, options, iterations);
    } else {
      auto level = bfs_levels(m);
      std::vector<int> cls;
      for (int i = 0; i < n; ++i) {
        if (level[ix(i)] % p == 0) cls.push_back(i);
      }
      IntMatrix a = m.power(p).select(cls, cls);
      lambda = std::pow(power_iteration(a, options, iterations), 1.0 / p);
    }
    if (n <= options.oracle_max_size) {
      double check = pf_by_bisection(m);
      if (std::abs(check - lambda) > 1e-9 * std::max(1.0, lambda)) {
        throw NumericError("power iteration and bisection disagree: " + std::to_string(lambda) + " vs " +
                               std::to_string(check),
                           iterations ? *iterations : 0);
      }
    }
  }
  double alpha = n;
  double c = static_cast<double>(lc(m));
  if (lambda > alpha * c * (1 + 1e-12) || n * std::log(lambda) < std::log(c) - 1e-9) {
    throw InvariantError("Perron-Frobenius value " + std::to_string(lambda) + " violates the LC bounds");
  }
  return lambda;
}

std::vector<double> ExpansionSpectrum::gamma() const {
  std::vector<double> out;
  for (const auto& e : entries) out.push_back(e.lambda);
  return out;
}

std::vector<double> ExpansionSpectrum::gamma_hat() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.lambda);
  return out;
}

ExpansionSpectrum expansion_spectrum(const GraphMap& f, const PfOptions& options) {
  if (!f.is_self_map()) throw ArgumentError("spectrum needs a self-map");
  IntMatrix m = transition_matrix(f);
  auto order = edge_order(*f.domain());
  auto bs = block_structure(m);
  ExpansionSpectrum spec;
  spec.filtration_levels.assign(order.size(), 0);
  for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
    const Block& blk = bs.blocks[b];
    std::vector<EdgeId> edges;
    for (int i : blk.indices) {
      edges.push_back(order[ix(i)]);
      spec.filtration_levels[ix(order[ix(i)])] = static_cast<int>(b) + 1;
    }
    std::sort(edges.begin(), edges.end());
    if (blk.zero) continue;
    IntMatrix sub = m.select(blk.indices, blk.indices);
    if (is_permutation_block(sub)) continue;
    SpectrumEntry e;
    e.stratum = static_cast<int>(b) + 1;
    e.lambda = pf_value(sub, options);
    e.multiplicity = period(sub);
    e.block_edges = std::move(edges);
    if (e.lambda > 1.0) spec.entries.push_back(std::move(e));
  }
  std::stable_sort(spec.entries.begin(), spec.entries.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.lambda > y.lambda; });
  return spec;
}

std::vector<double> gamma(const GraphMap& f) { return expansion_spectrum(f).gamma(); }

std::vector<double> gamma_hat(const GraphMap& f) { return expansion_spectrum(f).gamma_hat(); }

GraphMap power_literal(const GraphMap& f, int k) {
  if (k < 1) throw ArgumentError("power needs k >= 1");
  GraphMap out = f;
  for (int i = 1; i < k; ++i) out = compose(f, out);
  return out;
}

std::vector<double> gamma_hat_by_power(const GraphMap& f) {
  auto spec = expansion_spectrum(f);
  auto order = edge_order(*f.domain());
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[ix(order[i])] = static_cast<int>(i);
  std::vector<double> out;
  for (const auto& e : spec.entries) {
    int p = e.multiplicity;
    IntMatrix mp = transition_matrix(power_literal(f, p));
    std::vector<int> idx;
    for (EdgeId x : e.block_edges) idx.push_back(pos[ix(x)]);
    std::sort(idx.begin(), idx.end());
    IntMatrix sub = mp.select(idx, idx);
    for (const auto& blk : block_structure(sub).blocks) {
      if (blk.zero) continue;
      double mu = pf_value(sub.select(blk.indices, blk.indices));
      out.push_back(std::pow(mu, 1.0 / p));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Filtration invariant_filtration(const GraphMap& f) {
  return Filtration(expansion_spectrum(f).filtration_levels, true);
}

}  // namespace foldtrack
