#include "foldtrack/automorphism.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <set>

#include "foldtrack/error.hpp"

namespace foldtrack {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool auto_less(const Automorphism& a, const Automorphism& b) {
  return std::lexicographical_compare(a.images().begin(), a.images().end(), b.images().begin(),
                                      b.images().end(), word_less);
}

Automorphism conjugate_by(const Automorphism& phi, const Word& u) {
  std::vector<Word> imgs;
  for (const auto& w : phi.images()) imgs.push_back(conjugate(w, u));
  return Automorphism(std::move(imgs));
}

Word path_word(const EdgePath& p) {
  Word w;
  for (const auto& d : p) w.push_back(d.signed_id());
  return w;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Automorphism::Automorphism(std::vector<Word> images) {
  for (auto& w : images) images_.push_back(reduce(w));
  int n = rank();
  for (const auto& w : images_) {
    for (int x : w) {
      if (std::abs(x) > n) throw ArgumentError("image uses a letter beyond the rank");
    }
  }
}

Automorphism Automorphism::identity(int rank) {
  std::vector<Word> imgs;
  for (int i = 0; i < rank; ++i) imgs.push_back({i + 1});
  return Automorphism(std::move(imgs));
}

Word Automorphism::apply(const Word& w) const {
  Word out;
  auto push = [&out](int y) {
    if (!out.empty() && out.back() == -y) {
      out.pop_back();
    } else {
      out.push_back(y);
    }
  };
  for (int x : w) {
    const Word& img = images_.at(ix(std::abs(x) - 1));
    if (x > 0) {
      for (int y : img) push(y);
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) push(-*it);
    }
  }
  return out;
}

long Automorphism::total_length() const {
  long total = 0;
  for (const auto& w : images_) total += static_cast<long>(w.size());
  return total;
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner) {
  if (outer.rank() != inner.rank()) throw ArgumentError("compose: ranks differ");
  std::vector<Word> imgs;
  for (const auto& w : inner.images()) imgs.push_back(outer.apply(w));
  return Automorphism(std::move(imgs));
}

Automorphism power(const Automorphism& phi, int k) {
  if (k < 0) throw ArgumentError("negative power; invert first");
  Automorphism out = Automorphism::identity(phi.rank());
  for (int i = 0; i < k; ++i) out = compose(phi, out);
  return out;
}

GraphMap rose_representative(const Automorphism& phi) {
  GraphPtr rose = make_rose(phi.rank());
  std::vector<EdgePath> imgs;
  for (const auto& w : phi.images()) {
    EdgePath p;
    for (int x : w) p.push_back(OrientedEdge::from_signed(x));
    imgs.push_back(std::move(p));
  }
  return GraphMap(rose, rose, {0}, std::move(imgs));
}

void certify(const Automorphism& phi) {
  if (phi.rank() < 1) throw CertificationError("automorphism of rank 0");
  try {
    factorize(rose_representative(phi));
  } catch (const CertificationError& e) {
    throw CertificationError("images do not generate the free group: " + format_automorphism(phi) + " (" +
                             e.what() + ")");
  }
}

Automorphism parse_automorphism(std::string_view text) {
  std::vector<Word> imgs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - start));
    std::size_t arrow = item.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'x->word' in \"" + std::string(item) + "\"");
    std::string_view lhs = trim(item.substr(0, arrow));
    char expected = static_cast<char>('a' + imgs.size());
    if (lhs.size() != 1 || lhs[0] != expected) {
      throw ParseError("generator images must be listed in order; expected '" + std::string(1, expected) + "'");
    }
    imgs.push_back(parse_word(item.substr(arrow + 2)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  int n = static_cast<int>(imgs.size());
  for (const auto& w : imgs) {
    for (int x : w) {
      if (std::abs(x) > n) {
        throw ParseError("letter '" + std::string(1, static_cast<char>('a' + std::abs(x) - 1)) +
                         "' is beyond the rank " + std::to_string(n));
      }
    }
  }
  Automorphism phi(std::move(imgs));
  certify(phi);
  return phi;
}

std::string format_automorphism(const Automorphism& phi) {
  std::string out;
  for (int i = 0; i < phi.rank(); ++i) {
    if (i) out += ", ";
    out += static_cast<char>('a' + i);
    out += "->";
    out += format_word(phi.image(i));
  }
  return out;
}

std::optional<Word> inner_conjugator(const std::vector<Word>& images) {
  int n = static_cast<int>(images.size());
  int k = -1;
  for (int i = 0; i < n; ++i) {
    if (images[ix(i)] != Word{i + 1}) {
      k = i;
      break;
    }
  }
  if (k < 0) return Word{};
  if (n == 1) return std::nullopt;
  // images[k] = p x_k p^-1 with p fixed; the conjugator is p x_k^m.
  Word w = reduce(images[ix(k)]);
  if (w.size() % 2 == 0) return std::nullopt;
  std::size_t half = w.size() / 2;
  if (w[half] != k + 1) return std::nullopt;
  Word p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(half));
  if (conjugate({k + 1}, p) != w) return std::nullopt;
  int j = k == 0 ? 1 : 0;
  Word v = multiply(multiply(inverse(p), images[ix(j)]), p);
  int m = 0;
  std::size_t pos = 0;
  while (pos < v.size() && std::abs(v[pos]) == k + 1) {
    m += v[pos] > 0 ? 1 : -1;
    ++pos;
  }
  Word u = p;
  for (int i = 0; i < std::abs(m); ++i) u = multiply(u, {m > 0 ? k + 1 : -(k + 1)});
  for (int i = 0; i < n; ++i) {
    if (conjugate({i + 1}, u) != reduce(images[ix(i)])) return std::nullopt;
  }
  return u;
}

bool is_inner(const std::vector<Word>& images) { return inner_conjugator(images).has_value(); }

Automorphism normalize_outer(const Automorphism& phi) {
  int n = phi.rank();
  if (n <= 1) return phi;
  Automorphism cur = phi;
  // Descent: total length is convex along the Cayley tree of conjugators.
  while (true) {
    std::optional<Automorphism> best;
    for (int l = -n; l <= n; ++l) {
      if (l == 0) continue;
      Automorphism cand = conjugate_by(cur, {l});
      if (cand.total_length() >= cur.total_length()) continue;
      if (!best || cand.total_length() < best->total_length() ||
          (cand.total_length() == best->total_length() && auto_less(cand, *best))) {
        best = std::move(cand);
      }
    }
    if (!best) break;
    cur = std::move(*best);
  }
  // The minimizers form a subtree; walk it and keep the least.
  long target = cur.total_length();
  std::set<std::vector<Word>> seen{cur.images()};
  std::deque<Automorphism> queue{cur};
  Automorphism least = cur;
  while (!queue.empty() && seen.size() < 100000) {
    Automorphism a = std::move(queue.front());
    queue.pop_front();
    for (int l = -n; l <= n; ++l) {
      if (l == 0) continue;
      Automorphism cand = conjugate_by(a, {l});
      if (cand.total_length() != target || !seen.insert(cand.images()).second) continue;
      if (auto_less(cand, least)) least = cand;
      queue.push_back(std::move(cand));
    }
  }
  return least;
}

std::vector<Word> marking_images(const GraphMap& f) {
  const MarkedGraph& g = *f.domain();
  const MarkedGraph& h = *f.codomain();
  if (!g.marked()) throw ArgumentError("domain has no marking");
  const SpanningTree& tree = h.spanning_tree();
  const EdgePath& tau = tree.path_to[ix(f.vertex_image(g.basepoint()))];
  std::vector<Word> out;
  for (const auto& loop : g.marking()) {
    EdgePath p = concat(concat(tau, apply(f, loop)), reverse_path(tau));
    out.push_back(loop_coordinates(h, p));
  }
  return out;
}

Automorphism exact_inverse(const Automorphism& phi) {
  auto fact = factorize(rose_representative(phi));
  GraphMap g = controlled_inverse(fact);
  std::vector<Word> imgs;
  for (const auto& p : g.edge_images()) imgs.push_back(reduce(path_word(p)));
  Automorphism psi(std::move(imgs));
  std::vector<Word> back;
  for (const auto& w : phi.images()) back.push_back(psi.apply(w));
  auto u = inner_conjugator(back);
  if (!u) throw InvariantError("controlled inverse does not invert " + format_automorphism(phi));
  return conjugate_by(psi, inverse(*u));
}

Automorphism read_automorphism(const GraphMap& f) {
  const MarkedGraph& h = *f.codomain();
  if (!h.marked()) throw ArgumentError("codomain has no marking");
  Automorphism w(marking_images(f));
  std::vector<Word> basis;
  for (const auto& loop : h.marking()) basis.push_back(loop_coordinates(h, loop));
  Automorphism mu(std::move(basis));
  if (mu.rank() != w.rank()) throw ArgumentError("marking sizes differ");
  Automorphism phi = mu == Automorphism::identity(mu.rank()) ? w : compose(exact_inverse(mu), w);
  certify(phi);
  return normalize_outer(phi);
}

bool marking_respecting(const GraphMap& f) {
  const MarkedGraph& h = *f.codomain();
  if (!f.domain()->marked() || !h.marked()) return false;
  auto imgs = marking_images(f);
  std::vector<Word> target;
  for (const auto& loop : h.marking()) target.push_back(loop_coordinates(h, loop));
  if (imgs.size() != target.size()) return false;
  // w_i = u t_i u^-1 for one u: test t^-1 o w, with t inverted exactly.
  Automorphism t(target);
  Automorphism tinv = t == Automorphism::identity(t.rank()) ? t : exact_inverse(t);
  std::vector<Word> pulled;
  for (const auto& w : imgs) pulled.push_back(tinv.apply(w));
  return is_inner(pulled);
}

InverseResult invert(const Automorphism& phi) {
  certify(phi);
  auto fact = factorize(rose_representative(phi));
  InverseStats stats;
  GraphMap g = controlled_inverse(fact, &stats);
  Automorphism psi = read_automorphism(g);
  return InverseResult{std::move(psi), std::move(fact), std::move(stats)};
}

ExpansionReport expansion_report(const Automorphism& phi, int k_max) {
  ExpansionReport r;
  r.forward = normalize_outer(phi);
  InverseResult inv = invert(phi);
  r.inverse = inv.inverse;
  r.folds = inv.stats.folds;
  r.inverse_stats = inv.stats;
  GraphMap fwd_map = rose_representative(r.forward);
  GraphMap inv_map = rose_representative(r.inverse);
  r.forward_spectrum = expansion_spectrum(fwd_map);
  r.inverse_spectrum = expansion_spectrum(inv_map);
  r.lambda_certified = check_train_track(fwd_map);
  r.mu_certified = check_train_track(inv_map);
  r.lambda = r.forward_spectrum.top();
  r.mu = r.inverse_spectrum.top();
  if (r.lambda > 1.0 && r.mu > 1.0) r.ratio = std::log(r.lambda) / std::log(r.mu);
  GrowthOptions opt;
  opt.k_max = k_max;
  r.growth_forward = word_growth_rate(r.forward, {}, opt);
  r.growth_inverse = word_growth_rate(r.inverse, {}, opt);
  return r;
}

}  // namespace foldtrack
