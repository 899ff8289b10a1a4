#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "foldtrack/folding.hpp"
#include "foldtrack/free_word.hpp"
#include "foldtrack/graph_map.hpp"
#include "foldtrack/spectra.hpp"

namespace foldtrack {

// Endomorphism of F_n given by the images of x_1..x_n. Constructing one
// does not certify invertibility; see certify().
class Automorphism {
 public:
  Automorphism() = default;
  explicit Automorphism(std::vector<Word> images);
  static Automorphism identity(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int i) const { return images_.at(static_cast<std::size_t>(i)); }
  Word apply(const Word& w) const;
  long total_length() const;

  bool operator==(const Automorphism&) const = default;

 private:
  std::vector<Word> images_;
};

// (outer after inner)(x) = outer(inner(x)).
Automorphism compose(const Automorphism& outer, const Automorphism& inner);
Automorphism power(const Automorphism& phi, int k);

// CertificationError unless the images generate F_n.
void certify(const Automorphism& phi);
Automorphism parse_automorphism(std::string_view text);
std::string format_automorphism(const Automorphism& phi);

// Self-map of R_n with edge images the generator images.
GraphMap rose_representative(const Automorphism& phi);
// Outer automorphism induced by a self-map, in the rose basis given by the
// marking, normalized by normalize_outer.
Automorphism read_automorphism(const GraphMap& f);
// Images of the marking loops, read as words in the spanning-tree basis of
// the codomain through the basepoint change to f(basepoint).
std::vector<Word> marking_images(const GraphMap& f);

// Some u with images[i] = u x_i u^-1 for all i.
std::optional<Word> inner_conjugator(const std::vector<Word>& images);
bool is_inner(const std::vector<Word>& images);

// Conjugate of phi minimizing total image length, ties broken by
// lexicographic order of the image list.
Automorphism normalize_outer(const Automorphism& phi);

struct InverseResult {
  Automorphism inverse;  // normalized outer representative of phi^-1
  FoldFactorization factorization;
  InverseStats stats;
};
// Inverse through the fold factorization of the rose representative.
InverseResult invert(const Automorphism& phi);
// Exact inverse automorphism (not just its outer class).
Automorphism exact_inverse(const Automorphism& phi);

// Train-track test via the stable gate partition of iterated Df.
bool check_train_track(const GraphMap& f);

struct GrowthOptions {
  int k_max = 40;
  std::size_t length_cap = 1000000;
};
// Multiplicative growth rate of cyclic lengths of phi^k(w), maximized over
// the seed words (defaults to the generators).
double word_growth_rate(const Automorphism& phi, const std::vector<Word>& seeds = {},
                        GrowthOptions options = {});

struct ExpansionReport {
  Automorphism forward;
  Automorphism inverse;
  ExpansionSpectrum forward_spectrum;
  ExpansionSpectrum inverse_spectrum;
  bool lambda_certified = false;
  bool mu_certified = false;
  double lambda = 0.0;  // 0 when there is no EG entry
  double mu = 0.0;
  std::optional<double> ratio;  // log(lambda) / log(mu)
  double growth_forward = 0.0;
  double growth_inverse = 0.0;
  int folds = 0;
  InverseStats inverse_stats;
};

ExpansionReport expansion_report(const Automorphism& phi, int k_max = 40);

}  // namespace foldtrack
