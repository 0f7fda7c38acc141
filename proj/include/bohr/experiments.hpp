#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bohr/constructions.hpp"
#include "bohr/norms.hpp"
#include "bohr/poly_json.hpp"
#include "bohr/polynomial.hpp"

namespace bohr {

// ---------------------------------------------------------------------------
// Sup bounds for Dirichlet polynomials through the Bohr lift.

struct BoundsOptions {
  // Lattice budget for certified upper bounds; lattices coarser than
  // min_certified_points per dimension are not attempted.
  std::uint64_t lipschitz_budget = 1ULL << 22;
  std::size_t min_certified_points = 16;
  std::uint64_t lower_budget = 1ULL << 22;
  std::size_t refine_steps = 3;
  std::uint64_t fallback_samples = 1ULL << 17;
  std::uint64_t seed = 0x5eedULL;
};

struct SupBounds {
  double lower = 0.0;
  std::optional<double> upper;
  // "declared", "lipschitz" or "none"
  std::string upper_method = "none";
  std::optional<double> lipschitz_upper;
};

// Grid lower bound (with ascent, random fallback) and the smaller of the
// declared bound and a Lipschitz certificate when the latter fits the budget.
SupBounds estimate_sup(const MultiPolynomial& p, std::optional<double> declared, const BoundsOptions& options = {});
SupBounds estimate_sup(const DirichletPolynomial& f, std::optional<double> declared,
                       const BoundsOptions& options = {});

// ---------------------------------------------------------------------------
// Sidon constants.

struct SidonOptions {
  // Also certify the sup through sup_upper_lipschitz and keep the smaller bound.
  bool tighten = false;
  std::size_t points_per_dim = 256;
  GridOptions grid{};
  std::uint64_t term_budget = kDefaultTermBudget;
};

// Lower bound ||Q||_W / sup_upper <= S(Lambda_N), valid for every N >= n_min.
struct SidonCertificate {
  std::size_t q = 0;
  unsigned d = 0;
  MatrixKind kind = MatrixKind::hadamard;
  std::uint64_t n_min = 0;       // largest frequency of the pullback
  std::uint64_t n_declared = 0;  // p_{qd}^d
  std::uint64_t wiener = 0;      // exact
  double declared_sup = 0.0;     // q^{(d+1)/2}
  std::optional<double> lipschitz_sup;
  double sup_upper = 0.0;
  double bound = 0.0;
};

SidonCertificate sidon_certificate(std::size_t q, unsigned d, MatrixKind kind, const SidonOptions& options = {});
Json to_json(const SidonCertificate& c);

struct ScheduleRow {
  std::uint64_t n = 0;
  bool admissible = false;
  std::string note;
  double log_n = 0.0;
  double loglog_n = 0.0;
  double lambda = 0.0;  // sqrt(log N log log N)
  unsigned d = 0;       // floor(sqrt(log N / log log N))
  std::uint64_t root = 0;     // floor(N^{1/d})
  std::uint64_t pi_root = 0;  // pi(N^{1/d})
  std::uint64_t q = 0;        // floor(pi(N^{1/d}) / d)
  double bound = 0.0;         // q^{(d-1)/2}
  double reference = 0.0;     // sqrt(N) exp(-lambda)
  double ratio = 0.0;         // bound / reference
  double exponent_ratio = 0.0;  // log(bound) / log(reference)
};

double lambda_of(double x);
// floor(n^{1/d}) computed exactly.
std::uint64_t integer_root(std::uint64_t n, unsigned d);

std::vector<ScheduleRow> sidon_schedule(std::span<const std::uint64_t> ns);
Json to_json(const ScheduleRow& row);

struct ExponentFitRow {
  std::uint64_t n = 0;
  bool admissible = false;
  std::uint64_t q = 0;
  double ratio = 0.0;     // R(N) = q^{(d-1)/2} N^{-sigma_d}
  double exponent = 0.0;  // -log R(N) / log log N
  double scaled = 0.0;    // (log N)^{(d-1)/2} R(N)
};

struct ExponentFitReport {
  unsigned d = 0;
  double sigma_d = 0.0;
  double target_exponent = 0.0;  // (d-1)/2
  // Least-squares slope of -log R(N) against log log N.
  double fitted_slope = 0.0;
  std::vector<ExponentFitRow> rows;
};

ExponentFitReport exponent_fit_test(unsigned d, std::span<const std::uint64_t> ns);
Json to_json(const ExponentFitReport& r);

// ---------------------------------------------------------------------------
// Random sign model over squarefree integers.

struct RandomModelOptions {
  double horizon = 1000.0;
  // 0 selects default_flow_samples().
  std::uint64_t samples = 0;
  std::uint64_t max_set_size = 100'000;
};

struct RandomModelReport {
  double y = 0.0;
  unsigned d = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t r = 0;              // pi(y)
  std::uint64_t set_size = 0;     // sum_{s <= d} C(r, s)
  std::uint64_t dominant_term = 0;  // C(r, d)
  std::uint64_t n = 0;            // p_r^d
  double horizon = 0.0;
  std::uint64_t samples = 0;
  std::vector<double> sups;
  double mean_sup = 0.0;
  double stddev = 0.0;
  double relative_spread = 0.0;  // stddev / mean
  double reference = 0.0;        // |A|^{1/2} sqrt(y / log y) sqrt(log log N)
  double ratio = 0.0;            // mean_sup / reference
};

// Squarefree products of at most d distinct primes among p_1..p_r, including 1.
std::vector<std::uint64_t> squarefree_set(std::size_t r, unsigned d);

RandomModelReport random_model(double y, unsigned d, std::size_t trials, std::uint64_t seed,
                               const RandomModelOptions& options = {});
Json to_json(const RandomModelReport& r);

// ---------------------------------------------------------------------------
// Inequality checks over a corpus.

struct CorpusEntry {
  std::string label;
  DirichletPolynomial f;
  // A proven sup bound for f, if one is known.
  std::optional<double> declared_sup;
};

// Pull-backs of component 1 for each listed (q, d, matrix), with q^{(d+1)/2} declared.
struct BHConfig {
  std::size_t q;
  unsigned d;
  MatrixKind kind;
};
std::vector<BHConfig> walsh_shift_configs();
std::vector<CorpusEntry> bh_corpus(std::span<const BHConfig> configs);
// Dirichlet Rudin-Shapiro P_n for n = 1..max_n with 2^{(n+1)/2} declared.
std::vector<CorpusEntry> rudin_shapiro_corpus(unsigned max_n);
// Unimodular random-phase coefficients on random subsets of 1..max_frequency.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t max_frequency, std::size_t min_terms,
                                       std::size_t max_terms, std::uint64_t seed);

struct BohrInequalityRow {
  std::string label;
  unsigned d = 0;  // max Omega(n) over the spectrum, at least 1
  double l2 = 0.0;
  double prime_sum = 0.0;
  double sup_lower = 0.0;
  std::optional<double> sup_upper;
  std::string upper_method;
  bool l2_ok = false;
  bool prime_ok = false;
  double weighted_half = 0.0;   // sum |a_n| n^{-1/2} / sup_upper
  double weighted_d = 0.0;      // sum |a_n| n^{-sigma_d} (log n)^{(d-1)/2} / sup_upper
  double prime_ratio = 0.0;     // prime_sum / sup_upper
};

struct BohrInequalityReport {
  std::vector<BohrInequalityRow> rows;
  bool all_pass = false;
  double max_weighted_half = 0.0;
  double max_weighted_d = 0.0;
};

BohrInequalityReport verify_bohr_inequalities(std::span<const CorpusEntry> corpus, const BoundsOptions& options = {});
Json to_json(const BohrInequalityReport& r);

struct PartialSumRow {
  std::string label;
  std::uint64_t n = 0;
  double partial_sup = 0.0;  // grid estimate of ||S_N f||
  double sup_upper = 0.0;    // certified bound for ||f||
  double ratio = 0.0;        // partial_sup / (log N sup_upper)
};

struct PartialSumReport {
  std::vector<PartialSumRow> rows;
  std::vector<std::string> skipped;
  double max_ratio = 0.0;
};

PartialSumReport partial_sum_constant(std::span<const CorpusEntry> corpus, std::span<const std::uint64_t> ns,
                                      const BoundsOptions& options = {});
Json to_json(const PartialSumReport& r);

// ---------------------------------------------------------------------------

struct CoronaReport {
  double grid_min = 0.0;
  double argmin_sigma = 0.0;
  double argmin_t = 0.0;
  double threshold = 1.0 / 9.0;
  std::size_t sigma_samples = 0;
  std::size_t t_samples = 0;
  double f2_at_two = 0.0;  // |3^{-2}|
  double common_zero_residual = 0.0;
  bool passes = false;
};

// f1 = 1/2 + 2^{-s}, f2 = 3^{-s} on sigma in [0, 4], t in [-50, 50], and
// the lifts 1/2 + z_1, z_2 at (-1/2, 0).
CoronaReport corona_demo();
Json to_json(const CoronaReport& r);

struct RadiusEntry {
  std::string label;
  MultiPolynomial f;  // one variable
  std::optional<double> declared_sup;
  // Bound on the weighted sum of coefficients dropped by a truncation.
  double tail_bound = 0.0;
};

// Taylor coefficients of (a - z)/(1 - a z) up to `degree`, sup 1 declared.
RadiusEntry mobius_entry(double a, unsigned degree);

struct RadiusRow {
  std::string label;
  double weighted_sum = 0.0;  // sum |a_n| 3^{-n}
  double sup_upper = 0.0;
  std::string upper_method;
  std::optional<double> polynomial_sup_upper;  // Lipschitz bound of the stored polynomial itself
  double ratio = 0.0;
  bool ok = false;
};

struct RadiusReport {
  std::vector<RadiusRow> rows;
  double max_ratio = 0.0;
  bool all_pass = false;
};

RadiusReport bohr_radius_check(std::span<const RadiusEntry> corpus, const BoundsOptions& options = {});
Json to_json(const RadiusReport& r);

}  // namespace bohr
