#include "bohr/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "bohr/bohr_lift.hpp"
#include "bohr/errors.hpp"
#include "bohr/number_theory.hpp"
#include "bohr/random.hpp"

namespace bohr {

namespace {

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

double lower_only(const MultiPolynomial& p, const BoundsOptions& options) {
  const std::size_t k = active_variables(p).size();
  GridOptions grid;
  grid.budget = options.lower_budget;
  grid.allow_random_fallback = true;
  grid.fallback_samples = options.fallback_samples;
  grid.seed = options.seed;
  std::size_t n = default_points_per_dim(k, options.lower_budget);
  // Lattices this coarse say little; sample randomly instead.
  if (k > 0 && n < 8) grid.budget = 0;
  if (k == 0) n = 1;
  return *sup_lower_grid(p, n, options.refine_steps, grid).lower;
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

// --- sup bounds --------------------------------------------------------------

SupBounds estimate_sup(const MultiPolynomial& p, std::optional<double> declared, const BoundsOptions& options) {
  SupBounds out;
  out.lower = lower_only(p, options);
  const std::size_t k = active_variables(p).size();
  const std::size_t n = k == 0 ? 1 : default_points_per_dim(k, options.lipschitz_budget);
  if (k == 0 || (n >= options.min_certified_points && std::pow(static_cast<double>(n), static_cast<double>(k)) <=
                                                           static_cast<double>(options.lipschitz_budget))) {
    GridOptions grid;
    grid.budget = options.lipschitz_budget;
    grid.seed = options.seed;
    const NormCertificate cert = sup_upper_lipschitz(p, n, grid);
    out.lipschitz_upper = cert.upper;
    out.lower = std::max(out.lower, *cert.lower);
  }
  if (declared && (!out.lipschitz_upper || *declared <= *out.lipschitz_upper)) {
    out.upper = declared;
    out.upper_method = "declared";
  } else if (out.lipschitz_upper) {
    out.upper = out.lipschitz_upper;
    out.upper_method = "lipschitz";
  }
  return out;
}

SupBounds estimate_sup(const DirichletPolynomial& f, std::optional<double> declared, const BoundsOptions& options) {
  return estimate_sup(lift(f), declared, options);
}

// --- Sidon certificates -------------------------------------------------------

SidonCertificate sidon_certificate(std::size_t q, unsigned d, MatrixKind kind, const SidonOptions& options) {
  const BHOutput out = bh_pullback(bh_generate(q, d, kind, 1, options.term_budget));
  SidonCertificate cert;
  cert.q = q;
  cert.d = d;
  cert.kind = kind;
  cert.n_min = out.spectrum_max;
  cert.n_declared = out.spectrum_bound;
  const auto wiener = exact_wiener_norm(out.poly);
  if (!wiener) throw ConfigError("construction produced inexact coefficients");
  cert.wiener = *wiener;
  cert.declared_sup = out.declared_sup_upper;
  cert.sup_upper = cert.declared_sup;
  if (options.tighten) {
    cert.lipschitz_sup = sup_upper_lipschitz(out.poly, options.points_per_dim, options.grid).upper;
    cert.sup_upper = std::min(cert.sup_upper, *cert.lipschitz_sup);
  }
  cert.bound = static_cast<double>(cert.wiener) / cert.sup_upper;
  return cert;
}

Json to_json(const SidonCertificate& c) {
  Json j;
  j["q"] = c.q;
  j["d"] = c.d;
  j["matrix"] = std::string(to_string(c.kind));
  j["n_min"] = c.n_min;
  j["n_declared"] = c.n_declared;
  j["wiener"] = c.wiener;
  j["declared_sup"] = c.declared_sup;
  j["lipschitz_sup"] = optional_json(c.lipschitz_sup);
  j["sup_upper"] = c.sup_upper;
  j["bound"] = c.bound;
  return j;
}

double lambda_of(double x) { return std::sqrt(std::log(x) * std::log(std::log(x))); }

std::uint64_t integer_root(std::uint64_t n, unsigned d) {
  if (d == 0) throw DomainError("integer_root: d must be positive");
  if (d == 1 || n < 2) return n;
  auto x = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / d));
  auto fits = [&](std::uint64_t c) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < d; ++i) {
      if (!checked_mul(acc, c, n, acc)) return false;
    }
    return true;
  };
  while (x > 0 && !fits(x)) --x;
  while (fits(x + 1)) ++x;
  return x;
}

std::vector<ScheduleRow> sidon_schedule(std::span<const std::uint64_t> ns) {
  std::vector<ScheduleRow> rows;
  for (std::uint64_t n : ns) {
    ScheduleRow row;
    row.n = n;
    if (n < 3) {
      row.note = "log log N must be positive";
      rows.push_back(row);
      continue;
    }
    row.log_n = std::log(static_cast<double>(n));
    row.loglog_n = std::log(row.log_n);
    row.lambda = std::sqrt(row.log_n * row.loglog_n);
    row.d = static_cast<unsigned>(std::floor(std::sqrt(row.log_n / row.loglog_n)));
    row.reference = std::sqrt(static_cast<double>(n)) * std::exp(-row.lambda);
    row.root = integer_root(n, row.d);
    if (row.root > kSieveCap) {
      row.note = "N^{1/d} exceeds the sieve cap";
      rows.push_back(row);
      continue;
    }
    row.pi_root = row.root >= 2 ? primes_up_to(row.root).size() : 0;
    row.q = row.pi_root / row.d;
    if (row.q < 1) {
      row.note = "q = 0";
      rows.push_back(row);
      continue;
    }
    row.admissible = true;
    row.bound = std::pow(static_cast<double>(row.q), (static_cast<double>(row.d) - 1.0) / 2.0);
    row.ratio = row.bound / row.reference;
    row.exponent_ratio = std::log(row.bound) / std::log(row.reference) + 0.0;
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ScheduleRow& row) {
  Json j;
  j["N"] = row.n;
  j["admissible"] = row.admissible;
  j["note"] = row.note;
  j["log_N"] = row.log_n;
  j["loglog_N"] = row.loglog_n;
  j["lambda"] = row.lambda;
  j["d"] = row.d;
  j["root"] = row.root;
  j["pi_root"] = row.pi_root;
  j["q"] = row.q;
  j["bound"] = row.bound;
  j["reference"] = row.reference;
  j["ratio"] = row.ratio;
  j["exponent_ratio"] = row.exponent_ratio;
  return j;
}

ExponentFitReport exponent_fit_test(unsigned d, std::span<const std::uint64_t> ns) {
  if (d < 1) throw DomainError("exponent_fit_test: d must be positive");
  ExponentFitReport report;
  report.d = d;
  report.sigma_d = 0.5 - 0.5 / d;
  report.target_exponent = (static_cast<double>(d) - 1.0) / 2.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::uint64_t n : ns) {
    ExponentFitRow row;
    row.n = n;
    const std::uint64_t root = n >= 2 ? integer_root(n, d) : 0;
    if (n >= 3 && root >= 2 && root <= kSieveCap) row.q = primes_up_to(root).size() / d;
    if (row.q >= 1) {
      row.admissible = true;
      const double log_n = std::log(static_cast<double>(n));
      row.ratio = std::pow(static_cast<double>(row.q), report.target_exponent) *
                  std::pow(static_cast<double>(n), -report.sigma_d);
      row.exponent = -std::log(row.ratio) / std::log(log_n) + 0.0;
      row.scaled = std::pow(log_n, report.target_exponent) * row.ratio;
      xs.push_back(std::log(log_n));
      ys.push_back(-std::log(row.ratio));
    }
    report.rows.push_back(row);
  }
  if (xs.size() >= 2) {
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.fitted_slope = sxx > 0.0 ? sxy / sxx + 0.0 : 0.0;
  }
  return report;
}

Json to_json(const ExponentFitReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"N", row.n},
                        {"admissible", row.admissible},
                        {"q", row.q},
                        {"R", row.ratio},
                        {"exponent", row.exponent},
                        {"scaled", row.scaled}});
  }
  return Json{{"d", r.d},
              {"sigma_d", r.sigma_d},
              {"target_exponent", r.target_exponent},
              {"fitted_slope", r.fitted_slope},
              {"rows", std::move(rows)}};
}

// --- random model -------------------------------------------------------------

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(result, i);
    result = (result / g) * ((n - k + i) / (i / g));
  }
  return result;
}

void enumerate_products(std::span<const std::uint64_t> primes, std::size_t start, unsigned remaining,
                        std::uint64_t value, std::vector<std::uint64_t>& out) {
  out.push_back(value);
  if (remaining == 0) return;
  for (std::size_t j = start; j < primes.size(); ++j) {
    std::uint64_t next = 0;
    if (!checked_mul(value, primes[j], kMaxFrequency, next)) throw FrequencyOverflow("squarefree product exceeds 2^63-1");
    enumerate_products(primes, j + 1, remaining - 1, next, out);
  }
}

}  // namespace

std::vector<std::uint64_t> squarefree_set(std::size_t r, unsigned d) {
  std::vector<std::uint64_t> out;
  if (r == 0) return {1};
  const PrimeTable table = first_primes(r);
  const auto primes = table.primes().first(r);
  enumerate_products(primes, 0, d, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

RandomModelReport random_model(double y, unsigned d, std::size_t trials, std::uint64_t seed,
                               const RandomModelOptions& options) {
  if (!(y >= 2.0)) throw DomainError("random_model: y must be at least 2");
  if (trials < 1) throw DomainError("random_model: need at least one trial");
  if (d < 1) throw DomainError("random_model: d must be positive");
  RandomModelReport rep;
  rep.y = y;
  rep.d = d;
  rep.trials = trials;
  rep.seed = seed;
  rep.r = primes_up_to(static_cast<std::uint64_t>(std::floor(y))).size();
  for (unsigned s = 0; s <= d; ++s) {
    rep.set_size += binomial(rep.r, s);
    if (rep.set_size > options.max_set_size) {
      throw ResourceError("random_model: set size exceeds budget " + std::to_string(options.max_set_size));
    }
  }
  rep.dominant_term = binomial(rep.r, d);
  const std::uint64_t p_r = first_primes(rep.r).nth(rep.r);
  rep.n = 1;
  for (unsigned s = 0; s < d; ++s) {
    if (!checked_mul(rep.n, p_r, kMaxFrequency, rep.n)) throw FrequencyOverflow("random_model: p_r^d exceeds 2^63-1");
  }
  const double loglog_n = std::log(std::log(static_cast<double>(rep.n)));
  if (!(loglog_n > 0.0)) throw DomainError("random_model: log log N must be positive");

  const std::vector<std::uint64_t> set = squarefree_set(rep.r, d);
  rep.horizon = options.horizon;
  DirichletPolynomial shape;
  for (std::uint64_t n : set) shape.add_term(n, Coefficient::one());
  rep.samples = options.samples != 0 ? options.samples : default_flow_samples(shape, options.horizon);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(mix_seed(seed, trial));
    DirichletPolynomial f;
    for (std::uint64_t n : set) f.add_term(n, random_sign(rng) > 0 ? Coefficient::one() : Coefficient::minus_one());
    rep.sups.push_back(*sup_flow(f, rep.horizon, rep.samples).lower);
  }
  const double count = static_cast<double>(rep.sups.size());
  rep.mean_sup = std::accumulate(rep.sups.begin(), rep.sups.end(), 0.0) / count;
  double var = 0.0;
  for (double s : rep.sups) var += (s - rep.mean_sup) * (s - rep.mean_sup);
  rep.stddev = rep.sups.size() > 1 ? std::sqrt(var / (count - 1.0)) : 0.0;
  rep.relative_spread = rep.stddev / rep.mean_sup;
  rep.reference = std::sqrt(static_cast<double>(rep.set_size)) * std::sqrt(y / std::log(y)) * std::sqrt(loglog_n);
  rep.ratio = rep.mean_sup / rep.reference;
  return rep;
}

Json to_json(const RandomModelReport& r) {
  Json j;
  j["y"] = r.y;
  j["d"] = r.d;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["r"] = r.r;
  j["set_size"] = r.set_size;
  j["dominant_term"] = r.dominant_term;
  j["N"] = r.n;
  j["horizon"] = r.horizon;
  j["samples"] = r.samples;
  j["mean_sup"] = r.mean_sup;
  j["stddev"] = r.stddev;
  j["relative_spread"] = r.relative_spread;
  j["reference"] = r.reference;
  j["ratio"] = r.ratio;
  j["sups"] = r.sups;
  return j;
}

// --- corpora --------------------------------------------------------------------

std::vector<BHConfig> walsh_shift_configs() {
  std::vector<BHConfig> out;
  for (std::size_t q : {2, 4, 8}) {
    for (unsigned d : {1U, 2U, 3U}) out.push_back({q, d, MatrixKind::hadamard});
  }
  for (std::size_t q : {2, 3, 5}) {
    for (unsigned d : {1U, 2U, 3U}) out.push_back({q, d, MatrixKind::schur});
  }
  return out;
}

std::vector<CorpusEntry> bh_corpus(std::span<const BHConfig> configs) {
  std::vector<CorpusEntry> out;
  for (const auto& c : configs) {
    const BHOutput gen = bh_pullback(bh_generate(c.q, c.d, c.kind, 1));
    out.push_back({"bh(q=" + std::to_string(c.q) + ",d=" + std::to_string(c.d) + "," + std::string(to_string(c.kind)) + ")",
                   *gen.pullback, gen.declared_sup_upper});
  }
  return out;
}

std::vector<CorpusEntry> rudin_shapiro_corpus(unsigned max_n) {
  std::vector<CorpusEntry> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    out.push_back({"rudin_shapiro(n=" + std::to_string(n) + ")", dirichlet_rudin_shapiro(n).p,
                   std::pow(2.0, (n + 1.0) / 2.0)});
  }
  return out;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t max_frequency, std::size_t min_terms,
                                       std::size_t max_terms, std::uint64_t seed) {
  if (min_terms < 1 || min_terms > max_terms || max_terms > max_frequency) {
    throw ConfigError("random_corpus: need 1 <= min_terms <= max_terms <= max_frequency");
  }
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 rng(mix_seed(seed, i));
    const std::size_t terms = min_terms + static_cast<std::size_t>(rng() % (max_terms - min_terms + 1));
    std::vector<std::uint64_t> pool(max_frequency);
    std::iota(pool.begin(), pool.end(), 1);
    // Partial Fisher-Yates with the raw engine output (portable across libraries).
    for (std::size_t j = 0; j < terms; ++j) std::swap(pool[j], pool[j + rng() % (pool.size() - j)]);
    DirichletPolynomial f;
    for (std::size_t j = 0; j < terms; ++j) f.add_term(pool[j], Coefficient::general(std::polar(1.0, uniform_angle(rng))));
    out.push_back({"random#" + std::to_string(i), std::move(f), std::nullopt});
  }
  return out;
}

// --- inequality checks ------------------------------------------------------------

BohrInequalityReport verify_bohr_inequalities(std::span<const CorpusEntry> corpus, const BoundsOptions& options) {
  BohrInequalityReport report;
  report.all_pass = true;
  for (const auto& entry : corpus) {
    BohrInequalityRow row;
    row.label = entry.label;
    const SupBounds bounds = estimate_sup(entry.f, entry.declared_sup, options);
    row.sup_lower = bounds.lower;
    row.sup_upper = bounds.upper;
    row.upper_method = bounds.upper_method;
    row.l2 = l2_norm(entry.f);
    unsigned max_omega = 1;
    for (const auto& [n, c] : entry.f.terms()) {
      if (is_prime(n)) row.prime_sum += c.modulus();
      max_omega = std::max(max_omega, omega(n));
    }
    row.d = max_omega;
    const double sigma_d = 0.5 - 0.5 / row.d;
    double half = 0.0;
    double weighted = 0.0;
    for (const auto& [n, c] : entry.f.terms()) {
      const double x = static_cast<double>(n);
      half += c.modulus() / std::sqrt(x);
      weighted += c.modulus() * std::pow(x, -sigma_d) * std::pow(std::log(x), (row.d - 1.0) / 2.0);
    }
    if (row.sup_upper) {
      const double u = *row.sup_upper;
      const double slack = 1e-12 * std::max(1.0, u);
      row.l2_ok = row.l2 <= u + slack;
      row.prime_ok = row.prime_sum <= u + slack;
      row.weighted_half = half / u;
      row.weighted_d = weighted / u;
      row.prime_ratio = row.prime_sum / u;
      report.max_weighted_half = std::max(report.max_weighted_half, row.weighted_half);
      report.max_weighted_d = std::max(report.max_weighted_d, row.weighted_d);
    }
    report.all_pass = report.all_pass && row.l2_ok && row.prime_ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const BohrInequalityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"label", row.label},
                        {"d", row.d},
                        {"l2", row.l2},
                        {"prime_sum", row.prime_sum},
                        {"sup_lower", row.sup_lower},
                        {"sup_upper", optional_json(row.sup_upper)},
                        {"upper_method", row.upper_method},
                        {"l2_ok", row.l2_ok},
                        {"prime_ok", row.prime_ok},
                        {"prime_ratio", row.prime_ratio},
                        {"weighted_half", row.weighted_half},
                        {"weighted_d", row.weighted_d}});
  }
  return Json{{"all_pass", r.all_pass},
              {"max_weighted_half", r.max_weighted_half},
              {"max_weighted_d", r.max_weighted_d},
              {"rows", std::move(rows)}};
}

PartialSumReport partial_sum_constant(std::span<const CorpusEntry> corpus, std::span<const std::uint64_t> ns,
                                      const BoundsOptions& options) {
  PartialSumReport report;
  for (const auto& entry : corpus) {
    const SupBounds bounds = estimate_sup(entry.f, entry.declared_sup, options);
    if (!bounds.upper) {
      report.skipped.push_back(entry.label + ": no certified sup bound");
      continue;
    }
    for (std::uint64_t n : ns) {
      if (n < 2) continue;
      PartialSumRow row;
      row.label = entry.label;
      row.n = n;
      const DirichletPolynomial partial = partial_sum(entry.f, n);
      row.partial_sup = partial.empty() ? 0.0 : lower_only(lift(partial), options);
      row.sup_upper = *bounds.upper;
      row.ratio = row.partial_sup / (std::log(static_cast<double>(n)) * row.sup_upper);
      report.max_ratio = std::max(report.max_ratio, row.ratio);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

Json to_json(const PartialSumReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"label", row.label},
                        {"N", row.n},
                        {"partial_sup", row.partial_sup},
                        {"sup_upper", row.sup_upper},
                        {"ratio", row.ratio}});
  }
  return Json{{"max_ratio", r.max_ratio}, {"skipped", r.skipped}, {"rows", std::move(rows)}};
}

// --- corona -----------------------------------------------------------------------

CoronaReport corona_demo() {
  CoronaReport rep;
  DirichletPolynomial f1 = DirichletPolynomial::constant(Coefficient::general(0.5));
  f1.add_term(2, Coefficient::one());
  const DirichletPolynomial f2 = DirichletPolynomial::term(3);

  const double sigma_step = 0.01;
  rep.sigma_samples = 401;
  const double horizon = 50.0;
  rep.t_samples = default_flow_samples(add(f1, f2), horizon);
  const double t_step = 2.0 * horizon / static_cast<double>(rep.t_samples - 1);
  rep.grid_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rep.sigma_samples; ++i) {
    const double sigma = sigma_step * static_cast<double>(i);
    for (std::size_t k = 0; k < rep.t_samples; ++k) {
      const double t = -horizon + t_step * static_cast<double>(k);
      const Complex s(sigma, t);
      const double v = std::abs(evaluate(f1, s)) + std::abs(evaluate(f2, s));
      if (v < rep.grid_min) {
        rep.grid_min = v;
        rep.argmin_sigma = sigma;
        rep.argmin_t = t;
      }
    }
  }
  rep.f2_at_two = std::abs(evaluate(f2, Complex(2.0, 0.0)));

  const MultiPolynomial lift1 = lift(f1).padded(2);
  const MultiPolynomial lift2 = lift(f2);
  const std::vector<Complex> zero_point = {Complex(-0.5, 0.0), Complex(0.0, 0.0)};
  rep.common_zero_residual = std::abs(evaluate(lift1, zero_point)) + std::abs(evaluate(lift2, zero_point));
  rep.passes = rep.grid_min >= rep.threshold - 1e-9 && rep.common_zero_residual == 0.0;
  return rep;
}

Json to_json(const CoronaReport& r) {
  return Json{{"grid_min", r.grid_min},
              {"argmin_sigma", r.argmin_sigma},
              {"argmin_t", r.argmin_t},
              {"threshold", r.threshold},
              {"sigma_samples", r.sigma_samples},
              {"t_samples", r.t_samples},
              {"f2_at_two", r.f2_at_two},
              {"common_zero_residual", r.common_zero_residual},
              {"passes", r.passes}};
}

// --- Bohr radius ------------------------------------------------------------------

RadiusEntry mobius_entry(double a, unsigned degree) {
  if (!(std::abs(a) < 1.0)) throw DomainError("mobius_entry: need |a| < 1");
  std::vector<Coefficient> dense;
  dense.push_back(Coefficient::general(a));
  for (unsigned n = 1; n <= degree; ++n) dense.push_back(Coefficient::general(-(1.0 - a * a) * std::pow(a, n - 1.0)));
  RadiusEntry e;
  e.label = "mobius(a=" + format_double(a) + ",degree=" + std::to_string(degree) + ")";
  e.f = MultiPolynomial::univariate(dense);
  // |(a - z)/(1 - a z)| = 1 on the unit circle.
  e.declared_sup = 1.0;
  e.tail_bound = (1.0 - a * a) * std::pow(std::abs(a), degree) * std::pow(3.0, -(degree + 1.0)) / (1.0 - std::abs(a) / 3.0);
  return e;
}

RadiusReport bohr_radius_check(std::span<const RadiusEntry> corpus, const BoundsOptions& options) {
  RadiusReport report;
  report.all_pass = true;
  for (const auto& entry : corpus) {
    if (entry.f.var_count() > 1) throw DimensionError("bohr_radius_check expects univariate polynomials");
    RadiusRow row;
    row.label = entry.label;
    for (const auto& [alpha, c] : entry.f.terms()) {
      const double n = alpha.empty() ? 0.0 : alpha[0];
      row.weighted_sum += c.modulus() * std::pow(3.0, -n);
    }
    row.weighted_sum += entry.tail_bound;
    const SupBounds bounds = estimate_sup(entry.f, entry.declared_sup, options);
    row.polynomial_sup_upper = bounds.lipschitz_upper;
    if (bounds.upper) {
      row.sup_upper = *bounds.upper;
      row.upper_method = bounds.upper_method;
      row.ratio = row.weighted_sum / row.sup_upper;
      row.ok = row.ratio <= 1.0 + 1e-9;
      report.max_ratio = std::max(report.max_ratio, row.ratio);
    } else {
      row.upper_method = "none";
    }
    report.all_pass = report.all_pass && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Json to_json(const RadiusReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"label", row.label},
                        {"weighted_sum", row.weighted_sum},
                        {"sup_upper", row.sup_upper},
                        {"upper_method", row.upper_method},
                        {"polynomial_sup_upper", optional_json(row.polynomial_sup_upper)},
                        {"ratio", row.ratio},
                        {"ok", row.ok}});
  }
  return Json{{"all_pass", r.all_pass}, {"max_ratio", r.max_ratio}, {"rows", std::move(rows)}};
}

}  // namespace bohr
