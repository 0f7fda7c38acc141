#include "bohr/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/parallel.hpp"
#include "bohr/random.hpp"

namespace bohr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::uint64_t kChunk = 1ULL << 14;
// Complex entries allowed in the per-coordinate power tables.
constexpr std::uint64_t kPowerTableCap = 1ULL << 25;

Complex ipow(Complex z, std::uint32_t e) {
  Complex result(1.0, 0.0);
  while (e > 0) {
    if (e & 1U) result *= z;
    z *= z;
    e >>= 1U;
  }
  return result;
}

struct SparseFactor {
  std::uint32_t slot;
  std::uint32_t exponent;
};

// P restricted to the active angles, all other angles pinned to 0.
struct ReducedPolynomial {
  std::vector<std::size_t> active;
  std::vector<Complex> coeffs;
  std::vector<std::vector<SparseFactor>> factors;
  std::vector<std::uint32_t> max_exponent;
  // Dense coefficients for the one-dimensional Horner path.
  std::vector<Complex> dense;
  double wiener = 0.0;
  double lipschitz = 0.0;

  std::size_t dims() const { return active.size(); }

  Complex evaluate(std::span<const Complex> z) const {
    if (dims() == 1) {
      Complex acc(0.0, 0.0);
      for (auto it = dense.rbegin(); it != dense.rend(); ++it) acc = acc * z[0] + *it;
      return acc;
    }
    Complex sum(0.0, 0.0);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      Complex term = coeffs[t];
      for (const auto& f : factors[t]) term *= ipow(z[f.slot], f.exponent);
      sum += term;
    }
    return sum;
  }

  double modulus_at(std::span<const double> theta) const {
    std::vector<Complex> z(theta.size());
    for (std::size_t a = 0; a < theta.size(); ++a) z[a] = std::polar(1.0, theta[a]);
    return std::abs(evaluate(z));
  }
};

ReducedPolynomial reduce(const MultiPolynomial& p) {
  ReducedPolynomial red;
  red.active = active_variables(p);
  const std::size_t k = red.active.size();
  std::map<std::vector<std::uint32_t>, Complex> merged;
  for (const auto& [alpha, c] : p.terms()) {
    std::vector<std::uint32_t> beta(k);
    for (std::size_t a = 0; a < k; ++a) beta[a] = alpha[red.active[a]];
    merged[beta] += c.to_complex();
  }
  red.max_exponent.assign(k, 0);
  for (const auto& [beta, c] : merged) {
    std::vector<SparseFactor> f;
    std::uint32_t total = 0;
    for (std::size_t a = 0; a < k; ++a) {
      if (beta[a] == 0) continue;
      f.push_back({static_cast<std::uint32_t>(a), beta[a]});
      red.max_exponent[a] = std::max(red.max_exponent[a], beta[a]);
      total += beta[a];
    }
    red.coeffs.push_back(c);
    red.factors.push_back(std::move(f));
    red.wiener += std::abs(c);
    red.lipschitz += std::abs(c) * total;
  }
  if (k == 1) {
    red.dense.assign(red.max_exponent[0] + 1, Complex(0.0, 0.0));
    for (std::size_t t = 0; t < red.coeffs.size(); ++t) {
      const std::uint32_t e = red.factors[t].empty() ? 0 : red.factors[t][0].exponent;
      red.dense[e] += red.coeffs[t];
    }
  }
  return red;
}

std::optional<std::uint64_t> lattice_size(std::size_t n, std::size_t dims, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t a = 0; a < dims; ++a) {
    if (n != 0 && total > budget / n) return std::nullopt;
    total *= n;
  }
  return total <= budget ? std::optional<std::uint64_t>(total) : std::nullopt;
}

struct LatticeResult {
  double best = -1.0;
  std::uint64_t best_index = 0;
  // level_max[l]: max over the sublattice with n / 2^l points per dimension.
  std::vector<double> level_max;
  std::vector<double> offsets;
  std::uint64_t evaluations = 0;
};

LatticeResult sweep_lattice(const ReducedPolynomial& red, std::size_t n, std::uint64_t total,
                            std::vector<double> offsets) {
  const std::size_t k = red.dims();
  const unsigned levels = static_cast<unsigned>(std::countr_zero(n)) + 1;

  std::uint64_t table_entries = 0;
  for (std::size_t a = 0; a < k; ++a) table_entries += static_cast<std::uint64_t>(n) * (red.max_exponent[a] + 1);
  const bool use_tables = k > 1 && table_entries <= kPowerTableCap;

  // tables[a][i * (E_a + 1) + e] = e^{i e theta_{a,i}}
  std::vector<std::vector<Complex>> tables(k);
  std::vector<std::vector<Complex>> base(k);
  for (std::size_t a = 0; a < k; ++a) {
    base[a].resize(n);
    for (std::size_t i = 0; i < n; ++i) base[a][i] = std::polar(1.0, offsets[a] + kTwoPi * static_cast<double>(i) / n);
    if (!use_tables) continue;
    const std::size_t width = red.max_exponent[a] + 1;
    tables[a].resize(n * width);
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = offsets[a] + kTwoPi * static_cast<double>(i) / n;
      for (std::size_t e = 0; e < width; ++e) tables[a][i * width + e] = std::polar(1.0, static_cast<double>(e) * theta);
    }
  }

  const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
  std::vector<LatticeResult> partial(chunks);
  for_each_chunk(total, kChunk, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
    LatticeResult& out = partial[chunk];
    out.level_max.assign(levels, -1.0);
    std::vector<std::size_t> digit(k);
    std::uint64_t rest = begin;
    for (std::size_t a = 0; a < k; ++a) {
      digit[a] = static_cast<std::size_t>(rest % n);
      rest /= n;
    }
    std::vector<Complex> z(k);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      double value = 0.0;
      if (use_tables) {
        Complex sum(0.0, 0.0);
        for (std::size_t t = 0; t < red.coeffs.size(); ++t) {
          Complex term = red.coeffs[t];
          for (const auto& f : red.factors[t]) {
            term *= tables[f.slot][digit[f.slot] * (red.max_exponent[f.slot] + 1) + f.exponent];
          }
          sum += term;
        }
        value = std::abs(sum);
      } else {
        for (std::size_t a = 0; a < k; ++a) z[a] = base[a][digit[a]];
        value = std::abs(red.evaluate(z));
      }
      if (value > out.best) {
        out.best = value;
        out.best_index = idx;
      }
      unsigned level = levels - 1;
      for (std::size_t a = 0; a < k && level > 0; ++a) {
        if (digit[a] != 0) level = std::min<unsigned>(level, static_cast<unsigned>(std::countr_zero(digit[a])));
      }
      out.level_max[level] = std::max(out.level_max[level], value);
      for (std::size_t a = 0; a < k; ++a) {
        if (++digit[a] < n) break;
        digit[a] = 0;
      }
    }
    out.evaluations = end - begin;
  });

  LatticeResult result;
  result.level_max.assign(levels, -1.0);
  result.offsets = std::move(offsets);
  for (const auto& part : partial) {
    if (part.best > result.best) {
      result.best = part.best;
      result.best_index = part.best_index;
    }
    for (unsigned l = 0; l < levels; ++l) result.level_max[l] = std::max(result.level_max[l], part.level_max[l]);
    result.evaluations += part.evaluations;
  }
  // A point of exact level v also belongs to every coarser-indexed level below v.
  for (unsigned l = levels - 1; l > 0; --l) result.level_max[l - 1] = std::max(result.level_max[l - 1], result.level_max[l]);
  return result;
}

std::vector<double> lattice_angles(std::uint64_t index, std::size_t n, std::span<const double> offsets) {
  std::vector<double> theta(offsets.size());
  for (std::size_t a = 0; a < offsets.size(); ++a) {
    theta[a] = offsets[a] + kTwoPi * static_cast<double>(index % n) / static_cast<double>(n);
    index /= n;
  }
  return theta;
}

std::vector<double> make_offsets(std::size_t dims, const GridOptions& options, bool& randomized) {
  randomized = options.shift == LatticeShift::always || (options.shift == LatticeShift::automatic && dims >= 5);
  std::vector<double> offsets(dims, 0.0);
  if (randomized) {
    std::mt19937_64 rng(mix_seed(options.seed, 0));
    for (auto& o : offsets) o = uniform_angle(rng);
  }
  return offsets;
}

// Coordinate-wise golden-section ascent; only ever raises `value`.
void ascend(const ReducedPolynomial& red, std::vector<double>& theta, double& value, double radius,
            std::size_t passes, std::uint64_t& evaluations) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t pass = 0; pass < passes; ++pass) {
    for (std::size_t a = 0; a < theta.size(); ++a) {
      std::vector<double> probe = theta;
      auto g = [&](double x) {
        probe[a] = x;
        ++evaluations;
        return red.modulus_at(probe);
      };
      double lo = theta[a] - radius;
      double hi = theta[a] + radius;
      double x1 = hi - invphi * (hi - lo);
      double x2 = lo + invphi * (hi - lo);
      double g1 = g(x1);
      double g2 = g(x2);
      for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
        if (g1 < g2) {
          lo = x1;
          x1 = x2;
          g1 = g2;
          x2 = lo + invphi * (hi - lo);
          g2 = g(x2);
        } else {
          hi = x2;
          x2 = x1;
          g2 = g1;
          x1 = hi - invphi * (hi - lo);
          g1 = g(x1);
        }
      }
      const double x = g1 > g2 ? x1 : x2;
      const double gx = g(x);
      if (gx > value) {
        value = gx;
        theta[a] = x;
      }
    }
    radius /= 2.0;
  }
}

std::vector<double> full_witness(const MultiPolynomial& p, const ReducedPolynomial& red, std::span<const double> theta) {
  std::vector<double> w(p.var_count(), 0.0);
  for (std::size_t a = 0; a < red.dims(); ++a) {
    double x = std::fmod(theta[a], kTwoPi);
    if (x < 0) x += kTwoPi;
    w[red.active[a]] = x;
  }
  return w;
}

}  // namespace

std::string_view to_string(NormMethod m) {
  switch (m) {
    case NormMethod::grid: return "grid";
    case NormMethod::flow: return "flow";
    case NormMethod::lipschitz: return "lipschitz";
    case NormMethod::declared: return "declared";
  }
  return "unknown";
}

Json to_json(const NormCertificate& c) {
  Json j;
  j["method"] = std::string(to_string(c.method));
  j["lower"] = c.lower ? Json(*c.lower) : Json(nullptr);
  j["upper"] = c.upper ? Json(*c.upper) : Json(nullptr);
  j["witness"] = c.witness;
  j["points_per_dim"] = c.points_per_dim;
  j["refine_steps"] = c.refine_steps;
  j["active_dims"] = c.active_dims;
  j["lipschitz_constant"] = c.lipschitz_constant;
  j["horizon"] = c.horizon;
  j["samples"] = c.samples;
  j["evaluations"] = c.evaluations;
  j["randomized"] = c.randomized;
  j["random_fallback"] = c.random_fallback;
  j["seed"] = c.seed;
  return j;
}

NormCertificate declared_certificate(double upper) {
  NormCertificate c;
  c.method = NormMethod::declared;
  c.upper = upper;
  return c;
}

std::vector<std::size_t> active_variables(const MultiPolynomial& p) {
  const std::size_t r = p.var_count();
  std::vector<std::vector<double>> rows;
  if (p.size() >= 2) {
    const Exponents& first = p.terms().begin()->first;
    for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) {
      std::vector<double> row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = static_cast<double>(it->first[j]) - static_cast<double>(first[j]);
      rows.push_back(std::move(row));
    }
  }
  // Row echelon form; the pivot columns form a basis of the column space.
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < r && rank < rows.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < rows.size(); ++i) {
      if (std::abs(rows[i][col]) > std::abs(rows[best][col])) best = i;
    }
    if (std::abs(rows[best][col]) < 1e-9) continue;
    std::swap(rows[rank], rows[best]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const double factor = rows[i][col] / rows[rank][col];
      if (factor == 0.0) continue;
      for (std::size_t j = col; j < r; ++j) rows[i][j] -= factor * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t default_points_per_dim(std::size_t dims, std::uint64_t budget) {
  std::size_t n = 2;
  while (n < 65536 && lattice_size(n * 2, dims, budget)) n *= 2;
  return n;
}

NormCertificate sup_lower_grid(const MultiPolynomial& p, std::size_t points_per_dim, std::size_t refine_steps,
                               const GridOptions& options) {
  if (points_per_dim == 0) throw DomainError("points_per_dim must be positive");
  const ReducedPolynomial red = reduce(p);
  const std::size_t k = red.dims();

  NormCertificate cert;
  cert.method = NormMethod::grid;
  cert.points_per_dim = points_per_dim;
  cert.refine_steps = refine_steps;
  cert.active_dims = k;
  cert.seed = options.seed;

  std::vector<double> theta;
  double value = 0.0;
  double radius = kTwoPi / static_cast<double>(points_per_dim);
  if (k == 0) {
    value = red.coeffs.empty() ? 0.0 : std::abs(red.coeffs.front());
    cert.evaluations = 1;
  } else if (auto total = lattice_size(points_per_dim, k, options.budget)) {
    const auto offsets = make_offsets(k, options, cert.randomized);
    const LatticeResult res = sweep_lattice(red, points_per_dim, *total, offsets);
    value = res.best;
    theta = lattice_angles(res.best_index, points_per_dim, res.offsets);
    cert.evaluations = res.evaluations;
  } else if (options.allow_random_fallback) {
    cert.random_fallback = true;
    cert.samples = options.fallback_samples;
    const std::uint64_t chunks = (options.fallback_samples + kChunk - 1) / kChunk;
    std::vector<std::pair<double, std::vector<double>>> partial(chunks, {-1.0, {}});
    for_each_chunk(options.fallback_samples, kChunk, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
      std::mt19937_64 rng(mix_seed(options.seed, chunk + 1));
      std::vector<double> angles(k);
      for (std::uint64_t s = begin; s < end; ++s) {
        for (auto& x : angles) x = uniform_angle(rng);
        const double v = red.modulus_at(angles);
        if (v > partial[chunk].first) partial[chunk] = {v, angles};
      }
    });
    value = -1.0;
    for (auto& [v, angles] : partial) {
      if (v > value) {
        value = v;
        theta = std::move(angles);
      }
    }
    cert.evaluations = options.fallback_samples;
    radius = kTwoPi / std::pow(static_cast<double>(options.fallback_samples), 1.0 / static_cast<double>(k));
  } else {
    throw ResourceError("grid of " + std::to_string(points_per_dim) + "^" + std::to_string(k) +
                        " points exceeds budget " + std::to_string(options.budget));
  }

  if (k > 0 && refine_steps > 0) ascend(red, theta, value, radius, refine_steps, cert.evaluations);
  cert.lower = value;
  cert.witness = full_witness(p, red, theta);
  return cert;
}

NormCertificate sup_upper_lipschitz(const MultiPolynomial& p, std::size_t points_per_dim, const GridOptions& options) {
  if (points_per_dim == 0) throw DomainError("points_per_dim must be positive");
  const ReducedPolynomial red = reduce(p);
  const std::size_t k = red.dims();

  NormCertificate cert;
  cert.method = NormMethod::lipschitz;
  cert.points_per_dim = points_per_dim;
  cert.active_dims = k;
  cert.lipschitz_constant = red.lipschitz;
  cert.seed = options.seed;

  if (k == 0) {
    const double v = red.coeffs.empty() ? 0.0 : std::abs(red.coeffs.front());
    cert.lower = v;
    cert.upper = v;
    cert.evaluations = 1;
    cert.witness.assign(p.var_count(), 0.0);
    return cert;
  }
  const auto total = lattice_size(points_per_dim, k, options.budget);
  if (!total) {
    throw ResourceError("certified bound needs " + std::to_string(points_per_dim) + "^" + std::to_string(k) +
                        " lattice points, budget is " + std::to_string(options.budget));
  }
  const auto offsets = make_offsets(k, options, cert.randomized);
  const LatticeResult res = sweep_lattice(red, points_per_dim, *total, offsets);

  double upper = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < res.level_max.size(); ++l) {
    const double n_l = static_cast<double>(points_per_dim >> l);
    upper = std::min(upper, res.level_max[l] + red.lipschitz * std::numbers::pi / n_l);
  }
  // Allowance for rounding in the lattice evaluations.
  upper += 1e-12 * std::max(1.0, red.wiener);

  cert.lower = res.best;
  cert.upper = upper;
  cert.evaluations = res.evaluations;
  cert.witness = full_witness(p, red, lattice_angles(res.best_index, points_per_dim, res.offsets));
  return cert;
}

std::uint64_t default_flow_samples(const DirichletPolynomial& f, double horizon) {
  const std::uint64_t top = f.max_frequency();
  if (top < 2 || !(horizon > 0.0)) return 2;
  const double step = kTwoPi / (20.0 * std::log(static_cast<double>(top)));
  return static_cast<std::uint64_t>(std::ceil(2.0 * horizon / step)) + 1;
}

NormCertificate sup_flow(const DirichletPolynomial& f, double horizon, std::uint64_t samples) {
  if (!(horizon > 0.0)) throw DomainError("sup_flow: horizon T must be positive");
  if (samples < 2) throw DomainError("sup_flow: need at least 2 samples");

  NormCertificate cert;
  cert.method = NormMethod::flow;
  cert.horizon = horizon;
  cert.samples = samples;
  cert.evaluations = samples;

  std::vector<Complex> coeffs;
  std::vector<double> logs;
  for (const auto& [n, c] : f.terms()) {
    coeffs.push_back(c.to_complex());
    logs.push_back(std::log(static_cast<double>(n)));
  }
  const double step = 2.0 * horizon / static_cast<double>(samples - 1);
  auto t_at = [&](std::uint64_t k) { return -horizon + step * static_cast<double>(k); };

  constexpr std::uint64_t kResync = 256;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::pair<double, std::uint64_t>> partial(chunks, {-1.0, 0});
  for_each_chunk(samples, kChunk, [&](std::uint64_t chunk, std::uint64_t begin, std::uint64_t end) {
    std::vector<Complex> phase(coeffs.size());
    std::vector<Complex> rotate(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) rotate[j] = std::polar(1.0, -step * logs[j]);
    for (std::uint64_t k = begin; k < end; ++k) {
      if ((k - begin) % kResync == 0) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) phase[j] = coeffs[j] * std::polar(1.0, -t_at(k) * logs[j]);
      }
      Complex sum(0.0, 0.0);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        sum += phase[j];
        phase[j] *= rotate[j];
      }
      const double v = std::abs(sum);
      if (v > partial[chunk].first) partial[chunk] = {v, k};
    }
  });
  double best = coeffs.empty() ? 0.0 : -1.0;
  std::uint64_t arg = 0;
  for (const auto& [v, k] : partial) {
    if (v > best) {
      best = v;
      arg = k;
    }
  }
  cert.lower = best;
  cert.witness = {t_at(arg)};
  return cert;
}

TupleIdentityReport tuple_identity_check(std::span<const MultiPolynomial> tuple, std::size_t trials,
                                         std::uint64_t seed) {
  TupleIdentityReport report;
  report.trials = trials;
  if (tuple.empty()) return report;
  const std::size_t r = tuple.front().var_count();
  std::uint32_t d = 0;
  for (const auto& p : tuple) {
    if (p.var_count() != r) throw DimensionError("tuple components have different variable counts");
    d = std::max(d, p.degree());
  }
  const double q = static_cast<double>(tuple.size());
  report.target = std::pow(q, static_cast<double>(d) + 1.0);
  std::mt19937_64 rng(seed);
  std::vector<Complex> z(r);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (auto& zj : z) zj = std::polar(1.0, uniform_angle(rng));
    double sum = 0.0;
    for (const auto& p : tuple) sum += std::norm(evaluate(p, z));
    report.max_residual = std::max(report.max_residual, std::abs(sum - report.target));
  }
  return report;
}

}  // namespace bohr
