#include "bohr/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "bohr/bohr_lift.hpp"
#include "bohr/constructions.hpp"
#include "bohr/errors.hpp"
#include "bohr/experiments.hpp"
#include "bohr/norms.hpp"
#include "bohr/number_theory.hpp"
#include "bohr/parallel.hpp"
#include "bohr/poly_json.hpp"
#include "bohr/table.hpp"

namespace bohr {

namespace {

struct Settings {
  std::string config;
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;

  std::size_t q = 2;
  unsigned d = 2;
  std::string matrix = "hadamard";
  std::size_t i = 1;
  unsigned n = 2;
  bool dirichlet = false;
  std::uint64_t limit = 100;
  std::vector<std::uint64_t> numbers;
  std::string method = "grid";
  std::size_t points_per_dim = 0;
  std::size_t refine_steps = 3;
  double horizon = 1000.0;
  std::uint64_t samples = 0;
  std::size_t trials = 50;
  double y = 30.0;
  std::uint64_t budget = 100'000'000;
  std::uint64_t term_budget = kDefaultTermBudget;
  std::uint64_t max_set_size = 100'000;
  std::vector<std::uint64_t> ns;
  bool tighten = false;
  bool fallback = false;
  unsigned fit_d = 0;
  std::string which;
  std::string command;
};

const std::vector<std::string> kCommands = {"primes",     "factor",      "lift",   "unlift",      "rudin-shapiro",
                                            "generate",   "norms",       "sidon-cert", "sidon-table", "verify",
                                            "corona-demo", "random-model"};

template <class T>
T config_value(const Json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw ConfigError("config field '" + key + "' has the wrong type");
  }
}

void apply_config(const Json& cfg, Settings& s) {
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  using Setter = std::function<void(const Json&, const std::string&)>;
  auto str = [](std::string& field) -> Setter {
    return [&field](const Json& v, const std::string& k) { field = config_value<std::string>(v, k); };
  };
  auto num = [](auto& field) -> Setter {
    return [&field](const Json& v, const std::string& k) {
      field = config_value<std::remove_reference_t<decltype(field)>>(v, k);
    };
  };
  const std::map<std::string, Setter> setters = {
      {"command", str(s.command)},
      {"input", str(s.input)},
      {"output", str(s.output)},
      {"format", str(s.format)},
      {"seed", num(s.seed)},
      {"threads", num(s.threads)},
      {"q", num(s.q)},
      {"d", num(s.d)},
      {"matrix", str(s.matrix)},
      {"i", num(s.i)},
      {"n", num(s.n)},
      {"method", str(s.method)},
      {"points_per_dim", num(s.points_per_dim)},
      {"refine_steps", num(s.refine_steps)},
      {"T", num(s.horizon)},
      {"samples", num(s.samples)},
      {"trials", num(s.trials)},
      {"y", num(s.y)},
      {"budget", num(s.budget)},
      {"term_budget", num(s.term_budget)},
      {"N", num(s.ns)},
  };
  for (const auto& [key, value] : cfg.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config field '" + key + "'");
    it->second(value, key);
  }
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError("malformed JSON in " + source + ": " + e.what());
  }
}

Json read_json(const std::string& path, std::istream& in) {
  return parse_json(read_text(path, in), path.empty() || path == "-" ? "<stdin>" : path);
}

// Accepts a bare polynomial or a generate envelope, taking `field` from the latter.
AnyPolynomial read_polynomial(const Json& j, const char* field) {
  if (j.is_object() && !j.contains("kind") && j.contains(field)) return polynomial_from_json(j.at(field));
  return polynomial_from_json(j);
}

DirichletPolynomial as_dirichlet(const AnyPolynomial& p) {
  if (const auto* f = std::get_if<DirichletPolynomial>(&p)) return *f;
  return unlift(std::get<MultiPolynomial>(p));
}

MultiPolynomial as_multi(const AnyPolynomial& p) {
  if (const auto* m = std::get_if<MultiPolynomial>(&p)) return *m;
  return lift(std::get<DirichletPolynomial>(p));
}

struct Emitter {
  const Settings& s;
  std::ostream& out;

  void operator()(Json report, const Json* rows = nullptr) const {
    const OutputFormat format = parse_output_format(s.format);
    std::string text;
    if (format == OutputFormat::json) {
      text = dump_canonical(report);
    } else {
      Json table_rows;
      if (rows != nullptr) {
        table_rows = *rows;
      } else if (report.contains("rows") && report.at("rows").is_array()) {
        table_rows = report.at("rows");
      } else {
        table_rows = Json::array({report});
      }
      const Table t = table_from_rows(table_rows);
      const std::string seed = report.contains("seed") ? report.at("seed").dump() : std::string();
      if (format == OutputFormat::csv) {
        if (!seed.empty()) text += "# seed=" + seed + "\n";
        text += render_csv(t);
      } else {
        if (!seed.empty()) text += "seed: " + seed + "\n\n";
        text += render_markdown(t);
      }
    }
    write(text);
  }

  void write(const std::string& text) const {
    if (s.output.empty() || s.output == "-") {
      out << text;
      return;
    }
    std::ofstream file(s.output, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + s.output + "'");
    file << text;
  }
};

std::vector<CorpusEntry> read_corpus(const Json& j) {
  if (!j.is_array()) throw ConfigError("corpus must be an array of {label, poly, declared_sup}");
  std::vector<CorpusEntry> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("poly")) throw ConfigError("corpus entries need a 'poly' field");
    for (const auto& [key, _] : item.items()) {
      if (key != "label" && key != "poly" && key != "declared_sup") {
        throw ConfigError("unknown corpus field '" + key + "'");
      }
    }
    CorpusEntry e;
    e.label = item.value("label", "entry#" + std::to_string(out.size()));
    e.f = as_dirichlet(polynomial_from_json(item.at("poly")));
    if (item.contains("declared_sup")) e.declared_sup = item.at("declared_sup").get<double>();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<RadiusEntry> read_radius_corpus(const Json& j) {
  if (!j.is_array()) throw ConfigError("corpus must be an array of {label, poly, declared_sup, tail_bound}");
  std::vector<RadiusEntry> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("poly")) throw ConfigError("corpus entries need a 'poly' field");
    for (const auto& [key, _] : item.items()) {
      if (key != "label" && key != "poly" && key != "declared_sup" && key != "tail_bound") {
        throw ConfigError("unknown corpus field '" + key + "'");
      }
    }
    RadiusEntry e;
    e.label = item.value("label", "entry#" + std::to_string(out.size()));
    e.f = multi_from_json(item.at("poly"));
    if (item.contains("declared_sup")) e.declared_sup = item.at("declared_sup").get<double>();
    e.tail_bound = item.value("tail_bound", 0.0);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> default_bohr_corpus() {
  const auto configs = walsh_shift_configs();
  std::vector<CorpusEntry> corpus = bh_corpus(configs);
  for (auto& e : rudin_shapiro_corpus(8)) corpus.push_back(std::move(e));
  DirichletPolynomial tight = DirichletPolynomial::term(2);
  tight.add_term(3, Coefficient::one());
  corpus.push_back({"2^-s+3^-s", tight, 2.0});
  DirichletPolynomial simple = DirichletPolynomial::constant(Coefficient::one());
  simple.add_term(2, Coefficient::one());
  corpus.push_back({"1+2^-s", simple, 2.0});
  return corpus;
}

Json dense_real(const MultiPolynomial& p) {
  Json out = Json::array();
  const unsigned degree = p.empty() ? 0 : p.degree();
  for (unsigned k = 0; k <= degree; ++k) {
    const Coefficient c = p.coefficient(Exponents{k});
    out.push_back(static_cast<int>(std::lround(c.to_complex().real())));
  }
  return out;
}

Json with_seed(Json report, std::uint64_t seed) {
  report["seed"] = seed;
  return report;
}

int dispatch(const std::string& command, const Settings& s, const Emitter& emit, std::istream& in) {
  if (command == "primes") {
    const PrimeTable table = primes_up_to(s.limit);
    Json rows = Json::array();
    std::size_t idx = 0;
    for (std::uint64_t p : table.primes()) rows.push_back(Json{{"index", ++idx}, {"prime", p}});
    const auto primes = table.primes();
    emit(Json{{"limit", s.limit},
              {"count", table.size()},
              {"primes", std::vector<std::uint64_t>(primes.begin(), primes.end())},
              {"seed", s.seed}},
         &rows);
    return kExitOk;
  }
  if (command == "factor") {
    Json rows = Json::array();
    for (std::uint64_t n : s.numbers) {
      const Factorization f = factorize(n);
      std::string text;
      Json factors = Json::array();
      for (const auto& pp : f.factors()) {
        factors.push_back(Json{{"p", pp.prime}, {"e", pp.exponent}});
        if (!text.empty()) text += " * ";
        text += std::to_string(pp.prime) + (pp.exponent > 1 ? "^" + std::to_string(pp.exponent) : "");
      }
      rows.push_back(Json{{"n", n},
                          {"factorization", text.empty() ? "1" : text},
                          {"omega", f.omega()},
                          {"squarefree", f.is_squarefree()},
                          {"largest_prime", n >= 2 ? Json(f.largest_prime()) : Json(nullptr)},
                          {"factors", std::move(factors)}});
    }
    emit(Json{{"rows", std::move(rows)}, {"seed", s.seed}});
    return kExitOk;
  }
  if (command == "lift") {
    const AnyPolynomial p = read_polynomial(read_json(s.input, in), "pullback");
    const auto* f = std::get_if<DirichletPolynomial>(&p);
    if (f == nullptr) throw ConfigError("lift expects a Dirichlet polynomial");
    emit.write(dump_canonical(to_json(lift(*f))));
    return kExitOk;
  }
  if (command == "unlift") {
    const AnyPolynomial p = read_polynomial(read_json(s.input, in), "poly");
    const auto* m = std::get_if<MultiPolynomial>(&p);
    if (m == nullptr) throw ConfigError("unlift expects a multivariate polynomial");
    emit.write(dump_canonical(to_json(unlift(*m))));
    return kExitOk;
  }
  if (command == "rudin-shapiro") {
    Json report;
    report["n"] = s.n;
    if (s.dirichlet) {
      if (s.n > kMaxDirichletRudinShapiro) {
        throw ResourceError("rudin-shapiro --dirichlet: n exceeds limit " + std::to_string(kMaxDirichletRudinShapiro));
      }
      const auto pair = dirichlet_rudin_shapiro(s.n);
      report["form"] = "dirichlet";
      report["wiener"] = exact_wiener_norm(pair.p).value();
      report["declared_sup_upper"] = std::pow(2.0, (s.n + 1.0) / 2.0);
      report["p"] = to_json(pair.p);
      report["q"] = to_json(pair.q);
    } else {
      if (s.n > kMaxRudinShapiro) {
        throw ResourceError("rudin-shapiro: n exceeds limit " + std::to_string(kMaxRudinShapiro));
      }
      const auto pair = rudin_shapiro(s.n);
      report["form"] = "power";
      report["wiener"] = exact_wiener_norm(pair.p).value();
      report["declared_sup_upper"] = std::pow(2.0, (s.n + 1.0) / 2.0);
      report["p_coefficients"] = dense_real(pair.p);
      report["q_coefficients"] = dense_real(pair.q);
      report["p"] = to_json(pair.p);
      report["q"] = to_json(pair.q);
    }
    report["seed"] = s.seed;
    emit(std::move(report));
    return kExitOk;
  }
  if (command == "generate") {
    const BHOutput gen = bh_pullback(bh_generate(s.q, s.d, parse_matrix_kind(s.matrix), s.i, s.term_budget));
    emit(with_seed(to_json(gen), s.seed));
    return kExitOk;
  }
  if (command == "norms") {
    const AnyPolynomial p = read_polynomial(read_json(s.input, in), "poly");
    GridOptions grid;
    grid.budget = s.budget;
    grid.seed = s.seed;
    grid.allow_random_fallback = s.fallback;
    NormCertificate cert;
    if (s.method == "flow") {
      const DirichletPolynomial f = as_dirichlet(p);
      const std::uint64_t samples = s.samples != 0 ? s.samples : default_flow_samples(f, s.horizon);
      if (samples > s.budget) throw ResourceError("flow samples exceed budget " + std::to_string(s.budget));
      cert = sup_flow(f, s.horizon, samples);
      cert.seed = s.seed;
    } else if (s.method == "grid" || s.method == "lipschitz") {
      const MultiPolynomial m = as_multi(p);
      const std::size_t dims = active_variables(m).size();
      const std::size_t ppd =
          s.points_per_dim != 0 ? s.points_per_dim : default_points_per_dim(dims, std::min<std::uint64_t>(s.budget, 1ULL << 22));
      cert = s.method == "grid" ? sup_lower_grid(m, ppd, s.refine_steps, grid) : sup_upper_lipschitz(m, ppd, grid);
    } else {
      throw ConfigError("unknown norm method '" + s.method + "' (grid, flow, lipschitz)");
    }
    emit(to_json(cert));
    return kExitOk;
  }
  if (command == "sidon-cert") {
    SidonOptions opts;
    opts.tighten = s.tighten;
    if (s.points_per_dim != 0) opts.points_per_dim = s.points_per_dim;
    opts.grid.budget = s.budget;
    opts.grid.seed = s.seed;
    opts.term_budget = s.term_budget;
    emit(with_seed(to_json(sidon_certificate(s.q, s.d, parse_matrix_kind(s.matrix), opts)), s.seed));
    return kExitOk;
  }
  if (command == "sidon-table") {
    std::vector<std::uint64_t> ns = s.ns;
    if (ns.empty()) ns = {1'000, 10'000, 100'000, 1'000'000, 10'000'000, 100'000'000};
    if (s.fit_d != 0) {
      emit(with_seed(to_json(exponent_fit_test(s.fit_d, ns)), s.seed));
      return kExitOk;
    }
    Json rows = Json::array();
    for (const auto& row : sidon_schedule(ns)) rows.push_back(to_json(row));
    emit(Json{{"rows", std::move(rows)}, {"seed", s.seed}});
    return kExitOk;
  }
  if (command == "verify") {
    BoundsOptions bounds;
    bounds.seed = s.seed;
    const bool has_input = !s.input.empty();
    if (s.which == "bohr" || s.which == "thm25") {
      const auto corpus = has_input ? read_corpus(read_json(s.input, in)) : default_bohr_corpus();
      const BohrInequalityReport rep = verify_bohr_inequalities(corpus, bounds);
      emit(with_seed(to_json(rep), s.seed));
      if (s.which == "bohr") return rep.all_pass ? kExitOk : kExitVerificationFailed;
      const bool finite = std::isfinite(rep.max_weighted_half) && std::isfinite(rep.max_weighted_d);
      return finite ? kExitOk : kExitVerificationFailed;
    }
    if (s.which == "partial-sums") {
      const auto corpus = has_input ? read_corpus(read_json(s.input, in)) : rudin_shapiro_corpus(8);
      std::vector<std::uint64_t> ns = s.ns;
      if (ns.empty()) ns = {2, 4, 8, 16};
      const PartialSumReport rep = partial_sum_constant(corpus, ns, bounds);
      emit(with_seed(to_json(rep), s.seed));
      return std::isfinite(rep.max_ratio) && !rep.rows.empty() ? kExitOk : kExitVerificationFailed;
    }
    if (s.which == "bohr-radius") {
      std::vector<RadiusEntry> corpus;
      if (has_input) {
        corpus = read_radius_corpus(read_json(s.input, in));
      } else {
        for (double a : {0.5, 0.9, 0.99}) corpus.push_back(mobius_entry(a, 50));
      }
      const RadiusReport rep = bohr_radius_check(corpus, bounds);
      emit(with_seed(to_json(rep), s.seed));
      return rep.all_pass ? kExitOk : kExitVerificationFailed;
    }
    throw ConfigError("unknown verification '" + s.which + "' (bohr, thm25, partial-sums, bohr-radius)");
  }
  if (command == "corona-demo") {
    const CoronaReport rep = corona_demo();
    emit(with_seed(to_json(rep), s.seed));
    return rep.passes ? kExitOk : kExitVerificationFailed;
  }
  if (command == "random-model") {
    RandomModelOptions opts;
    opts.horizon = s.horizon;
    opts.samples = s.samples;
    opts.max_set_size = s.max_set_size;
    emit(to_json(random_model(s.y, s.d, s.trials, s.seed, opts)));
    return kExitOk;
  }
  throw ConfigError("unknown command '" + command + "'");
}

// Finds --config before the real parse so that its values become defaults
// which explicit flags then override.
std::string find_config_path(const std::vector<std::string>& args) {
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) return args[k + 1];
    if (args[k].rfind("--config=", 0) == 0) return args[k].substr(9);
  }
  return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err, std::istream& in) {
  Settings s;
  std::vector<std::string> args = raw_args;
  try {
    const std::string config_path = find_config_path(args);
    if (!config_path.empty()) {
      apply_config(parse_json(read_text(config_path, in), config_path), s);
      if (!s.command.empty()) {
        bool named = false;
        for (const auto& a : args) named = named || std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
        if (!named) args.push_back(s.command);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Dirichlet polynomials, Bohr lifts and Sidon-constant certificates"};
  app.name("bohr-forge");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--config", s.config, "JSON run configuration; explicit flags take precedence");
  app.add_option("--threads", s.threads, "Worker thread cap (default: BOHR_FORGE_THREADS or all cores)");
  app.add_option("--format", s.format, "Output format: json, csv or md");
  app.add_option("--seed", s.seed, "Seed recorded in every report");
  app.add_option("-o,--output", s.output, "Write the report to this file");

  auto* primes = app.add_subcommand("primes", "List the primes up to a limit");
  primes->add_option("--limit", s.limit, "Sieve limit (at most 1e8)");

  auto* factor = app.add_subcommand("factor", "Factor positive integers");
  factor->add_option("numbers", s.numbers, "Integers to factor")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Dirichlet polynomial to its Bohr lift");
  lift_cmd->add_option("-i,--input", s.input, "Polynomial or generate envelope (default stdin)");
  auto* unlift_cmd = app.add_subcommand("unlift", "Multivariate polynomial back to a Dirichlet polynomial");
  unlift_cmd->add_option("-i,--input", s.input, "Polynomial or generate envelope (default stdin)");

  auto* rs = app.add_subcommand("rudin-shapiro", "Rudin-Shapiro pair P_n, Q_n");
  rs->add_option("--n", s.n, "Recursion depth");
  rs->add_flag("--dirichlet", s.dirichlet, "Shift by primes instead of powers of z");

  auto* generate = app.add_subcommand("generate", "Walsh-shift polynomial and its pull-back");
  generate->add_option("--q", s.q, "Matrix order");
  generate->add_option("--d", s.d, "Degree");
  generate->add_option("--matrix", s.matrix, "hadamard or schur");
  generate->add_option("--i", s.i, "Component, 1..q");
  generate->add_option("--term-budget", s.term_budget, "Maximum number of terms");

  auto* norms = app.add_subcommand("norms", "Sup-norm bounds");
  norms->add_option("--method", s.method, "grid, flow or lipschitz");
  norms->add_option("-i,--input", s.input, "Polynomial (default stdin)");
  norms->add_option("--points-per-dim", s.points_per_dim, "Lattice resolution (default from budget)");
  norms->add_option("--refine-steps", s.refine_steps, "Ascent passes after the grid sweep");
  norms->add_option("--T", s.horizon, "Flow horizon");
  norms->add_option("--samples", s.samples, "Flow samples (default 20 per fastest period)");
  norms->add_option("--budget", s.budget, "Maximum lattice points or flow samples");
  norms->add_flag("--random-fallback", s.fallback, "Sample randomly when the grid exceeds the budget");

  auto* cert = app.add_subcommand("sidon-cert", "Sidon-constant lower bound from a Walsh-shift polynomial");
  cert->add_option("--q", s.q, "Matrix order");
  cert->add_option("--d", s.d, "Degree");
  cert->add_option("--matrix", s.matrix, "hadamard or schur");
  cert->add_flag("--tighten", s.tighten, "Also certify the sup with a Lipschitz grid");
  cert->add_option("--points-per-dim", s.points_per_dim, "Lattice resolution for --tighten");
  cert->add_option("--budget", s.budget, "Maximum lattice points");
  cert->add_option("--term-budget", s.term_budget, "Maximum number of terms");

  auto* table = app.add_subcommand("sidon-table", "Lower-bound schedule over N");
  table->add_option("--N", s.ns, "Values of N");
  table->add_option("--exponent-fit", s.fit_d, "Fit -log R(N) / log log N at fixed degree d instead");

  auto* verify = app.add_subcommand("verify", "Empirical inequality checks");
  verify->add_option("which", s.which, "bohr, thm25, partial-sums or bohr-radius")->required();
  verify->add_option("-i,--input", s.input, "Corpus file (default built-in corpus)");
  verify->add_option("--N", s.ns, "Partial-sum cut-offs");

  app.add_subcommand("corona-demo", "Grid check of |f1|+|f2| >= 1/9 and the common zero of the lifts");

  auto* rm = app.add_subcommand("random-model", "Random-sign sums over squarefree integers");
  rm->add_option("--y", s.y, "Prime bound");
  rm->add_option("--d", s.d, "Maximum number of prime factors");
  rm->add_option("--trials", s.trials, "Number of sign draws");
  rm->add_option("--T", s.horizon, "Flow horizon");
  rm->add_option("--samples", s.samples, "Flow samples (default 20 per fastest period)");
  rm->add_option("--max-set-size", s.max_set_size, "Budget on the number of frequencies");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s.threads != 0) set_thread_limit(s.threads);
    parse_output_format(s.format);
    const Emitter emit{s, out};
    return dispatch(app.get_subcommands().front()->get_name(), s, emit, in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace bohr
