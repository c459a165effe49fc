// Command-line front end: arithdyn <command> --file problem.prob [options]
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "arithdyn/errors.hpp"
#include "arithdyn/heights.hpp"
#include "arithdyn/intersect.hpp"
#include "arithdyn/problem.hpp"
#include "arithdyn/report.hpp"
#include "arithdyn/theorem.hpp"

using namespace arithdyn;

namespace {

struct Options {
  std::string file;
  std::optional<unsigned> n;
  std::optional<std::string> epsilon;
  std::optional<std::size_t> kmax;
  std::optional<std::string> places;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> bit_budget;
  std::optional<long> bound;
  std::optional<std::string> slack;
  std::string format = "table";
  unsigned long d = 1;
  std::size_t dim = 2;
  std::vector<unsigned long> ms{50, 100, 200, 300};
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Computation: return 3;
    case ErrorKind::Budget: return 4;
  }
  return 3;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

RandomConfig random_config(const Options& o, const Problem& p) {
  RandomConfig rng;
  if (o.seed) rng.seed = *o.seed;
  else if (p.param("seed")) rng.seed = p.param_uint("seed", rng.seed);
  return rng;
}

unsigned depth(const Options& o, const Problem& p) {
  const unsigned n = o.n ? *o.n : static_cast<unsigned>(p.param_uint("n", 1));
  if (n == 0) throw InvalidArgument("n must be positive");
  return n;
}

PlaceSet places(const Options& o, const Problem& p) {
  if (o.places) return parse_places(*o.places);
  if (p.places) return *p.places;
  return PlaceSet{Place::infinite()};
}

Rational epsilon(const Options& o, const Problem& p, const Rational& fallback) {
  return o.epsilon ? parse_rational(*o.epsilon) : p.param_rational("epsilon", fallback);
}

SelfMap certified_map(const Problem& p) {
  SelfMap f = certify(p.self_map());
  if (!f.is_certified()) throw NotCertified("the map has a base point: it is not a morphism of P^N");
  return f;
}

int run_check_morphism(const Options& o) {
  const Problem p = load_problem(o.file);
  const MorphismCertificate c = check_morphism(p.self_map());
  if (o.format == "json") {
    print(to_json(c));
  } else {
    std::cout << (c.certified ? "morphism: yes" : "morphism: no (common zero)") << "\n"
              << "Macaulay degree " << c.degree_bound << ", matrix " << c.rows << " x " << c.columns << ", rank "
              << c.rank << "\n";
  }
  return 0;
}

int run_pullback(const Options& o) {
  const Problem p = load_problem(o.file);
  const SelfMap f = certified_map(p);
  const Divisor d = p.user_divisor();
  FactorBasis basis = p.factor_basis();
  const unsigned n = depth(o, p);
  const Divisor result = pullback(f, d, n, basis);
  if (o.format == "json") print(pullback_report(d, n, result, f.degree()));
  else std::cout << to_string(result) << "\n";
  return 0;
}

int run_cn(const Options& o) {
  const Problem p = load_problem(o.file);
  FactorBasis basis = p.factor_basis();
  const CnReport r = compute_cn(certified_map(p), p.user_divisor(), depth(o, p), basis, random_config(o, p));
  if (o.format == "json") print(to_json(r));
  else std::cout << table(r);
  return 0;
}

int run_orbit_scan(const Options& o) {
  const Problem p = load_problem(o.file);
  const SelfMap f = certified_map(p);
  const Divisor d = p.user_divisor();
  FactorBasis basis = p.factor_basis();
  const CnReport cn = compute_cn(f, d, depth(o, p), basis, random_config(o, p));
  OrbitScanOptions opts;
  opts.places = places(o, p);
  opts.epsilon = epsilon(o, p, opts.epsilon);
  opts.kmax = o.kmax ? *o.kmax : p.param_uint("kmax", opts.kmax);
  opts.bit_budget = o.bit_budget ? *o.bit_budget : p.param_uint("bit_budget", opts.bit_budget);
  opts.integral_tol = p.param_rational("integral_tol", opts.integral_tol);
  const OrbitScan scan = orbit_scan(f, d, p.point(), cn.c_n, opts);
  if (o.format == "json") {
    print(to_json(scan, opts.places, opts.epsilon));
  } else if (o.format == "csv") {
    std::cout << orbit_csv(scan);
  } else {
    std::cout << "c_" << cn.n << " = " << cn.c_n.get_str() << ", epsilon = " << opts.epsilon.get_str()
              << ", S = " << to_string(opts.places) << "\n"
              << table(scan);
  }
  return 0;
}

int run_rv_check(const Options& o) {
  const Problem p = load_problem(o.file);
  if (!p.divisor) throw InvalidArgument("no divisor declared");
  std::vector<HomogeneousForm> forms;
  for (const auto& [form, mult] : *p.divisor) forms.push_back(form);
  if (!forms.empty()) {
    std::vector<Irreducibility> status(forms.size(), Irreducibility::AssertedByUser);
    const IntersectionReport ir = properly_intersect(forms, status, random_config(o, p));
    if (ir.verdict != Verdict::Proper) throw InvalidArgument("the divisors do not intersect properly");
  }
  RvOptions opts;
  opts.places = places(o, p);
  opts.epsilon = epsilon(o, p, opts.epsilon);
  opts.bound = o.bound ? *o.bound : static_cast<long>(p.param_uint("bound", opts.bound));
  if (o.slack) opts.slack = parse_log(*o.slack);
  else opts.slack = p.param_log("slack");
  const RvReport r = rv_check(p.ring, forms, opts);
  if (o.format == "json") print(to_json(r, opts.places));
  else std::cout << table(r);
  return 0;
}

int run_beta(const Options& o) {
  const BetaReport r = beta_report(o.d, o.dim, o.ms);
  if (o.format == "json") print(to_json(r));
  else std::cout << table(r);
  return 0;
}

int run_validate(const Options& o) {
  std::ifstream in(o.file);
  if (!in) throw SyntaxError("cannot read " + o.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("not JSON: ") + e.what());
  }
  const auto problems = validate_report(j);
  for (const auto& msg : problems) std::cout << "invalid: " << msg << "\n";
  if (problems.empty()) std::cout << "ok\n";
  return problems.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for forward orbits of morphisms of projective space"};
  app.require_subcommand(1);
  Options o;

  auto file = [&](CLI::App* sub) { sub->add_option("--file", o.file, "problem file")->required()->check(CLI::ExistingFile); };
  auto seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "seed for random combinations"); };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* morph = app.add_subcommand("check-morphism", "certify that the map has no base points");
  file(morph);
  format(morph, {"table", "json"});

  auto* pb = app.add_subcommand("pullback", "pull the divisor back n times");
  file(pb);
  pb->add_option("--n", o.n, "iterate depth");
  format(pb, {"table", "json"});

  auto* cn = app.add_subcommand("cn", "compute gamma and c_n");
  file(cn);
  cn->add_option("--n", o.n, "iterate depth");
  seed(cn);
  format(cn, {"table", "json"});

  auto* scan = app.add_subcommand("orbit-scan", "flag orbit points below the c_n - epsilon threshold");
  file(scan);
  scan->add_option("--n", o.n, "iterate depth for c_n");
  scan->add_option("--epsilon", o.epsilon, "positive rational");
  scan->add_option("--kmax", o.kmax, "last orbit index");
  scan->add_option("--places", o.places, "place set, e.g. \"{inf, 2}\"");
  scan->add_option("--bit-budget", o.bit_budget, "coordinate size limit in bits");
  seed(scan);
  format(scan, {"table", "json", "csv"});

  auto* rv = app.add_subcommand("rv-check", "enumerate small points against the Subspace-type inequality");
  file(rv);
  rv->add_option("--bound", o.bound, "max |x_j| of enumerated points");
  rv->add_option("--epsilon", o.epsilon, "positive rational");
  rv->add_option("--places", o.places, "place set, e.g. \"{inf, 2}\"");
  rv->add_option("--slack", o.slack, "constant term, as log(r)");
  seed(rv);
  format(rv, {"table", "json"});

  auto* beta_cmd = app.add_subcommand("beta", "expected order of vanishing, formula and discrete ratios");
  beta_cmd->add_option("--d", o.d, "degree of the divisor")->check(CLI::PositiveNumber);
  beta_cmd->add_option("--dim", o.dim, "dimension N")->check(CLI::PositiveNumber);
  beta_cmd->add_option("--m", o.ms, "values of m for the discrete ratio");
  format(beta_cmd, {"table", "json"});

  auto* validate = app.add_subcommand("validate", "re-check the invariants of a JSON report");
  validate->add_option("report", o.file, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*morph) return run_check_morphism(o);
    if (*pb) return run_pullback(o);
    if (*cn) return run_cn(o);
    if (*scan) return run_orbit_scan(o);
    if (*rv) return run_rv_check(o);
    if (*beta_cmd) return run_beta(o);
    if (*validate) return run_validate(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
