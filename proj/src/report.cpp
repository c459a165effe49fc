#include "arithdyn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

std::string str(const Integer& n) { return n.get_str(); }
std::string str(const Rational& q) { return q.get_str(); }

Json point_json(const ProjPoint& x) {
  Json j = Json::array();
  for (const auto& c : x.coords()) j.push_back(str(c));
  return j;
}

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Long points are abbreviated for tables.
std::string short_point(const ProjPoint& x, std::size_t width = 48) {
  std::string s = to_string(x);
  if (s.size() <= width) return s;
  std::size_t digits = 0;
  for (const auto& c : x.coords()) digits = std::max(digits, c.get_str().size());
  const std::string tail = "... (" + std::to_string(digits) + " digits)";
  return s.substr(0, width - tail.size()) + tail;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

Json places_json(const PlaceSet& places) {
  Json j = Json::array();
  for (const auto& v : places) j.push_back(to_string(v));
  return j;
}

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw SyntaxError(std::string("missing rational field ") + key);
  return parse_rational(j[key].get<std::string>());
}

Json subsets_json(const std::vector<std::vector<std::size_t>>& subsets, const Divisor& d) {
  Json out = Json::array();
  for (const auto& sub : subsets) {
    Json forms = Json::array();
    for (auto i : sub) forms.push_back(to_string(d.components()[i].form));
    out.push_back(forms);
  }
  return out;
}

}  // namespace

Json to_json(const ExactLog& v) {
  Json j;
  j["argument_numerator"] = str(v.argument().get_num());
  j["argument_denominator"] = str(v.argument().get_den());
  j["approx_decimal"] = v.approx();
  if (v.root() != 1) j["root"] = v.root();
  return j;
}

ExactLog exact_log_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("argument_numerator") || !j.contains("argument_denominator"))
    throw SyntaxError("not an exact log value");
  Rational arg;
  arg.get_num() = Integer(j["argument_numerator"].get<std::string>());
  arg.get_den() = Integer(j["argument_denominator"].get<std::string>());
  if (arg.get_den() <= 0 || arg.get_num() <= 0) throw SyntaxError("exact log argument must be positive");
  arg.canonicalize();
  const unsigned long root = j.contains("root") ? j["root"].get<unsigned long>() : 1;
  if (root == 0) throw SyntaxError("exact log root must be positive");
  return ExactLog(arg, root);
}

Json to_json(const Divisor& d) {
  Json j;
  j["text"] = to_string(d);
  j["degree"] = d.degree();
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json cj;
    cj["form"] = to_string(c.form);
    cj["degree"] = c.form.degree();
    cj["multiplicity"] = c.multiplicity;
    cj["status"] = to_string(c.status);
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

Json to_json(const IntersectionReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["method"] = to_string(r.method);
  j["trials"] = r.trials;
  j["probabilistic"] = r.probabilistic;
  if (r.failing_subset) j["failing_subset"] = *r.failing_subset;
  return j;
}

Json to_json(const MorphismCertificate& c) {
  Json j;
  j["kind"] = "check-morphism";
  j["certified"] = c.certified;
  j["macaulay_degree"] = c.degree_bound;
  j["rows"] = c.rows;
  j["columns"] = c.columns;
  j["rank"] = c.rank;
  return j;
}

Json pullback_report(const Divisor& input, unsigned n, const Divisor& result, unsigned delta_f) {
  Json j;
  j["kind"] = "pullback";
  j["n"] = n;
  j["delta_f"] = delta_f;
  j["input"] = to_json(input);
  j["pullback"] = to_json(result);
  return j;
}

Json to_json(const CnReport& r) {
  Json j;
  j["kind"] = "cn";
  j["n"] = r.n;
  j["delta_f"] = r.delta_f;
  j["mu"] = r.mu;
  j["dimension"] = r.dimension;
  j["pullback"] = to_json(r.pullback);
  j["reduced_part"] = to_json(r.selection.part);
  j["q_n"] = r.m_i.size();
  j["m_i"] = r.m_i;
  j["gamma"] = r.gamma;
  j["c_n"] = str(r.c_n);
  j["c_n_approx"] = r.c_n.get_d();
  j["inconclusive"] = r.inconclusive;
  j["selection_ambiguity"] = subsets_json(r.selection_ambiguity, r.pullback);
  j["intersection"] = to_json(r.selection.report);
  const DegreeIdentity id = degree_identity(r);
  j["degree_identity"] = {{"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds()}};
  return j;
}

Json to_json(const OrbitScan& s, const PlaceSet& places, const Rational& epsilon) {
  Json j;
  j["kind"] = "orbit-scan";
  j["places"] = places_json(places);
  j["epsilon"] = str(epsilon);
  j["threshold"] = str(s.threshold);
  j["mu"] = s.mu;
  Json records = Json::array();
  for (const auto& r : s.records) {
    Json rj;
    rj["k"] = r.k;
    rj["point"] = point_json(r.point);
    rj["height"] = to_json(r.height);
    rj["proximity"] = r.proximity ? to_json(*r.proximity) : Json();
    rj["counting"] = r.counting ? to_json(*r.counting) : Json();
    rj["flag"] = to_string(r.flag);
    rj["integral_candidate"] = r.integral_candidate;
    if (r.proximity)
      rj["identity_holds"] = *r.proximity + *r.counting == r.height.scaled(Rational(static_cast<long>(s.mu)));
    records.push_back(rj);
  }
  j["records"] = records;
  j["cycle"] = s.cycle ? Json::array({s.cycle->first, s.cycle->second}) : Json();
  j["flagged"] = s.flagged;
  j["integral_candidates"] = s.integral_candidates;
  return j;
}

Json to_json(const BetaReport& r) {
  Json j;
  j["kind"] = "beta";
  j["d"] = r.d;
  j["dimension"] = r.dimension;
  j["beta_formula"] = str(r.formula);
  Json disc = Json::array();
  for (const auto& [m, v] : r.discrete)
    disc.push_back({{"m", m}, {"value", str(v)}, {"approx", v.get_d()}, {"error", Rational(v - r.formula).get_d()}});
  j["beta_discrete"] = disc;
  return j;
}

Json to_json(const RvReport& r, const PlaceSet& places) {
  auto violator = [](const RvViolator& v) {
    Json j;
    j["point"] = point_json(v.point);
    j["excess"] = to_json(v.excess);
    j["family_line"] = v.family_line ? Json(*v.family_line) : Json();
    return j;
  };
  Json j;
  j["kind"] = "rv-check";
  j["vacuous"] = r.vacuous;
  j["dimension"] = r.dimension;
  j["bound"] = r.bound;
  j["places"] = places_json(places);
  j["epsilon"] = str(r.epsilon);
  j["slack"] = to_json(r.slack);
  Json fam = Json::array();
  for (const auto& l : r.family) fam.push_back(to_string(l));
  j["family"] = fam;
  j["points_checked"] = r.points_checked;
  j["points_on_divisors"] = r.points_on_divisors;
  j["violations"] = r.violations;
  Json vs = Json::array();
  for (const auto& v : r.violators) vs.push_back(violator(v));
  j["violators"] = vs;
  j["zero_slack_on_family"] = r.zero_slack_on_family;
  j["zero_slack_off_family"] = r.zero_slack_off_family;
  Json off = Json::array();
  for (const auto& v : r.zero_slack_off_family_points) off.push_back(violator(v));
  j["zero_slack_off_family_points"] = off;
  j["max_excess"] = r.max_excess ? to_json(*r.max_excess) : Json();
  j["argmax"] = r.argmax ? point_json(*r.argmax) : Json();
  return j;
}

std::vector<std::string> validate_report(const Json& j) {
  std::vector<std::string> problems;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };
  try {
    if (!j.is_object() || !j.contains("kind")) return {"missing kind"};
    const std::string kind = j["kind"].get<std::string>();
    auto divisor_degree = [&](const Json& d) {
      unsigned long total = 0;
      for (const auto& c : d["components"]) total += c["degree"].get<unsigned long>() * c["multiplicity"].get<unsigned long>();
      return total;
    };
    if (kind == "pullback") {
      const unsigned long in = divisor_degree(j["input"]);
      const unsigned long out = divisor_degree(j["pullback"]);
      check(in == j["input"]["degree"].get<unsigned long>(), "input degree does not match its components");
      check(out == j["pullback"]["degree"].get<unsigned long>(), "pullback degree does not match its components");
      const Integer scale = pow(Integer(j["delta_f"].get<unsigned long>()), j["n"].get<unsigned long>());
      check(Integer(out) == scale * Integer(in), "pullback degree is not delta^n times the input degree");
    } else if (kind == "cn") {
      const auto m_i = j["m_i"].get<std::vector<unsigned long>>();
      check(!m_i.empty(), "empty m_i");
      check(m_i.size() == j["q_n"].get<std::size_t>(), "q_n does not match m_i");
      const unsigned long dim = j["dimension"].get<unsigned long>();
      const unsigned long gamma = *std::max_element(m_i.begin(), m_i.end()) * (dim + 1);
      check(gamma == j["gamma"].get<unsigned long>(), "gamma is not max m_i (N+1)");
      const unsigned long n = j["n"].get<unsigned long>();
      const Integer den = pow(Integer(j["delta_f"].get<unsigned long>()), n) * pow(Integer(j["mu"].get<unsigned long>()), n);
      Rational c(Integer(std::accumulate(m_i.begin(), m_i.end(), 0UL)) - Integer(gamma), den);
      c.canonicalize();
      check(c == rational_field(j, "c_n"), "c_n does not match its inputs");
      check(j["inconclusive"].get<bool>() == (c <= 0), "inconclusive flag disagrees with the sign of c_n");
      const long lhs = static_cast<long>(divisor_degree(j["pullback"])) - static_cast<long>(divisor_degree(j["reduced_part"]));
      check(lhs == j["degree_identity"]["lhs"].get<long>(), "degree identity lhs does not match the divisors");
      const long rhs = den.get_si() - static_cast<long>(std::accumulate(m_i.begin(), m_i.end(), 0UL));
      check(rhs == j["degree_identity"]["rhs"].get<long>(), "degree identity rhs does not match m_i");
    } else if (kind == "orbit-scan") {
      const Rational mu(j["mu"].get<long>());
      const Rational threshold = rational_field(j, "threshold");
      check(rational_field(j, "epsilon") > 0, "epsilon must be positive");
      for (const auto& r : j["records"]) {
        const std::string at = "record " + std::to_string(r["k"].get<std::size_t>());
        const ExactLog h = exact_log_from_json(r["height"]);
        const std::string flag = r["flag"].get<std::string>();
        if (flag == "on-divisor") {
          check(r["proximity"].is_null() && r["counting"].is_null(), at + ": on-divisor record carries numbers");
          continue;
        }
        const ExactLog m = exact_log_from_json(r["proximity"]);
        const ExactLog c = exact_log_from_json(r["counting"]);
        check(m + c == h.scaled(mu), at + ": proximity + counting != mu height");
        if (flag == "height-zero") {
          check(h.is_zero(), at + ": height-zero record has positive height");
        } else {
          const bool below = compare(c, h.scaled(threshold * mu)) <= 0;
          check(below == (flag == "yes"), at + ": flag disagrees with the threshold comparison");
        }
      }
    } else if (kind == "beta") {
      Rational expect(1, Integer(j["d"].get<unsigned long>()) * Integer(j["dimension"].get<unsigned long>() + 1));
      expect.canonicalize();
      check(expect == rational_field(j, "beta_formula"), "beta is not 1/(d(N+1))");
    } else if (kind == "rv-check") {
      if (j["vacuous"].get<bool>()) {
        check(j["points_checked"].get<std::size_t>() == 0, "vacuous report checked points");
      } else {
        check(j["violators"].size() <= j["violations"].get<std::size_t>(), "more violators listed than counted");
        check(j["zero_slack_on_family"].get<std::size_t>() + j["zero_slack_off_family"].get<std::size_t>() >=
                  j["violations"].get<std::size_t>(),
              "slack violations are not zero-slack violations");
        if (!j["max_excess"].is_null()) exact_log_from_json(j["max_excess"]);
      }
    } else if (kind == "check-morphism") {
      check(j["rank"].get<std::size_t>() <= std::min(j["rows"].get<std::size_t>(), j["columns"].get<std::size_t>()),
            "rank exceeds matrix size");
      if (j["certified"].get<bool>())
        check(j["rank"].get<std::size_t>() == j["columns"].get<std::size_t>(), "certified without full rank");
    } else {
      problems.push_back("unknown kind '" + kind + "'");
    }
  } catch (const Error& e) {
    problems.push_back(e.what());
  } catch (const nlohmann::json::exception& e) {
    problems.push_back(std::string("malformed report: ") + e.what());
  }
  return problems;
}

std::string orbit_csv(const OrbitScan& s) {
  std::ostringstream out;
  out << "k,point,height,proximity,counting,flag,integral_candidate\n";
  for (const auto& r : s.records) {
    std::string pt;
    for (const auto& c : r.point.coords()) pt += (pt.empty() ? "" : ":") + str(c);
    out << r.k << "," << pt << "," << fixed(r.height.approx()) << ","
        << (r.proximity ? fixed(r.proximity->approx()) : "") << "," << (r.counting ? fixed(r.counting->approx()) : "")
        << "," << to_string(r.flag) << "," << (r.integral_candidate ? "true" : "false") << "\n";
  }
  return out.str();
}

std::string table(const CnReport& r) {
  std::ostringstream out;
  out << "pullback D^(" << r.n << "): " << to_string(r.pullback) << "\n";
  out << "reduced properly intersecting part: " << to_string(r.selection.part) << "\n";
  out << "intersection check: " << to_string(r.selection.report.verdict) << " ("
      << to_string(r.selection.report.method) << (r.selection.report.probabilistic ? ", probabilistic" : "") << ")\n";
  out << "delta_f = " << r.delta_f << ", mu = " << r.mu << ", N = " << r.dimension << ", q_n = " << r.m_i.size()
      << "\n";
  out << "m_i =";
  for (auto m : r.m_i) out << " " << m;
  out << "\ngamma = " << r.gamma << "\n";
  out << "c_" << r.n << " = " << str(r.c_n) << (r.inconclusive ? "  (not positive: inconclusive)" : "") << "\n";
  if (!r.selection_ambiguity.empty())
    out << "note: " << r.selection_ambiguity.size() << " other maximal subset(s) were possible\n";
  return out.str();
}

std::string table(const OrbitScan& s) {
  std::ostringstream out;
  out << "threshold c_n - epsilon = " << str(s.threshold) << ", mu = " << s.mu << "\n";
  out << pad("k", 4) << pad("point", 52) << pad("h", 14) << pad("m_S", 14) << pad("n_S", 14) << pad("n_S/(mu h)", 14)
      << "flag\n";
  for (const auto& r : s.records) {
    out << pad(std::to_string(r.k), 4) << pad(short_point(r.point), 52) << pad(fixed(r.height.approx()), 14);
    if (r.proximity) {
      out << pad(fixed(r.proximity->approx()), 14) << pad(fixed(r.counting->approx()), 14);
      out << pad(r.height.is_zero() ? "-" : fixed(r.counting->approx() / (static_cast<double>(s.mu) * r.height.approx())),
                 14);
    } else {
      out << pad("inf", 14) << pad("-", 14) << pad("-", 14);
    }
    out << to_string(r.flag) << (r.integral_candidate ? " (integral candidate)" : "") << "\n";
  }
  if (s.cycle) out << "cycle: point " << s.cycle->second << " repeats point " << s.cycle->first << "\n";
  out << "flagged: " << s.flagged.size() << " of " << s.records.size() << "\n";
  return out.str();
}

std::string table(const BetaReport& r) {
  std::ostringstream out;
  out << "beta(d=" << r.d << ", N=" << r.dimension << ") = " << str(r.formula) << "\n";
  for (const auto& [m, v] : r.discrete)
    out << "  m = " << pad(std::to_string(m), 6) << " discrete " << fixed(v.get_d(), 8) << "  error "
        << fixed(Rational(v - r.formula).get_d(), 8) << "\n";
  return out.str();
}

std::string table(const RvReport& r) {
  std::ostringstream out;
  if (r.vacuous) return "no divisors: nothing to check\n";
  out << "bound " << r.bound << ", epsilon " << str(r.epsilon) << ", slack " << to_string(r.slack) << " ~ "
      << fixed(r.slack.approx()) << "\n";
  out << "points checked: " << r.points_checked << " (" << r.points_on_divisors << " on the divisors, skipped)\n";
  out << "candidate exceptional lines:";
  if (r.family.empty()) out << " none";
  for (const auto& l : r.family) out << " (" << to_string(l) << ")";
  out << "\n";
  out << "violations with slack: " << r.violations << "\n";
  out << "zero-slack violations: " << r.zero_slack_on_family << " on candidate lines, " << r.zero_slack_off_family
      << " elsewhere\n";
  if (r.max_excess)
    out << "max of sum m_S/d_i - (N+1) h: " << fixed(r.max_excess->approx()) << " at " << to_string(*r.argmax) << "\n";
  return out.str();
}

}  // namespace arithdyn
