#include "arithdyn/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "arithdyn/errors.hpp"

namespace arithdyn {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// Splits at sep outside parentheses and brackets.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

// Prefixes a parse error from a nested parser with the line number.
std::string at_line(std::size_t line, const Error& e) {
  std::string what = e.what();
  const std::string tag = e.name() + ": ";
  if (what.rfind(tag, 0) == 0) what.erase(0, tag.size());
  if (what.rfind("line ", 0) == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("line " + std::to_string(line_) + ": " + msg);
  }

  // "name = rest"
  std::pair<std::string, std::string> binding(const std::string& rest) const {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) fail("expected '='");
    const std::string name = trim(rest.substr(0, eq));
    if (!is_identifier(name)) fail("bad name '" + name + "'");
    return {name, trim(rest.substr(eq + 1))};
  }

  std::string bracketed(const std::string& s, char open, char close) const {
    if (s.size() < 2 || s.front() != open || s.back() != close)
      fail(std::string("expected ") + open + "..." + close);
    return s.substr(1, s.size() - 2);
  }

 private:
  std::size_t line_;
};

RingPtr parse_ring(const std::string& rest, const LineParser& lp) {
  std::istringstream in(rest);
  std::string space, vars_kw;
  in >> space >> vars_kw;
  if (space.size() < 2 || space[0] != 'P' ||
      !std::all_of(space.begin() + 1, space.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    lp.fail("expected 'ring P<N> vars ...'");
  if (vars_kw != "vars") lp.fail("expected 'vars'");
  std::string names;
  std::getline(in, names);
  std::vector<std::string> vars;
  for (const auto& v : split_top(names, ',')) {
    if (!is_identifier(v)) lp.fail("bad variable name '" + v + "'");
    vars.push_back(v);
  }
  const unsigned long n = std::stoul(space.substr(1));
  if (vars.size() != n + 1) lp.fail("P" + std::to_string(n) + " needs " + std::to_string(n + 1) + " variables");
  return make_ring(vars);
}

std::vector<std::pair<HomogeneousForm, unsigned long>> parse_divisor(const std::string& text, const RingPtr& ring,
                                                                     const LineParser& lp) {
  std::vector<std::pair<HomogeneousForm, unsigned long>> out;
  if (text == "0") return out;
  for (const auto& term : split_top(text, '+')) {
    if (term.empty() || term.front() != '(') lp.fail("divisor terms look like (form)^k");
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++depth;
      if (term[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) lp.fail("unbalanced parentheses");
    unsigned long mult = 1;
    const std::string tail = trim(term.substr(close + 1));
    if (!tail.empty()) {
      if (tail[0] != '^') lp.fail("expected '^k' after a divisor component");
      const std::string k = trim(tail.substr(1));
      if (k.empty() || k.size() > 9 ||
          !std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        lp.fail("bad multiplicity '" + k + "'");
      mult = std::stoul(k);
      if (mult == 0) lp.fail("multiplicity must be positive");
    }
    out.emplace_back(parse_form(term.substr(1, close - 1), ring), mult);
  }
  return out;
}

}  // namespace

Problem parse_problem(const std::string& text) {
  Problem p;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const LineParser lp(line_no);
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto sp = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));

    if (keyword == "ring") {
      if (p.ring) lp.fail("only one ring per file");
      p.ring = parse_ring(rest, lp);
      continue;
    }
    if (!p.ring) lp.fail("'" + keyword + "' before the ring declaration");

    try {
      if (keyword == "map") {
        if (p.map) lp.fail("only one map per file");
        auto [name, value] = lp.binding(rest);
        std::vector<HomogeneousForm> comps;
        for (const auto& e : split_top(lp.bracketed(value, '[', ']'), ',')) comps.push_back(parse_form(e, p.ring));
        if (comps.size() != p.ring->num_vars())
          throw ArityMismatch("line " + std::to_string(line_no) + ": map needs " +
                              std::to_string(p.ring->num_vars()) + " components");
        p.map_name = name;
        p.map = SelfMap(std::move(comps));
      } else if (keyword == "divisor") {
        if (p.divisor) lp.fail("only one divisor per file");
        auto [name, value] = lp.binding(rest);
        p.divisor_name = name;
        p.divisor = parse_divisor(value, p.ring, lp);
      } else if (keyword == "basis") {
        std::string value = trim(rest);
        if (!value.empty() && value[0] == '=') value = trim(value.substr(1));
        const std::string inner = trim(lp.bracketed(value, '{', '}'));
        if (!inner.empty())
          for (const auto& e : split_top(inner, ',')) p.basis.push_back(parse_form(e, p.ring));
      } else if (keyword == "point") {
        auto [name, value] = lp.binding(rest);
        ProjPoint x = parse_point(value);
        if (x.size() != p.ring->num_vars()) lp.fail("point has the wrong number of coordinates");
        p.points.emplace_back(name, std::move(x));
      } else if (keyword == "places") {
        auto [name, value] = lp.binding(rest);
        p.places = parse_places(value);
      } else if (keyword == "param") {
        auto [name, value] = lp.binding(rest);
        if (value.empty()) lp.fail("empty value for '" + name + "'");
        p.params[name] = value;
      } else {
        lp.fail("unknown declaration '" + keyword + "'");
      }
    } catch (const SyntaxError& e) {
      throw SyntaxError(at_line(line_no, e));
    } catch (const InhomogeneousError& e) {
      throw InhomogeneousError(at_line(line_no, e));
    } catch (const UnknownVariable& e) {
      throw UnknownVariable(at_line(line_no, e));
    } catch (const ZeroFormError& e) {
      throw ZeroFormError(at_line(line_no, e));
    } catch (const NotPrime& e) {
      throw NotPrime(at_line(line_no, e));
    }
  }
  if (!p.ring) throw SyntaxError("no ring declaration");
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

Divisor Problem::user_divisor() const {
  if (!divisor) throw InvalidArgument("no divisor declared");
  if (divisor->empty()) throw InvalidArgument("the declared divisor is empty");
  return arithdyn::user_divisor(ring, *divisor);
}

FactorBasis Problem::factor_basis() const {
  FactorBasis b;
  for (const auto& f : basis) add_user_basis(b, f);
  return b;
}

const SelfMap& Problem::self_map() const {
  if (!map) throw InvalidArgument("no map declared");
  return *map;
}

const ProjPoint& Problem::point() const {
  if (points.empty()) throw InvalidArgument("no point declared");
  return points.front().second;
}

std::optional<std::string> Problem::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

unsigned long Problem::param_uint(const std::string& name, unsigned long fallback) const {
  const auto v = param(name);
  if (!v) return fallback;
  if (v->empty() || v->size() > 18 ||
      !std::all_of(v->begin(), v->end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SyntaxError("param " + name + " must be a nonnegative integer, got '" + *v + "'");
  return std::stoul(*v);
}

Rational Problem::param_rational(const std::string& name, const Rational& fallback) const {
  const auto v = param(name);
  return v ? parse_rational(*v) : fallback;
}

std::optional<ExactLog> Problem::param_log(const std::string& name) const {
  const auto v = param(name);
  if (!v) return std::nullopt;
  return parse_log(*v);
}

ExactLog parse_log(const std::string& text) {
  std::string t = trim(text);
  if (t.rfind("log(", 0) == 0) {
    if (t.back() != ')') throw SyntaxError("expected log(r), got '" + text + "'");
    t = trim(t.substr(4, t.size() - 5));
  }
  const Rational r = parse_rational(t);
  if (r <= 0) throw SyntaxError("log argument must be positive: '" + text + "'");
  return ExactLog(r);
}

}  // namespace arithdyn
