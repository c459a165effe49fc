#include "arithdyn/form.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "arithdyn/errors.hpp"

namespace arithdyn {

const char* to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::AssertedByUser: return "asserted-by-user";
    case Irreducibility::VerifiedLinear: return "verified-linear";
    case Irreducibility::VerifiedNoLinearFactor: return "verified-no-linear-factor";
    case Irreducibility::Unverified: return "unverified";
  }
  return "unverified";
}

Ring::Ring(std::vector<std::string> var_names) : names_(std::move(var_names)) {
  if (names_.size() < 2) throw InvalidArgument("a ring needs at least two variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
      throw SyntaxError("bad variable name '" + n + "'");
    for (char c : n)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw SyntaxError("bad variable name '" + n + "'");
    if (!seen.insert(n).second) throw SyntaxError("duplicate variable '" + n + "'");
  }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingPtr make_ring(std::vector<std::string> var_names) {
  return std::make_shared<const Ring>(std::move(var_names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same_ring(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("forms live in different rings");
}

unsigned exps_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// a > b in graded reverse lexicographic order.
bool grevlex_greater(const Exponents& a, const Exponents& b) {
  const unsigned da = exps_degree(a), db = exps_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

HomogeneousForm::HomogeneousForm(RingPtr ring, Polynomial p) : ring_(std::move(ring)), poly_(std::move(p)) {
  if (!ring_) throw InvalidArgument("form without a ring");
  if (poly_.is_zero()) poly_ = Polynomial(ring_->num_vars());
  if (poly_.num_vars() != ring_->num_vars())
    throw ArityMismatch("polynomial variable count does not match the ring");
  if (!poly_.is_homogeneous()) throw InhomogeneousError("expression mixes degrees");
}

HomogeneousForm HomogeneousForm::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->num_vars();
  return HomogeneousForm(std::move(ring), Polynomial::variable(n, index));
}

HomogeneousForm HomogeneousForm::constant(RingPtr ring, const Integer& c) {
  const auto n = ring->num_vars();
  return HomogeneousForm(std::move(ring), Polynomial::constant(n, c));
}

unsigned HomogeneousForm::degree() const {
  if (poly_.is_zero()) throw ZeroFormError("the zero form has no degree");
  return static_cast<unsigned>(poly_.total_degree());
}

HomogeneousForm HomogeneousForm::canonical() const {
  return HomogeneousForm(ring_, poly_.primitive_part());
}

bool HomogeneousForm::is_canonical() const { return poly_ == poly_.primitive_part(); }

bool canonical_less(const HomogeneousForm& a, const HomogeneousForm& b) {
  const int da = a.poly().total_degree(), db = b.poly().total_degree();
  if (da != db) return da < db;
  auto ia = a.poly().terms().begin(), ea = a.poly().terms().end();
  auto ib = b.poly().terms().begin(), eb = b.poly().terms().end();
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == ea && ib != eb;
}

HomogeneousForm multiply(const HomogeneousForm& a, const HomogeneousForm& b) {
  require_same_ring(a, b);
  return HomogeneousForm(a.ring(), a.poly() * b.poly());
}

HomogeneousForm add(const HomogeneousForm& a, const HomogeneousForm& b) {
  require_same_ring(a, b);
  return HomogeneousForm(a.ring(), a.poly() + b.poly());
}

HomogeneousForm power(const HomogeneousForm& a, unsigned exponent) {
  return HomogeneousForm(a.ring(), pow(a.poly(), exponent));
}

HomogeneousForm compose(const HomogeneousForm& f, std::span<const HomogeneousForm> subs) {
  if (subs.size() != f.ring()->num_vars())
    throw ArityMismatch("compose: expected " + std::to_string(f.ring()->num_vars()) + " forms");
  if (f.is_zero()) throw ZeroFormError("compose: zero outer form");
  const RingPtr& target = subs.front().ring();
  const unsigned d = subs.front().degree();
  std::vector<Polynomial> polys;
  polys.reserve(subs.size());
  for (const auto& s : subs) {
    if (!same_ring(s.ring(), target)) throw RingMismatch("compose: substitutions in different rings");
    if (s.degree() != d) throw DegreeMismatch("compose: substitutions of different degrees");
    polys.push_back(s.poly());
  }
  return HomogeneousForm(target, f.poly().substitute(polys));
}

std::optional<HomogeneousForm> try_divide(const HomogeneousForm& a, const HomogeneousForm& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw ZeroFormError("division by the zero form");
  auto q = divide_exact(a.poly(), b.poly());
  if (!q) return std::nullopt;
  return HomogeneousForm(a.ring(), *std::move(q));
}

HomogeneousForm exact_divide(const HomogeneousForm& a, const HomogeneousForm& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible(to_string(b) + " does not divide " + to_string(a));
  return *std::move(q);
}

HomogeneousForm gcd(const HomogeneousForm& a, const HomogeneousForm& b) {
  require_same_ring(a, b);
  return HomogeneousForm(a.ring(), gcd(a.poly(), b.poly()).primitive_part());
}

FormSquarefree squarefree_decomposition(const HomogeneousForm& f) {
  if (f.is_zero()) throw ZeroFormError("squarefree decomposition of the zero form");
  auto sf = squarefree_decomposition(f.poly());
  FormSquarefree out{sf.unit, {}};
  for (auto& [p, e] : sf.factors) out.factors.emplace_back(HomogeneousForm(f.ring(), std::move(p)), e);
  return out;
}

bool coprime(std::span<const HomogeneousForm> forms, std::uint64_t seed) {
  if (forms.empty()) return true;
  for (const auto& f : forms) {
    if (f.is_zero()) throw ZeroFormError("coprime: zero form");
    if (f.degree() == 0) return true;
  }
  if (forms.size() == 1) return false;
  const std::size_t n = forms.front().ring()->num_vars();
  std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&state]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 41) - 20;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    // x_i -> a_i s + b_i t
    std::vector<Polynomial> line;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial l = Polynomial::variable(2, 0) * Integer(next()) + Polynomial::variable(2, 1) * Integer(next());
      line.push_back(std::move(l));
    }
    Polynomial g(2);
    bool usable = true;
    for (const auto& f : forms) {
      Polynomial r = f.poly().substitute(line);
      if (r.is_zero()) {
        usable = false;
        break;
      }
      g = gcd(g, r);
    }
    if (usable && g.is_constant()) return true;
  }
  Polynomial g(n);
  for (const auto& f : forms) {
    g = gcd(g, f.poly());
    if (g.is_constant()) return true;
  }
  return false;
}

Integer evaluate(const HomogeneousForm& f, std::span<const Integer> coords) {
  return f.poly().evaluate(coords);
}

HomogeneousForm derivative(const HomogeneousForm& f, std::size_t var) {
  return HomogeneousForm(f.ring(), f.poly().derivative(var));
}

std::string to_string(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Exponents, Integer>> terms(f.poly().terms().begin(), f.poly().terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
  const auto& names = f.ring()->var_names();
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Integer mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string body;
    const bool is_const = exps_degree(e) == 0;
    if (mag != 1 || is_const) body = mag.get_str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += names[i];
      if (e[i] > 1) body += "^" + std::to_string(e[i]);
    }
    out += body;
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring), n_(ring->num_vars()) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (starts_primary()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  // In a juxtaposed run like "yz^3" the exponent binds to the last name only.
  Polynomial power() {
    auto [prefix, base] = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      if (pos_ - start > 5) fail("exponent too large");
      const unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      return prefix * pow(base, e);
    }
    return prefix * base;
  }

  // (everything but the last factor, last factor)
  std::pair<Polynomial, Polynomial> primary() {
    const char c = peek();
    const Polynomial one = Polynomial::constant(n_, 1);
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return {one, std::move(inner)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {one, Polynomial::constant(n_, Integer(s_.substr(start, pos_ - start)))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return identifier(s_.substr(start, pos_ - start));
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  // A run of letters/digits: a variable name, or a juxtaposition of variable
  // names ("xy" is x*y).
  std::pair<Polynomial, Polynomial> identifier(const std::string& word) {
    const auto& names = ring_->var_names();
    // best[i]: a split of word[i..] into variable names, as indices.
    std::vector<std::optional<std::vector<std::size_t>>> best(word.size() + 1);
    best[word.size()] = std::vector<std::size_t>{};
    for (std::size_t i = word.size(); i-- > 0;) {
      for (std::size_t v = 0; v < names.size(); ++v) {
        const auto& nm = names[v];
        if (i + nm.size() <= word.size() && word.compare(i, nm.size(), nm) == 0 && best[i + nm.size()]) {
          auto cand = *best[i + nm.size()];
          cand.insert(cand.begin(), v);
          if (!best[i] || cand.size() < best[i]->size()) best[i] = std::move(cand);
        }
      }
    }
    if (!best[0]) throw UnknownVariable("unknown variable '" + word + "' in \"" + s_ + "\"");
    const auto& split = *best[0];
    Polynomial p = Polynomial::constant(n_, 1);
    for (std::size_t i = 0; i + 1 < split.size(); ++i) p = p * Polynomial::variable(n_, split[i]);
    return {std::move(p), Polynomial::variable(n_, split.back())};
  }

  std::string s_;
  RingPtr ring_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogeneousForm parse_form_allow_zero(const std::string& text, const RingPtr& ring) {
  Polynomial p = FormParser(text, ring).parse();
  return HomogeneousForm(ring, std::move(p));
}

HomogeneousForm parse_form(const std::string& text, const RingPtr& ring) {
  HomogeneousForm f = parse_form_allow_zero(text, ring);
  if (f.is_zero()) throw ZeroFormError("expression \"" + text + "\" expands to zero");
  return f;
}

}  // namespace arithdyn
