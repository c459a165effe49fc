#include "arithdyn/projective.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arithdyn/errors.hpp"

namespace arithdyn {

ProjPoint::ProjPoint(std::vector<Integer> coords) {
  *this = normalize(std::span<const Integer>(coords));
}

Integer ProjPoint::max_abs() const {
  Integer m = 0;
  for (const auto& c : coords_)
    if (abs(c) > m) m = abs(c);
  return m;
}

ProjPoint normalize(std::span<const Integer> raw) {
  if (raw.empty() || std::all_of(raw.begin(), raw.end(), [](const Integer& c) { return c == 0; }))
    throw AllZero("projective point with all coordinates zero");
  Integer g = 0;
  for (const auto& c : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  auto first = std::find_if(raw.begin(), raw.end(), [](const Integer& c) { return c != 0; });
  if (*first < 0) g = -g;
  ProjPoint p;
  p.coords_.reserve(raw.size());
  for (const auto& c : raw) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    p.coords_.push_back(std::move(q));
  }
  return p;
}

ProjPoint normalize(std::span<const Rational> raw) {
  Integer l = 1;
  for (const auto& r : raw) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(raw.size());
  for (const auto& r : raw) ints.push_back(r.get_num() * (l / r.get_den()));
  return normalize(std::span<const Integer>(ints));
}

ExactLog height(const ProjPoint& x) { return ExactLog::of(x.max_abs()); }

Place Place::finite(const Integer& p) {
  if (p < 2 || !is_prime(p)) throw NotPrime(p.get_str() + " is not prime");
  Place v;
  v.infinite_ = false;
  v.prime_ = p;
  return v;
}

std::string to_string(const ProjPoint& x) {
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += " : ";
    out += x[i].get_str();
  }
  return out + "]";
}

std::string to_string(const Place& v) { return v.is_infinite() ? "inf" : v.prime().get_str(); }

std::string to_string(const PlaceSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v);
  }
  return out + "}";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace

ProjPoint parse_point(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw SyntaxError("point literal must look like [a : b : c], got '" + text + "'");
  std::vector<Rational> raw;
  for (const auto& part : split(t.substr(1, t.size() - 2), ':')) raw.push_back(parse_rational(part));
  if (raw.size() < 2) throw SyntaxError("point literal needs at least two coordinates");
  return normalize(std::span<const Rational>(raw));
}

PlaceSet parse_places(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw SyntaxError("place set must look like {inf, 2, 3}, got '" + text + "'");
  PlaceSet out;
  const std::string body = trim(t.substr(1, t.size() - 2));
  if (body.empty()) return out;
  for (const auto& part : split(body, ',')) {
    if (part == "inf" || part == "infinity" || part == "oo") {
      out.insert(Place::infinite());
      continue;
    }
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SyntaxError("bad place '" + part + "'");
    out.insert(Place::finite(Integer(part)));
  }
  return out;
}

}  // namespace arithdyn
