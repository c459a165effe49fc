#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "arithdyn/exact_log.hpp"
#include "arithdyn/numbers.hpp"

namespace arithdyn {

/// A point of P^N(Q) in normalized integer coordinates: coprime, not all
/// zero, first nonzero coordinate positive. Equal points compare equal.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Normalizes. Throws AllZero.
  explicit ProjPoint(std::vector<Integer> coords);

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  /// max_j |x_j|
  Integer max_abs() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend ProjPoint normalize(std::span<const Integer> raw);
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Integer> coords_;
};

/// Clears denominators, divides by the gcd, fixes the sign.
ProjPoint normalize(std::span<const Rational> raw);
ProjPoint normalize(std::span<const Integer> raw);

/// Logarithmic height for O(1): log max_j |x_j| on normalized coordinates.
ExactLog height(const ProjPoint& x);

/// A place of Q: the archimedean one or a prime.
class Place {
 public:
  static Place infinite() { return Place(); }
  /// Throws NotPrime.
  static Place finite(const Integer& p);

  bool is_infinite() const { return infinite_; }
  const Integer& prime() const { return prime_; }

  friend bool operator==(const Place& a, const Place& b) {
    return a.infinite_ == b.infinite_ && a.prime_ == b.prime_;
  }
  /// inf sorts first, then primes ascending.
  friend bool operator<(const Place& a, const Place& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_;
    return a.prime_ < b.prime_;
  }

 private:
  Place() = default;
  bool infinite_ = true;
  Integer prime_ = 0;
};

using PlaceSet = std::set<Place>;

std::string to_string(const ProjPoint& x);
std::string to_string(const Place& v);
std::string to_string(const PlaceSet& s);

/// "[a : b : c]" with integer or rational entries.
ProjPoint parse_point(const std::string& text);
/// "{inf, 2, 3}"; "{}" is the empty set.
PlaceSet parse_places(const std::string& text);

}  // namespace arithdyn
