#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "arithdyn/form.hpp"

namespace arithdyn {

/// Randomness knobs for the combination steps.
struct RandomConfig {
  std::uint64_t seed = 20240601;
  unsigned trials = 3;
  long coefficient_bound = 100;
};

enum class ZeroLocus { Empty, PossiblyNonempty };

/// Outcome of the Macaulay emptiness test.
struct EmptinessResult {
  ZeroLocus verdict = ZeroLocus::PossiblyNonempty;
  /// True when the verdict is a proof (always for Empty; for nonempty only
  /// when no random combination was involved).
  bool exact = true;
  /// Macaulay degree D* = sum d_i - N of the last matrix built (-1 if none).
  long degree_bound = -1;
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  unsigned trials = 0;
};

/// Decides whether the forms have a common zero in P^N over the algebraic
/// closure, via surjectivity of the Macaulay map
///   (+)_i S_{D*-d_i} -> S_{D*},  D* = sum d_i - N.
/// More than N+1 forms are first replaced by N+1 random combinations.
EmptinessResult empty_common_zero(std::span<const HomogeneousForm> forms, const RandomConfig& rng = {});

/// Rank over Q of an integer matrix (rows of equal length).
std::size_t exact_rank(std::vector<std::vector<Integer>> rows);

enum class Verdict { Proper, Improper };
enum class IntersectionMethod { Pairwise, TripleElimination, RandomizedCombination };

const char* to_string(Verdict v);
const char* to_string(IntersectionMethod m);

struct IntersectionReport {
  Verdict verdict = Verdict::Proper;
  /// Indices into the checked list; present iff improper.
  std::optional<std::vector<std::size_t>> failing_subset;
  IntersectionMethod method = IntersectionMethod::Pairwise;
  unsigned trials = 0;
  /// Some conclusion rests on random combinations (only possible for N >= 3
  /// or more than N+1 forms in the nonempty direction).
  bool probabilistic = false;
};

/// Proper-intersection test for hypersurfaces in P^N, memoized over subsets.
///
/// A collection intersects properly iff every subcollection of size m <= N
/// meets in codimension m and every subcollection of size N+1 has no common
/// zero. Pairs of distinct irreducibles always meet in codimension 2; for
/// 3 <= m <= N the codimension is certified by cutting with N+1-m random
/// hyperplanes and running the emptiness test.
class IntersectionOracle {
 public:
  IntersectionOracle(std::vector<HomogeneousForm> forms, RandomConfig rng = {});

  /// subset: indices into the forms given at construction.
  IntersectionReport check(std::vector<std::size_t> subset);
  IntersectionReport check_all();

  std::size_t dimension() const { return dim_; }

 private:
  struct SubsetVerdict {
    bool ok;
    bool probabilistic;
    IntersectionMethod method;
    unsigned trials;
  };
  SubsetVerdict check_exact_size(const std::vector<std::size_t>& subset);

  std::vector<HomogeneousForm> forms_;
  RandomConfig rng_;
  std::size_t dim_;
  std::map<std::vector<std::size_t>, SubsetVerdict> memo_;
};

/// Throws UnverifiedIrreducibility when any status is Unverified.
IntersectionReport properly_intersect(std::span<const HomogeneousForm> forms,
                                      std::span<const Irreducibility> status, const RandomConfig& rng = {});

}  // namespace arithdyn
