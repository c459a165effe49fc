#include "arithdyn/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "arithdyn/errors.hpp"

namespace arithdyn {

const char* to_string(Verdict v) { return v == Verdict::Proper ? "proper" : "improper"; }

const char* to_string(IntersectionMethod m) {
  switch (m) {
    case IntersectionMethod::Pairwise: return "pairwise";
    case IntersectionMethod::TripleElimination: return "triple-elimination";
    case IntersectionMethod::RandomizedCombination: return "randomized-combination";
  }
  return "pairwise";
}

namespace {

void monomials_rec(std::size_t var, unsigned remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[var] = k;
    monomials_rec(var + 1, remaining - k, cur, out);
  }
}

std::vector<Exponents> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents cur(num_vars, 0);
  monomials_rec(0, degree, cur, out);
  return out;
}

constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(cols));
  Integer p = static_cast<unsigned long>(kPrime), r;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r(r.get_mpz_t(), rows[i][j].get_mpz_t(), p.get_mpz_t());
      m[i][j] = r.get_ui();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = powmod(m[rank][c], kPrime - 2);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mulmod(m[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mulmod(f, m[rank][j]);
        m[i][j] = m[i][j] >= sub ? m[i][j] - sub : m[i][j] + kPrime - sub;
      }
    }
    ++rank;
  }
  return rank;
}

struct MacaulayOutcome {
  bool surjective;
  long degree_bound;
  std::size_t rows, columns, rank;
};

// Exactly N+1 forms of positive degree.
MacaulayOutcome macaulay_test(std::span<const HomogeneousForm> forms) {
  const std::size_t n = forms.front().ring()->num_vars();
  long total = 0;
  for (const auto& f : forms) total += f.degree();
  const long dstar = total - static_cast<long>(n - 1);
  const auto cols = monomials_of_degree(n, static_cast<unsigned>(dstar));
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  std::vector<std::vector<Integer>> rows;
  for (const auto& f : forms) {
    const long d = f.degree();
    if (d > dstar) continue;
    for (const auto& mono : monomials_of_degree(n, static_cast<unsigned>(dstar - d))) {
      std::vector<Integer> row(cols.size());
      for (const auto& [e, c] : f.poly().terms()) {
        Exponents s = e;
        for (std::size_t i = 0; i < n; ++i) s[i] += mono[i];
        row[index.at(s)] = c;
      }
      rows.push_back(std::move(row));
    }
  }
  // Full rank mod p already proves full rank over Q.
  std::size_t rank = rank_mod_p(rows, cols.size());
  if (rank < cols.size()) rank = exact_rank(rows);
  return {rank == cols.size(), dstar, rows.size(), cols.size(), rank};
}

long random_coefficient(std::mt19937_64& gen, long bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<long>(gen() % span) - bound;
}

HomogeneousForm random_linear_form(const RingPtr& ring, std::mt19937_64& gen, long bound) {
  for (;;) {
    Polynomial p(ring->num_vars());
    for (std::size_t i = 0; i < ring->num_vars(); ++i)
      p += Polynomial::variable(ring->num_vars(), i) * Integer(random_coefficient(gen, bound));
    if (!p.is_zero()) return HomogeneousForm(ring, std::move(p));
  }
}

}  // namespace

std::size_t exact_rank(std::vector<std::vector<Integer>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    // Bareiss fraction-free step.
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

EmptinessResult empty_common_zero(std::span<const HomogeneousForm> forms, const RandomConfig& rng) {
  if (forms.empty()) return {ZeroLocus::PossiblyNonempty, true};
  const RingPtr ring = forms.front().ring();
  const std::size_t n = ring->num_vars();
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("empty_common_zero: mixed rings");
    if (f.is_zero()) throw ZeroFormError("empty_common_zero: zero form");
    if (f.degree() == 0) return {ZeroLocus::Empty, true};
  }
  // Fewer than N+1 hypersurfaces always meet in P^N.
  if (forms.size() < n) return {ZeroLocus::PossiblyNonempty, true};
  EmptinessResult out;
  if (forms.size() == n) {
    const auto m = macaulay_test(forms);
    out.verdict = m.surjective ? ZeroLocus::Empty : ZeroLocus::PossiblyNonempty;
    out.exact = true;
    out.degree_bound = m.degree_bound;
    out.rows = m.rows;
    out.columns = m.columns;
    out.rank = m.rank;
    return out;
  }
  unsigned max_deg = 0;
  for (const auto& f : forms) max_deg = std::max(max_deg, f.degree());
  std::mt19937_64 gen(rng.seed);
  out.exact = false;
  for (unsigned t = 0; t < rng.trials; ++t) {
    std::vector<HomogeneousForm> combos;
    while (combos.size() < n) {
      Polynomial g(n);
      for (const auto& f : forms) {
        const Integer c = random_coefficient(gen, rng.coefficient_bound);
        Polynomial term = f.poly() * c;
        if (f.degree() < max_deg)
          term = term * pow(random_linear_form(ring, gen, rng.coefficient_bound).poly(), max_deg - f.degree());
        g += term;
      }
      if (!g.is_zero()) combos.emplace_back(ring, std::move(g));
    }
    const auto m = macaulay_test(combos);
    out.trials = t + 1;
    out.degree_bound = m.degree_bound;
    out.rows = m.rows;
    out.columns = m.columns;
    out.rank = m.rank;
    if (m.surjective) {
      out.verdict = ZeroLocus::Empty;
      out.exact = true;
      return out;
    }
  }
  out.verdict = ZeroLocus::PossiblyNonempty;
  return out;
}

IntersectionOracle::IntersectionOracle(std::vector<HomogeneousForm> forms, RandomConfig rng)
    : forms_(std::move(forms)), rng_(rng), dim_(0) {
  if (!forms_.empty()) dim_ = forms_.front().ring()->dimension();
  for (auto& f : forms_) {
    if (f.is_zero()) throw ZeroFormError("properly_intersect: zero form");
    f = f.canonical();
  }
}

// subset has size between 2 and N+1.
IntersectionOracle::SubsetVerdict IntersectionOracle::check_exact_size(const std::vector<std::size_t>& subset) {
  if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
  SubsetVerdict v{true, false, IntersectionMethod::Pairwise, 0};
  std::vector<HomogeneousForm> fs;
  for (auto i : subset) fs.push_back(forms_[i]);
  if (subset.size() == 2) {
    v.ok = !(fs[0] == fs[1]);
    if (v.ok && dim_ == 1) {
      const auto r = empty_common_zero(fs, rng_);
      v.ok = r.verdict == ZeroLocus::Empty;
      v.method = IntersectionMethod::TripleElimination;
    }
  } else if (subset.size() == dim_ + 1) {
    const auto r = empty_common_zero(fs, rng_);
    v.ok = r.verdict == ZeroLocus::Empty;
    v.method = IntersectionMethod::TripleElimination;
  } else {
    // Codimension check: cut by N+1-m random hyperplanes.
    const RingPtr& ring = forms_.front().ring();
    std::mt19937_64 gen(rng_.seed ^ (0x9e3779b97f4a7c15ULL * (subset.size() + 7 * subset.front())));
    v.method = IntersectionMethod::RandomizedCombination;
    v.ok = false;
    for (unsigned t = 0; t < rng_.trials && !v.ok; ++t) {
      std::vector<HomogeneousForm> cut = fs;
      while (cut.size() < dim_ + 1) cut.push_back(random_linear_form(ring, gen, rng_.coefficient_bound));
      v.trials = t + 1;
      v.ok = empty_common_zero(cut, rng_).verdict == ZeroLocus::Empty;
    }
    v.probabilistic = !v.ok;
  }
  memo_.emplace(subset, v);
  return v;
}

IntersectionReport IntersectionOracle::check(std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  IntersectionReport report;
  const std::size_t limit = std::min(subset.size(), dim_ + 1);
  for (std::size_t m = 2; m <= limit; ++m) {
    // Enumerate m-subsets of `subset` in lexicographic order.
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<std::size_t> chosen;
      for (auto i : idx) chosen.push_back(subset[i]);
      const auto v = check_exact_size(chosen);
      report.method = std::max(report.method, v.method);
      report.trials = std::max(report.trials, v.trials);
      if (!v.ok) {
        report.verdict = Verdict::Improper;
        report.failing_subset = chosen;
        report.method = v.method;
        report.probabilistic = v.probabilistic;
        return report;
      }
      std::size_t k = m;
      while (k > 0 && idx[k - 1] == subset.size() - m + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return report;
}

IntersectionReport IntersectionOracle::check_all() {
  std::vector<std::size_t> all(forms_.size());
  std::iota(all.begin(), all.end(), 0);
  return check(all);
}

IntersectionReport properly_intersect(std::span<const HomogeneousForm> forms,
                                      std::span<const Irreducibility> status, const RandomConfig& rng) {
  if (status.size() != forms.size()) throw ArityMismatch("properly_intersect: one status per form");
  for (std::size_t i = 0; i < status.size(); ++i)
    if (status[i] == Irreducibility::Unverified)
      throw UnverifiedIrreducibility("form " + to_string(forms[i]) + " is not known to be irreducible");
  IntersectionOracle oracle(std::vector<HomogeneousForm>(forms.begin(), forms.end()), rng);
  return oracle.check_all();
}

}  // namespace arithdyn
