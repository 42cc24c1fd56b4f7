#include "csplab/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "csplab/errors.hpp"

namespace csplab {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent) {
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPolynomial::at_one() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

bool IntPolynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

bool IntPolynomial::is_palindromic() const {
  // Symmetric about the centre of [lowest nonzero exponent, degree].
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) return true;
  std::size_t hi = coeffs_.size() - 1;
  while (lo < hi) {
    if (coeffs_[lo] != coeffs_[hi]) return false;
    ++lo;
    --hi;
  }
  return true;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const {
  if (k == 0) return constant(at_one());
  if (is_zero()) return {};
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  *this = *this * other;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(IntPolynomial a, const Integer& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.normalize();
  return a;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

LaurentPolynomial::LaurentPolynomial(long lowest_exponent, std::vector<Integer> coefficients)
    : lowest_(lowest_exponent), coeffs_(std::move(coefficients)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    lowest_ += static_cast<long>(lead);
  }
  if (coeffs_.empty()) lowest_ = 0;
}

void LaurentPolynomial::add_term(long exponent, const Integer& c) {
  if (c == 0) return;
  if (coeffs_.empty()) {
    lowest_ = exponent;
    coeffs_.push_back(c);
    return;
  }
  if (exponent < lowest_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lowest_ - exponent), Integer(0));
    lowest_ = exponent;
  }
  auto idx = static_cast<std::size_t>(exponent - lowest_);
  if (idx >= coeffs_.size()) coeffs_.resize(idx + 1);
  coeffs_[idx] += c;
  normalize();
}

IntPolynomial LaurentPolynomial::to_polynomial() const {
  if (!is_ordinary()) {
    throw NegativeExponent("Laurent polynomial has a term q^" + std::to_string(lowest_));
  }
  if (coeffs_.empty()) return {};
  std::vector<Integer> v(static_cast<std::size_t>(lowest_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

void BivariatePolynomial::add_term(unsigned q_exp, unsigned t_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BivariatePolynomial::at_one() const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) acc += c;
  return acc;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    Integer mag = abs(c);
    bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) os << mag.get_str();
    if (e.first > 0) os << 'q' << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) os << 't' << (e.second > 1 ? "^" + std::to_string(e.second) : "");
  }
  return os.str();
}

Integer CyclotomicResidue::integer_value() const {
  if (!is_integer()) {
    throw NonIntegerEvaluation("value at a primitive " + std::to_string(order) +
                               "th root of unity is not an integer: residue " + residue.to_string());
  }
  return residue.coefficient(0);
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw PreconditionViolation("division by the zero polynomial");
  const Integer& lead = g.coefficients().back();
  if (lead != 1 && lead != -1) throw PreconditionViolation("divide_monic: divisor is not monic");
  std::vector<Integer> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t gd = gc.size() - 1;
  if (rem.size() <= gd) return {IntPolynomial{}, f};
  std::vector<Integer> quot(rem.size() - gd);
  for (std::size_t i = rem.size(); i-- > gd;) {
    if (rem[i] == 0) continue;
    Integer t = rem[i] * lead;  // lead is its own inverse
    quot[i - gd] = t;
    for (std::size_t j = 0; j <= gd; ++j) rem[i - gd + j] -= t * gc[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw PreconditionViolation("exact_divide: zero divisor");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) {
    throw InexactDivision("exact_divide: " + g.to_string() + " does not divide " + f.to_string());
  }
  std::vector<Integer> rem = f.coefficients();
  const auto& gc = g.coefficients();
  const std::size_t gd = gc.size() - 1;
  const Integer& lead = gc.back();
  std::vector<Integer> quot(rem.size() - gd);
  Integer t, r;
  for (std::size_t i = rem.size(); i-- > gd;) {
    if (rem[i] == 0) continue;
    mpz_tdiv_qr(t.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    if (r != 0) {
      throw InexactDivision("exact_divide: " + g.to_string() + " does not divide " + f.to_string());
    }
    quot[i - gd] = t;
    for (std::size_t j = 0; j <= gd; ++j) rem[i - gd + j] -= t * gc[j];
  }
  for (std::size_t i = 0; i < gd; ++i) {
    if (rem[i] != 0) {
      throw InexactDivision("exact_divide: " + g.to_string() + " does not divide " + f.to_string());
    }
  }
  return IntPolynomial(std::move(quot));
}

const IntPolynomial& cyclotomic(std::uint64_t d) {
  if (d == 0) throw PreconditionViolation("cyclotomic: order must be positive");
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  // q^d - 1
  IntPolynomial acc = IntPolynomial::monomial(1, d) - IntPolynomial{1};
  for (std::uint64_t e = 1; e < d; ++e) {
    if (d % e == 0) acc = exact_divide(acc, cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  // unordered_map never invalidates references to elements on insert.
  return cache.try_emplace(d, std::move(acc)).first->second;
}

CyclotomicResidue reduce_mod_cyclotomic(const IntPolynomial& f, std::uint64_t d) {
  if (d == 0) throw PreconditionViolation("reduce_mod_cyclotomic: order must be positive");
  // Phi_d divides q^d - 1, so folding first keeps the long division short.
  std::vector<Integer> folded = fold_mod_qn(f, d);
  auto [quot, rem] = divide_monic(IntPolynomial(std::move(folded)), cyclotomic(d));
  return CyclotomicResidue{d, std::move(rem)};
}

IntPolynomial q_int(unsigned n) { return IntPolynomial(std::vector<Integer>(n, Integer(1))); }

IntPolynomial q_factorial(unsigned n) {
  IntPolynomial acc{1};
  for (unsigned i = 2; i <= n; ++i) acc *= q_int(i);
  return acc;
}

IntPolynomial gaussian_binomial(long n, long k) {
  if (n < 0) throw PreconditionViolation("gaussian_binomial: n must be nonnegative");
  if (k < 0 || k > n) return {};
  // Row-by-row Pascal table; row[j] = [m choose j]_q.
  std::vector<IntPolynomial> row{IntPolynomial{1}};
  for (long m = 1; m <= n; ++m) {
    std::vector<IntPolynomial> next(static_cast<std::size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) {
      IntPolynomial v;
      if (j <= m - 1) v += row[static_cast<std::size_t>(j)];
      if (j >= 1) v += row[static_cast<std::size_t>(j - 1)].shifted(static_cast<std::size_t>(m - j));
      next[static_cast<std::size_t>(j)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Integer eval_at_root(const IntPolynomial& f, std::uint64_t d) {
  if (d == 0) throw PreconditionViolation("eval_at_root: order must be positive");
  if (d == 1) return f.at_one();
  return reduce_mod_cyclotomic(f, d).integer_value();
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer root_of_unity_binomial(unsigned n, unsigned k, unsigned d) {
  if (d == 0 || n % d != 0) {
    throw PreconditionViolation("root_of_unity_binomial: d must divide n");
  }
  if (k % d != 0) return 0;
  return binomial(static_cast<long>(n / d + k / d) - 1, static_cast<long>(k / d));
}

std::vector<Integer> fold_mod_qn(const IntPolynomial& f, std::size_t n) {
  if (n == 0) throw PreconditionViolation("fold_mod_qn: n must be positive");
  std::vector<Integer> a(n);
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) a[i % n] += c[i];
  return a;
}

IntPolynomial q_catalan(unsigned n) { return exact_divide(gaussian_binomial(2L * n, n), q_int(n + 1)); }

IntPolynomial q_fuss_catalan_A(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw PreconditionViolation("q_fuss_catalan_A: n and m must be positive");
  IntPolynomial num{1};
  IntPolynomial den{1};
  for (unsigned i = 1; i < n; ++i) {
    num *= q_int(m * n + i + 1);
    den *= q_int(i + 1);
  }
  return exact_divide(num, den);
}

namespace {

struct PowerMultiset {
  std::size_t exponent;
  Integer multiplicity;
};

std::vector<PowerMultiset> substitution_values(const IntPolynomial& f, const char* who) {
  if (!f.has_nonnegative_coefficients()) {
    throw PreconditionViolation(std::string(who) + ": polynomial must have nonnegative coefficients");
  }
  std::vector<PowerMultiset> out;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.push_back({i, c[i]});
  }
  return out;
}

// Coefficient of x^k in prod_i g_i(x q^{e_i}) where g_i is the generating
// series of one block of equal variables; `term(m, t)` gives the coefficient
// of x^t in that block's series.
template <typename Term>
IntPolynomial specialize(unsigned k, const std::vector<PowerMultiset>& values, Term term) {
  // layers[t] = coefficient of x^t, a polynomial in q.
  std::vector<IntPolynomial> layers(k + 1);
  layers[0] = IntPolynomial{1};
  for (const auto& v : values) {
    std::vector<IntPolynomial> next(k + 1);
    for (unsigned have = 0; have <= k; ++have) {
      if (layers[have].is_zero()) continue;
      for (unsigned t = 0; have + t <= k; ++t) {
        Integer c = term(v.multiplicity, t);
        if (c == 0) continue;
        next[have + t] += (layers[have] * c).shifted(v.exponent * t);
      }
    }
    layers = std::move(next);
  }
  return layers[k];
}

}  // namespace

IntPolynomial plethysm_h(unsigned k, const IntPolynomial& f) {
  auto values = substitution_values(f, "plethysm_h");
  // 1/(1 - x)^m = sum_t C(m+t-1, t) x^t
  return specialize(k, values, [](const Integer& m, unsigned t) {
    if (t == 0) return Integer(1);
    Integer r;
    Integer top = m + t - 1;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), t);
    return r;
  });
}

IntPolynomial plethysm_e(unsigned k, const IntPolynomial& f) {
  auto values = substitution_values(f, "plethysm_e");
  if (Integer(k) > f.at_one()) throw PreconditionViolation("plethysm_e: k exceeds f(1)");
  // (1 + x)^m = sum_t C(m, t) x^t
  return specialize(k, values, [](const Integer& m, unsigned t) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), t);
    return r;
  });
}

IntPolynomial face_poly(long k, long n, long d) {
  if (d <= 0 || d % 2 != 0) throw PreconditionViolation("face_poly: d must be even and positive");
  if (k < 0 || k >= d) throw PreconditionViolation("face_poly: need 0 <= k < d");
  if (n <= d) throw PreconditionViolation("face_poly: need n > d");
  IntPolynomial total;
  const auto nu = static_cast<unsigned>(n);
  for (long j = 1; j <= d / 2; ++j) {
    IntPolynomial top = q_int(nu) * gaussian_binomial(n - j, j);
    IntPolynomial summand = exact_divide(top, q_int(static_cast<unsigned>(n - j)));
    total += summand * gaussian_binomial(j, k + 1 - j);
  }
  return total;
}

LaurentPolynomial subst_t_q_inverse(const BivariatePolynomial& f) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    out.add_term(static_cast<long>(e.first) - static_cast<long>(e.second), c);
  }
  return out;
}

CyclotomicResidue eval_bivariate_at_root(const BivariatePolynomial& f, std::uint64_t order,
                                         std::uint64_t q_step, std::uint64_t t_step) {
  if (order == 0) throw PreconditionViolation("eval_bivariate_at_root: order must be positive");
  std::vector<Integer> powers(order);
  for (const auto& [e, c] : f.terms()) {
    std::uint64_t exp = (e.first % order) * (q_step % order) + (e.second % order) * (t_step % order);
    powers[exp % order] += c;
  }
  if (order == 1) return CyclotomicResidue{1, IntPolynomial::constant(powers[0])};
  auto [quot, rem] = divide_monic(IntPolynomial(std::move(powers)), cyclotomic(order));
  return CyclotomicResidue{order, std::move(rem)};
}

}  // namespace csplab
