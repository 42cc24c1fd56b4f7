#pragma once

// Integer polynomials in q, the q-analogues built from them, and exact
// evaluation at roots of unity through reduction modulo cyclotomic
// polynomials.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace csplab {

using Integer = mpz_class;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Canonical form: no trailing zero coefficients; zero is the empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  Integer evaluate(const Integer& x) const;
  Integer at_one() const;

  bool has_nonnegative_coefficients() const;
  bool is_palindromic() const;

  /// q^k * f
  IntPolynomial shifted(std::size_t k) const;
  /// f(q^k)
  IntPolynomial substitute_power(std::size_t k) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human form, e.g. "1+q+2q^2+q^3+q^4"; zero prints as "0".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Polynomial in q and q^{-1}: coefficients[i] multiplies q^(lowest_exponent + i).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(long lowest_exponent, std::vector<Integer> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  long lowest_exponent() const { return lowest_; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  bool is_ordinary() const { return coeffs_.empty() || lowest_ >= 0; }

  /// Throws NegativeExponent unless is_ordinary().
  IntPolynomial to_polynomial() const;

  void add_term(long exponent, const Integer& c);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  long lowest_ = 0;
  std::vector<Integer> coeffs_;
};

/// Sparse polynomial in q and t. No zero coefficients are stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BivariatePolynomial() = default;

  void add_term(unsigned q_exp, unsigned t_exp, const Integer& c);
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer at_one() const;

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::map<Exponents, Integer> terms_;
};

/// An element of Z[q]/Phi_d(q), i.e. a value in Z[omega_d].
struct CyclotomicResidue {
  std::uint64_t order = 1;
  IntPolynomial residue;  // degree < phi(order)

  bool is_integer() const { return residue.is_constant(); }
  /// Throws NonIntegerEvaluation when the residue is not constant.
  Integer integer_value() const;
};

// Arithmetic plumbing.

/// f / g when g divides f exactly in Z[q]; InexactDivision otherwise.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

/// Quotient and remainder for a divisor with leading coefficient +-1.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& f,
                                                     const IntPolynomial& g);

/// Phi_d, from q^d - 1 divided by Phi_e for every proper divisor e of d.
/// Results are cached; safe to call concurrently.
const IntPolynomial& cyclotomic(std::uint64_t d);

CyclotomicResidue reduce_mod_cyclotomic(const IntPolynomial& f, std::uint64_t d);

// q-analogues.

IntPolynomial q_int(unsigned n);
IntPolynomial q_factorial(unsigned n);
/// Zero outside 0 <= k <= n. Built with the Pascal-type recurrence only.
IntPolynomial gaussian_binomial(long n, long k);

/// The integer f(omega_d). Throws NonIntegerEvaluation if it is not one.
Integer eval_at_root(const IntPolynomial& f, std::uint64_t d);

/// Closed form for the q-binomial [n+k-1 choose k] at omega_d, d | n.
Integer root_of_unity_binomial(unsigned n, unsigned k, unsigned d);

/// (a_0, ..., a_{n-1}) with f = sum a_i q^i mod (1 - q^n).
std::vector<Integer> fold_mod_qn(const IntPolynomial& f, std::size_t n);

IntPolynomial q_catalan(unsigned n);
/// Type A_{n-1} q-Fuss-Catalan: prod_{i=1}^{n-1} [mn+i+1]_q / [i+1]_q.
IntPolynomial q_fuss_catalan_A(unsigned n, unsigned m);

/// sum over S_n of q^des, by enumeration.
IntPolynomial eulerian_poly(unsigned n);

/// h_k and e_k evaluated at the multiset {q^i with multiplicity m_i}.
IntPolynomial plethysm_h(unsigned k, const IntPolynomial& f);
IntPolynomial plethysm_e(unsigned k, const IntPolynomial& f);

/// q-analogue of the k-face count of the cyclic polytope CP(n, d), d even.
IntPolynomial face_poly(long k, long n, long d);

/// F(q, q^{-1}).
LaurentPolynomial subst_t_q_inverse(const BivariatePolynomial& f);

/// F(zeta^q_step, zeta^t_step) in Z[zeta], zeta a primitive `order`-th root.
CyclotomicResidue eval_bivariate_at_root(const BivariatePolynomial& f,
                                         std::uint64_t order,
                                         std::uint64_t q_step,
                                         std::uint64_t t_step);

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
Integer binomial(long n, long k);

}  // namespace csplab
