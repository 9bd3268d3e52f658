#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtk {

using Integer = mpz_class;

// Exponent pair of q^eq t^et. Ordered graded-lexicographically with q > t.
struct Monomial {
  int eq = 0;
  int et = 0;

  int degree() const { return eq + et; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.eq <=> b.eq;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) { return {a.eq + b.eq, a.et + b.et}; }
};

struct Term {
  Monomial mono;
  Integer coeff;
};

// Sparse Laurent polynomial in q, t over the integers. Terms are kept sorted
// ascending in the Monomial order with no zero coefficients.
class QtPolynomial {
 public:
  QtPolynomial() = default;
  QtPolynomial(long c);  // NOLINT(google-explicit-constructor): integer literals are polynomials
  QtPolynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  static QtPolynomial monomial(int eq, int et, const Integer& c = 1);
  static QtPolynomial q() { return monomial(1, 0); }
  static QtPolynomial t() { return monomial(0, 1); }
  // 1 - q^a t^b
  static QtPolynomial one_minus(int a, int b);
  // Any term list; sorted and combined.
  static QtPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_constant() const;
  Integer coeff(int eq, int et) const;

  int min_eq() const;
  int max_eq() const;
  int min_et() const;
  int max_et() const;
  // True when every exponent is >= 0.
  bool is_ordinary() const;
  // True when no term involves q.
  bool is_univariate_t() const;

  QtPolynomial operator-() const;
  QtPolynomial& operator+=(const QtPolynomial& o);
  QtPolynomial& operator-=(const QtPolynomial& o);
  QtPolynomial& operator*=(const QtPolynomial& o);
  friend QtPolynomial operator+(QtPolynomial a, const QtPolynomial& b) { return a += b; }
  friend QtPolynomial operator-(QtPolynomial a, const QtPolynomial& b) { return a -= b; }
  friend QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b);
  friend bool operator==(const QtPolynomial& a, const QtPolynomial& b);

  QtPolynomial shifted(int eq, int et) const;  // multiply by q^eq t^et
  QtPolynomial pow(unsigned e) const;

  // Exact division by 1 - q^a t^b; nullopt when it does not divide.
  std::optional<QtPolynomial> divide_one_minus(int a, int b) const;
  // Exact division by an arbitrary nonzero polynomial; nullopt when inexact.
  std::optional<QtPolynomial> exact_divide(const QtPolynomial& d) const;
  // Divides every coefficient by c (must be exact).
  QtPolynomial divide_integer(const Integer& c) const;
  // gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;

  // q := q^a t^b ... general monomial substitutions.
  QtPolynomial substitute(Monomial q_to, Monomial t_to) const;
  QtPolynomial swap_qt() const { return substitute({0, 1}, {1, 0}); }
  // q := t^k
  QtPolynomial substitute_q_power(int k) const { return substitute({0, k}, {0, 1}); }
  // t := 1 (the result has no t)
  QtPolynomial at_t_one() const { return substitute({1, 0}, {0, 0}); }
  // q := 1
  QtPolynomial at_q_one() const { return substitute({0, 0}, {0, 1}); }
  // q := 0; throws DomainError if a negative power of q is present.
  QtPolynomial at_q_zero() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// (1 - q^a t^b)^multiplicity
struct BinomialFactor {
  int a = 0;
  int b = 0;
  int multiplicity = 1;

  // Greedy cancellation order: by a + b, then a.
  friend bool key_less(const BinomialFactor& x, const BinomialFactor& y) {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    return x.a < y.a;
  }
  friend bool same_key(const BinomialFactor& x, const BinomialFactor& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

using FactorList = std::vector<BinomialFactor>;

// Sorts by key and merges equal keys.
FactorList canonical_factors(FactorList factors);
QtPolynomial expand_factors(const FactorList& factors);

// numerator / prod (1 - q^a t^b)^m. Denominator factors that divide the
// numerator are cancelled on construction and after every operation.
class QtRational {
 public:
  QtRational() = default;
  QtRational(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  QtRational(QtPolynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  QtRational(QtPolynomial num, FactorList den);
  // prod num_factors / prod den_factors, identical factors cancelled first.
  static QtRational from_factors(const FactorList& num_factors, const FactorList& den_factors);

  const QtPolynomial& numerator() const { return num_; }
  const FactorList& denominator() const { return den_; }
  QtPolynomial expanded_denominator() const { return expand_factors(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  std::optional<QtPolynomial> as_polynomial() const;

  QtRational operator-() const;
  QtRational& operator+=(const QtRational& o);
  QtRational& operator-=(const QtRational& o);
  QtRational& operator*=(const QtRational& o);
  friend QtRational operator+(QtRational a, const QtRational& b) { return a += b; }
  friend QtRational operator-(QtRational a, const QtRational& b) { return a -= b; }
  friend QtRational operator*(QtRational a, const QtRational& b) { return a *= b; }
  // Divides by a product of binomials.
  QtRational divided_by_factors(const FactorList& factors) const;

  // Semantic equality via cross-multiplication.
  friend bool operator==(const QtRational& a, const QtRational& b);

  QtRational swap_qt() const;
  // q := t^k. Throws DomainError when a denominator factor vanishes (k = 0
  // with a factor 1 - q^a, a > 0).
  QtRational substitute_q_power(int k) const;
  // t := 1. Throws DomainError when a denominator factor vanishes.
  QtRational at_t_one() const;

  // Re-runs greedy cancellation (idempotent).
  QtRational normalized() const;

 private:
  void normalize();
  QtPolynomial num_;
  FactorList den_;
};

// Exact division of a univariate t-polynomial by (1-t)^m.
struct OneMinusTDivision {
  QtPolynomial quotient;
  bool exact = false;
  int divided = 0;           // how many factors of (1-t) came out
  Integer remainder_at_one;  // p_i(1) at the first failing step (0 when exact)
};
OneMinusTDivision divide_by_one_minus_t_power(const QtPolynomial& p, int m);

// All coefficients >= 0 and every exponent >= 0; univariate in t.
bool is_nonneg_polynomial(const QtPolynomial& p);

// [m]_t = 1 + t + ... + t^{m-1} (zero for m = 0).
QtPolynomial t_integer(int m);

}  // namespace qtk
