#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"

// Independent construction of Macdonald P via Gram-Schmidt in the power-sum
// basis. Only the arithmetic layer is shared with the tableau pipeline.
namespace qtk::oracle {

// value / den with a positive integer den; lets the oracle carry the rational
// constants of the power-sum basis (1/z_rho and friends).
class Scalar {
 public:
  Scalar() = default;
  Scalar(QtRational value, Integer den = 1);  // NOLINT(google-explicit-constructor)
  static Scalar from_rational(const mpq_class& c);

  const QtRational& value() const { return value_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return value_.is_zero(); }
  // Succeeds when the integer denominator cancels.
  std::optional<QtRational> as_qt_rational() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void reduce();
  QtRational value_;
  Integer den_ = 1;
};

// 1/s when the numerator of s factors as constant * monomial * binomials
// (possibly times a factor of its binomial denominator). Throws
// ConsistencyError otherwise.
Scalar reciprocal(const Scalar& s);

// Rows p_rho, columns m_lambda, both over partitions of n in descending lex order.
struct IntegerTable {
  std::vector<Partition> index;
  std::vector<std::vector<Integer>> entries;
};
IntegerTable powersum_in_monomials(int n);

// <p_rho, p_rho>_{q,t} = z_rho prod (1 - q^{rho_i}) / (1 - t^{rho_i}), same index.
std::vector<QtRational> qt_gram_powersums(int n);

Integer z_rho(const Partition& rho);

// A degree-n symmetric function as coefficients on p_rho (descending lex).
using PowerSumVector = std::vector<Scalar>;

Scalar qt_scalar_product(const PowerSumVector& f, const PowerSumVector& g, const std::vector<QtRational>& gram);

struct GramSchmidtResult {
  int n = 0;
  std::vector<Partition> index;
  std::vector<PowerSumVector> P;            // P_lambda on the power sums
  std::vector<Scalar> norms;                // <P_lambda, P_lambda>_{q,t}
  std::vector<std::vector<QtRational>> K1;  // K1[lambda][mu]: coefficient of m_mu in P_lambda
  std::vector<QtRational> gram;             // diagonal of the power-sum Gram form

  // Monomial coefficients of a power-sum vector.
  std::vector<QtRational> to_monomial(const PowerSumVector& f) const;
  IntegerTable p_in_m;
};
GramSchmidtResult gram_schmidt_P(int n);

// h_n[X (1-t)/(1-q)] against P_(n) / <P_(n), P_(n)>, both in monomials.
bool check_Qn_plethysm(int n);
bool check_Qn_plethysm(const GramSchmidtResult& gs);

// <P_lambda, P_mu> = 0 for all lambda != mu, recomputed from the output.
bool audit_orthogonality(const GramSchmidtResult& gs);

}  // namespace qtk::oracle
