#include "qtkostka/oracle.hpp"

#include <algorithm>
#include <map>

#include "qtkostka/errors.hpp"

namespace qtk::oracle {

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(QtRational value, Integer den) : value_(std::move(value)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero integer denominator");
  if (den_ < 0) {
    den_ = -den_;
    value_ = -value_;
  }
  reduce();
}

Scalar Scalar::from_rational(const mpq_class& c) {
  return Scalar(QtRational(QtPolynomial(Integer(c.get_num()))), Integer(c.get_den()));
}

void Scalar::reduce() {
  if (den_ == 1) return;
  if (value_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = value_.numerator().content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g == 1) return;
  value_ = QtRational(value_.numerator().divide_integer(g), value_.denominator());
  den_ /= g;
}

std::optional<QtRational> Scalar::as_qt_rational() const {
  if (den_ != 1) return std::nullopt;
  return value_;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return Scalar(a.value_ + b.value_, a.den_);
  return Scalar(a.value_ * QtRational(QtPolynomial(b.den_)) + b.value_ * QtRational(QtPolynomial(a.den_)), a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + Scalar(-b.value_, b.den_); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Scalar(a.value_ * b.value_, a.den_ * b.den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.value_ * QtRational(QtPolynomial(b.den_)) == b.value_ * QtRational(QtPolynomial(a.den_));
}

Scalar reciprocal(const Scalar& s) {
  if (s.is_zero()) throw ConsistencyError("oracle: reciprocal of zero");
  const QtPolynomial& num = s.value().numerator();
  const Integer content = num.content();
  QtPolynomial rest = num.divide_integer(content);
  const int alpha = rest.min_eq();
  const int beta = rest.min_et();
  rest = rest.shifted(-alpha, -beta);
  FactorList binomials;
  for (int deg = rest.max_eq() + rest.max_et(); deg >= 1; --deg) {
    for (int a = deg; a >= 0; --a) {
      const int b = deg - a;
      if (a > rest.max_eq() || b > rest.max_et()) continue;
      while (auto next = rest.divide_one_minus(a, b)) {
        rest = std::move(*next);
        binomials.push_back({a, b, 1});
      }
    }
  }
  QtPolynomial top = expand_factors(s.value().denominator()).shifted(-alpha, -beta) * QtPolynomial(s.den());
  if (rest == QtPolynomial(-1)) {
    top = -top;
  } else if (!(rest == QtPolynomial(1))) {
    auto divided = top.exact_divide(rest);
    if (!divided) throw ConsistencyError("oracle: norm numerator is not a product of binomials");
    top = std::move(*divided);
  }
  return Scalar(QtRational(std::move(top), std::move(binomials)), content);
}

// ---------------------------------------------------------------------------
// Power sums and monomials

namespace {

using MonomialExpansion = std::map<Partition, Integer>;

// p_k * m_lambda: the coefficient of m_nu counts the parts of nu that can
// lose k and leave a rearrangement of lambda.
MonomialExpansion times_power_sum(const MonomialExpansion& f, int k) {
  MonomialExpansion out;
  for (const auto& [lambda, coeff] : f) {
    std::vector<Partition> targets;
    std::vector<int> parts = lambda.parts();
    for (std::size_t i = 0; i <= parts.size(); ++i) {
      std::vector<int> grown = parts;
      if (i == parts.size()) {
        grown.push_back(k);
      } else {
        grown[i] += k;
      }
      Partition nu = Partition::from_unsorted(std::move(grown));
      if (std::find(targets.begin(), targets.end(), nu) == targets.end()) targets.push_back(std::move(nu));
    }
    for (const auto& nu : targets) {
      int ways = 0;
      for (int i = 1; i <= nu.length(); ++i) {
        if (nu.part(i) < k) continue;
        std::vector<int> shrunk = nu.parts();
        shrunk[static_cast<std::size_t>(i - 1)] -= k;
        if (Partition::from_unsorted(std::move(shrunk)) == lambda) ++ways;
      }
      out[nu] += coeff * ways;
    }
  }
  return out;
}

}  // namespace

IntegerTable powersum_in_monomials(int n) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  IntegerTable table;
  table.index = partitions_of(n);
  const std::size_t d = table.index.size();
  table.entries.assign(d, std::vector<Integer>(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    MonomialExpansion f{{Partition{}, 1}};
    for (int part : table.index[r].parts()) f = times_power_sum(f, part);
    for (std::size_t c = 0; c < d; ++c) {
      auto it = f.find(table.index[c]);
      if (it != f.end()) table.entries[r][c] = it->second;
    }
  }
  return table;
}

Integer z_rho(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (const auto& [part, m] : mult) {
    for (int i = 1; i <= m; ++i) z *= Integer(part) * i;
  }
  return z;
}

std::vector<QtRational> qt_gram_powersums(int n) {
  std::vector<QtRational> out;
  for (const auto& rho : partitions_of(n)) {
    FactorList num;
    FactorList den;
    for (int p : rho.parts()) {
      num.push_back({p, 0, 1});
      den.push_back({0, p, 1});
    }
    out.push_back(QtRational::from_factors(num, den) * QtRational(QtPolynomial(z_rho(rho))));
  }
  return out;
}

Scalar qt_scalar_product(const PowerSumVector& f, const PowerSumVector& g, const std::vector<QtRational>& gram) {
  Scalar s;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (f[i].is_zero() || g[i].is_zero()) continue;
    s = s + f[i] * g[i] * Scalar(gram[i]);
  }
  return s;
}

namespace {

// Inverse of an integer matrix over the rationals (Gauss-Jordan).
std::vector<std::vector<mpq_class>> rational_inverse(const std::vector<std::vector<Integer>>& m) {
  const std::size_t d = m.size();
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = mpq_class(m[i][j]);
    a[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && a[pivot][col] == 0) ++pivot;
    if (pivot == d) throw ConsistencyError("oracle: power-sum transition matrix is singular");
    std::swap(a[pivot], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < 2 * d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<mpq_class>> out(d, std::vector<mpq_class>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out[i][j] = a[i][d + j];
  }
  return out;
}

QtRational require_integral(const Scalar& s) {
  auto r = s.as_qt_rational();
  if (!r) throw ConsistencyError("oracle: monomial coefficient kept a rational constant");
  return *r;
}

}  // namespace

std::vector<QtRational> GramSchmidtResult::to_monomial(const PowerSumVector& f) const {
  const std::size_t d = index.size();
  std::vector<QtRational> out(d);
  for (std::size_t c = 0; c < d; ++c) {
    Scalar s;
    for (std::size_t r = 0; r < d; ++r) {
      if (f[r].is_zero() || p_in_m.entries[r][c] == 0) continue;
      s = s + f[r] * Scalar(QtRational(QtPolynomial(p_in_m.entries[r][c])));
    }
    out[c] = require_integral(s);
  }
  return out;
}

GramSchmidtResult gram_schmidt_P(int n) {
  GramSchmidtResult gs;
  gs.n = n;
  gs.p_in_m = powersum_in_monomials(n);
  gs.index = gs.p_in_m.index;
  gs.gram = qt_gram_powersums(n);
  const std::size_t d = gs.index.size();
  // m_lambda = sum_rho (M^{-1})_{lambda,rho} p_rho
  const auto m_in_p = rational_inverse(gs.p_in_m.entries);
  gs.P.assign(d, {});
  gs.norms.assign(d, {});
  std::vector<Scalar> inverse_norms(d);
  // Ascending lex order: each P_lambda is m_lambda minus its projections onto
  // the P_nu already built.
  for (std::size_t step = 0; step < d; ++step) {
    const std::size_t i = d - 1 - step;
    PowerSumVector m_lambda(d);
    for (std::size_t r = 0; r < d; ++r) m_lambda[r] = Scalar::from_rational(m_in_p[i][r]);
    PowerSumVector p = m_lambda;
    for (std::size_t j = i + 1; j < d; ++j) {
      const Scalar coeff = qt_scalar_product(m_lambda, gs.P[j], gs.gram) * inverse_norms[j];
      if (coeff.is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r) {
        if (!gs.P[j][r].is_zero()) p[r] = p[r] - coeff * gs.P[j][r];
      }
    }
    gs.P[i] = std::move(p);
    gs.norms[i] = qt_scalar_product(gs.P[i], gs.P[i], gs.gram);
    inverse_norms[i] = reciprocal(gs.norms[i]);
  }
  gs.K1.reserve(d);
  for (std::size_t i = 0; i < d; ++i) gs.K1.push_back(gs.to_monomial(gs.P[i]));
  return gs;
}

bool check_Qn_plethysm(const GramSchmidtResult& gs) {
  const std::size_t d = gs.index.size();
  if (d == 0) return true;
  // h_n = sum_rho p_rho / z_rho; the plethysm scales p_k by (1 - t^k)/(1 - q^k).
  PowerSumVector h(d);
  for (std::size_t r = 0; r < d; ++r) {
    FactorList num;
    FactorList den;
    for (int p : gs.index[r].parts()) {
      num.push_back({0, p, 1});
      den.push_back({p, 0, 1});
    }
    h[r] = Scalar(QtRational::from_factors(num, den), z_rho(gs.index[r]));
  }
  // Q_(n) = P_(n) / <P_(n), P_(n)>; the row partition is index 0.
  const Scalar inv = reciprocal(gs.norms[0]);
  PowerSumVector qn(d);
  for (std::size_t r = 0; r < d; ++r) qn[r] = gs.P[0][r] * inv;
  const auto lhs = gs.to_monomial(h);
  const auto rhs = gs.to_monomial(qn);
  for (std::size_t c = 0; c < d; ++c) {
    if (!(lhs[c] == rhs[c])) return false;
  }
  return true;
}

bool check_Qn_plethysm(int n) { return check_Qn_plethysm(gram_schmidt_P(n)); }

bool audit_orthogonality(const GramSchmidtResult& gs) {
  for (std::size_t i = 0; i < gs.index.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.index.size(); ++j) {
      if (!qt_scalar_product(gs.P[i], gs.P[j], gs.gram).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace qtk::oracle
