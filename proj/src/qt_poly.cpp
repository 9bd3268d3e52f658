#include "qtkostka/qt_poly.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qtkostka/errors.hpp"

namespace qtk {

// ---------------------------------------------------------------------------
// QtPolynomial

QtPolynomial::QtPolynomial(long c) {
  if (c != 0) terms_.push_back({{0, 0}, Integer(c)});
}

QtPolynomial::QtPolynomial(const Integer& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

QtPolynomial QtPolynomial::monomial(int eq, int et, const Integer& c) {
  QtPolynomial p;
  if (c != 0) p.terms_.push_back({{eq, et}, c});
  return p;
}

QtPolynomial QtPolynomial::one_minus(int a, int b) {
  return from_terms({{{0, 0}, 1}, {{a, b}, -1}});
}

QtPolynomial QtPolynomial::from_terms(std::vector<Term> terms) {
  QtPolynomial p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void QtPolynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().mono == term.mono) {
      merged.back().coeff += term.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(term));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool QtPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono == Monomial{0, 0});
}

Integer QtPolynomial::coeff(int eq, int et) const {
  const Monomial m{eq, et};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& x, const Monomial& key) { return x.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int QtPolynomial::min_eq() const {
  int v = 0;
  bool first = true;
  for (const auto& x : terms_) v = first ? (first = false, x.mono.eq) : std::min(v, x.mono.eq);
  return v;
}
int QtPolynomial::max_eq() const {
  int v = 0;
  bool first = true;
  for (const auto& x : terms_) v = first ? (first = false, x.mono.eq) : std::max(v, x.mono.eq);
  return v;
}
int QtPolynomial::min_et() const {
  int v = 0;
  bool first = true;
  for (const auto& x : terms_) v = first ? (first = false, x.mono.et) : std::min(v, x.mono.et);
  return v;
}
int QtPolynomial::max_et() const {
  int v = 0;
  bool first = true;
  for (const auto& x : terms_) v = first ? (first = false, x.mono.et) : std::max(v, x.mono.et);
  return v;
}

bool QtPolynomial::is_ordinary() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.mono.eq >= 0 && x.mono.et >= 0; });
}

bool QtPolynomial::is_univariate_t() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.mono.eq == 0; });
}

QtPolynomial QtPolynomial::operator-() const {
  QtPolynomial r = *this;
  for (auto& x : r.terms_) x.coeff = -x.coeff;
  return r;
}

QtPolynomial& QtPolynomial::operator+=(const QtPolynomial& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

QtPolynomial& QtPolynomial::operator-=(const QtPolynomial& o) { return *this += -o; }

QtPolynomial operator*(const QtPolynomial& a, const QtPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && a.terms_.front().mono == Monomial{0, 0} && a.terms_.front().coeff == 1) return b;
  if (b.terms_.size() == 1 && b.terms_.front().mono == Monomial{0, 0} && b.terms_.front().coeff == 1) return a;
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) products.push_back({x.mono * y.mono, x.coeff * y.coeff});
  }
  return QtPolynomial::from_terms(std::move(products));
}

QtPolynomial& QtPolynomial::operator*=(const QtPolynomial& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const QtPolynomial& a, const QtPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

QtPolynomial QtPolynomial::shifted(int eq, int et) const {
  QtPolynomial r = *this;
  for (auto& x : r.terms_) x.mono = {x.mono.eq + eq, x.mono.et + et};
  return r;  // a uniform shift preserves the graded order
}

QtPolynomial QtPolynomial::pow(unsigned e) const {
  QtPolynomial result(1);
  QtPolynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

namespace {

int floor_div(int x, int y) {
  int d = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --d;
  return d;
}

}  // namespace

std::optional<QtPolynomial> QtPolynomial::divide_one_minus(int a, int b) const {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) throw DomainError("binomial 1 - q^a t^b needs (a,b) > (0,0)");
  if (is_zero()) return QtPolynomial{};
  // Multiplication by 1 - q^a t^b acts independently on each line
  // {e + j(a,b)}; on a line it is (1 - x) acting on a univariate polynomial,
  // so divisibility means the line's coefficients sum to zero and the
  // quotient coefficients are the prefix sums.
  struct Placed {
    Monomial rep;
    int pos;
    const Integer* coeff;
  };
  std::vector<Placed> placed;
  placed.reserve(terms_.size());
  for (const auto& x : terms_) {
    const int k = a > 0 ? floor_div(x.mono.eq, a) : floor_div(x.mono.et, b);
    placed.push_back({{x.mono.eq - k * a, x.mono.et - k * b}, k, &x.coeff});
  }
  std::sort(placed.begin(), placed.end(), [](const Placed& x, const Placed& y) {
    return std::tie(x.rep.eq, x.rep.et, x.pos) < std::tie(y.rep.eq, y.rep.et, y.pos);
  });
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < placed.size()) {
    std::size_t j = i;
    while (j < placed.size() && placed[j].rep == placed[i].rep) ++j;
    Integer running = 0;
    for (std::size_t s = i; s < j; ++s) {
      running += *placed[s].coeff;
      const int next_pos = (s + 1 < j) ? placed[s + 1].pos : placed[s].pos + 1;
      if (s + 1 == j) break;
      if (running != 0) {
        for (int p = placed[s].pos; p < next_pos; ++p) {
          out.push_back({{placed[i].rep.eq + p * a, placed[i].rep.et + p * b}, running});
        }
      }
    }
    if (running != 0) return std::nullopt;
    i = j;
  }
  return from_terms(std::move(out));
}

std::optional<QtPolynomial> QtPolynomial::exact_divide(const QtPolynomial& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return QtPolynomial{};
  const int lo_q = min_eq() - d.min_eq();
  const int hi_q = max_eq() - d.max_eq();
  const int lo_t = min_et() - d.min_et();
  const int hi_t = max_et() - d.max_et();
  if (lo_q > hi_q || lo_t > hi_t) return std::nullopt;

  std::map<Monomial, Integer> rem;
  for (const auto& x : terms_) rem.emplace(x.mono, x.coeff);
  const Term& lead = d.terms_.back();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial m{top->first.eq - lead.mono.eq, top->first.et - lead.mono.et};
    if (m.eq < lo_q || m.eq > hi_q || m.et < lo_t || m.et > hi_t) return std::nullopt;
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    Integer c = top->second / lead.coeff;
    for (const auto& y : d.terms_) {
      const Monomial at = m * y.mono;
      auto it = rem.find(at);
      if (it == rem.end()) {
        rem.emplace(at, -c * y.coeff);
      } else {
        it->second -= c * y.coeff;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({m, std::move(c)});
  }
  return from_terms(std::move(quotient));
}

QtPolynomial QtPolynomial::divide_integer(const Integer& c) const {
  if (c == 0) throw DomainError("division by zero");
  QtPolynomial r = *this;
  for (auto& x : r.terms_) {
    if (!mpz_divisible_p(x.coeff.get_mpz_t(), c.get_mpz_t())) {
      throw ConsistencyError("inexact integer division of a polynomial");
    }
    x.coeff /= c;
  }
  return r;
}

Integer QtPolynomial::content() const {
  Integer g = 0;
  for (const auto& x : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QtPolynomial QtPolynomial::substitute(Monomial q_to, Monomial t_to) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& x : terms_) {
    out.push_back({{q_to.eq * x.mono.eq + t_to.eq * x.mono.et, q_to.et * x.mono.eq + t_to.et * x.mono.et}, x.coeff});
  }
  return from_terms(std::move(out));
}

QtPolynomial QtPolynomial::at_q_zero() const {
  std::vector<Term> out;
  for (const auto& x : terms_) {
    if (x.mono.eq < 0) throw DomainError("q = 0 is a pole of a Laurent polynomial with negative q powers");
    if (x.mono.eq == 0) out.push_back(x);
  }
  return from_terms(std::move(out));
}

// ---------------------------------------------------------------------------
// Binomial factor lists

FactorList canonical_factors(FactorList factors) {
  for (const auto& f : factors) {
    if (f.a < 0 || f.b < 0 || (f.a == 0 && f.b == 0)) throw DomainError("invalid binomial factor");
  }
  std::sort(factors.begin(), factors.end(), [](const BinomialFactor& x, const BinomialFactor& y) { return key_less(x, y); });
  FactorList out;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) continue;
    if (f.multiplicity < 0) throw DomainError("negative binomial multiplicity");
    if (!out.empty() && same_key(out.back(), f)) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(f);
    }
  }
  return out;
}

QtPolynomial expand_factors(const FactorList& factors) {
  QtPolynomial r(1);
  for (const auto& f : factors) r *= QtPolynomial::one_minus(f.a, f.b).pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

namespace {

// Per-key max of two canonical lists, plus the cofactor lists L/x and L/y.
struct CommonDenominator {
  FactorList lcm;
  FactorList x_missing;
  FactorList y_missing;
};

CommonDenominator common_denominator(const FactorList& x, const FactorList& y) {
  CommonDenominator r;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && key_less(x[i], y[j]))) {
      r.lcm.push_back(x[i]);
      r.y_missing.push_back(x[i]);
      ++i;
    } else if (i == x.size() || key_less(y[j], x[i])) {
      r.lcm.push_back(y[j]);
      r.x_missing.push_back(y[j]);
      ++j;
    } else {
      const int m = std::max(x[i].multiplicity, y[j].multiplicity);
      r.lcm.push_back({x[i].a, x[i].b, m});
      if (m > x[i].multiplicity) r.x_missing.push_back({x[i].a, x[i].b, m - x[i].multiplicity});
      if (m > y[j].multiplicity) r.y_missing.push_back({x[i].a, x[i].b, m - y[j].multiplicity});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// QtRational

QtRational::QtRational(QtPolynomial num, FactorList den) : num_(std::move(num)), den_(canonical_factors(std::move(den))) {
  normalize();
}

QtRational QtRational::from_factors(const FactorList& num_factors, const FactorList& den_factors) {
  FactorList num = canonical_factors(num_factors);
  FactorList den = canonical_factors(den_factors);
  for (auto& n : num) {
    for (auto& d : den) {
      if (same_key(n, d)) {
        const int c = std::min(n.multiplicity, d.multiplicity);
        n.multiplicity -= c;
        d.multiplicity -= c;
      }
    }
  }
  return QtRational(expand_factors(canonical_factors(num)), canonical_factors(den));
}

void QtRational::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  FactorList kept;
  for (auto f : den_) {
    while (f.multiplicity > 0) {
      auto divided = num_.divide_one_minus(f.a, f.b);
      if (!divided) break;
      num_ = std::move(*divided);
      --f.multiplicity;
    }
    if (f.multiplicity > 0) kept.push_back(f);
  }
  den_ = std::move(kept);
}

QtRational QtRational::normalized() const {
  QtRational r = *this;
  r.normalize();
  return r;
}

std::optional<QtPolynomial> QtRational::as_polynomial() const {
  if (!den_.empty()) return std::nullopt;
  return num_;
}

QtRational QtRational::operator-() const {
  QtRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QtRational& QtRational::operator+=(const QtRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    auto cd = common_denominator(den_, o.den_);
    num_ = num_ * expand_factors(cd.x_missing) + o.num_ * expand_factors(cd.y_missing);
    den_ = std::move(cd.lcm);
  }
  normalize();
  return *this;
}

QtRational& QtRational::operator-=(const QtRational& o) { return *this += -o; }

QtRational& QtRational::operator*=(const QtRational& o) {
  if (is_zero() || o.is_zero()) return *this = QtRational{};
  num_ *= o.num_;
  FactorList merged = den_;
  merged.insert(merged.end(), o.den_.begin(), o.den_.end());
  den_ = canonical_factors(std::move(merged));
  normalize();
  return *this;
}

QtRational QtRational::divided_by_factors(const FactorList& factors) const {
  FactorList merged = den_;
  merged.insert(merged.end(), factors.begin(), factors.end());
  return QtRational(num_, std::move(merged));
}

bool operator==(const QtRational& a, const QtRational& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  auto cd = common_denominator(a.den_, b.den_);
  return a.num_ * expand_factors(cd.x_missing) == b.num_ * expand_factors(cd.y_missing);
}

QtRational QtRational::swap_qt() const {
  FactorList den;
  for (const auto& f : den_) den.push_back({f.b, f.a, f.multiplicity});
  return QtRational(num_.swap_qt(), std::move(den));
}

QtRational QtRational::substitute_q_power(int k) const {
  if (k < 0) throw DomainError("q := t^k needs k >= 0");
  FactorList den;
  for (const auto& f : den_) {
    const int e = k * f.a + f.b;
    if (e == 0) {
      throw DomainError("pole: denominator factor (1 - q^" + std::to_string(f.a) + ") vanishes at q = t^0");
    }
    den.push_back({0, e, f.multiplicity});
  }
  return QtRational(num_.substitute_q_power(k), std::move(den));
}

QtRational QtRational::at_t_one() const {
  FactorList den;
  for (const auto& f : den_) {
    if (f.a == 0) throw DomainError("pole: denominator factor (1 - t^" + std::to_string(f.b) + ") vanishes at t = 1");
    den.push_back({f.a, 0, f.multiplicity});
  }
  return QtRational(num_.at_t_one(), std::move(den));
}

// ---------------------------------------------------------------------------

OneMinusTDivision divide_by_one_minus_t_power(const QtPolynomial& p, int m) {
  if (m < 0) throw DomainError("negative power of (1 - t)");
  OneMinusTDivision r;
  r.quotient = p;
  for (int i = 0; i < m; ++i) {
    auto next = r.quotient.divide_one_minus(0, 1);
    if (!next) {
      Integer at_one = 0;
      for (const auto& x : r.quotient.terms()) at_one += x.coeff;
      r.remainder_at_one = at_one;
      r.exact = false;
      return r;
    }
    r.quotient = std::move(*next);
    ++r.divided;
  }
  r.exact = true;
  return r;
}

bool is_nonneg_polynomial(const QtPolynomial& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const Term& x) {
    return x.mono.eq == 0 && x.mono.et >= 0 && x.coeff > 0;
  });
}

QtPolynomial t_integer(int m) {
  if (m < 0) throw DomainError("[m]_t needs m >= 0");
  std::vector<Term> terms;
  for (int i = 0; i < m; ++i) terms.push_back({{0, i}, 1});
  return QtPolynomial::from_terms(std::move(terms));
}

}  // namespace qtk
