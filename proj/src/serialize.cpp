#include "qtkostka/serialize.hpp"

#include "qtkostka/errors.hpp"

namespace qtk {

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int x : p.parts()) j.push_back(x);
  return j;
}

Json to_json(const QtPolynomial& p) {
  Json j = Json::array();
  for (const auto& term : p.terms()) j.push_back(Json::array({term.mono.eq, term.mono.et, term.coeff.get_str()}));
  return j;
}

Json to_json(const QtRational& r) {
  Json den = Json::array();
  for (const auto& f : r.denominator()) den.push_back(Json::array({f.a, f.b, f.multiplicity}));
  return Json{{"num", to_json(r.numerator())}, {"den", std::move(den)}};
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

QtPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 3) throw DomainError("polynomial term must be [e_q, e_t, coeff]");
    Integer c;
    if (c.set_str(item[2].get<std::string>(), 10) != 0) throw DomainError("bad coefficient in polynomial JSON");
    terms.push_back({{item[0].get<int>(), item[1].get<int>()}, std::move(c)});
  }
  return QtPolynomial::from_terms(std::move(terms));
}

QtRational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw DomainError("rational JSON needs num and den");
  FactorList den;
  for (const auto& f : j.at("den")) den.push_back({f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
  return QtRational(polynomial_from_json(j.at("num")), std::move(den));
}

namespace {

std::string power(const char* var, int e, bool latex) {
  if (e == 0) return "";
  if (e == 1) return var;
  if (latex) return std::string(var) + "^{" + std::to_string(e) + "}";
  return std::string(var) + "^" + std::to_string(e);
}

std::string render(const QtPolynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    Integer c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = power("q", it->mono.eq, latex);
    const std::string tp = power("t", it->mono.et, latex);
    if (!mono.empty() && !tp.empty() && !latex) mono += "*";
    mono += tp;
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + (latex ? "" : "*") + mono;
    }
  }
  return out;
}

std::string binomial(const BinomialFactor& f, bool latex) {
  std::string mono = power("q", f.a, latex);
  const std::string tp = power("t", f.b, latex);
  if (!mono.empty() && !tp.empty() && !latex) mono += "*";
  mono += tp;
  std::string s = "(1 - " + mono + ")";
  if (f.multiplicity > 1) s += latex ? "^{" + std::to_string(f.multiplicity) + "}" : "^" + std::to_string(f.multiplicity);
  return s;
}

std::string render(const QtRational& r, bool latex) {
  std::string num = render(r.numerator(), latex);
  if (r.is_polynomial()) return num;
  std::string den;
  for (const auto& f : r.denominator()) den += (den.empty() || latex ? "" : "*") + binomial(f, latex);
  if (latex) return "\\frac{" + num + "}{" + den + "}";
  return "(" + num + ")/(" + den + ")";
}

}  // namespace

std::string to_pretty(const QtPolynomial& p) { return render(p, false); }
std::string to_pretty(const QtRational& r) { return render(r, false); }
std::string to_latex(const QtPolynomial& p) { return render(p, true); }
std::string to_latex(const QtRational& r) { return render(r, true); }

std::string to_pretty(const FactorList& factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) s += binomial(f, false);
  return s;
}

}  // namespace qtk
