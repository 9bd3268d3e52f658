#include "qtkostka/reductions.hpp"

#include "qtkostka/errors.hpp"
#include "qtkostka/macdonald.hpp"

namespace qtk {

std::string to_string(BzTag tag) {
  switch (tag) {
    case BzTag::RowCase: return "row_case";
    case BzTag::RectangleCase: return "rectangle_case";
    case BzTag::DualRowCase: return "dual_row_case";
    case BzTag::DualRectangleCase: return "dual_rectangle_case";
    case BzTag::NotMultiplicityOne: return "not_multiplicity_one";
  }
  return "?";
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::Leaf: return "leaf";
    case StepKind::Diagonal: return "diagonal";
    case StepKind::RowSplit: return "row_split";
  }
  return "?";
}

std::vector<const ReductionNode*> ReductionNode::leaves() const {
  if (kind == StepKind::Leaf) return {this};
  std::vector<const ReductionNode*> out;
  for (const auto& child : children) {
    auto sub = child.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool is_irreducible(const Partition& lambda, const Partition& mu) {
  if (lambda.empty() || lambda.size() != mu.size()) return false;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.partial_sum(i) <= mu.partial_sum(i)) return false;
  }
  return dominance_leq(mu, lambda);
}

namespace {

void require_dominated(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || !dominance_leq(mu, lambda)) {
    throw DomainError("(" + mu.to_string() + ") is not dominated by (" + lambda.to_string() + ")");
  }
}

}  // namespace

ReductionNode decompose_irreducible(const Partition& lambda, const Partition& mu) {
  require_dominated(lambda, mu);
  ReductionNode node;
  node.lambda = lambda;
  node.mu = mu;
  if (lambda == mu) {
    node.kind = StepKind::Diagonal;
    return node;
  }
  int r = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.partial_sum(i) == mu.partial_sum(i)) {
      r = i;
      break;
    }
  }
  if (r == 0) {
    node.kind = StepKind::Leaf;
    node.bz = classify_bz(lambda, mu);
    return node;
  }
  const int width = lambda.part(r);
  auto [lambda1, lambda2] = split_rows(lambda, r);
  auto [mu1, mu2] = split_rows(mu, std::min(r, mu.length()));
  if (mu1.length() != r || mu.part(r) < width || mu2.part(1) > width) {
    throw ConsistencyError("split of (" + lambda.to_string() + "), (" + mu.to_string() + ") at row " +
                           std::to_string(r) + " breaks the block length condition");
  }
  node.kind = StepKind::RowSplit;
  node.split_row = r;
  node.rect_width = width;
  for (int row = 1; row <= r; ++row) {
    for (int col = 1; col <= width; ++col) {
      const auto s = diagram_stats(mu, {row, col});
      node.cofactor_factors.push_back({s.arm + 1, s.leg, 1});
    }
  }
  node.cofactor_factors = canonical_factors(std::move(node.cofactor_factors));
  node.cofactor = expand_factors(node.cofactor_factors);
  const Partition upper_l = subtract_rectangle(lambda1, r, width);
  const Partition upper_m = subtract_rectangle(mu1, r, width);
  if (!upper_l.empty() || !upper_m.empty()) node.children.push_back(decompose_irreducible(upper_l, upper_m));
  if (!lambda2.empty() || !mu2.empty()) node.children.push_back(decompose_irreducible(lambda2, mu2));
  return node;
}

QtPolynomial replay(const ReductionNode& tree, const LeafEvaluator& leaf) {
  switch (tree.kind) {
    case StepKind::Leaf: return leaf(tree.lambda, tree.mu);
    case StepKind::Diagonal: return expand_factors(c_prime_factors(tree.lambda));
    case StepKind::RowSplit: {
      QtPolynomial v = tree.cofactor;
      for (const auto& child : tree.children) v *= replay(child, leaf);
      return v;
    }
  }
  return {};
}

QtRational replay_k2(const ReductionNode& tree,
                     const std::function<QtRational(const Partition&, const Partition&)>& leaf) {
  switch (tree.kind) {
    case StepKind::Leaf: return leaf(tree.lambda, tree.mu);
    case StepKind::Diagonal: return 1;
    case StepKind::RowSplit: {
      QtRational v = 1;
      for (const auto& child : tree.children) v *= replay_k2(child, leaf);
      return v;
    }
  }
  return {};
}

namespace {

bool is_rectangle(const Partition& p) { return !p.empty() && p.part(1) == p.part(p.length()); }

// Multiplicity-one shapes of an irreducible pair read directly (no duals).
std::optional<BzClass> primal_class(const Partition& lambda, const Partition& mu) {
  if (lambda.length() == 1) return BzClass{BzTag::RowCase, lambda.part(1), 1};
  if (is_rectangle(lambda) && mu.length() == lambda.length() + 1) {
    return BzClass{BzTag::RectangleCase, lambda.part(1), lambda.length()};
  }
  return std::nullopt;
}

// K_{lambda,mu} = 1 for an arbitrary dominated pair: every irreducible leaf of
// its decomposition must be a multiplicity-one shape.
bool multiplicity_one_by_leaves(const Partition& lambda, const Partition& mu) {
  const ReductionNode tree = decompose_irreducible(lambda, mu);
  for (const auto* leaf : tree.leaves()) {
    if (!primal_class(leaf->lambda, leaf->mu)) return false;
  }
  return true;
}

}  // namespace

BzClass classify_bz(const Partition& lambda, const Partition& mu) {
  if (!is_irreducible(lambda, mu)) {
    throw DomainError("(" + lambda.to_string() + "), (" + mu.to_string() + ") is not an irreducible pair");
  }
  if (auto c = primal_class(lambda, mu)) return *c;
  const Partition dl = mu.conjugate();
  const Partition dm = lambda.conjugate();
  if (is_irreducible(dl, dm)) {
    if (auto c = primal_class(dl, dm)) {
      return BzClass{c->tag == BzTag::RowCase ? BzTag::DualRowCase : BzTag::DualRectangleCase, c->m, c->n};
    }
  } else if (multiplicity_one_by_leaves(dl, dm)) {
    throw ConsistencyError("reducible dual pair with multiplicity one for (" + lambda.to_string() + "), (" +
                           mu.to_string() + ")");
  }
  return {};
}

ComplementPair transport_complement(const Partition& lambda, const Partition& mu, int m, int n) {
  return {complement(lambda, m, n), complement(mu, m, n)};
}

namespace {

QtPolynomial polynomial_ratio(const FactorList& num, const FactorList& den, const char* what) {
  auto r = QtRational::from_factors(num, den).as_polynomial();
  if (!r) throw ConsistencyError(std::string("binomial ratio did not clear its denominator in the ") + what);
  return *r;
}

}  // namespace

QtPolynomial fast_k_multiplicity_one(const Partition& lambda, const Partition& mu, const BzClass& cls) {
  switch (cls.tag) {
    case BzTag::RowCase:
      return closed_form_row(mu);
    case BzTag::RectangleCase: {
      const int m = cls.m;
      const int n = cls.n;
      const Partition mu_c = complement(mu, m, n + 1);
      return closed_form_row(mu_c) * polynomial_ratio(c_prime_factors(mu), c_prime_factors(mu_c), "rectangle case");
    }
    case BzTag::DualRowCase:
      return closed_form_column(lambda);
    case BzTag::DualRectangleCase: {
      // Conjugate picture: mu' = (m^n), l(lambda') = n + 1.
      const int m = cls.m;
      const int n = cls.n;
      const Partition lambda_c = complement(lambda.conjugate(), m, n + 1).conjugate();
      return closed_form_column(lambda_c) *
             polynomial_ratio(c_prime_factors(mu), c_prime_factors(Partition::column(m)), "dual rectangle case");
    }
    case BzTag::NotMultiplicityOne:
      break;
  }
  throw DomainError("(" + lambda.to_string() + "), (" + mu.to_string() + ") is not a multiplicity-one pair");
}

QtPolynomial f_stat(const Partition& mu) {
  std::vector<Term> terms;
  for (const auto& x : mu.cells()) {
    const auto s = diagram_stats(mu, x);
    terms.push_back({{s.arm, s.leg}, 1});
  }
  return QtPolynomial::from_terms(std::move(terms));
}

namespace {

QtPolynomial q_integer(int m) { return t_integer(m).swap_qt(); }

}  // namespace

QtPolynomial f_stat_rows(const Partition& mu) {
  QtPolynomial f;
  const int len = mu.length();
  for (int j = 0; j < len; ++j) {
    QtPolynomial inner;
    for (int i = 1; i <= len - j; ++i) {
      inner += q_integer(mu.part(i + j) - mu.part(i + j + 1)).shifted(mu.part(i) - mu.part(i + j), 0);
    }
    f += inner.shifted(0, j);
  }
  return f;
}

FmuComplementCheck check_fmu_complement(const Partition& mu, int m, int n) {
  FmuComplementCheck out;
  const Partition mu_c = complement(mu, m, n + 1);
  out.direct = f_stat(mu) - f_stat(mu_c);
  out.closed_form_applies = mu.part(1) < m && mu.length() == n + 1;
  out.nonnegativity_applies = out.closed_form_applies && mu.size() == m * n;
  if (!out.closed_form_applies) {
    out.note = "closed form needs mu_1 < m and l(mu) = n + 1";
    return out;
  }
  QtPolynomial s;
  for (int j = 0; j <= n; ++j) {
    s += (QtPolynomial::monomial(m - mu.part(j + 1), 0) - QtPolynomial::monomial(mu.part(n + 1 - j), 0)).shifted(0, j);
  }
  out.closed_form = s.divide_one_minus(1, 0);
  if (!out.closed_form) out.note = "closed form numerator is not divisible by 1 - q";
  if (!out.nonnegativity_applies) out.note = "nonnegativity additionally needs |mu| = mn";
  return out;
}

Json to_json(const ReductionNode& node) {
  Json j{{"lambda", to_json(node.lambda)}, {"mu", to_json(node.mu)}, {"kind", to_string(node.kind)}};
  if (node.kind == StepKind::RowSplit) {
    j["split_row"] = node.split_row;
    j["rect_width"] = node.rect_width;
    j["cofactor"] = to_json(node.cofactor);
    Json factors = Json::array();
    for (const auto& f : node.cofactor_factors) factors.push_back(Json::array({f.a, f.b, f.multiplicity}));
    j["cofactor_factors"] = std::move(factors);
    Json children = Json::array();
    for (const auto& child : node.children) children.push_back(to_json(child));
    j["children"] = std::move(children);
  }
  if (node.bz) j["bz"] = Json{{"tag", to_string(node.bz->tag)}, {"m", node.bz->m}, {"n", node.bz->n}};
  return j;
}

namespace {

void ascii(const ReductionNode& node, const std::string& indent, std::string& out) {
  out += indent + "(" + node.lambda.to_string() + ") / (" + node.mu.to_string() + ")  " + to_string(node.kind);
  if (node.kind == StepKind::RowSplit) {
    out += " r=" + std::to_string(node.split_row) + " width=" + std::to_string(node.rect_width) +
           "  cofactor " + to_pretty(node.cofactor_factors);
  }
  if (node.bz) out += "  [" + to_string(node.bz->tag) + "]";
  out += "\n";
  for (const auto& child : node.children) ascii(child, indent + "  ", out);
}

}  // namespace

std::string to_ascii(const ReductionNode& node) {
  std::string out;
  ascii(node, "", out);
  return out;
}

}  // namespace qtk
