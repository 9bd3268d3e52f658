#include "qtkostka/haglund.hpp"

#include "qtkostka/errors.hpp"
#include "qtkostka/parallel.hpp"
#include "qtkostka/reductions.hpp"

namespace qtk {

std::string to_string(Coverage c) {
  switch (c) {
    case Coverage::TheoremRowOrCol: return "theorem_row_or_col";
    case Coverage::TheoremMultOne: return "theorem_mult_one";
    case Coverage::ConjectureOnly: return "conjecture_only";
  }
  return "?";
}

namespace {

bool all_leaves_primal_one(const ReductionNode& tree) {
  for (const auto* leaf : tree.leaves()) {
    const BzTag tag = leaf->bz->tag;
    if (tag != BzTag::RowCase && tag != BzTag::RectangleCase) return false;
  }
  return true;
}

bool is_column(const Partition& p) { return p.length() == p.size(); }

}  // namespace

Coverage coverage_of(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || !dominance_leq(mu, lambda)) return Coverage::ConjectureOnly;
  if (lambda.length() <= 1 || is_column(mu)) return Coverage::TheoremRowOrCol;
  if (all_leaves_primal_one(decompose_irreducible(lambda, mu)) ||
      all_leaves_primal_one(decompose_irreducible(mu.conjugate(), lambda.conjugate()))) {
    return Coverage::TheoremMultOne;
  }
  return Coverage::ConjectureOnly;
}

QtPolynomial k_by_route(const Partition& lambda, const Partition& mu, MatrixStore& store, std::string* route) {
  auto set_route = [&](const char* name) {
    if (route) *route = name;
  };
  if (lambda.size() != mu.size()) throw DomainError("|lambda| != |mu|");
  if (!dominance_leq(mu, lambda)) {
    set_route("zero");
    return {};
  }
  const ReductionNode tree = decompose_irreducible(lambda, mu);
  bool every_leaf_fast = true;
  for (const auto* leaf : tree.leaves()) every_leaf_fast = every_leaf_fast && leaf->bz->multiplicity_one();
  if (every_leaf_fast) {
    set_route(tree.kind == StepKind::Leaf ? "multiplicity_one" : "multiplicity_one_tree");
  } else {
    set_route(tree.kind == StepKind::Leaf ? "pipeline" : "tree");
  }
  return replay(tree, [&](const Partition& a, const Partition& b) {
    const BzClass cls = classify_bz(a, b);
    if (cls.multiplicity_one()) return fast_k_multiplicity_one(a, b, cls);
    return k_coeff(*store.get(a.size()), a, b);
  });
}

QtPolynomial fast_row_quotient(const Partition& mu, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (mu.length() > k) return {};
  QtPolynomial r = QtPolynomial::monomial(0, n_stat(mu));
  for (const auto& x : mu.cells()) {
    const auto s = diagram_stats(mu, x);
    r *= t_integer(k * (s.coarm + 1) - s.coleg);
  }
  return r;
}

QtPolynomial fast_column_quotient(const Partition& lambda, int k) {
  if (k < 0) throw DomainError("k must be nonnegative");
  if (lambda.part(1) > k) return {};
  QtPolynomial r = hook_kostka_foulkes_column(lambda);
  for (const auto& x : lambda.cells()) r *= t_integer(k - diagram_stats(lambda, x).content());
  return r;
}

HaglundVerdict check_pair(const Partition& lambda, const Partition& mu, int k, MatrixStore& store) {
  if (lambda.size() != mu.size()) throw DomainError("|lambda| != |mu|");
  if (k < 0) throw DomainError("k must be nonnegative");
  HaglundVerdict v;
  v.lambda = lambda;
  v.mu = mu;
  v.k = k;
  v.coverage = coverage_of(lambda, mu);
  const int n = lambda.size();
  if (n > 0 && lambda.length() == 1) {
    v.route = "row_closed_form";
    v.quotient = fast_row_quotient(mu, k);
  } else if (n > 0 && is_column(mu)) {
    v.route = "column_closed_form";
    v.quotient = fast_column_quotient(lambda, k);
  } else {
    const QtPolynomial kk = k_by_route(lambda, mu, store, &v.route).substitute_q_power(k);
    auto division = divide_by_one_minus_t_power(kk, n);
    if (division.exact) v.quotient = std::move(division.quotient);
  }
  v.is_polynomial = v.quotient && v.quotient->is_ordinary();
  v.is_nonnegative = v.is_polynomial && is_nonneg_polynomial(*v.quotient);
  v.is_zero = v.quotient && v.quotient->is_zero();
  return v;
}

ScanReport scan(int max_n, int max_k, MatrixStore& store, int jobs) {
  if (max_n < 0 || max_k < 0) throw DomainError("scan bounds must be nonnegative");
  ScanReport report;
  report.max_n = max_n;
  report.max_k = max_k;
  struct Task {
    Partition lambda;
    Partition mu;
    int k;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions_of(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i; j < parts.size(); ++j) {
        if (!dominance_leq(parts[j], parts[i])) continue;
        ++report.summary.pairs;
        for (int k = 0; k <= max_k; ++k) tasks.push_back({parts[i], parts[j], k});
      }
    }
    // Build the degree-n matrices once, up front, rather than inside a worker.
    if (n >= 2) store.get(n);
  }
  report.verdicts.resize(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    report.verdicts[i] = check_pair(tasks[i].lambda, tasks[i].mu, tasks[i].k, store);
  });
  for (const auto& v : report.verdicts) {
    ++report.summary.verdicts;
    switch (v.coverage) {
      case Coverage::TheoremRowOrCol: ++report.summary.theorem_row_or_col; break;
      case Coverage::TheoremMultOne: ++report.summary.theorem_mult_one; break;
      case Coverage::ConjectureOnly: ++report.summary.conjecture_only; break;
    }
    if (!v.is_nonnegative) {
      ++report.summary.violations;
      if (v.coverage != Coverage::ConjectureOnly) ++report.summary.theorem_violations;
    }
  }
  return report;
}

Json to_json(const HaglundVerdict& v) {
  return Json{{"lambda", to_json(v.lambda)},
              {"mu", to_json(v.mu)},
              {"k", v.k},
              {"quotient", v.quotient ? to_json(*v.quotient) : Json(nullptr)},
              {"is_polynomial", v.is_polynomial},
              {"is_nonnegative", v.is_nonnegative},
              {"is_zero", v.is_zero},
              {"coverage", to_string(v.coverage)},
              {"route", v.route}};
}

Json to_json(const ScanReport& report) {
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
  const auto& s = report.summary;
  return Json{{"max_n", report.max_n},
              {"max_k", report.max_k},
              {"summary",
               {{"pairs", s.pairs},
                {"verdicts", s.verdicts},
                {"violations", s.violations},
                {"theorem_violations", s.theorem_violations},
                {"theorem_row_or_col", s.theorem_row_or_col},
                {"theorem_mult_one", s.theorem_mult_one},
                {"conjecture_only", s.conjecture_only}}},
              {"verdicts", std::move(verdicts)}};
}

}  // namespace qtk
