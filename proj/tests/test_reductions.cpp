#include <doctest.h>

#include "qtkostka/errors.hpp"
#include "qtkostka/macdonald.hpp"
#include "qtkostka/reductions.hpp"
#include "qtkostka/tableaux.hpp"

using qtk::BzTag;
using qtk::MatrixKind;
using qtk::Partition;
using qtk::QtPolynomial;
using qtk::QtRational;

namespace {

constexpr MatrixKind kAllKinds[] = {MatrixKind::K, MatrixKind::K1, MatrixKind::K1Inv, MatrixKind::K2,
                                    MatrixKind::K2Inv};

const qtk::MatrixSet& matrices(int n) {
  static qtk::MatrixStore store(std::nullopt, 4);
  static std::map<int, std::shared_ptr<const qtk::MatrixSet>> keep;
  auto& slot = keep[n];
  if (!slot) slot = store.get(n);
  return *slot;
}

QtPolynomial pipeline_k(const Partition& lambda, const Partition& mu) {
  return qtk::k_coeff(matrices(lambda.size()), lambda, mu);
}

// Zero when the pair is not comparable.
QtRational entry(MatrixKind kind, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  return matrices(lambda.size()).get(kind)(lambda, mu);
}

bool is_rectangle(const Partition& p) { return !p.empty() && p.part(1) == p.parts().back(); }

long brute_kostka(const Partition& lambda, const Partition& mu) {
  return static_cast<long>(qtk::enumerate_ssyt(lambda, mu).size());
}

// f_mu with arms and legs read off the rows and the conjugate.
QtPolynomial f_by_conjugate(const Partition& mu) {
  const Partition conj = mu.conjugate();
  QtPolynomial f;
  for (int r = 1; r <= mu.length(); ++r) {
    for (int c = 1; c <= mu.part(r); ++c) f += QtPolynomial::monomial(mu.part(r) - c, conj.part(c) - r);
  }
  return f;
}

void collect_nodes(const qtk::ReductionNode& node, std::vector<const qtk::ReductionNode*>& out) {
  out.push_back(&node);
  for (const auto& c : node.children) collect_nodes(c, out);
}

}  // namespace

TEST_CASE("decomposition of (5,3,3) / (4,4,1,1,1)") {
  const Partition lambda{5, 3, 3};
  const Partition mu{4, 4, 1, 1, 1};
  const auto tree = qtk::decompose_irreducible(lambda, mu);
  CHECK(tree.kind == qtk::StepKind::RowSplit);
  CHECK(tree.split_row == 2);
  CHECK(tree.rect_width == 3);
  std::vector<std::pair<Partition, Partition>> leaves;
  for (const auto* leaf : tree.leaves()) leaves.emplace_back(leaf->lambda, leaf->mu);
  CHECK(leaves == std::vector<std::pair<Partition, Partition>>{{{2}, {1, 1}}, {{3}, {1, 1, 1}}});

  // Cofactor: one binomial per box of the removed (3^2), with mu's arm and leg.
  QtPolynomial expected(1);
  for (int r = 1; r <= 2; ++r) {
    for (int c = 1; c <= 3; ++c) {
      const auto s = qtk::diagram_stats(mu, {r, c});
      expected *= QtPolynomial::one_minus(s.arm + 1, s.leg);
    }
  }
  CHECK(tree.cofactor == expected);

  // The K2 entry at n = 11 factors into the two leaf entries.
  const QtRational k2_leaves =
      qtk::replay_k2(tree, [](const Partition& a, const Partition& b) { return entry(MatrixKind::K2, a, b); });
  CHECK(k2_leaves == entry(MatrixKind::K2, Partition{2}, Partition{1, 1}) *
                         entry(MatrixKind::K2, Partition{3}, Partition{1, 1, 1}));
  const auto interval = qtk::interval_matrices(lambda, mu);
  CHECK(interval.K2(lambda, mu) == k2_leaves);
  CHECK(qtk::replay(tree, pipeline_k) == qtk::k_from_k2(interval.K2(lambda, mu), mu));
}

TEST_CASE("trivial trees and errors") {
  const auto same = qtk::decompose_irreducible(Partition{3, 1}, Partition{3, 1});
  CHECK(same.kind == qtk::StepKind::Diagonal);
  CHECK(qtk::replay(same, pipeline_k) == qtk::normalization(Partition{3, 1}).c_prime);
  const auto leaf = qtk::decompose_irreducible(Partition{3}, Partition{1, 1, 1});
  CHECK(leaf.kind == qtk::StepKind::Leaf);
  CHECK(leaf.bz->tag == BzTag::RowCase);
  CHECK_THROWS_AS(qtk::decompose_irreducible(Partition{1, 1}, Partition{2}), qtk::DomainError);
  CHECK_THROWS_AS(qtk::classify_bz(Partition{3, 1}, Partition{3, 1}), qtk::DomainError);
  CHECK(qtk::is_irreducible(Partition{3}, Partition{1, 1, 1}));
  CHECK_FALSE(qtk::is_irreducible(Partition{5, 3, 3}, Partition{4, 4, 1, 1, 1}));
  CHECK_FALSE(qtk::is_irreducible(Partition{}, Partition{}));
}

TEST_CASE("BZ classification examples") {
  const auto rect = qtk::classify_bz(Partition{3, 3}, Partition{2, 2, 2});
  CHECK(rect.tag == BzTag::RectangleCase);
  CHECK(rect.m == 3);
  CHECK(rect.n == 2);
  // Equal first parts: reducible, so the classifier refuses it.
  CHECK_THROWS_AS(qtk::classify_bz(Partition{2, 2}, Partition{2, 1, 1}), qtk::DomainError);
  CHECK(qtk::classify_bz(Partition{3}, Partition{1, 1, 1}).tag == BzTag::RowCase);
  CHECK(qtk::classify_bz(Partition{4, 2}, Partition{3, 2, 1}).tag == BzTag::NotMultiplicityOne);
  CHECK(qtk::classify_bz(Partition{2, 1}, Partition{1, 1, 1}).tag == BzTag::DualRowCase);
}

TEST_CASE("complement transport examples") {
  const auto c = qtk::transport_complement(Partition{2, 2}, Partition{2, 1, 1}, 2, 3);
  CHECK(c.lambda_c == Partition{2});
  CHECK(c.mu_c == Partition{1, 1});
  const auto full = qtk::transport_complement(Partition{3, 3}, Partition{3, 3}, 3, 2);
  CHECK(full.lambda_c.empty());
  CHECK(full.mu_c.empty());
  CHECK_THROWS_AS(qtk::transport_complement(Partition{4}, Partition{2, 2}, 3, 2), qtk::DomainError);
  CHECK(entry(MatrixKind::K2, Partition{2, 2}, Partition{2, 1, 1}) == entry(MatrixKind::K2, Partition{2}, Partition{1, 1}));
}

TEST_CASE("multiplicity-one fast path examples") {
  const qtk::BzClass rect{BzTag::RectangleCase, 2, 2};
  const QtPolynomial via_ratio = qtk::k_coeff(Partition{2}, Partition{1, 1}) *
                                 *qtk::normalization(Partition{2, 1, 1}).c_prime.exact_divide(
                                     qtk::normalization(Partition{1, 1}).c_prime);
  CHECK(qtk::fast_k_multiplicity_one(Partition{2, 2}, Partition{2, 1, 1}, rect) == via_ratio);
  CHECK(via_ratio == pipeline_k(Partition{2, 2}, Partition{2, 1, 1}));
  CHECK(qtk::fast_k_multiplicity_one(Partition{4}, Partition{2, 1, 1}, {BzTag::RowCase, 4, 1}) ==
        qtk::closed_form_row(Partition{2, 1, 1}));
  CHECK(qtk::fast_k_multiplicity_one(Partition{2, 1}, Partition{1, 1, 1}, {BzTag::DualRowCase, 3, 1}) ==
        pipeline_k(Partition{2, 1}, Partition{1, 1, 1}));
  CHECK_THROWS_AS(qtk::fast_k_multiplicity_one(Partition{4, 2}, Partition{3, 2, 1}, {}), qtk::DomainError);
}

TEST_CASE("f statistic examples") {
  CHECK(qtk::f_stat(Partition{1}) == QtPolynomial(1));
  CHECK(qtk::f_stat(Partition{2}) == 1 + QtPolynomial::q());
  CHECK(qtk::f_stat(Partition{2, 1}) == 2 + QtPolynomial::monomial(1, 1));

  const auto self = qtk::check_fmu_complement(Partition{1, 1}, 2, 1);
  CHECK(self.direct.is_zero());
  const auto guarded = qtk::check_fmu_complement(Partition{2, 1, 1}, 2, 2);
  CHECK_FALSE(guarded.closed_form_applies);
  CHECK_FALSE(guarded.closed_form.has_value());
  CHECK(guarded.direct == qtk::f_stat(Partition{2, 1, 1}) - qtk::f_stat(Partition{1, 1}));
  const auto good = qtk::check_fmu_complement(Partition{2, 2, 2}, 3, 2);
  CHECK(good.nonnegativity_applies);
  REQUIRE(good.closed_form.has_value());
  CHECK(*good.closed_form == good.direct);
  CHECK(good.direct == qtk::f_stat(Partition{2, 2, 2}) - qtk::f_stat(Partition{1, 1, 1}));
  for (const auto& term : good.direct.terms()) CHECK(term.coeff > 0);
}

TEST_CASE("tree JSON and ASCII") {
  const auto tree = qtk::decompose_irreducible(Partition{5, 3, 3}, Partition{4, 4, 1, 1, 1});
  const auto j = qtk::to_json(tree);
  CHECK(j["kind"] == "row_split");
  CHECK(j["children"].size() == 2);
  const std::string art = qtk::to_ascii(tree);
  CHECK(art.find("(2) / (1,1)") != std::string::npos);
  CHECK(art.find("(3) / (1,1,1)") != std::string::npos);
}

// Properties

TEST_CASE("replay reproduces k and leaves are irreducible (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (const auto& mu : qtk::partitions_of(n)) {
        if (!qtk::dominance_leq(mu, lambda)) {
          CHECK_THROWS_AS(qtk::decompose_irreducible(lambda, mu), qtk::DomainError);
          continue;
        }
        const auto tree = qtk::decompose_irreducible(lambda, mu);
        CHECK(qtk::replay(tree, pipeline_k) == pipeline_k(lambda, mu));
        CHECK(qtk::replay_k2(tree, [](const Partition& a, const Partition& b) { return entry(MatrixKind::K2, a, b); }) ==
              entry(MatrixKind::K2, lambda, mu));
        for (const auto* leaf : tree.leaves()) {
          CHECK(qtk::is_irreducible(leaf->lambda, leaf->mu));
          CHECK(leaf->bz.has_value());
        }
        std::vector<const qtk::ReductionNode*> nodes;
        collect_nodes(tree, nodes);
        for (const auto* node : nodes) {
          if (node->kind != qtk::StepKind::RowSplit) continue;
          CHECK(node->cofactor == qtk::expand_factors(node->cofactor_factors));
        }
      }
    }
  }
}

TEST_CASE("row and column split identities for all families (n <= 6)") {
  int row_cases = 0;
  int column_cases = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (const auto& mu : qtk::partitions_of(n)) {
        if (!qtk::dominance_leq(mu, lambda)) continue;
        for (int r = 1; r < lambda.length(); ++r) {
          if (lambda.partial_sum(r) != mu.partial_sum(r) || mu.length() <= r) continue;
          auto [l1, l2] = qtk::split_rows(lambda, r);
          auto [m1, m2] = qtk::split_rows(mu, r);
          ++row_cases;
          for (auto kind : kAllKinds) CHECK(entry(kind, lambda, mu) == entry(kind, l1, m1) * entry(kind, l2, m2));
        }
        const Partition lc = lambda.conjugate();
        const Partition mc = mu.conjugate();
        for (int c = 1; c < lc.length(); ++c) {
          if (lc.partial_sum(c) != mc.partial_sum(c) || mc.length() <= c) continue;
          auto [l1c, l2c] = qtk::split_rows(lc, c);
          auto [m1c, m2c] = qtk::split_rows(mc, c);
          const Partition l1 = l1c.conjugate(), l2 = l2c.conjugate(), m1 = m1c.conjugate(), m2 = m2c.conjugate();
          REQUIRE(qtk::add_columns(l1, l2) == lambda);
          REQUIRE(qtk::add_columns(m1, m2) == mu);
          REQUIRE(l1.part(1) == m1.part(1));
          ++column_cases;
          for (auto kind : kAllKinds) CHECK(entry(kind, lambda, mu) == entry(kind, l1, m1) * entry(kind, l2, m2));
        }
      }
    }
  }
  CHECK(row_cases > 50);
  CHECK(column_cases > 50);
}

TEST_CASE("complement identity inside (3^3) for all families") {
  const auto box = [](int n) { return qtk::partitions_in_box(n, 3, 3); };
  int compared = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : box(n)) {
      for (const auto& mu : box(n)) {
        const auto c = qtk::transport_complement(lambda, mu, 3, 3);
        const bool comparable = qtk::dominance_leq(mu, lambda);
        CHECK(comparable == qtk::dominance_leq(c.mu_c, c.lambda_c));
        if (!comparable) continue;
        const auto left = qtk::interval_matrices(lambda, mu);
        const auto right = qtk::interval_matrices(c.lambda_c, c.mu_c);
        for (auto kind : kAllKinds) CHECK(left.get(kind)(lambda, mu) == right.get(kind)(c.lambda_c, c.mu_c));
        ++compared;
      }
    }
  }
  CHECK(compared >= 30);
}

TEST_CASE("BZ classifier against tableau counts on irreducible pairs (n <= 7)") {
  int irreducible = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (const auto& mu : qtk::partitions_of(n)) {
        if (!qtk::is_irreducible(lambda, mu)) continue;
        ++irreducible;
        const auto cls = qtk::classify_bz(lambda, mu);
        const long primal = brute_kostka(lambda, mu);
        const long dual = brute_kostka(mu.conjugate(), lambda.conjugate());
        CHECK(cls.multiplicity_one() == (primal == 1 || dual == 1));
        switch (cls.tag) {
          case BzTag::RowCase:
            CHECK(lambda == Partition{n});
            CHECK(primal == 1);
            break;
          case BzTag::RectangleCase:
            CHECK(is_rectangle(lambda));
            CHECK(mu.length() == lambda.length() + 1);
            CHECK(primal == 1);
            break;
          case BzTag::DualRowCase:
            CHECK(mu == Partition::column(n));
            CHECK(dual == 1);
            break;
          case BzTag::DualRectangleCase:
            CHECK(is_rectangle(mu.conjugate()));
            CHECK(dual == 1);
            break;
          case BzTag::NotMultiplicityOne:
            CHECK(primal > 1);
            CHECK(dual > 1);
            break;
        }
      }
    }
  }
  CHECK(irreducible > 100);
}

TEST_CASE("fast path equals the pipeline in every applicable shape (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (const auto& mu : qtk::partitions_of(n)) {
        if (!qtk::dominance_leq(mu, lambda)) continue;
        const QtPolynomial k = pipeline_k(lambda, mu);
        if (qtk::is_irreducible(lambda, mu)) {
          const auto cls = qtk::classify_bz(lambda, mu);
          if (cls.multiplicity_one()) CHECK(qtk::fast_k_multiplicity_one(lambda, mu, cls) == k);
        }
        // Each route on its own, independent of tag precedence.
        if (lambda == Partition{n}) CHECK(qtk::fast_k_multiplicity_one(lambda, mu, {BzTag::RowCase, n, 1}) == k);
        if (mu == Partition::column(n)) CHECK(qtk::fast_k_multiplicity_one(lambda, mu, {BzTag::DualRowCase, n, 1}) == k);
        if (is_rectangle(lambda) && mu.length() == lambda.length() + 1) {
          const qtk::BzClass cls{BzTag::RectangleCase, lambda.part(1), lambda.length()};
          CHECK(qtk::fast_k_multiplicity_one(lambda, mu, cls) == k);
        }
        const Partition mc = mu.conjugate();
        if (is_rectangle(mc) && lambda.conjugate().length() == mc.length() + 1) {
          const qtk::BzClass cls{BzTag::DualRectangleCase, mc.part(1), mc.length()};
          CHECK(qtk::fast_k_multiplicity_one(lambda, mu, cls) == k);
        }
      }
    }
  }
}

TEST_CASE("f statistic row formula and complement difference") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& mu : qtk::partitions_of(n)) {
      CHECK(qtk::f_stat(mu) == f_by_conjugate(mu));
      CHECK(qtk::f_stat_rows(mu) == f_by_conjugate(mu));
    }
  }
  int nonneg_checked = 0;
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 3; ++n) {
      for (int size = 0; size <= m * (n + 1); ++size) {
        for (const auto& mu : qtk::partitions_in_box(size, n + 1, m)) {
          const auto check = qtk::check_fmu_complement(mu, m, n);
          CHECK(check.direct == f_by_conjugate(mu) - f_by_conjugate(qtk::complement(mu, m, n + 1)));
          if (check.closed_form_applies) {
            REQUIRE(check.closed_form.has_value());
            CHECK(*check.closed_form == check.direct);
          }
          if (check.nonnegativity_applies) {
            ++nonneg_checked;
            for (const auto& term : check.direct.terms()) {
              CHECK(term.coeff >= 0);
              CHECK(term.mono.eq >= 0);
              CHECK(term.mono.et >= 0);
            }
          }
        }
      }
    }
  }
  CHECK(nonneg_checked >= 5);
}

TEST_CASE("adding a rectangle above or beside a pair") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (const auto& mu : qtk::partitions_of(n)) {
        if (!qtk::dominance_leq(mu, lambda)) continue;
        const QtPolynomial k = pipeline_k(lambda, mu);
        for (int rows = 1; rows <= 2; ++rows) {
          // (R, lambda) with R of width lambda_1 or lambda_1 + 1.
          for (int width = lambda.part(1); width <= lambda.part(1) + 1; ++width) {
            const Partition r_lambda = qtk::concat_rows(Partition::rectangle(rows, width), lambda);
            const Partition r_mu = qtk::concat_rows(Partition::rectangle(rows, width), mu);
            if (r_lambda.size() > 8) continue;
            QtPolynomial cofactor(1);
            for (int r = 1; r <= rows; ++r) {
              for (int c = 1; c <= width; ++c) {
                const auto s = qtk::diagram_stats(r_mu, {r, c});
                cofactor *= QtPolynomial::one_minus(s.arm + 1, s.leg);
              }
            }
            const auto tree = qtk::decompose_irreducible(r_lambda, r_mu);
            CHECK(qtk::replay(tree, pipeline_k) == cofactor * k);
            CHECK(qtk::k_coeff(r_lambda, r_mu) == cofactor * k);
          }
          // S + lambda with S of height l(mu) or l(mu) + 1; the K2 entry is unchanged.
          for (int height = mu.length(); height <= mu.length() + 1; ++height) {
            const Partition s_lambda = qtk::add_columns(Partition::rectangle(height, rows), lambda);
            const Partition s_mu = qtk::add_columns(Partition::rectangle(height, rows), mu);
            if (s_lambda.size() > 8) continue;
            CHECK(qtk::interval_matrices(s_lambda, s_mu).K2(s_lambda, s_mu) == entry(MatrixKind::K2, lambda, mu));
          }
        }
      }
    }
  }
}
