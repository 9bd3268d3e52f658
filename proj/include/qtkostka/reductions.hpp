#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"
#include "qtkostka/serialize.hpp"

namespace qtk {

enum class BzTag { RowCase, RectangleCase, DualRowCase, DualRectangleCase, NotMultiplicityOne };
std::string to_string(BzTag tag);

struct BzClass {
  BzTag tag = BzTag::NotMultiplicityOne;
  int m = 0;  // rectangle width (or row length)
  int n = 0;  // rectangle height
  bool multiplicity_one() const { return tag != BzTag::NotMultiplicityOne; }
};

enum class StepKind { Leaf, Diagonal, RowSplit };
std::string to_string(StepKind kind);

// One node of a decomposition tree for k_{lambda,mu}.
//   Leaf: an irreducible pair; its value is k_{lambda,mu} itself.
//   Diagonal: lambda = mu; value c'_lambda.
//   RowSplit: split after row r and remove the rectangle (width^r) from the
//     upper block; value = cofactor * product of children (empty pairs skipped).
struct ReductionNode {
  Partition lambda;
  Partition mu;
  StepKind kind = StepKind::Leaf;
  int split_row = 0;
  int rect_width = 0;
  QtPolynomial cofactor = 1;
  FactorList cofactor_factors;  // the same cofactor as binomials
  std::vector<ReductionNode> children;
  std::optional<BzClass> bz;  // leaves only

  std::vector<const ReductionNode*> leaves() const;
};

// Irreducible: mu <= lambda and lambda_1 + ... + lambda_i > mu_1 + ... + mu_i
// for 1 <= i <= l(lambda). The empty pair is not irreducible.
bool is_irreducible(const Partition& lambda, const Partition& mu);

ReductionNode decompose_irreducible(const Partition& lambda, const Partition& mu);

// Product of cofactors and leaf values; `leaf` supplies k for irreducible pairs.
using LeafEvaluator = std::function<QtPolynomial(const Partition&, const Partition&)>;
QtPolynomial replay(const ReductionNode& tree, const LeafEvaluator& leaf);

// Same tree read for K2 entries instead of k: K2_{lambda,mu} = prod over
// leaves of K2 (cofactors and diagonal values become 1).
QtRational replay_k2(const ReductionNode& tree,
                     const std::function<QtRational(const Partition&, const Partition&)>& leaf);

BzClass classify_bz(const Partition& lambda, const Partition& mu);

struct ComplementPair {
  Partition lambda_c;
  Partition mu_c;
};
ComplementPair transport_complement(const Partition& lambda, const Partition& mu, int m, int n);

// k_{lambda,mu} for a multiplicity-one irreducible pair without the matrix
// pipeline: closed forms, complementation and a binomial ratio.
QtPolynomial fast_k_multiplicity_one(const Partition& lambda, const Partition& mu, const BzClass& cls);

// f_mu = sum over boxes of q^a t^l, directly and by the row-wise formula.
QtPolynomial f_stat(const Partition& mu);
QtPolynomial f_stat_rows(const Partition& mu);

struct FmuComplementCheck {
  QtPolynomial direct;                     // f_mu - f_{mu^c}, mu^c taken in (m^{n+1})
  std::optional<QtPolynomial> closed_form;  // only under mu_1 < m and l(mu) = n + 1
  bool closed_form_applies = false;
  bool nonnegativity_applies = false;  // closed form hypotheses plus |mu| = mn
  std::string note;
};
FmuComplementCheck check_fmu_complement(const Partition& mu, int m, int n);

Json to_json(const ReductionNode& node);
std::string to_ascii(const ReductionNode& node);

}  // namespace qtk
