#include <doctest.h>

#include "qtkostka/errors.hpp"
#include "qtkostka/macdonald.hpp"
#include "qtkostka/oracle.hpp"

using qtk::Integer;
using qtk::Partition;
using qtk::QtPolynomial;
using qtk::QtRational;
namespace oracle = qtk::oracle;

namespace {

QtPolynomial om(int a, int b) { return QtPolynomial::one_minus(a, b); }

// Coefficient of x^mu in p_rho: the number of ways to send each part of rho
// to a variable so that the exponents collected are exactly mu.
long count_assignments(const Partition& rho, std::size_t i, std::vector<int>& remaining) {
  if (i == rho.parts().size()) {
    for (int r : remaining) {
      if (r != 0) return 0;
    }
    return 1;
  }
  long total = 0;
  for (int& r : remaining) {
    if (r < rho.parts()[i]) continue;
    r -= rho.parts()[i];
    total += count_assignments(rho, i + 1, remaining);
    r += rho.parts()[i];
  }
  return total;
}

}  // namespace

TEST_CASE("power sums in monomials: examples") {
  const auto two = oracle::powersum_in_monomials(2);
  REQUIRE(two.index == std::vector<Partition>{{2}, {1, 1}});
  CHECK(two.entries[1] == std::vector<Integer>{1, 2});
  CHECK(two.entries[0] == std::vector<Integer>{1, 0});
  const auto three = oracle::powersum_in_monomials(3);
  CHECK(three.entries[1] == std::vector<Integer>{1, 1, 0});
}

TEST_CASE("power sums in monomials match assignment counts (n <= 7)") {
  for (int n = 1; n <= 7; ++n) {
    const auto table = oracle::powersum_in_monomials(n);
    for (std::size_t i = 0; i < table.index.size(); ++i) {
      for (std::size_t j = 0; j < table.index.size(); ++j) {
        std::vector<int> remaining = table.index[j].parts();
        CHECK(table.entries[i][j] == count_assignments(table.index[i], 0, remaining));
      }
    }
  }
}

TEST_CASE("z and the power sum Gram diagonal") {
  CHECK(oracle::z_rho(Partition{1}) == 1);
  CHECK(oracle::z_rho(Partition{1, 1}) == 2);
  CHECK(oracle::z_rho(Partition{2, 2, 1}) == 8);
  CHECK(oracle::z_rho(Partition{3, 1, 1, 1}) == 18);
  CHECK(oracle::qt_gram_powersums(1)[0] == QtRational(om(1, 0), {{0, 1, 1}}));
  const auto g2 = oracle::qt_gram_powersums(2);
  CHECK(g2[0] == QtRational(2 * om(2, 0), {{0, 2, 1}}));
  CHECK(g2[1] == QtRational(2 * om(1, 0) * om(1, 0), {{0, 1, 2}}));
}

TEST_CASE("Scalar arithmetic and reciprocal") {
  const oracle::Scalar half(QtRational(1), 2);
  CHECK(half + half == oracle::Scalar(QtRational(1)));
  CHECK((half * oracle::Scalar(QtRational(2))).as_qt_rational() == QtRational(1));
  CHECK_FALSE(half.as_qt_rational().has_value());
  const oracle::Scalar s(QtRational(3 * QtPolynomial::monomial(1, 2) * om(1, 1), {{0, 1, 1}}), 5);
  CHECK(s * oracle::reciprocal(s) == oracle::Scalar(QtRational(1)));
  CHECK_THROWS_AS(oracle::reciprocal(oracle::Scalar(QtRational(QtPolynomial(1) + QtPolynomial::q() * 2 + QtPolynomial::t()))),
                  qtk::ConsistencyError);
}

TEST_CASE("Gram-Schmidt examples") {
  const auto one = oracle::gram_schmidt_P(1);
  CHECK(one.K1[0][0] == QtRational(1));
  const auto two = oracle::gram_schmidt_P(2);
  CHECK(two.K1[0][1] == QtRational((1 + QtPolynomial::q()) * om(0, 1), {{1, 1, 1}}));
  CHECK(two.K1[1][0].is_zero());
}

// Properties

TEST_CASE("oracle K1 equals the tableau K1, orthogonality holds (n <= 5)") {
  for (int n = 1; n <= 5; ++n) {
    const auto gs = oracle::gram_schmidt_P(n);
    const auto pipeline = qtk::build_matrices(n);
    REQUIRE(gs.index == pipeline.K1.index());
    for (std::size_t i = 0; i < gs.index.size(); ++i) {
      for (std::size_t j = 0; j < gs.index.size(); ++j) CHECK(gs.K1[i][j] == pipeline.K1.at(i, j));
    }
    CHECK(oracle::audit_orthogonality(gs));
    CHECK(oracle::check_Qn_plethysm(gs));
  }
}

TEST_CASE("<P, Q> = 1 with Q = b P (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const auto gs = oracle::gram_schmidt_P(n);
    for (std::size_t i = 0; i < gs.index.size(); ++i) {
      const auto b = qtk::normalization(gs.index[i]).b;
      CHECK(gs.norms[i] * oracle::Scalar(b) == oracle::Scalar(QtRational(1)));
    }
  }
}

TEST_CASE("Q_(n) plethysm examples") {
  CHECK(oracle::check_Qn_plethysm(1));
  CHECK(oracle::check_Qn_plethysm(2));
  CHECK(oracle::check_Qn_plethysm(3));
}
