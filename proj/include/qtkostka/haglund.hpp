#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtkostka/macdonald.hpp"
#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"
#include "qtkostka/serialize.hpp"

namespace qtk {

enum class Coverage { TheoremRowOrCol, TheoremMultOne, ConjectureOnly };
std::string to_string(Coverage c);

struct HaglundVerdict {
  Partition lambda;
  Partition mu;
  int k = 0;
  std::optional<QtPolynomial> quotient;  // k_{lambda,mu}(t^k, t) / (1-t)^{|lambda|} when exact
  bool is_polynomial = false;
  bool is_nonnegative = false;
  bool is_zero = false;
  Coverage coverage = Coverage::ConjectureOnly;
  std::string route;
};

// Theorem coverage of a pair: lambda a row or mu a column first, then
// K_{lambda,mu} = 1 or K_{mu',lambda'} = 1 as certified by classify_bz on the
// decomposition leaves.
Coverage coverage_of(const Partition& lambda, const Partition& mu);

// k_{lambda,mu} by the cheapest route; the name of the route is written to
// `route` when given. `store` backs the pipeline route.
QtPolynomial k_by_route(const Partition& lambda, const Partition& mu, MatrixStore& store, std::string* route = nullptr);

HaglundVerdict check_pair(const Partition& lambda, const Partition& mu, int k, MatrixStore& store);

// t^{n(mu)} prod [k(a'+1) - l']_t when l(mu) <= k, else 0.
QtPolynomial fast_row_quotient(const Partition& mu, int k);
// K_{lambda,1^n}(t) prod [k - c]_t when lambda_1 <= k, else 0.
QtPolynomial fast_column_quotient(const Partition& lambda, int k);

struct ScanSummary {
  long long pairs = 0;
  long long verdicts = 0;
  long long violations = 0;          // quotients that are not nonnegative polynomials
  long long theorem_violations = 0;  // the subset on theorem-covered pairs
  long long theorem_row_or_col = 0;
  long long theorem_mult_one = 0;
  long long conjecture_only = 0;
};

struct ScanReport {
  int max_n = 0;
  int max_k = 0;
  std::vector<HaglundVerdict> verdicts;
  ScanSummary summary;
};

// All lambda >= mu with |lambda| in 1..max_n and 0 <= k <= max_k.
ScanReport scan(int max_n, int max_k, MatrixStore& store, int jobs = 1);

Json to_json(const HaglundVerdict& v);
Json to_json(const ScanReport& report);

}  // namespace qtk
