#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"
#include "qtkostka/serialize.hpp"

namespace qtk {

// c_mu = prod (1 - q^a t^{l+1}), c'_mu = prod (1 - q^{a+1} t^l), b_mu = c_mu / c'_mu.
FactorList c_factors(const Partition& mu);
FactorList c_prime_factors(const Partition& mu);

struct NormalizationConstants {
  QtPolynomial c;
  QtPolynomial c_prime;
  QtRational b;
};
NormalizationConstants normalization(const Partition& mu);

// psi weight of the horizontal strip lambda/mu.
QtRational psi_strip(const Partition& lambda, const Partition& mu);

// Sum over SSYT(lambda, mu) of the product of strip weights along the chain.
QtRational k1_entry(const Partition& lambda, const Partition& mu);

// Square matrix over the partitions of n, rows and columns in descending lex
// order. Entry (lambda, mu) vanishes unless mu <= lambda, so the matrices used
// here are upper triangular. An index may also be any interval of partitions
// of n (still descending lex).
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(std::vector<Partition> index);
  static TriangularMatrix identity(std::vector<Partition> index);

  std::size_t dimension() const { return index_.size(); }
  const std::vector<Partition>& index() const { return index_; }
  std::optional<std::size_t> position(const Partition& p) const;

  const QtRational& at(std::size_t i, std::size_t j) const { return entries_[i * index_.size() + j]; }
  QtRational& at(std::size_t i, std::size_t j) { return entries_[i * index_.size() + j]; }
  // Throws DomainError when either partition is not in the index.
  const QtRational& operator()(const Partition& lambda, const Partition& mu) const;

  // Zero below the diagonal, zero off the dominance order, ones on the diagonal.
  bool is_unitriangular() const;
  // Inverse of a unitriangular matrix by back substitution.
  TriangularMatrix inverse(int jobs = 1) const;
  TriangularMatrix multiply(const TriangularMatrix& rhs, int jobs = 1) const;
  // Entrywise q <-> t.
  TriangularMatrix swap_qt() const;

  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b);

 private:
  std::vector<Partition> index_;
  std::vector<QtRational> entries_;
};

enum class MatrixKind { K, K1, K1Inv, K2, K2Inv };
std::string to_string(MatrixKind kind);  // "k", "k1", "k1inv", "k2", "k2inv"
MatrixKind matrix_kind_from_string(const std::string& name);

struct MatrixSet {
  int n = 0;
  TriangularMatrix K;
  TriangularMatrix K1;
  TriangularMatrix K1Inv;
  TriangularMatrix K2;
  TriangularMatrix K2Inv;

  const TriangularMatrix& get(MatrixKind kind) const;
  TriangularMatrix& get(MatrixKind kind);
};

// All five matrices for degree n. K1 entries are computed on `jobs` threads.
MatrixSet build_matrices(int n, int jobs = 1);

// The five matrices restricted to the interval [mu, lambda] of the dominance
// order. Entries between elements of the interval agree with the full-degree
// matrices, so single entries at large n need no full build.
MatrixSet interval_matrices(const Partition& lambda, const Partition& mu, int jobs = 1);

Json matrix_to_json(const TriangularMatrix& m, MatrixKind kind, int n);
TriangularMatrix matrix_from_json(const Json& j);
inline constexpr int kCacheFormatVersion = 1;

// Memory and optional disk cache of MatrixSets keyed by degree. Files are
// <dir>/<kind>_n<n>.json and carry a format_version field; files with another
// version are ignored and rewritten.
class MatrixStore {
 public:
  explicit MatrixStore(std::optional<std::filesystem::path> cache_dir = std::nullopt, int jobs = 1);
  std::shared_ptr<const MatrixSet> get(int n);
  int jobs() const { return jobs_; }

 private:
  std::optional<MatrixSet> load(int n) const;
  void save(const MatrixSet& set) const;

  std::optional<std::filesystem::path> dir_;
  int jobs_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const MatrixSet>> memory_;
};

// k_{lambda,mu} = K2_{lambda,mu} c'_mu. Throws ConsistencyError when a
// denominator survives.
QtPolynomial k_from_k2(const QtRational& k2, const Partition& mu);
QtPolynomial k_coeff(const MatrixSet& set, const Partition& lambda, const Partition& mu);
// Standalone entry through interval_matrices.
QtPolynomial k_coeff(const Partition& lambda, const Partition& mu);

// K2_{lambda,mu}(q, 1) computed as k(q,1) / c'_mu(q,1).
QtRational k2_at_t_one(const QtPolynomial& k, const Partition& mu);

// t^{n(mu)} prod (1 - q^{a'+1} t^{-l'}) = k_{(n),mu}.
QtPolynomial closed_form_row(const Partition& mu);
// K_{lambda,1^n}(t) prod (1 - q t^{-c}) = k_{lambda,(1^n)}, with the
// Kostka-Foulkes factor from the hook formula t^{n(lambda')} [n]_t! / prod [h]_t.
QtPolynomial closed_form_column(const Partition& lambda);
QtPolynomial hook_kostka_foulkes_column(const Partition& lambda);

// P_lambda at the alphabet (1 - z)/(1 - t) for a monomial z:
// prod (t^{l'} - q^{a'} z) / prod (1 - q^a t^{l+1}).
QtRational principal_specialization_P(const Partition& lambda, Monomial z);

}  // namespace qtk
