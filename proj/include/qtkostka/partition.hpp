#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtk {

// Box of a Young diagram, 1-based (row 1 is the top row).
struct Cell {
  int row = 1;
  int col = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct CellStats {
  int arm = 0;
  int coarm = 0;
  int leg = 0;
  int coleg = 0;

  int content() const { return coarm - coleg; }
  int hook() const { return arm + 1 + leg; }
};

// An integer partition. Immutable value type; trailing zeros are stripped at
// construction and the parts must be weakly decreasing.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Sorts and strips zeros instead of rejecting unordered input.
  static Partition from_unsorted(std::vector<int> parts);
  // Parses "5,3,3"; an empty string (or "0") is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  std::span<const int> span() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  // 1-based; returns 0 beyond the length.
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  // Sum of the first i parts.
  int partial_sum(int i) const;

  Partition conjugate() const;
  bool contains(const Cell& x) const;
  std::vector<Cell> cells() const;  // row-major order

  // Rectangle (width^rows).
  static Partition rectangle(int rows, int width);
  static Partition row(int n) { return n > 0 ? Partition{n} : Partition{}; }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  std::string to_string() const;  // "5,3,3"
  std::string compact() const;    // "533" when every part is a single digit, else "5,3,3"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  // Lexicographic comparison of the part sequences (a refinement of dominance
  // among partitions of the same size).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

CellStats diagram_stats(const Partition& lambda, const Cell& x);

int n_stat(const Partition& lambda);

// mu <= lambda in dominance order; false when the sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Complement inside the rectangle (m^n): (m - lambda_n, ..., m - lambda_1).
Partition complement(const Partition& lambda, int m, int n);

// (lambda_1..lambda_r), (lambda_{r+1}..).
std::pair<Partition, Partition> split_rows(const Partition& lambda, int r);

// Concatenation (lambda^1, lambda^2); requires the last part of the first to
// be at least the first part of the second.
Partition concat_rows(const Partition& upper, const Partition& lower);

// lambda - (width^rows), row by row.
Partition subtract_rectangle(const Partition& lambda, int rows, int width);

// Column-wise sum lambda^1 + lambda^2.
Partition add_columns(const Partition& a, const Partition& b);

// All partitions of n in descending lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

// Partitions of n whose diagram fits inside (width^rows).
std::vector<Partition> partitions_in_box(int n, int rows, int width);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace qtk
