#pragma once

#include <functional>
#include <vector>

#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"

namespace qtk {

// A semistandard tableau as the chain of shapes nu^0 = {} ⊆ nu^1 ⊆ ... ⊆ nu^l,
// where nu^i holds the entries <= i. Each step is a horizontal strip.
struct Ssyt {
  std::vector<Partition> chain;

  const Partition& shape() const { return chain.back(); }
  std::vector<int> content() const;
  // Row filling, e.g. [[1,1],[2]].
  std::vector<std::vector<int>> rows() const;
  static Ssyt from_rows(const std::vector<std::vector<int>>& rows);
  friend bool operator==(const Ssyt&, const Ssyt&) = default;
};

// outer/inner is a horizontal strip (inner ⊆ outer, at most one box per column).
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

// All horizontal strips nu/inner with |nu/inner| = size and nu ⊆ bound, in
// lexicographically ascending order of the row-increment vector.
std::vector<Partition> add_horizontal_strips(const Partition& inner, int size, const Partition& bound);

// Tableaux of shape lambda and content mu (a weak composition).
std::vector<Ssyt> enumerate_ssyt(const Partition& lambda, const std::vector<int>& content);
std::vector<Ssyt> enumerate_ssyt(const Partition& lambda, const Partition& mu);
void for_each_ssyt(const Partition& lambda, const std::vector<int>& content, const std::function<void(const Ssyt&)>& visit);

long long kostka_number(const Partition& lambda, const Partition& mu);

// Row reading word: rows from bottom to top, each row left to right.
std::vector<int> reading_word(const Ssyt& t);
int charge_of_word(const std::vector<int>& word);
int charge(const Ssyt& t);

// Sum of t^charge over SSYT(lambda, mu).
QtPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu);

}  // namespace qtk
