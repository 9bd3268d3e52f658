#include "qtkostka/tableaux.hpp"

#include <algorithm>
#include <map>

#include "qtkostka/errors.hpp"

namespace qtk {

std::vector<int> Ssyt::content() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < chain.size(); ++i) out.push_back(chain[i].size() - chain[i - 1].size());
  return out;
}

std::vector<std::vector<int>> Ssyt::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape().length()));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (int r = 1; r <= chain[i].length(); ++r) {
      for (int c = chain[i - 1].part(r); c < chain[i].part(r); ++c) out[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(i));
    }
  }
  return out;
}

Ssyt Ssyt::from_rows(const std::vector<std::vector<int>>& rows) {
  int letters = 0;
  for (const auto& row : rows) {
    for (int x : row) {
      if (x < 1) throw DomainError("tableau entries must be positive");
      letters = std::max(letters, x);
    }
  }
  Ssyt t;
  t.chain.emplace_back();
  for (int i = 1; i <= letters; ++i) {
    std::vector<int> parts;
    for (const auto& row : rows) {
      parts.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [i](int x) { return x <= i; })));
    }
    Partition next;
    try {
      next = Partition(std::move(parts));
    } catch (const DomainError&) {
      throw DomainError("row filling is not semistandard");
    }
    if (!is_horizontal_strip(next, t.chain.back())) throw DomainError("row filling is not semistandard");
    t.chain.push_back(std::move(next));
  }
  // Rows must also be weakly increasing, which the prefix counts alone do not see.
  if (t.rows() != rows) throw DomainError("row filling is not semistandard");
  return t;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int r = 1; r <= outer.length(); ++r) {
    if (inner.part(r) > outer.part(r)) return false;
    if (r >= 2 && outer.part(r) > inner.part(r - 1)) return false;
  }
  return true;
}

namespace {

void strips_from_row(const Partition& inner, const Partition& bound, int row, int remaining, std::vector<int>& parts,
                     std::vector<Partition>& out) {
  const int rows = std::max(inner.length() + 1, 1);
  if (row > rows) {
    if (remaining == 0) out.emplace_back(parts);
    return;
  }
  const int base = inner.part(row);
  int cap = bound.part(row);
  if (row >= 2) cap = std::min(cap, inner.part(row - 1));
  const int max_add = std::min(remaining, std::max(0, cap - base));
  for (int d = 0; d <= max_add; ++d) {
    parts.push_back(base + d);
    strips_from_row(inner, bound, row + 1, remaining - d, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& inner, int size, const Partition& bound) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> parts;
  strips_from_row(inner, bound, 1, size, parts, out);
  return out;
}

namespace {

// Every column of lambda/nu must be fillable with the letters still to come.
bool fits(const Partition& lambda, const Partition& nu, int letters_left) {
  const Partition lc = lambda.conjugate();
  const Partition nc = nu.conjugate();
  for (int c = 1; c <= lc.length(); ++c) {
    if (lc.part(c) - nc.part(c) > letters_left) return false;
  }
  return true;
}

void walk(const Partition& lambda, const std::vector<int>& content, std::size_t step, Ssyt& current,
          const std::function<void(const Ssyt&)>& visit) {
  if (step == content.size()) {
    if (current.chain.back() == lambda) visit(current);
    return;
  }
  const int left = static_cast<int>(content.size() - step - 1);
  for (auto& next : add_horizontal_strips(current.chain.back(), content[step], lambda)) {
    if (!fits(lambda, next, left)) continue;
    current.chain.push_back(std::move(next));
    walk(lambda, content, step + 1, current, visit);
    current.chain.pop_back();
  }
}

}  // namespace

void for_each_ssyt(const Partition& lambda, const std::vector<int>& content, const std::function<void(const Ssyt&)>& visit) {
  int total = 0;
  for (int x : content) {
    if (x < 0) throw DomainError("content entries must be nonnegative");
    total += x;
  }
  if (total != lambda.size()) throw DomainError("shape and content sizes differ");
  Ssyt current;
  current.chain.emplace_back();
  walk(lambda, content, 0, current, visit);
}

std::vector<Ssyt> enumerate_ssyt(const Partition& lambda, const std::vector<int>& content) {
  std::vector<Ssyt> out;
  for_each_ssyt(lambda, content, [&](const Ssyt& t) { out.push_back(t); });
  return out;
}

std::vector<Ssyt> enumerate_ssyt(const Partition& lambda, const Partition& mu) {
  return enumerate_ssyt(lambda, mu.parts());
}

long long kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size() || !dominance_leq(mu, lambda)) return 0;
  // Count chains by dynamic programming over intermediate shapes.
  std::map<Partition, long long> layer{{Partition{}, 1}};
  for (int step = 0; step < mu.length(); ++step) {
    std::map<Partition, long long> next_layer;
    const int left = mu.length() - step - 1;
    for (const auto& [shape, count] : layer) {
      for (auto& next : add_horizontal_strips(shape, mu.part(step + 1), lambda)) {
        if (fits(lambda, next, left)) next_layer[std::move(next)] += count;
      }
    }
    layer = std::move(next_layer);
  }
  auto it = layer.find(lambda);
  return it == layer.end() ? 0 : it->second;
}

std::vector<int> reading_word(const Ssyt& t) {
  std::vector<int> word;
  const auto rows = t.rows();
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

int charge_of_word(const std::vector<int>& word) {
  if (word.empty()) return 0;
  const int letters = *std::max_element(word.begin(), word.end());
  std::vector<int> counts(static_cast<std::size_t>(letters) + 1, 0);
  for (int x : word) {
    if (x < 1) throw DomainError("word letters must be positive");
    ++counts[static_cast<std::size_t>(x)];
  }
  for (int i = 2; i <= letters; ++i) {
    if (counts[static_cast<std::size_t>(i)] > counts[static_cast<std::size_t>(i - 1)]) {
      throw DomainError("charge needs partition content");
    }
  }
  const int n = static_cast<int>(word.size());
  std::vector<bool> used(word.size(), false);
  int remaining = n;
  int total = 0;
  while (remaining > 0) {
    // Extract a standard subword: find 1 scanning leftward from the right end,
    // then 2 continuing leftward cyclically from there, and so on.
    int pos = n;
    int index = 0;
    for (int letter = 1;; ++letter) {
      int found = -1;
      bool wrapped = false;
      for (int step = 1; step <= n; ++step) {
        int p = pos - step;
        if (p < 0) {
          p += n;
          wrapped = true;
        }
        if (!used[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == letter) {
          found = p;
          break;
        }
      }
      if (found < 0) break;
      if (letter > 1 && wrapped) ++index;  // letter sits to the right of its predecessor
      total += index;
      used[static_cast<std::size_t>(found)] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

int charge(const Ssyt& t) { return charge_of_word(reading_word(t)); }

QtPolynomial kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return {};
  std::vector<Term> terms;
  for_each_ssyt(lambda, mu.parts(), [&](const Ssyt& t) { terms.push_back({{0, charge(t)}, 1}); });
  return QtPolynomial::from_terms(std::move(terms));
}

}  // namespace qtk
