#include "qtkostka/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "qtkostka/errors.hpp"

namespace qtk {

namespace {

void strip_zeros(std::vector<int>& parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  strip_zeros(parts_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("not a partition: '" + text + "'");
    }
    if (used != item.size()) throw DomainError("not a partition: '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

int Partition::partial_sum(int i) const {
  int s = 0;
  for (int j = 1; j <= std::min(i, length()); ++j) s += part(j);
  return s;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(conj));
}

bool Partition::contains(const Cell& x) const {
  return x.row >= 1 && x.col >= 1 && x.row <= length() && x.col <= part(x.row);
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int r = 1; r <= length(); ++r) {
    for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
  }
  return out;
}

Partition Partition::rectangle(int rows, int width) {
  if (rows < 0 || width < 0) throw DomainError("rectangle dimensions must be nonnegative");
  if (width == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::compact() const {
  if (parts_.empty()) return "0";
  if (parts_.front() >= 10) return to_string();
  std::string s;
  for (int p : parts_) s += static_cast<char>('0' + p);
  return s;
}

CellStats diagram_stats(const Partition& lambda, const Cell& x) {
  if (!lambda.contains(x)) {
    throw DomainError("cell (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                      ") is outside the diagram of (" + lambda.to_string() + ")");
  }
  int column_length = 0;
  while (lambda.part(column_length + 1) >= x.col) ++column_length;
  return CellStats{lambda.part(x.row) - x.col, x.col - 1, column_length - x.row, x.row - 1};
}

int n_stat(const Partition& lambda) {
  int s = 0;
  for (int i = 1; i <= lambda.length(); ++i) s += (i - 1) * lambda.part(i);
  return s;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return false;
  int sm = 0;
  int sl = 0;
  const int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

Partition complement(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0 || lambda.length() > n || lambda.part(1) > m) {
    throw DomainError("(" + lambda.to_string() + ") is not contained in (" + std::to_string(m) + "^" +
                      std::to_string(n) + ")");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) out.push_back(m - lambda.part(i));
  return Partition(std::move(out));
}

std::pair<Partition, Partition> split_rows(const Partition& lambda, int r) {
  if (r < 0 || r > lambda.length()) {
    throw DomainError("split index " + std::to_string(r) + " outside (" + lambda.to_string() + ")");
  }
  const auto& p = lambda.parts();
  return {Partition(std::vector<int>(p.begin(), p.begin() + r)),
          Partition(std::vector<int>(p.begin() + r, p.end()))};
}

Partition concat_rows(const Partition& upper, const Partition& lower) {
  if (!upper.empty() && !lower.empty() && upper.parts().back() < lower.part(1)) {
    throw DomainError("cannot stack (" + lower.to_string() + ") under (" + upper.to_string() + ")");
  }
  std::vector<int> p = upper.parts();
  p.insert(p.end(), lower.parts().begin(), lower.parts().end());
  return Partition(std::move(p));
}

Partition subtract_rectangle(const Partition& lambda, int rows, int width) {
  if (rows < 0 || width < 0 || lambda.length() > rows) {
    throw DomainError("(" + lambda.to_string() + ") does not decompose over a rectangle with " +
                      std::to_string(rows) + " rows");
  }
  std::vector<int> out;
  for (int i = 1; i <= rows; ++i) {
    if (lambda.part(i) < width) {
      throw DomainError("(" + lambda.to_string() + ") does not contain (" + std::to_string(width) + "^" +
                        std::to_string(rows) + ")");
    }
    out.push_back(lambda.part(i) - width);
  }
  return Partition(std::move(out));
}

Partition add_columns(const Partition& a, const Partition& b) {
  const int len = std::max(a.length(), b.length());
  std::vector<int> out;
  for (int i = 1; i <= len; ++i) out.push_back(a.part(i) + b.part(i));
  return Partition::from_unsorted(std::move(out));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    generate(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> current;
  generate(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_in_box(int n, int rows, int width) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    if (p.length() <= rows && p.part(1) <= width) out.push_back(std::move(p));
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

}  // namespace qtk
