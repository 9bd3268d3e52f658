#include <doctest.h>

#include "qtkostka/errors.hpp"
#include "qtkostka/partition.hpp"

using qtk::Partition;

TEST_CASE("construction strips zeros and rejects bad input") {
  CHECK(Partition{3, 1, 0, 0}.parts() == std::vector<int>{3, 1});
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(Partition({1, 2}), qtk::DomainError);
  CHECK_THROWS_AS(Partition({2, -1}), qtk::DomainError);
  CHECK(Partition::parse("5, 3,3") == Partition{5, 3, 3});
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("0") == Partition{});
  CHECK_THROWS_AS(Partition::parse("3,x"), qtk::DomainError);
  CHECK_THROWS_AS(Partition::parse("1,3"), qtk::DomainError);
  CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition{3, 2, 1});
  CHECK(Partition{5, 3, 3}.size() == 11);
  CHECK(Partition{5, 3, 3}.part(4) == 0);
  CHECK(Partition{5, 3, 3}.compact() == "533");
  CHECK(Partition{12, 1}.compact() == "12,1");
}

TEST_CASE("diagram statistics") {
  const auto s = qtk::diagram_stats(Partition{8, 7, 4, 4, 1}, {2, 4});
  CHECK(s.arm == 3);
  CHECK(s.coarm == 3);
  CHECK(s.leg == 2);
  CHECK(s.coleg == 1);

  const auto one = qtk::diagram_stats(Partition{1}, {1, 1});
  CHECK(one.arm == 0);
  CHECK(one.coarm == 0);
  CHECK(one.leg == 0);
  CHECK(one.coleg == 0);

  const auto corner = qtk::diagram_stats(Partition{3, 2}, {1, 1});
  CHECK(corner.arm == 2);
  CHECK(corner.coarm == 0);
  CHECK(corner.leg == 1);
  CHECK(corner.coleg == 0);
  CHECK(corner.hook() == 4);
  CHECK(corner.content() == 0);

  CHECK_THROWS_AS(qtk::diagram_stats(Partition{3, 2}, {2, 3}), qtk::DomainError);
}

TEST_CASE("dominance and n statistic") {
  CHECK(qtk::dominance_leq(Partition{2, 1, 1}, Partition{3, 1}));
  CHECK(qtk::dominance_leq(Partition{4, 2}, Partition{4, 2}));
  CHECK_FALSE(qtk::dominance_leq(Partition{3, 3}, Partition{4, 1, 1}));
  CHECK_FALSE(qtk::dominance_leq(Partition{2}, Partition{3}));

  CHECK(qtk::n_stat(Partition{2, 1}) == 1);
  CHECK(qtk::n_stat(Partition{}) == 0);
  CHECK(qtk::n_stat(Partition{1, 1, 1}) == 3);
}

TEST_CASE("complement inside a rectangle") {
  CHECK(qtk::complement(Partition{8, 7, 4, 4, 2}, 9, 5) == Partition{7, 5, 5, 2, 1});
  CHECK(qtk::complement(Partition{4, 4, 4}, 4, 3).empty());
  CHECK(qtk::complement(Partition{3, 1}, 3, 2) == Partition{2});
  CHECK_THROWS_AS(qtk::complement(Partition{4}, 3, 2), qtk::DomainError);
  CHECK_THROWS_AS(qtk::complement(Partition{1, 1, 1}, 3, 2), qtk::DomainError);
}

TEST_CASE("row splits and rectangles") {
  auto [a, b] = qtk::split_rows(Partition{5, 3, 3}, 2);
  CHECK(a == Partition{5, 3});
  CHECK(b == Partition{3});
  auto [c, d] = qtk::split_rows(Partition{4}, 1);
  CHECK(c == Partition{4});
  CHECK(d.empty());
  auto [e, f] = qtk::split_rows(Partition{3, 2, 1}, 3);
  CHECK(e == Partition{3, 2, 1});
  CHECK(f.empty());

  CHECK(qtk::subtract_rectangle(Partition{5, 3}, 2, 3) == Partition{2});
  CHECK(qtk::subtract_rectangle(Partition{4, 4}, 2, 3) == Partition{1, 1});
  CHECK(qtk::subtract_rectangle(Partition{2, 2}, 2, 2).empty());
  CHECK_THROWS_AS(qtk::subtract_rectangle(Partition{5, 2}, 2, 3), qtk::DomainError);
  CHECK_THROWS_AS(qtk::subtract_rectangle(Partition{5, 3, 1}, 2, 3), qtk::DomainError);

  CHECK(qtk::add_columns(Partition{2}, Partition{3, 3}) == Partition{5, 3});
  CHECK_THROWS_AS(qtk::concat_rows(Partition{2}, Partition{3}), qtk::DomainError);
}

TEST_CASE("partitions_of in descending lex order") {
  const auto p4 = qtk::partitions_of(4);
  const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(p4 == expected);
  CHECK(qtk::partitions_of(0).size() == 1);
  // p(n) for n = 1..10
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(qtk::partitions_of(n).size() == static_cast<std::size_t>(counts[n - 1]));
  CHECK(qtk::partitions_in_box(4, 2, 3) == std::vector<Partition>{{3, 1}, {2, 2}});
}

// Properties

TEST_CASE("conjugation is an involution that reverses dominance (n <= 8)") {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = qtk::partitions_of(n);
    for (const auto& lambda : ps) {
      CHECK(lambda.conjugate().conjugate() == lambda);
      CHECK(lambda.conjugate().size() == lambda.size());
      for (const auto& mu : ps) {
        CHECK(qtk::dominance_leq(mu, lambda) == qtk::dominance_leq(lambda.conjugate(), mu.conjugate()));
      }
    }
  }
}

TEST_CASE("lex order refines dominance") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = qtk::partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(qtk::dominance_leq(ps[j], ps[i]));
    }
  }
}

TEST_CASE("complement is an involution and sizes add up (m, n <= 5)") {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (int size = 0; size <= m * n; ++size) {
        for (const auto& lambda : qtk::partitions_in_box(size, n, m)) {
          const Partition c = qtk::complement(lambda, m, n);
          CHECK(c.size() + lambda.size() == m * n);
          CHECK(qtk::complement(c, m, n) == lambda);
        }
      }
    }
  }
}

TEST_CASE("split then concatenate is the identity") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      for (int r = 0; r <= lambda.length(); ++r) {
        auto [upper, lower] = qtk::split_rows(lambda, r);
        CHECK(qtk::concat_rows(upper, lower) == lambda);
      }
    }
  }
}

TEST_CASE("statistics agree with direct diagram counts") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : qtk::partitions_of(n)) {
      int coleg_sum = 0;
      for (const auto& x : lambda.cells()) {
        const auto s = qtk::diagram_stats(lambda, x);
        int arm = 0;
        while (lambda.contains({x.row, x.col + arm + 1})) ++arm;
        int leg = 0;
        while (lambda.contains({x.row + leg + 1, x.col})) ++leg;
        CHECK(s.arm == arm);
        CHECK(s.leg == leg);
        CHECK(s.coarm == x.col - 1);
        CHECK(s.coleg == x.row - 1);
        coleg_sum += s.coleg;
      }
      CHECK(qtk::n_stat(lambda) == coleg_sum);
    }
  }
}
