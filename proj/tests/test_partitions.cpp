#include <doctest.h>

#include <map>
#include <random>

#include "rfs/partitions.hpp"

namespace {

// Independent counting oracle: Bell triangle (no Stirling recurrence).
std::uint64_t bell_triangle(int m) {
  std::vector<std::vector<std::uint64_t>> tri;
  tri.push_back({1});
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint64_t> row{tri.back().back()};
    for (std::uint64_t x : tri.back()) row.push_back(row.back() + x);
    tri.push_back(std::move(row));
  }
  return tri[static_cast<size_t>(m)][0];
}

bool valid_rgs(const std::vector<int>& a) {
  int mx = -1;
  for (int v : a) {
    if (v < 0 || v > mx + 1) return false;
    mx = std::max(mx, v);
  }
  return true;
}

}  // namespace

TEST_CASE("frozen counting values") {
  CHECK(rfs::stirling2(6, 4) == 65);
  CHECK(rfs::stirling2(6, 5) == 15);
  CHECK(rfs::stirling2(6, 6) == 1);
  CHECK(rfs::stirling_sum(6, 4) == 81);
  CHECK(rfs::bell_number(6) == 203);
  CHECK(rfs::bell_number(10) == 115975);
  CHECK(rfs::stirling_sum(10, 4) == 106133);
  CHECK_THROWS_AS(rfs::stirling2(26, 3), std::invalid_argument);
}

TEST_CASE("bell numbers match the triangle oracle") {
  for (int m = 1; m <= 15; ++m) CHECK(rfs::bell_number(m) == bell_triangle(m));
}

TEST_CASE("rgs enumeration counts match stirling sums") {
  for (int m = 1; m <= 10; ++m)
    for (int b = 1; b <= m; ++b) {
      std::uint64_t count =
          rfs::for_each_rgs(m, b, [&](const std::vector<int>& a) {
            CHECK(valid_rgs(a));
            int blocks = *std::max_element(a.begin(), a.end()) + 1;
            CHECK(blocks >= b);
            return true;
          });
      CHECK(count == rfs::stirling_sum(m, b));
    }
}

TEST_CASE("enumeration order is lexicographic and abortable") {
  std::vector<std::vector<int>> seen;
  rfs::for_each_rgs(4, 1, [&](const std::vector<int>& a) {
    seen.push_back(a);
    return true;
  });
  CHECK(seen.size() == 15);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.front() == std::vector<int>{0, 0, 0, 0});
  CHECK(seen.back() == std::vector<int>{0, 1, 2, 3});

  std::uint64_t visited = rfs::for_each_rgs(4, 1, [&](const std::vector<int>&) {
    return false;  // abort immediately
  });
  CHECK(visited == 1);
}

TEST_CASE("prefix split covers the space exactly once") {
  int m = 10, b = 3;
  std::uint64_t direct = rfs::for_each_rgs(m, b, [](const std::vector<int>&) { return true; });
  std::uint64_t split = 0;
  for (const auto& prefix : rfs::rgs_prefixes(m, 4))
    split += rfs::for_each_rgs_completion(m, b, prefix,
                                          [](const std::vector<int>&) { return true; });
  CHECK(split == direct);
}

TEST_CASE("iterate_colorings visits one representative per partition") {
  std::uint64_t c1 = rfs::iterate_colorings(4, 1, [](const rfs::EdgeColoring& kc) {
    CHECK(kc.normalized() == kc);  // RGS colorings arrive normalized
    return true;
  });
  CHECK(c1 == 203);
  CHECK(rfs::iterate_colorings(4, 4, [](const rfs::EdgeColoring&) { return true; }) == 81);
  CHECK(rfs::iterate_colorings(5, 1, [](const rfs::EdgeColoring&) { return true; }) == 115975);
  CHECK_THROWS_AS(rfs::iterate_colorings(1, 1, [](const rfs::EdgeColoring&) { return true; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(rfs::iterate_colorings(4, 7, [](const rfs::EdgeColoring&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("partition sampler is exact and deterministic") {
  std::mt19937_64 rng(42);
  rfs::PartitionSampler sampler(6, 1);
  // frequencies of block counts should track S(6,j)/Bell(6)
  std::map<int, int> freq;
  const int trials = 40000;
  for (int i = 0; i < trials; ++i) {
    std::vector<int> a = sampler.sample(rng);
    REQUIRE(valid_rgs(a));
    freq[*std::max_element(a.begin(), a.end()) + 1]++;
  }
  for (int j = 1; j <= 6; ++j) {
    double expect = static_cast<double>(rfs::stirling2(6, j)) / 203.0;
    double got = static_cast<double>(freq[j]) / trials;
    CHECK(std::abs(got - expect) < 0.02);
  }

  // min-block restriction
  rfs::PartitionSampler restricted(6, 4);
  for (int i = 0; i < 2000; ++i) {
    std::vector<int> a = restricted.sample(rng);
    CHECK(*std::max_element(a.begin(), a.end()) + 1 >= 4);
  }

  // replayable
  std::mt19937_64 r1(7), r2(7);
  rfs::PartitionSampler s21(21, 1);
  for (int i = 0; i < 100; ++i) CHECK(s21.sample(r1) == s21.sample(r2));
}

TEST_CASE("sampler is uniform across individual partitions of a small set") {
  // all 15 partitions of 4 items should come out equally often
  std::mt19937_64 rng(1234);
  rfs::PartitionSampler sampler(4, 1);
  std::map<std::vector<int>, int> freq;
  const int trials = 30000;
  for (int i = 0; i < trials; ++i) freq[sampler.sample(rng)]++;
  CHECK(freq.size() == 15);
  for (const auto& [rgs, count] : freq)
    CHECK(std::abs(count / static_cast<double>(trials) - 1.0 / 15) < 0.01);
}
