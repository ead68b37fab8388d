#include "rfs/partitions.hpp"

#include <stdexcept>

namespace rfs {

namespace {

constexpr int kMaxStirlingU64 = 25;

std::vector<std::vector<std::uint64_t>> stirling_table(int m) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<size_t>(m) + 1,
                                            std::vector<std::uint64_t>(static_cast<size_t>(m) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j)
      s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          static_cast<std::uint64_t>(j) * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  return s;
}

}  // namespace

std::uint64_t stirling2(int m, int j) {
  if (m < 0 || j < 0) throw std::invalid_argument("stirling2: negative argument");
  if (m > kMaxStirlingU64) throw std::invalid_argument("stirling2: m exceeds uint64 range (25)");
  if (j > m) return 0;
  return stirling_table(m)[static_cast<size_t>(m)][static_cast<size_t>(j)];
}

std::uint64_t bell_number(int m) { return stirling_sum(m, 0); }

std::uint64_t stirling_sum(int m, int min_blocks) {
  if (m < 0) throw std::invalid_argument("stirling_sum: negative m");
  if (m == 0) return min_blocks <= 0 ? 1 : 0;
  if (m > kMaxStirlingU64) throw std::invalid_argument("stirling_sum: m exceeds uint64 range (25)");
  auto s = stirling_table(m);
  std::uint64_t total = 0;
  for (int j = std::max(min_blocks, 1); j <= m; ++j)
    total += s[static_cast<size_t>(m)][static_cast<size_t>(j)];
  return total;
}

namespace {

struct RgsEnumerator {
  int m;
  int min_blocks;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> a;
  std::uint64_t visited = 0;
  bool aborted = false;

  RgsEnumerator(int m_, int min_blocks_, const std::function<bool(const std::vector<int>&)>& v)
      : m(m_), min_blocks(min_blocks_), visit(v), a(static_cast<size_t>(m_), 0) {}

  // pos: next index to fill; mx: max value among a[0..pos-1] (-1 when empty)
  void rec(int pos, int mx) {
    if (aborted) return;
    // blocks reachable from here: mx+1 current, one new per remaining slot
    if (mx + 1 + (m - pos) < min_blocks) return;
    if (pos == m) {
      ++visited;
      if (!visit(a)) aborted = true;
      return;
    }
    for (int v = 0; v <= mx + 1 && !aborted; ++v) {
      a[static_cast<size_t>(pos)] = v;
      rec(pos + 1, std::max(mx, v));
    }
  }
};

}  // namespace

std::uint64_t for_each_rgs(int m, int min_blocks,
                           const std::function<bool(const std::vector<int>&)>& visit) {
  if (m < 1) throw std::invalid_argument("for_each_rgs: m must be >= 1");
  if (min_blocks > m) return 0;
  RgsEnumerator e(m, min_blocks, visit);
  e.rec(0, -1);
  return e.visited;
}

std::vector<std::vector<int>> rgs_prefixes(int m, int prefix_len) {
  if (prefix_len > m) prefix_len = m;
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<size_t>(prefix_len), 0);
  std::function<void(int, int)> rec = [&](int pos, int mx) {
    if (pos == prefix_len) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[static_cast<size_t>(pos)] = v;
      rec(pos + 1, std::max(mx, v));
    }
  };
  rec(0, -1);
  return out;
}

std::uint64_t for_each_rgs_completion(int m, int min_blocks, const std::vector<int>& prefix,
                                      const std::function<bool(const std::vector<int>&)>& visit) {
  if (static_cast<int>(prefix.size()) > m)
    throw std::invalid_argument("for_each_rgs_completion: prefix longer than m");
  RgsEnumerator e(m, min_blocks, visit);
  int mx = -1;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] < 0 || prefix[i] > mx + 1)
      throw std::invalid_argument("for_each_rgs_completion: invalid prefix");
    e.a[i] = prefix[i];
    mx = std::max(mx, prefix[i]);
  }
  e.rec(static_cast<int>(prefix.size()), mx);
  return e.visited;
}

PartitionSampler::PartitionSampler(int m, int min_blocks) : m_(m), min_blocks_(std::max(min_blocks, 1)) {
  if (m < 1 || m > 33) throw std::invalid_argument("PartitionSampler: m out of range [1,33]");
  if (min_blocks_ > m) throw std::invalid_argument("PartitionSampler: min_blocks > m");
  s_.assign(static_cast<size_t>(m) + 1,
            std::vector<unsigned __int128>(static_cast<size_t>(m) + 1, 0));
  s_[0][0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= i; ++j)
      s_[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          s_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
          static_cast<unsigned __int128>(j) * s_[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
  total_ = 0;
  for (int j = min_blocks_; j <= m; ++j) total_ += s_[static_cast<size_t>(m)][static_cast<size_t>(j)];
}

namespace {

unsigned __int128 uniform_u128(std::mt19937_64& rng, unsigned __int128 bound) {
  // rejection sampling on 128-bit words
  for (;;) {
    unsigned __int128 x = (static_cast<unsigned __int128>(rng()) << 64) | rng();
    unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
    limit -= limit % bound;  // largest multiple of bound
    if (x < limit) return x % bound;
  }
}

}  // namespace

std::vector<int> PartitionSampler::sample(std::mt19937_64& rng) const {
  // draw the block count j with weight S(m, j), j >= min_blocks
  unsigned __int128 r = uniform_u128(rng, total_);
  int j = min_blocks_;
  for (; j < m_; ++j) {
    unsigned __int128 w = s_[static_cast<size_t>(m_)][static_cast<size_t>(j)];
    if (r < w) break;
    r -= w;
  }
  // decisions for elements m..1: new block or join one of the j live blocks
  std::vector<int> decision(static_cast<size_t>(m_) + 1, -1);  // -1 = new block, else block pick
  int live = j;
  for (int i = m_; i >= 1; --i) {
    if (live == i) {  // everything remaining must open its own block
      decision[static_cast<size_t>(i)] = -1;
      --live;
      continue;
    }
    unsigned __int128 bound = s_[static_cast<size_t>(i)][static_cast<size_t>(live)];
    unsigned __int128 x = uniform_u128(rng, bound);
    unsigned __int128 w_new = s_[static_cast<size_t>(i - 1)][static_cast<size_t>(live - 1)];
    if (x < w_new) {
      decision[static_cast<size_t>(i)] = -1;
      --live;
    } else {
      decision[static_cast<size_t>(i)] =
          static_cast<int>((x - w_new) / s_[static_cast<size_t>(i - 1)][static_cast<size_t>(live)]);
    }
  }
  // rebuild forward; blocks ordered by first appearance gives a canonical RGS
  std::vector<int> rgs(static_cast<size_t>(m_), 0);
  int blocks = 0;
  for (int i = 1; i <= m_; ++i) {
    if (decision[static_cast<size_t>(i)] < 0)
      rgs[static_cast<size_t>(i - 1)] = blocks++;
    else
      rgs[static_cast<size_t>(i - 1)] = decision[static_cast<size_t>(i)];
  }
  return rgs;
}

EdgeColoring coloring_from_rgs(int n, const std::vector<int>& rgs) {
  EdgeColoring kc(n, 1);
  size_t i = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) kc.set_color(u, v, rgs.at(i++) + 1);
  if (i != rgs.size()) throw std::invalid_argument("coloring_from_rgs: length mismatch");
  return kc;
}

std::uint64_t iterate_colorings(int n, int min_colors,
                                const std::function<bool(const EdgeColoring&)>& visit) {
  if (n < 2) throw std::invalid_argument("iterate_colorings: n must be >= 2");
  int m = n * (n - 1) / 2;
  if (min_colors < 1 || min_colors > m)
    throw std::invalid_argument("iterate_colorings: min_colors out of range");
  return for_each_rgs(m, min_colors, [&](const std::vector<int>& rgs) {
    return visit(coloring_from_rgs(n, rgs));
  });
}

}  // namespace rfs
