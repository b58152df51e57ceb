#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace collapse_lab {

/// Upper bound on the number of distinct vertices in one complex, hypergraph
/// ground set or graph. Faces are stored as two machine words.
inline constexpr std::size_t kMaxVertices = 128;

/// Set of vertex positions in [0, kMaxVertices).
class VertexMask {
public:
  constexpr VertexMask() = default;

  static constexpr VertexMask single(std::size_t i) {
    VertexMask m;
    m.set(i);
    return m;
  }

  /// The positions {0, ..., n-1}.
  static constexpr VertexMask first_n(std::size_t n) {
    VertexMask m;
    if (n >= 64) {
      m.lo_ = ~std::uint64_t{0};
      m.hi_ = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else {
      m.lo_ = (std::uint64_t{1} << n) - 1;
    }
    return m;
  }

  constexpr bool test(std::size_t i) const {
    return i < 64 ? (lo_ >> i) & 1U : (hi_ >> (i - 64)) & 1U;
  }
  constexpr void set(std::size_t i) {
    if (i < 64)
      lo_ |= std::uint64_t{1} << i;
    else
      hi_ |= std::uint64_t{1} << (i - 64);
  }
  constexpr void reset(std::size_t i) {
    if (i < 64)
      lo_ &= ~(std::uint64_t{1} << i);
    else
      hi_ &= ~(std::uint64_t{1} << (i - 64));
  }

  constexpr int count() const { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool empty() const { return (lo_ | hi_) == 0; }
  constexpr bool any() const { return !empty(); }

  constexpr bool subset_of(const VertexMask& o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }
  constexpr bool intersects(const VertexMask& o) const {
    return ((lo_ & o.lo_) | (hi_ & o.hi_)) != 0;
  }

  /// Smallest position in the set; the set must be non-empty.
  constexpr std::size_t lowest() const {
    return lo_ != 0 ? static_cast<std::size_t>(std::countr_zero(lo_))
                    : 64 + static_cast<std::size_t>(std::countr_zero(hi_));
  }

  /// Positions strictly above i.
  constexpr VertexMask above(std::size_t i) const {
    VertexMask r = *this;
    VertexMask low = first_n(i + 1);
    r.lo_ &= ~low.lo_;
    r.hi_ &= ~low.hi_;
    return r;
  }

  constexpr VertexMask operator&(const VertexMask& o) const { return {lo_ & o.lo_, hi_ & o.hi_}; }
  constexpr VertexMask operator|(const VertexMask& o) const { return {lo_ | o.lo_, hi_ | o.hi_}; }
  constexpr VertexMask operator^(const VertexMask& o) const { return {lo_ ^ o.lo_, hi_ ^ o.hi_}; }
  /// Set difference.
  constexpr VertexMask operator-(const VertexMask& o) const { return {lo_ & ~o.lo_, hi_ & ~o.hi_}; }
  constexpr VertexMask& operator&=(const VertexMask& o) { return *this = *this & o; }
  constexpr VertexMask& operator|=(const VertexMask& o) { return *this = *this | o; }
  constexpr VertexMask& operator-=(const VertexMask& o) { return *this = *this - o; }

  constexpr bool operator==(const VertexMask&) const = default;
  constexpr auto operator<=>(const VertexMask&) const = default;

  /// Calls f(position) for every member in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w != 0; w &= w - 1)
      f(static_cast<std::size_t>(std::countr_zero(w)));
    for (std::uint64_t w = hi_; w != 0; w &= w - 1)
      f(64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  constexpr std::size_t hash() const {
    std::uint64_t h = lo_ * 0x9E3779B97F4A7C15ULL;
    h ^= (hi_ + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    return static_cast<std::size_t>(h);
  }

private:
  constexpr VertexMask(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

/// Lexicographic order of the sorted position sequences ({0} < {0,1} < {1}).
constexpr bool lex_less(const VertexMask& a, const VertexMask& b) {
  const VertexMask diff = a ^ b;
  if (diff.empty())
    return false;
  const std::size_t q = diff.lowest();
  // Both sequences agree below q; the one containing q is smaller unless the
  // other has already run out.
  if (a.test(q))
    return b.above(q).any();
  return !a.above(q).any();
}

/// Iterates the k-element subsets of `m` in lexicographic order.
template <typename F>
void for_each_k_subset(const VertexMask& m, int k, F&& f) {
  const std::vector<std::size_t> pos = m.positions();
  const int n = static_cast<int>(pos.size());
  if (k < 0 || k > n)
    return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexMask s;
    for (int i : idx)
      s.set(pos[static_cast<std::size_t>(i)]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
      --i;
    if (i < 0)
      return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Iterates every subset of `m` with at most `max_size` members, smallest sizes
/// first and lexicographic within one size.
template <typename F>
void for_each_subset_up_to(const VertexMask& m, int max_size, F&& f) {
  const int top = max_size < m.count() ? max_size : m.count();
  for (int k = 0; k <= top; ++k)
    for_each_k_subset(m, k, f);
}

/// Iterates every subset of `m` (2^|m| calls) in no particular order.
template <typename F>
void for_each_subset(const VertexMask& m, F&& f) {
  const std::vector<std::size_t> pos = m.positions();
  const std::size_t n = pos.size();
  if (n >= 63)
    throw std::length_error("subset enumeration over 63 or more elements");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    VertexMask s;
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1U)
        s.set(pos[i]);
    f(s);
  }
}

struct VertexMaskHash {
  std::size_t operator()(const VertexMask& m) const { return m.hash(); }
};

} // namespace collapse_lab
