#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ocdlab::bits {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

/// Vertex bitset over either a fixed word array (small graphs) or a
/// heap-allocated block of words. Both share one implementation so the
/// solvers can be instantiated for either.
template <class Storage>
class BasicBits {
 public:
  BasicBits() = default;
  explicit BasicBits(int size) {
    if constexpr (requires(Storage s) { s.resize(std::size_t{}); }) {
      words_.resize(static_cast<std::size_t>((size + kWordBits - 1) / kWordBits));
    }
  }

  void set(int i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(int i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool test(int i) const { return words_[i / kWordBits] >> (i % kWordBits) & 1u; }

  int count() const {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }

  bool any() const {
    for (Word w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  /// Lowest set index, or -1.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
      }
    }
    return -1;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (Word w = words_[i]; w != 0; w &= w - 1) {
        fn(static_cast<int>(i) * kWordBits + std::countr_zero(w));
      }
    }
  }

  BasicBits& operator|=(const BasicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BasicBits& operator&=(const BasicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  /// this &= ~o
  BasicBits& subtract(const BasicBits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend BasicBits operator|(BasicBits a, const BasicBits& b) { return a |= b; }
  friend BasicBits operator&(BasicBits a, const BasicBits& b) { return a &= b; }
  friend BasicBits operator-(BasicBits a, const BasicBits& b) { return a.subtract(b); }

  bool intersects(const BasicBits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  friend bool operator==(const BasicBits&, const BasicBits&) = default;

 private:
  Storage words_{};
};

using SmallBits = BasicBits<std::array<Word, 1>>;
using BlockBits = BasicBits<std::vector<Word>>;

/// Adjacency mirrored into bit rows.
template <class Bits>
struct BitGraph {
  int n = 0;
  std::vector<Bits> open;    // N(v)
  std::vector<Bits> closed;  // N[v]
  Bits all;

  template <class G>
  explicit BitGraph(const G& g) : n(g.n()), all(g.n()) {
    open.assign(static_cast<std::size_t>(n), Bits(n));
    closed.assign(static_cast<std::size_t>(n), Bits(n));
    for (int v = 0; v < n; ++v) {
      all.set(v);
      closed[v].set(v);
      for (int u : g.neighbors(v)) {
        open[v].set(u);
        closed[v].set(u);
      }
    }
  }

  Bits empty() const { return Bits(n); }

  /// Closed neighborhood of a set.
  Bits dominated_by(const Bits& s) const {
    Bits out(n);
    s.for_each([&](int v) { out |= closed[v]; });
    return out;
  }

  /// Vertices of `within` reachable from `start` inside `within`.
  Bits component(int start, const Bits& within) const {
    Bits reached(n);
    Bits frontier(n);
    reached.set(start);
    frontier.set(start);
    while (frontier.any()) {
      Bits next(n);
      frontier.for_each([&](int v) { next |= open[v]; });
      next &= within;
      next.subtract(reached);
      reached |= next;
      frontier = next;
    }
    return reached;
  }

  /// True when `within` is empty or induces a connected subgraph.
  bool connected(const Bits& within) const {
    int start = within.first();
    if (start < 0) return true;
    return component(start, within) == within;
  }
};

}  // namespace ocdlab::bits
