#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace drg {

using Vertex = std::uint32_t;

/// Fixed-width bit set over vertices 0..n-1. Used for adjacency rows and
/// the set algebra inside the searches.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::size_t intersection_count(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lowest member, or universe() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return n_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace drg
