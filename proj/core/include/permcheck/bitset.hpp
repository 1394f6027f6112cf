#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace permcheck {

// Fixed-universe dynamic bitset over element indices. This is the working
// currency of all subgroup and product-set computations: unions, products,
// subset tests and equality are word-parallel.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
    assert(universe >= 0);
  }

  int universe_size() const { return universe_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // True when every member of this set is also in `o`.
  bool subset_of(const Bitset& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // First set index, or -1.
  int first() const { return next(-1); }

  // First set index strictly after `prev`, or -1.
  int next(int prev) const {
    int i = prev + 1;
    if (i >= universe_) return -1;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    std::uint64_t word = words_[w] >> (i & 63);
    if (word) return i + std::countr_zero(word);
    for (++w; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w << 6) + std::countr_zero(words_[w]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  // Orders sets by their sorted member lists (the set holding the smallest
  // element of the symmetric difference comes first). Gives the stable
  // "lexicographically smallest member list" order used in reports.
  static int compare_members(const Bitset& a, const Bitset& b) {
    assert(a.universe_ == b.universe_);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        int low = std::countr_zero(diff);
        return ((a.words_[i] >> low) & 1u) ? -1 : 1;
      }
    }
    return 0;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h ^ static_cast<std::size_t>(universe_);
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace permcheck
