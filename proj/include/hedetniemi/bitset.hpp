#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hedetniemi {

/// Fixed-size dynamic bitset. Word-parallel set algebra is what the
/// neighborhood sweeps and independence checks are built on.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;

  Bitset& operator|=(const Bitset& other);
  Bitset& operator&=(const Bitset& other);
  /// this := this \ other
  Bitset& subtract(const Bitset& other);

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  /// First set index >= from, or npos.
  std::size_t find_next(std::size_t from) const;
  std::size_t find_first() const { return find_next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(word));
        f(w * kWordBits + bit);
        word &= word - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const;
  std::span<const Word> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace hedetniemi
