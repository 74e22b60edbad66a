#include "hedetniemi/bitset.hpp"

#include <algorithm>

namespace hedetniemi {

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  if (const std::size_t tail = size_ % kWordBits; tail != 0)
    words_.back() = (Word{1} << tail) - 1;
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool Bitset::intersects(const Bitset& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::size_t Bitset::find_next(std::size_t from) const {
  if (from >= size_) return npos;
  std::size_t w = from / kWordBits;
  Word word = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (word != 0)
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= words_.size()) return npos;
    word = words_[w];
  }
}

std::vector<std::size_t> Bitset::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

}  // namespace hedetniemi
