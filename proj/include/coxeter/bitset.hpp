#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coxeter {

// Fixed-size dynamic bitset. Unused tail bits of the last word stay zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { words_.assign(words_.size(), 0); }

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

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const Bitset& o) const = default;

  template <class F>
  void for_each_set(F f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rectangular bit matrix with rows of equal width.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows),
        cols_(cols),
        row_words_((cols + 63) / 64),
        words_(rows * row_words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return words_.empty(); }

  bool test(std::size_t r, std::size_t c) const {
    return (words_[r * row_words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c) {
    words_[r * row_words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
  }

  // row(r) |= row(src)
  void or_row(std::size_t r, std::size_t src) {
    auto* dst = &words_[r * row_words_];
    const auto* s = &words_[src * row_words_];
    for (std::size_t i = 0; i < row_words_; ++i) dst[i] |= s[i];
  }

  std::size_t row_count(std::size_t r) const {
    std::size_t c = 0;
    const auto* s = &words_[r * row_words_];
    for (std::size_t i = 0; i < row_words_; ++i)
      c += static_cast<std::size_t>(std::popcount(s[i]));
    return c;
  }

  bool row_subset_of(std::size_t a, std::size_t b) const {
    const auto* ra = &words_[a * row_words_];
    const auto* rb = &words_[b * row_words_];
    for (std::size_t i = 0; i < row_words_; ++i)
      if (ra[i] & ~rb[i]) return false;
    return true;
  }

  bool rows_intersect(std::size_t a, std::size_t b) const {
    const auto* ra = &words_[a * row_words_];
    const auto* rb = &words_[b * row_words_];
    for (std::size_t i = 0; i < row_words_; ++i)
      if (ra[i] & rb[i]) return true;
    return false;
  }

  template <class F>
  void for_each_set_in_row(std::size_t r, F f) const {
    const auto* s = &words_[r * row_words_];
    for (std::size_t wi = 0; wi < row_words_; ++wi) {
      std::uint64_t w = s[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, row_words_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace coxeter
