#pragma once

#include <cstdint>
#include <vector>

namespace semiord {

// Dense n x n boolean relation, one row per element, 64 entries per word.
// Sized for exhaustive corpora (n <= 8) and group windows (n up to a few
// thousand); transitive closure and row tests are word-parallel.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[row_off(i) + static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
  }
  void set(int i, int j, bool v = true) {
    std::uint64_t& w = bits_[row_off(i) + static_cast<std::size_t>(j >> 6)];
    const std::uint64_t m = std::uint64_t{1} << (j & 63);
    if (v) w |= m; else w &= ~m;
  }

  // row(i) |= row(j); returns true if row(i) changed.
  bool row_or(int i, int j) {
    bool changed = false;
    const std::size_t a = row_off(i), b = row_off(j);
    for (int w = 0; w < words_; ++w) {
      const std::uint64_t before = bits_[a + w];
      const std::uint64_t after = before | bits_[b + w];
      if (after != before) { bits_[a + w] = after; changed = true; }
    }
    return changed;
  }

  // Is row(i) a subset of row(j)?
  bool row_subset(int i, int j) const {
    const std::size_t a = row_off(i), b = row_off(j);
    for (int w = 0; w < words_; ++w)
      if (bits_[a + w] & ~bits_[b + w]) return false;
    return true;
  }

  void transitive_close();

  bool is_irreflexive() const;
  bool is_reflexive() const;
  bool is_transitive() const;

  friend bool operator==(const BitRel& a, const BitRel& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t row_off(int i) const { return static_cast<std::size_t>(i) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace semiord
