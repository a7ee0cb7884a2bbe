#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tdeg {

using Elem = std::uint32_t;

/**
 * @brief Membership set over the element indices of a parent group.
 *
 * Stored as one bit per element so intersections are word-wise ANDs. The set
 * itself does not know the group law; closure is the responsibility of the
 * code that builds it (see group.hpp).
 */
class Subgroup {
public:
  Subgroup() = default;

  explicit Subgroup(std::size_t parent_order)
      : parent_order_(parent_order), words_((parent_order + 63) / 64, 0) {}

  static Subgroup whole(std::size_t parent_order) {
    Subgroup s(parent_order);
    for (std::size_t i = 0; i < parent_order; ++i)
      s.insert(static_cast<Elem>(i));
    return s;
  }

  static Subgroup trivial(std::size_t parent_order) {
    Subgroup s(parent_order);
    if (parent_order > 0)
      s.insert(0);
    return s;
  }

  std::size_t parent_order() const noexcept { return parent_order_; }
  std::size_t size() const noexcept { return count_; }

  bool contains(Elem e) const noexcept {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }

  /// Returns true if `e` was newly inserted.
  bool insert(Elem e) noexcept {
    std::uint64_t &w = words_[e >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (e & 63);
    if (w & bit)
      return false;
    w |= bit;
    ++count_;
    return true;
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  Subgroup &operator&=(const Subgroup &other) {
    count_ = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] &= other.words_[w];
      count_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    return *this;
  }

  friend Subgroup operator&(Subgroup a, const Subgroup &b) {
    a &= b;
    return a;
  }

  bool is_subset_of(const Subgroup &other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w])
        return false;
    return true;
  }

  friend bool operator==(const Subgroup &a, const Subgroup &b) noexcept {
    return a.parent_order_ == b.parent_order_ && a.words_ == b.words_;
  }

private:
  std::size_t parent_order_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace tdeg
