#include "lscat/bitvec.hpp"

#include <bit>

namespace lscat {

bool BitVec::any() const {
  for (auto w : words_)
    if (w != 0) return true;
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> BitVec::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

F2Echelon::Reduction F2Echelon::reduce(BitVec v) const {
  BitVec tag(tag_dim_);
  // Rows are fully reduced against each other's pivots only in insertion
  // order, so repeatedly clear the lowest remaining pivot.
  std::size_t from = 0;
  while (true) {
    std::optional<std::size_t> hit;
    const auto& words = v.words();
    for (std::size_t w = from / 64; w < words.size() && !hit; ++w) {
      std::uint64_t bits = words[w];
      if (w == from / 64) bits &= ~std::uint64_t{0} << (from % 64);
      while (bits != 0 && !hit) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (i < by_pivot_.size() && by_pivot_[i]) hit = i;
        bits &= bits - 1;
      }
    }
    if (!hit) break;
    const Row& row = rows_[*by_pivot_[*hit]];
    v ^= row.vec;
    tag ^= row.tag;
    from = *hit + 1;
  }
  return {std::move(v), std::move(tag)};
}

bool F2Echelon::insert(BitVec v, BitVec tag) {
  auto red = reduce(std::move(v));
  tag ^= red.tag;
  const auto pivot = red.residual.lowest();
  if (!pivot) return false;
  if (by_pivot_.size() <= *pivot) by_pivot_.resize(dim_);
  by_pivot_[*pivot] = rows_.size();
  rows_.push_back({*pivot, std::move(red.residual), std::move(tag)});
  return true;
}

}  // namespace lscat
