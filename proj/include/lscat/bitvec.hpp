#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lscat {

/// Dense vector over F2.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= bit;
    else
      words_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, if any.
  std::optional<std::size_t> lowest() const;

  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec operator^(const BitVec& o) const { BitVec r = *this; r ^= o; return r; }
  BitVec operator&(const BitVec& o) const { BitVec r = *this; r &= o; return r; }
  bool operator==(const BitVec&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incremental echelon basis of a subspace of F2^n.
///
/// Each stored row carries a tag vector recording which caller-supplied
/// labels it is a combination of, so reduce() also returns coordinates.
class F2Echelon {
 public:
  F2Echelon(std::size_t dim, std::size_t tag_dim) : dim_(dim), tag_dim_(tag_dim) {}

  /// Adds v with the given tag. Returns false (and stores nothing) if v is
  /// already in the span.
  bool insert(BitVec v, BitVec tag);
  bool insert(BitVec v) { return insert(std::move(v), BitVec(tag_dim_)); }

  struct Reduction {
    BitVec residual;
    BitVec tag;  ///< XOR of the tags of the rows used
  };
  Reduction reduce(BitVec v) const;
  bool in_span(const BitVec& v) const { return reduce(v).residual.none(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  struct Row {
    std::size_t pivot;
    BitVec vec;
    BitVec tag;
  };
  std::size_t dim_;
  std::size_t tag_dim_;
  std::vector<Row> rows_;                       // insertion order
  std::vector<std::optional<std::size_t>> by_pivot_;  // pivot -> row index
};

}  // namespace lscat
