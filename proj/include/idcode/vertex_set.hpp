#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <vector>

namespace idcode {

using Vertex = std::size_t;

// Set of vertex ids drawn from a fixed universe 0..universe-1, stored as a
// bit-vector so that ball intersections and neighbourhood comparisons run
// one 64-bit word at a time.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  // Smallest member >= from, or universe() when there is none.
  std::size_t next(std::size_t from) const;
  Vertex front() const { return next(0); }

  const_iterator begin() const { return {this, next(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<Vertex> to_vector() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  VertexSet complement() const;

  std::span<const Word> words() const { return words_; }

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic on the word array; only meaningful for equal universes.
  std::strong_ordering operator<=>(const VertexSet& other) const;

 private:
  void check_same_universe(const VertexSet& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace idcode
