// Copyright 2026 The pathspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATHSPACE_EDGE_SET_HPP_
#define PATHSPACE_EDGE_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "pathspace/error.hpp"

namespace pathspace {

using EdgeId = std::uint32_t;

/// Membership mask over the edge indices of one graph.
///
/// The universe size is the edge count of the ambient graph. Binary
/// operations between masks of different universes throw Error; that is
/// the only ambient-graph check performed, so masks of two graphs with the
/// same edge count are interchangeable.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  EdgeSet(std::size_t universe, std::initializer_list<EdgeId> edges)
      : EdgeSet(universe) {
    for (EdgeId e : edges) insert(e);
  }

  std::size_t universe() const { return universe_; }

  bool contains(EdgeId e) const {
    check_index(e);
    return (words_[e / 64] >> (e % 64)) & 1u;
  }
  void insert(EdgeId e) {
    check_index(e);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  void erase(EdgeId e) {
    check_index(e);
    words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }
  void toggle(EdgeId e) {
    check_index(e);
    words_[e / 64] ^= std::uint64_t{1} << (e % 64);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or universe() when empty.
  EdgeId first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<EdgeId>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<EdgeId>(universe_);
  }

  bool is_subset_of(const EdgeSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }
  bool intersects(const EdgeSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  EdgeSet& operator^=(const EdgeSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  /// Set difference.
  EdgeSet& operator-=(const EdgeSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  /// Orders masks by their value as unsigned binary numbers (edge k is
  /// bit k). Masks over smaller universes sort first.
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  std::vector<EdgeId> to_vector() const {
    std::vector<EdgeId> out;
    for_each([&](EdgeId e) { out.push_back(e); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        fn(static_cast<EdgeId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ universe_;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void check_index(EdgeId e) const {
    if (e >= universe_) throw Error("edge index " + std::to_string(e) + " out of range");
  }
  void check_same(const EdgeSet& other) const {
    if (universe_ != other.universe_)
      throw Error("edge sets belong to different graphs (" + std::to_string(universe_) +
                  " vs " + std::to_string(other.universe_) + " edges)");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Edges in exactly one of the two sets.
inline EdgeSet symmetric_difference(const EdgeSet& f, const EdgeSet& h) { return f ^ h; }

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace pathspace

#endif  // PATHSPACE_EDGE_SET_HPP_
