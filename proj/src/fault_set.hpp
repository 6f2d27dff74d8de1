// Copyright 2026 The bsdiag Authors
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

#ifndef BSDIAG_FAULT_SET_HPP_
#define BSDIAG_FAULT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "errors.hpp"

namespace bsdiag {

using VertexId = std::uint32_t;

// A vertex subset over a fixed universe 0..universe-1.
class FaultSet {
 public:
  FaultSet() = default;
  explicit FaultSet(std::size_t universe) : bits_(universe) {}
  FaultSet(std::size_t universe, std::span<const VertexId> members) : bits_(universe) {
    for (VertexId v : members) insert(v);
  }
  FaultSet(std::size_t universe, std::initializer_list<VertexId> members)
      : FaultSet(universe, std::span<const VertexId>(members.begin(), members.size())) {}

  static FaultSet full(std::size_t universe) {
    FaultSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(VertexId v) const { return v < bits_.size() && bits_.test(v); }
  void insert(VertexId v) {
    check(v);
    bits_.set(v);
  }
  void erase(VertexId v) {
    check(v);
    bits_.reset(v);
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      fn(static_cast<VertexId>(i));
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const FaultSet& other) const {
    same_universe(other);
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const FaultSet& other) const {
    same_universe(other);
    return bits_.intersects(other.bits_);
  }

  FaultSet& operator|=(const FaultSet& o) { same_universe(o); bits_ |= o.bits_; return *this; }
  FaultSet& operator&=(const FaultSet& o) { same_universe(o); bits_ &= o.bits_; return *this; }
  FaultSet& operator-=(const FaultSet& o) { same_universe(o); bits_ -= o.bits_; return *this; }
  FaultSet& operator^=(const FaultSet& o) { same_universe(o); bits_ ^= o.bits_; return *this; }
  FaultSet complement() const {
    FaultSet c = *this;
    c.bits_.flip();
    return c;
  }

  friend FaultSet operator|(FaultSet a, const FaultSet& b) { return a |= b; }
  friend FaultSet operator&(FaultSet a, const FaultSet& b) { return a &= b; }
  friend FaultSet operator-(FaultSet a, const FaultSet& b) { return a -= b; }
  friend FaultSet operator^(FaultSet a, const FaultSet& b) { return a ^= b; }

  friend bool operator==(const FaultSet& a, const FaultSet& b) {
    return a.bits_.size() == b.bits_.size() && a.bits_ == b.bits_;
  }

  // Lexicographic comparison of the sorted member lists.
  friend bool lexicographically_less(const FaultSet& a, const FaultSet& b) {
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    while (i != Bits::npos && j != Bits::npos) {
      if (i != j) return i < j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return i == Bits::npos && j != Bits::npos;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  void check(VertexId v) const {
    if (v >= bits_.size()) throw_invalid("vertex id " + std::to_string(v) + " out of range");
  }
  void same_universe(const FaultSet& o) const {
    if (o.bits_.size() != bits_.size()) throw_invalid("fault sets over different universes");
  }

  Bits bits_;
};

}  // namespace bsdiag

#endif  // BSDIAG_FAULT_SET_HPP_
