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

#ifndef BSDIAG_PERMUTATION_HPP_
#define BSDIAG_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsdiag {

// Largest dimension for which n! fits the dense id space used everywhere.
inline constexpr int kMaxPermutationSize = 12;

std::uint64_t factorial(int n);

// A permutation of the symbols 1..n in one-line notation. Positions are
// 1-indexed, so at(i) is the i-th symbol of the label.
class Permutation {
 public:
  // Throws Error(kInvalidArgument) unless symbols is a bijection on 1..n.
  explicit Permutation(std::vector<int> symbols);

  static Permutation identity(int n);
  // Parses a digit string such as "2134". Only n <= 9 has an unambiguous
  // digit-string form.
  static Permutation parse(std::string_view label);

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  int at(int position) const;
  std::span<const int> symbols() const noexcept { return symbols_; }

  // Swaps positions i and i + 1 (1 <= i <= n - 1).
  Permutation swapped(int i) const;

  std::string label() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> symbols_;
};

// Lexicographic (Lehmer-code) rank; identity is 0 and the reversal is n! - 1.
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(std::uint64_t rank, int n);

}  // namespace bsdiag

#endif  // BSDIAG_PERMUTATION_HPP_
