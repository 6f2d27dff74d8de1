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

#include "permutation.hpp"

#include <utility>

#include "errors.hpp"

namespace bsdiag {

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw_invalid("factorial: n out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  const int n = size();
  if (n < 1 || n > kMaxPermutationSize) {
    throw_invalid("permutation size " + std::to_string(n) + " out of range");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int s : symbols_) {
    if (s < 1 || s > n) {
      throw_invalid("permutation symbol " + std::to_string(s) + " out of range 1.." +
                    std::to_string(n));
    }
    if (seen[s]) throw_invalid("permutation repeats symbol " + std::to_string(s));
    seen[s] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> s(static_cast<std::size_t>(n > 0 ? n : 0));
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return Permutation(std::move(s));
}

Permutation Permutation::parse(std::string_view label) {
  if (label.empty() || label.size() > 9) {
    throw_invalid("permutation label '" + std::string(label) + "' must have 1..9 digits");
  }
  std::vector<int> s;
  s.reserve(label.size());
  for (char c : label) {
    if (c < '1' || c > '9') {
      throw_invalid("permutation label '" + std::string(label) + "' has a non-digit");
    }
    s.push_back(c - '0');
  }
  return Permutation(std::move(s));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) throw_invalid("position out of range");
  return symbols_[position - 1];
}

Permutation Permutation::swapped(int i) const {
  if (i < 1 || i >= size()) throw_invalid("swap generator out of range");
  Permutation p = *this;
  std::swap(p.symbols_[i - 1], p.symbols_[i]);
  return p;
}

std::string Permutation::label() const {
  std::string out;
  for (int s : symbols_) {
    if (s <= 9) {
      out.push_back(static_cast<char>('0' + s));
    } else {
      if (!out.empty()) out.push_back('.');
      out += std::to_string(s);
    }
  }
  return out;
}

std::uint64_t perm_rank(const Permutation& p) {
  const int n = p.size();
  const auto s = p.symbols();
  std::uint64_t rank = 0;
  // Lehmer digit i counts later symbols smaller than s[i].
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += s[j] < s[i] ? 1 : 0;
    rank = rank * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return rank;
}

Permutation perm_unrank(std::uint64_t rank, int n) {
  if (n < 1 || n > kMaxPermutationSize) throw_invalid("perm_unrank: n out of range");
  if (rank >= factorial(n)) {
    throw_invalid("perm_unrank: rank " + std::to_string(rank) + " >= " +
                  std::to_string(n) + "!");
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(std::move(out));
}

}  // namespace bsdiag
