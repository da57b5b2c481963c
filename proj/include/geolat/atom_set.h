// Copyright 2026 The Authors.
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

#ifndef GEOLAT_ATOM_SET_H_
#define GEOLAT_ATOM_SET_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace geolat {

// Thrown for malformed or out-of-contract input (bad spec files, non-simple
// matroids, unknown chains). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a configured size cap would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest ground set representable at all. The configurable cap in Limits
// must not exceed this.
inline constexpr int kMaxGroundSize = 24;

// Runtime caps shared by the constructors and enumerators.
struct Limits {
  int max_ground = 14;
  std::size_t max_flats = 200'000;
  std::size_t max_chains = 2'000'000;
  std::size_t max_interval_chains = 1'000'000;
};

// A set of atoms drawn from 1..n, stored as a bitmask (bit a-1 <=> atom a).
class AtomSet {
 public:
  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint32_t bits) : bits_(bits) {}

  static AtomSet full(int n) {
    return AtomSet(n == 0 ? 0u : (n >= 32 ? ~0u : ((1u << n) - 1u)));
  }
  static AtomSet single(int atom) { return AtomSet(1u << (atom - 1)); }
  static AtomSet from_atoms(const std::vector<int>& atoms);

  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int atom) const { return (bits_ >> (atom - 1)) & 1u; }
  bool subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool proper_subset_of(AtomSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }

  AtomSet with(int atom) const { return AtomSet(bits_ | (1u << (atom - 1))); }
  AtomSet operator|(AtomSet o) const { return AtomSet(bits_ | o.bits_); }
  AtomSet operator&(AtomSet o) const { return AtomSet(bits_ & o.bits_); }
  AtomSet operator-(AtomSet o) const { return AtomSet(bits_ & ~o.bits_); }

  // Atoms in increasing index order.
  std::vector<int> atoms() const;
  // Comma-separated sorted atoms, e.g. "1,2,4"; empty set is "".
  std::string to_string() const;

  friend constexpr bool operator==(AtomSet, AtomSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic comparison of the sorted atom lists.
bool lex_less(AtomSet a, AtomSet b);

// Parses "1,2,4" (or "" for the empty set). Atoms must lie in 1..n.
AtomSet parse_atom_set(const std::string& text, int n);

}  // namespace geolat

#endif  // GEOLAT_ATOM_SET_H_
