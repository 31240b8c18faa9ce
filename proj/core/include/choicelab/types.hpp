#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace choicelab {

// Alternatives are small indices into a profile's universe.
using Alt = int;

// Hard upper bound on universe size. Relation codes and the enumeration
// machinery rely on pair counts fitting into 64-bit base-3 codes.
inline constexpr int kMaxAlts = 9;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input: overlapping tiers, bad subset, unknown label, ...
class ValidationError : public Error {
public:
  using Error::Error;
};

// An operation's stated precondition does not hold (e.g. tied majority
// margin where a tournament is required).
class PreconditionError : public Error {
public:
  using Error::Error;
};

// An enumeration or search exceeded its configured cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

// A must-be-impossible situation; indicates a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

// Set of alternatives as a bitmask. Used for feasible sets and choice sets;
// callers enforce nonemptiness where the contract demands it.
class AltSet {
public:
  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr AltSet full(int m) {
    return AltSet((std::uint32_t{1} << m) - 1);
  }
  static constexpr AltSet single(Alt a) { return AltSet(std::uint32_t{1} << a); }
  static AltSet of(const std::vector<Alt>& alts) {
    std::uint32_t b = 0;
    for (Alt a : alts) b |= std::uint32_t{1} << a;
    return AltSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  constexpr bool contains(Alt a) const { return (bits_ >> a) & 1u; }
  constexpr bool subset_of(AltSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr AltSet operator|(AltSet o) const { return AltSet(bits_ | o.bits_); }
  constexpr AltSet operator&(AltSet o) const { return AltSet(bits_ & o.bits_); }
  constexpr AltSet minus(AltSet o) const { return AltSet(bits_ & ~o.bits_); }
  constexpr AltSet with(Alt a) const { return AltSet(bits_ | (1u << a)); }
  constexpr AltSet without(Alt a) const { return AltSet(bits_ & ~(1u << a)); }

  constexpr bool operator==(const AltSet&) const = default;

  Alt lowest() const { return __builtin_ctz(bits_); }

  std::vector<Alt> members() const {
    std::vector<Alt> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
  }

  // for (Alt a : set.each()) ...
  struct Iter {
    std::uint32_t b;
    Alt operator*() const { return __builtin_ctz(b); }
    Iter& operator++() { b &= b - 1; return *this; }
    bool operator!=(const Iter& o) const { return b != o.b; }
  };
  struct Range {
    std::uint32_t b;
    Iter begin() const { return {b}; }
    Iter end() const { return {0}; }
  };
  Range each() const { return {bits_}; }

private:
  std::uint32_t bits_ = 0;
};

}  // namespace choicelab
