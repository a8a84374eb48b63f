#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qbc {

using cplx = std::complex<double>;

/// Owner of a subsystem in the joint Hilbert space. Ancilla registers
/// created by purification belong to Bob and are tracked separately so
/// they can be addressed as a register while still counting as Bob's
/// side in every reduced-density computation.
enum class Party : std::uint8_t { Alice = 0, Bob = 1, BobAncilla = 2 };

std::string to_string(Party p);

/// Bitmask over parties, used to select one side of a cut.
struct PartySet {
  unsigned bits = 0;

  constexpr PartySet() = default;
  constexpr PartySet(Party p) : bits(1u << static_cast<unsigned>(p)) {}

  constexpr bool contains(Party p) const {
    return (bits & (1u << static_cast<unsigned>(p))) != 0;
  }
  constexpr bool empty() const { return bits == 0; }
  friend constexpr PartySet operator|(PartySet a, PartySet b) {
    PartySet s;
    s.bits = a.bits | b.bits;
    return s;
  }
  friend constexpr bool operator==(PartySet a, PartySet b) { return a.bits == b.bits; }
};

constexpr PartySet alice_side() { return PartySet(Party::Alice); }
/// Bob plus his ancilla registers.
constexpr PartySet bob_side() { return PartySet(Party::Bob) | PartySet(Party::BobAncilla); }

/// Ordered list of subsystem dimensions with party labels. Amplitude
/// indexing is row-major with the leftmost subsystem most significant;
/// this convention is fixed once and relied on for bit-exact reshapes.
struct SubsystemLayout {
  std::vector<std::size_t> dims;
  std::vector<Party> party;

  std::size_t subsystems() const { return dims.size(); }
  std::size_t total_dim() const;
  /// Product of the dimensions of the subsystems owned by `side`.
  std::size_t dim_of(PartySet side) const;
  bool has(PartySet side) const;
  /// Row-major strides: stride[s] = product of dims to the right of s.
  std::vector<std::size_t> strides() const;
  SubsystemLayout appended(std::size_t dim, Party p) const;
  SubsystemLayout removed(std::size_t index) const;
  /// Throws std::invalid_argument on a malformed layout.
  void check() const;

  bool operator==(const SubsystemLayout&) const = default;
};

}  // namespace qbc
