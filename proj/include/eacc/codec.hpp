#pragma once

#include <cstdint>
#include <vector>

#include "eacc/construction.hpp"
#include "eacc/gf.hpp"

namespace eacc {

// Message coefficients over GF(q); coeffs[i] multiplies x^i.
struct Message {
  std::vector<Elem> coeffs;

  bool operator==(const Message&) const = default;
};

// One codeword: f evaluated at the base points (base_part) and at the
// extension points (ext_part).
struct Codeword {
  std::vector<Elem> base_part;  // n1 values in GF(q)
  std::vector<Elem> ext_part;   // n2 values in GF(q^2)

  std::size_t size() const { return base_part.size() + ext_part.size(); }
  Elem at(std::size_t i) const {
    return i < base_part.size() ? base_part[i] : ext_part[i - base_part.size()];
  }
  void set(std::size_t i, Elem v) {
    if (i < base_part.size()) {
      base_part[i] = v;
    } else {
      ext_part[i - base_part.size()] = v;
    }
  }

  bool operator==(const Codeword&) const = default;
};

// A codeword as it arrived: per-coordinate symbol or erasure mark. The
// slot alphabet is positional (first n1 slots GF(q), last n2 GF(q^2)), and
// so is the transmission origin: direct coding for the base slots,
// super-dense coding for the extension slots.
struct ReceivedWord {
  struct Slot {
    Elem value = 0;
    bool erased = false;
  };
  std::vector<Slot> slots;

  std::size_t erasure_count() const;
};

enum class Origin { direct, superdense };

inline Origin origin_of(const CodeSpec& spec, std::size_t coordinate) {
  return coordinate < spec.n1 ? Origin::direct : Origin::superdense;
}

ReceivedWord received_from(const Codeword& cw);

// Default work budget for the bounded-distance decoder, measured in
// elimination steps (candidate supports x equations x unknowns).
inline constexpr std::uint64_t kDefaultDecodeBudget = 10'000'000;

// Default enumeration budget (number of messages, q^k) for the brute-force
// oracles.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// Polynomial evaluation at every point; extension coordinates evaluate
// with the coefficients embedded into GF(q^2).
Codeword encode(const CodeSpec& spec, const Message& msg);

// Linear system over GF(q) whose unknowns are the k coefficients of f.
// Every unerased base coordinate contributes one equation; every unerased
// extension coordinate z = a + b*beta contributes two (the receiver also
// knows f(gamma^q) = f(gamma)^q, so each extension symbol is worth two
// base symbols).
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<std::vector<Elem>> lhs;  // one row per equation
  std::vector<Elem> rhs;
};

LinearSystem build_erasure_system(const CodeSpec& spec, const ReceivedWord& rcv);

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Elem> solution;  // filled when unique
  std::size_t rank = 0;
};

// Gaussian elimination over the base field.
SolveResult solve_system(const BaseField& field, LinearSystem sys);

std::size_t system_rank(const BaseField& field, const LinearSystem& sys);

// Unique message consistent with all unerased coordinates. Guaranteed to
// exist and be correct when at most d-1 coordinates are erased and nothing
// else is corrupted. Throws AmbiguousDecoding when the system is
// underdetermined and InconsistentWord when no solution exists.
Message decode_erasures(const CodeSpec& spec, const ReceivedWord& rcv);

// Bounded-distance decoding by error-support enumeration: candidate
// supports S of unerased positions are tried in ascending size, then
// lexicographically; each S is treated as erased and accepted if the
// re-encoding differs from rcv only inside S. Erasure marks in rcv stay
// fixed throughout, so callers should keep 2t + erasures <= d - 1.
//
// At the first size with any accepted support the result must be unique;
// several tied codewords raise DecodingFailure rather than picking one.
// Throws BudgetExceeded when the estimated work passes the budget.
Message decode_errors(const CodeSpec& spec, const ReceivedWord& rcv, std::uint64_t t,
                      std::uint64_t budget = kDefaultDecodeBudget);

// Positions where the words differ; an extension coordinate counts as one
// position.
std::uint64_t hamming_distance(const Codeword& a, const Codeword& b);

std::uint64_t codeword_weight(const Codeword& cw);

// Minimum nonzero-codeword weight by enumerating all q^k - 1 nonzero
// messages (the code is linear, so this is the minimum distance).
std::uint64_t brute_force_min_distance(const CodeSpec& spec,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

struct NearestResult {
  std::vector<Message> messages;  // all messages at the minimum distance
  std::uint64_t distance = 0;
};

// Exhaustive nearest-codeword search; the oracle for decode_errors.
NearestResult nearest_codeword_oracle(const CodeSpec& spec, const Codeword& word,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

// Wire format: n unsigned integers, base coordinates in 0..q-1, extension
// coordinates in 0..q^2-1, with the out-of-range sentinel q^2 marking an
// erasure.
std::uint64_t erasure_sentinel(const CodeSpec& spec);
std::vector<std::uint64_t> to_wire(const CodeSpec& spec, const ReceivedWord& rcv);
std::vector<std::uint64_t> to_wire(const CodeSpec& spec, const Codeword& cw);
ReceivedWord word_from_wire(const CodeSpec& spec, const std::vector<std::uint64_t>& symbols);
Message message_from_ints(const CodeSpec& spec, const std::vector<std::uint64_t>& symbols);

}  // namespace eacc
