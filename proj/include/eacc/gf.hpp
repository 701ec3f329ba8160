#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eacc/errors.hpp"

namespace eacc {

// Field elements are plain integer encodings; see BaseField and
// QuadraticExtension for the encoding rules.
using Elem = std::uint64_t;

// q = p^m with p prime. The order is capped so lookup tables and the
// exhaustive property sweeps stay tractable.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t q = 0;

  static constexpr std::uint64_t kMaxOrder = 1ull << 16;

  static PrimePower make(std::uint64_t p, std::uint64_t m);

  // Parses "p^m" (e.g. "2^3"); a bare "p" means m = 1.
  static PrimePower parse(const std::string& descriptor);

  // Recovers (p, m) from the order itself, e.g. 8 -> 2^3.
  static PrimePower from_order(std::uint64_t q);
};

// GF(p^m). Elements are the integers 0..q-1, read as base-p digit vectors:
// digit i is the coefficient of x^i in the residue-class representative
// modulo a fixed monic irreducible polynomial of degree m. 0 and 1 encode
// the additive and multiplicative identities.
//
// The modulus is the lexicographically smallest monic irreducible of its
// degree, ordering coefficient tuples (c_{m-1},...,c_0) ascending by
// integer value. It is derived from (p, m) alone, with no external tables,
// so encodings are portable: serialized symbols mean the same thing on
// every build.
//
// Multiplication, division and powers are table-driven (log/antilog over
// the smallest primitive element). Immutable after construction; safe for
// concurrent shared reads.
class BaseField {
 public:
  explicit BaseField(const PrimePower& pp);

  std::uint64_t order() const { return pp_.q; }
  std::uint32_t characteristic() const { return pp_.p; }
  std::uint32_t degree() const { return pp_.m; }
  const PrimePower& prime_power() const { return pp_; }

  // Modulus coefficients, constant term first, leading 1 included.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  // "GF(8) = GF(2^3), modulus [1, 1, 0, 1]" -- for audit output.
  std::string describe() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;  // throws Error on b == 0
  Elem inv(Elem a) const;          // throws Error on a == 0
  Elem pow(Elem a, std::uint64_t e) const;  // pow(0, 0) = 1

  bool is_element(Elem a) const { return a < pp_.q; }

 private:
  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;  // degree m, monic
  Elem generator_ = 0;
  std::vector<Elem> antilog_;  // antilog_[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // inverse of antilog_ on nonzero elements
};

// GF(q^2) built over a BaseField as GF(q)[x]/(x^2 + c1*x + c0), where
// (c1, c0) is the lexicographically smallest monic irreducible quadratic,
// ordering (c1, c0) ascending by integer encoding c1*q + c0.
//
// Elements encode as a + q*b, meaning a + b*beta with a, b in GF(q) and
// beta a root of the modulus. The embedding GF(q) -> GF(q^2) is therefore
// the identity on encodings. Immutable after construction.
class QuadraticExtension {
 public:
  explicit QuadraticExtension(BaseField base);

  const BaseField& base() const { return base_; }
  std::uint64_t base_order() const { return q_; }
  std::uint64_t order() const { return q_ * q_; }

  Elem modulus_c1() const { return c1_; }
  Elem modulus_c0() const { return c0_; }
  std::string describe() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  // z^q by square-and-multiply. An involution on GF(q^2) whose fixed
  // points are exactly the embedded base field.
  Elem frobenius(Elem z) const { return pow(z, q_); }

  // z = a + b*beta; inverse of recompose.
  std::pair<Elem, Elem> components(Elem z) const { return {z % q_, z / q_}; }
  Elem recompose(Elem a, Elem b) const { return a + q_ * b; }

  bool in_base(Elem z) const { return z < q_; }
  bool is_element(Elem z) const { return z < order(); }

  std::uint64_t pair_count() const { return (order() - q_) / 2; }

  // One element per Frobenius-conjugate pair {z, z^q} of GF(q^2)\GF(q):
  // the smaller encoding of each pair, ascending, at most max_count of
  // them. The full list has pair_count() entries; cap it for large q.
  std::vector<Elem> representatives(std::uint64_t max_count) const;
  std::vector<Elem> conjugate_pair_representatives() const {
    return representatives(pair_count());
  }

 private:
  BaseField base_;
  std::uint64_t q_;
  Elem c1_ = 0, c0_ = 0;
};

}  // namespace eacc
