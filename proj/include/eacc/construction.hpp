#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eacc/gf.hpp"
#include "eacc/rational.hpp"

namespace eacc {

// A mixed-alphabet Reed-Solomon code [n, k, d; c]_q. Codewords evaluate a
// polynomial of degree < k over GF(q) at n1 points of GF(q) and n2 points
// of GF(q^2)\GF(q), one per Frobenius-conjugate pair. Each extension
// coordinate is carried by one super-dense coding use, so the entanglement
// cost c equals n2 by definition.
//
// Immutable once validated; shareable across threads.
struct CodeSpec {
  QuadraticExtension ext;  // carries the base field
  std::uint64_t n = 0;     // length (channel uses)
  std::uint64_t k = 0;     // dimension (message symbols over GF(q))
  std::uint64_t n1 = 0;    // base-field evaluation points
  std::uint64_t n2 = 0;    // extension-field evaluation points
  std::vector<Elem> alphas;  // n1 distinct elements of GF(q)
  std::vector<Elem> gammas;  // n2 distinct conjugate-pair representatives
  std::string label;         // optional, round-tripped through spec files

  const BaseField& field() const { return ext.base(); }
  std::uint64_t q() const { return ext.base_order(); }
  std::uint64_t c() const { return n2; }  // ebits consumed
};

struct CodeSummary {
  std::string label;  // "[n,k,d;c]_q"
  std::uint64_t q = 0, n = 0, k = 0, n1 = 0, n2 = 0, c = 0, d = 0;
  std::uint64_t erasure_capability = 0;  // d - 1
  std::uint64_t error_capability = 0;    // floor((d-1)/2)
  Rational rate;                         // k/n, exact
  Int message_count;                     // q^k
};

// Canonical evaluation points: the first n1 base elements by encoding
// (0, 1, 2, ...) and the first n2 conjugate-pair representatives. The code
// parameters do not depend on the choice; pinning it makes serialized
// words portable.
std::pair<std::vector<Elem>, std::vector<Elem>> canonical_points(const QuadraticExtension& ext,
                                                                 std::uint64_t n1,
                                                                 std::uint64_t n2);

// Builds a spec with canonical points and validates it. n2 = n - n1.
CodeSpec make_spec(const PrimePower& pp, std::uint64_t n, std::uint64_t k, std::uint64_t n1);
CodeSpec make_spec(QuadraticExtension ext, std::uint64_t n, std::uint64_t k, std::uint64_t n1);

// Checks every CodeSpec invariant; throws ValidationError with a stable
// constraint name on the first violation.
void validate(const CodeSpec& spec);

// Minimum distance of a valid spec:
//   n1 >= k-1:  d = n - k + 1
//   n1 <  k-1:  d = n - (n1 + floor((k-1-n1)/2)) = ceil((n-k+1+n2)/2)
// Both closed forms of the second regime are computed and must agree.
std::uint64_t min_distance(const CodeSpec& spec);
std::uint64_t min_distance_for(std::uint64_t n, std::uint64_t k, std::uint64_t n1,
                               std::uint64_t n2);

struct EntanglementChoice {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t d = 0;
};

// Among all splits n = n1 + n2 with n1 <= q, n2 <= (q^2-q)/2 and
// k <= n + n2, the one maximizing the minimum distance; ties go to the
// smaller n2 since entanglement is the costly resource.
EntanglementChoice best_entanglement(const QuadraticExtension& ext, std::uint64_t n,
                                     std::uint64_t k);

CodeSummary summarize(const CodeSpec& spec);

std::string format_label(const CodeSpec& spec);  // "[n,k,d;c]_q"

// Spec file format: {"p":..,"m":..,"n":..,"k":..,"n1":..,"n2":..} plus an
// optional "label". Points are always canonical and never serialized.
std::string spec_to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const std::string& text);
CodeSpec load_spec_file(const std::string& path);
void save_spec_file(const CodeSpec& spec, const std::string& path);

}  // namespace eacc
