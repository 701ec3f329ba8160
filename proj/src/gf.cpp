#include "eacc/gf.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace eacc {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

// Dense polynomial over GF(p), coefficient i multiplies x^i. Used only
// during field construction; runtime arithmetic is table-driven.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::uint32_t lead_inv = inv_mod_p(g.back(), p);
  while (f.size() >= g.size()) {
    f = trim(std::move(f));
    if (f.size() < g.size()) break;
    const std::uint64_t factor = std::uint64_t(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      std::uint64_t v = f[shift + i] + p - sub;
      f[shift + i] = static_cast<std::uint32_t>(v % p);
    }
  }
  return trim(std::move(f));
}

// Monic polynomial of degree deg whose non-leading coefficients are the
// base-p digits of index (digit i -> coefficient of x^i).
Poly monic_from_index(std::uint64_t index, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f[deg] = 1;
  return f;
}

bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
  return poly_mod(f, g, p).empty();
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  std::uint64_t count = 1;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    count *= p;
    for (std::uint64_t j = 0; j < count; ++j) {
      if (divides(monic_from_index(j, d, p), f, p)) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of the given degree,
// ordering (c_{m-1},...,c_0) ascending by integer value.
Poly smallest_irreducible(std::uint32_t deg, std::uint32_t p) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t j = 0; j < count; ++j) {
    Poly f = monic_from_index(j, deg, p);
    if (poly_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

Elem digits_add(Elem a, Elem b, std::uint32_t p) {
  Elem r = 0, mult = 1;
  while (a != 0 || b != 0) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Elem digits_neg(Elem a, std::uint32_t p) {
  Elem r = 0, mult = 1;
  while (a != 0) {
    std::uint64_t d = a % p;
    if (d != 0) r += (p - d) * mult;
    mult *= p;
    a /= p;
  }
  return r;
}

Poly elem_to_poly(Elem a, std::uint32_t p) {
  Poly f;
  while (a != 0) {
    f.push_back(static_cast<std::uint32_t>(a % p));
    a /= p;
  }
  return f;
}

Elem poly_to_elem(const Poly& f, std::uint32_t p) {
  Elem a = 0, mult = 1;
  for (std::uint32_t c : f) {
    a += Elem(c) * mult;
    mult *= p;
  }
  return a;
}

// Schoolbook product modulo the field modulus; only used to bootstrap the
// log/antilog tables.
Elem slow_mul(Elem a, Elem b, const Poly& modulus, std::uint32_t p) {
  const Poly fa = elem_to_poly(a, p);
  const Poly fb = elem_to_poly(b, p);
  if (fa.empty() || fb.empty()) return 0;
  Poly prod(fa.size() + fb.size() - 1, 0);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    for (std::size_t j = 0; j < fb.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t(fa[i]) * fb[j]) % p);
    }
  }
  return poly_to_elem(poly_mod(std::move(prod), modulus, p), p);
}

Elem slow_pow(Elem a, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = slow_mul(r, b, modulus, p);
    b = slow_mul(b, b, modulus, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimePower PrimePower::make(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) {
    throw ValidationError("p_not_prime", "field characteristic must be prime, got " + std::to_string(p));
  }
  if (m < 1) {
    throw ValidationError("m_out_of_range", "extension degree must be at least 1");
  }
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      throw ValidationError("q_over_cap",
                            "field order exceeds the cap of " + std::to_string(kMaxOrder));
    }
  }
  PrimePower pp;
  pp.p = static_cast<std::uint32_t>(p);
  pp.m = static_cast<std::uint32_t>(m);
  pp.q = q;
  return pp;
}

PrimePower PrimePower::parse(const std::string& descriptor) {
  const auto caret = descriptor.find('^');
  const std::string p_str = descriptor.substr(0, caret);
  const std::string m_str = caret == std::string::npos ? "1" : descriptor.substr(caret + 1);
  auto parse_int = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad_field_descriptor",
                            "cannot parse field descriptor '" + descriptor + "', expected p^m");
    }
    return std::stoull(s);
  };
  return make(parse_int(p_str), parse_int(m_str));
}

PrimePower PrimePower::from_order(std::uint64_t q) {
  if (q < 2) throw ValidationError("not_prime_power", "field order must be at least 2");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t m = 0, rest = q;
  while (rest > 1 && rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) {
    throw ValidationError("not_prime_power", std::to_string(q) + " is not a prime power");
  }
  return make(p, m);
}

BaseField::BaseField(const PrimePower& pp) : pp_(pp) {
  modulus_ = smallest_irreducible(pp_.m, pp_.p);

  // Smallest primitive element by encoding; order tested against the prime
  // factorization of q-1.
  const std::uint64_t group = pp_.q - 1;
  const auto factors = prime_factors(group);
  for (Elem g = 1; g < pp_.q; ++g) {
    bool primitive = true;
    for (std::uint64_t f : factors) {
      if (slow_pow(g, group / f, modulus_, pp_.p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  antilog_.assign(group, 0);
  log_.assign(pp_.q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    antilog_[i] = x;
    log_[x] = static_cast<std::uint32_t>(i);
    x = slow_mul(x, generator_, modulus_, pp_.p);
  }
}

std::string BaseField::describe() const {
  std::ostringstream os;
  os << "GF(" << pp_.q << ") = GF(" << pp_.p << "^" << pp_.m << "), modulus [";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ", ";
    os << modulus_[i];
  }
  os << "]";
  return os.str();
}

Elem BaseField::add(Elem a, Elem b) const {
  assert(is_element(a) && is_element(b));
  if (pp_.p == 2) return a ^ b;
  return digits_add(a, b, pp_.p);
}

Elem BaseField::neg(Elem a) const {
  assert(is_element(a));
  if (pp_.p == 2) return a;
  return digits_neg(a, pp_.p);
}

Elem BaseField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem BaseField::mul(Elem a, Elem b) const {
  assert(is_element(a) && is_element(b));
  if (a == 0 || b == 0) return 0;
  const std::uint64_t group = pp_.q - 1;
  return antilog_[(log_[a] + log_[b]) % group];
}

Elem BaseField::inv(Elem a) const {
  if (a == 0) throw Error("inversion of zero in " + describe());
  const std::uint64_t group = pp_.q - 1;
  return antilog_[(group - log_[a]) % group];
}

Elem BaseField::div(Elem a, Elem b) const {
  if (b == 0) throw Error("division by zero in " + describe());
  if (a == 0) return 0;
  const std::uint64_t group = pp_.q - 1;
  return antilog_[(log_[a] + group - log_[b]) % group];
}

Elem BaseField::pow(Elem a, std::uint64_t e) const {
  assert(is_element(a));
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t group = pp_.q - 1;
  return antilog_[log_[a] * (e % group) % group];
}

namespace {

// Absolute trace GF(2^m) -> GF(2).
Elem trace_char2(const BaseField& f, Elem x) {
  Elem acc = 0, t = x;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    acc = f.add(acc, t);
    t = f.mul(t, t);
  }
  return acc;
}

bool is_square(const BaseField& f, Elem x) {
  if (x == 0) return true;
  if (f.characteristic() == 2) return true;  // squaring is a bijection
  return f.pow(x, (f.order() - 1) / 2) == 1;
}

// Whether x^2 + c1*x + c0 has a root in the base field. Odd characteristic
// uses the discriminant; characteristic 2 uses the Artin-Schreier trace
// criterion (and x^2 + c0 always splits there).
bool quadratic_has_root(const BaseField& f, Elem c1, Elem c0) {
  if (f.characteristic() == 2) {
    if (c1 == 0) return true;
    return trace_char2(f, f.div(c0, f.mul(c1, c1))) == 0;
  }
  const Elem four = f.add(f.add(1, 1), f.add(1, 1));
  const Elem disc = f.sub(f.mul(c1, c1), f.mul(four, c0));
  return is_square(f, disc);
}

}  // namespace

QuadraticExtension::QuadraticExtension(BaseField base)
    : base_(std::move(base)), q_(base_.order()) {
  for (std::uint64_t j = 0; j < q_ * q_; ++j) {
    const Elem c1 = j / q_, c0 = j % q_;
    if (!quadratic_has_root(base_, c1, c0)) {
      c1_ = c1;
      c0_ = c0;
      return;
    }
  }
  throw Error("no irreducible quadratic found");  // unreachable
}

std::string QuadraticExtension::describe() const {
  std::ostringstream os;
  os << "GF(" << order() << ") over " << base_.describe() << ", modulus [" << c0_ << ", " << c1_
     << ", 1]";
  return os.str();
}

Elem QuadraticExtension::add(Elem a, Elem b) const {
  const auto [a0, a1] = components(a);
  const auto [b0, b1] = components(b);
  return recompose(base_.add(a0, b0), base_.add(a1, b1));
}

Elem QuadraticExtension::neg(Elem a) const {
  const auto [a0, a1] = components(a);
  return recompose(base_.neg(a0), base_.neg(a1));
}

Elem QuadraticExtension::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem QuadraticExtension::mul(Elem a, Elem b) const {
  // (a0 + a1 b)(b0 + b1 b) with b^2 = -(c1 b + c0).
  const auto [a0, a1] = components(a);
  const auto [b0, b1] = components(b);
  const Elem cross = base_.mul(a1, b1);
  const Elem lo = base_.sub(base_.mul(a0, b0), base_.mul(c0_, cross));
  const Elem hi = base_.sub(base_.add(base_.mul(a0, b1), base_.mul(a1, b0)),
                            base_.mul(c1_, cross));
  return recompose(lo, hi);
}

Elem QuadraticExtension::inv(Elem a) const {
  if (a == 0) throw Error("inversion of zero in " + describe());
  // Conjugate via beta^q = -c1 - beta; the norm a * conj(a) lands in GF(q).
  const auto [a0, a1] = components(a);
  const Elem conj = recompose(base_.sub(a0, base_.mul(a1, c1_)), base_.neg(a1));
  const Elem norm = mul(a, conj);
  assert(in_base(norm));
  return mul(conj, base_.inv(norm));
}

Elem QuadraticExtension::div(Elem a, Elem b) const {
  if (b == 0) throw Error("division by zero in " + describe());
  return mul(a, inv(b));
}

Elem QuadraticExtension::pow(Elem a, std::uint64_t e) const {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<Elem> QuadraticExtension::representatives(std::uint64_t max_count) const {
  std::vector<Elem> out;
  out.reserve(std::min<std::uint64_t>(max_count, pair_count()));
  for (Elem z = q_; z < order() && out.size() < max_count; ++z) {
    if (z < frobenius(z)) out.push_back(z);
  }
  return out;
}

}  // namespace eacc
