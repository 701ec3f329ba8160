#include "eacc/codec.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace eacc {
namespace {

// q^k, saturating at cap + 1 so callers can compare against a budget.
std::uint64_t saturating_power(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (v > cap / q) return cap + 1;
    v *= q;
  }
  return v;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t s, std::uint64_t cap) {
  if (s > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= s; ++i) {
    const std::uint64_t factor = n - s + i;
    if (v > cap || v > UINT64_MAX / factor) return cap + 1;
    v = v * factor / i;  // exact: a product of i consecutive integers is divisible by i!
  }
  return std::min(v, cap + 1);
}

std::vector<Elem> flatten(const Codeword& cw) {
  std::vector<Elem> flat;
  flat.reserve(cw.size());
  flat.insert(flat.end(), cw.base_part.begin(), cw.base_part.end());
  flat.insert(flat.end(), cw.ext_part.begin(), cw.ext_part.end());
  return flat;
}

// Enumerates all q^k messages as a base-q odometer, maintaining the
// codeword incrementally: stepping digit i from a to a+1 adds
// (elem(a+1) - elem(a)) * row_i, where row_i is the codeword of the
// monomial x^i. One amortized O(n) update per message instead of a full
// O(nk) re-encoding.
template <typename Fn>
void for_each_codeword(const CodeSpec& spec, Fn&& fn) {
  const BaseField& f = spec.field();
  const QuadraticExtension& x = spec.ext;
  const std::uint64_t q = spec.q();
  const std::size_t n = static_cast<std::size_t>(spec.n);
  const std::size_t k = static_cast<std::size_t>(spec.k);

  std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const bool base = j < spec.n1;
    const Elem point = base ? spec.alphas[j] : spec.gammas[j - spec.n1];
    Elem power = 1;
    for (std::size_t i = 0; i < k; ++i) {
      rows[i][j] = power;
      power = base ? f.mul(power, point) : x.mul(power, point);
    }
  }

  // step[i][a]: delta when digit i leaves value a (wrapping at q-1).
  std::vector<Elem> diffs(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    diffs[a] = a + 1 < q ? f.sub(a + 1, a) : f.neg(q - 1);
  }
  std::vector<std::vector<std::vector<Elem>>> step(
      k, std::vector<std::vector<Elem>>(q, std::vector<Elem>(n)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::size_t j = 0; j < n; ++j) {
        step[i][a][j] = j < spec.n1 ? f.mul(diffs[a], rows[i][j]) : x.mul(diffs[a], rows[i][j]);
      }
    }
  }

  std::vector<std::uint32_t> digits(k, 0);
  std::vector<Elem> cw(n, 0);
  auto apply = [&](const std::vector<Elem>& delta) {
    for (std::size_t j = 0; j < n; ++j) {
      cw[j] = j < spec.n1 ? f.add(cw[j], delta[j]) : x.add(cw[j], delta[j]);
    }
  };
  for (;;) {
    fn(static_cast<const std::vector<Elem>&>(cw),
       static_cast<const std::vector<std::uint32_t>&>(digits));
    std::size_t i = 0;
    while (i < k && digits[i] == q - 1) {
      apply(step[i][q - 1]);
      digits[i] = 0;
      ++i;
    }
    if (i == k) break;
    apply(step[i][digits[i]]);
    ++digits[i];
  }
}

Message message_from_digits(const std::vector<std::uint32_t>& digits) {
  Message m;
  m.coeffs.assign(digits.begin(), digits.end());
  return m;
}

}  // namespace

std::size_t ReceivedWord::erasure_count() const {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.erased; }));
}

ReceivedWord received_from(const Codeword& cw) {
  ReceivedWord rcv;
  rcv.slots.reserve(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i) rcv.slots.push_back({cw.at(i), false});
  return rcv;
}

Codeword encode(const CodeSpec& spec, const Message& msg) {
  if (msg.coeffs.size() != spec.k) {
    throw ValidationError("message_length", "message must have exactly k = " +
                                                std::to_string(spec.k) + " coefficients");
  }
  const BaseField& f = spec.field();
  const QuadraticExtension& x = spec.ext;
  Codeword cw;
  cw.base_part.reserve(spec.n1);
  cw.ext_part.reserve(spec.n2);
  for (Elem alpha : spec.alphas) {
    Elem acc = 0;
    for (std::size_t t = msg.coeffs.size(); t-- > 0;) {
      acc = f.add(f.mul(acc, alpha), msg.coeffs[t]);
    }
    cw.base_part.push_back(acc);
  }
  for (Elem gamma : spec.gammas) {
    Elem acc = 0;
    for (std::size_t t = msg.coeffs.size(); t-- > 0;) {
      acc = x.add(x.mul(acc, gamma), msg.coeffs[t]);
    }
    cw.ext_part.push_back(acc);
  }
  return cw;
}

LinearSystem build_erasure_system(const CodeSpec& spec, const ReceivedWord& rcv) {
  if (rcv.slots.size() != spec.n) {
    throw ValidationError("word_length",
                          "received word must have n = " + std::to_string(spec.n) + " slots");
  }
  const BaseField& f = spec.field();
  const QuadraticExtension& x = spec.ext;
  const std::size_t k = static_cast<std::size_t>(spec.k);
  LinearSystem sys;
  sys.unknowns = k;
  for (std::size_t i = 0; i < rcv.slots.size(); ++i) {
    const auto& slot = rcv.slots[i];
    if (slot.erased) continue;
    if (i < spec.n1) {
      std::vector<Elem> row(k);
      Elem power = 1;
      for (std::size_t t = 0; t < k; ++t) {
        row[t] = power;
        power = f.mul(power, spec.alphas[i]);
      }
      sys.lhs.push_back(std::move(row));
      sys.rhs.push_back(slot.value);
    } else {
      // gamma^t = u_t + v_t*beta over GF(q); matching the components of
      // z = a + b*beta gives two base-field equations per symbol.
      const Elem gamma = spec.gammas[i - spec.n1];
      std::vector<Elem> row_a(k), row_b(k);
      Elem power = 1;
      for (std::size_t t = 0; t < k; ++t) {
        const auto [u, v] = x.components(power);
        row_a[t] = u;
        row_b[t] = v;
        power = x.mul(power, gamma);
      }
      const auto [a, b] = x.components(slot.value);
      sys.lhs.push_back(std::move(row_a));
      sys.rhs.push_back(a);
      sys.lhs.push_back(std::move(row_b));
      sys.rhs.push_back(b);
    }
  }
  return sys;
}

SolveResult solve_system(const BaseField& field, LinearSystem sys) {
  const std::size_t rows = sys.lhs.size();
  const std::size_t cols = sys.unknowns;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && sys.lhs[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(sys.lhs[pivot], sys.lhs[row]);
    std::swap(sys.rhs[pivot], sys.rhs[row]);
    const Elem scale = field.inv(sys.lhs[row][col]);
    for (std::size_t j = col; j < cols; ++j) sys.lhs[row][j] = field.mul(sys.lhs[row][j], scale);
    sys.rhs[row] = field.mul(sys.rhs[row], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || sys.lhs[r][col] == 0) continue;
      const Elem factor = sys.lhs[r][col];
      for (std::size_t j = col; j < cols; ++j) {
        sys.lhs[r][j] = field.sub(sys.lhs[r][j], field.mul(factor, sys.lhs[row][j]));
      }
      sys.rhs[r] = field.sub(sys.rhs[r], field.mul(factor, sys.rhs[row]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  SolveResult result;
  result.rank = row;
  for (std::size_t r = row; r < rows; ++r) {
    if (sys.rhs[r] != 0) {
      result.status = SolveStatus::inconsistent;
      return result;
    }
  }
  if (result.rank < cols) {
    result.status = SolveStatus::underdetermined;
    return result;
  }
  result.status = SolveStatus::unique;
  result.solution.assign(cols, 0);
  for (std::size_t r = 0; r < result.rank; ++r) result.solution[pivot_col[r]] = sys.rhs[r];
  return result;
}

std::size_t system_rank(const BaseField& field, const LinearSystem& sys) {
  return solve_system(field, sys).rank;
}

Message decode_erasures(const CodeSpec& spec, const ReceivedWord& rcv) {
  const SolveResult result = solve_system(spec.field(), build_erasure_system(spec, rcv));
  if (result.status == SolveStatus::inconsistent) {
    throw InconsistentWord("no polynomial matches the unerased symbols; the word has errors");
  }
  if (result.status == SolveStatus::underdetermined) {
    throw AmbiguousDecoding("erasure system has rank " + std::to_string(result.rank) +
                            " < k = " + std::to_string(spec.k));
  }
  Message msg{result.solution};
  const Codeword check = encode(spec, msg);
  for (std::size_t i = 0; i < rcv.slots.size(); ++i) {
    if (!rcv.slots[i].erased && check.at(i) != rcv.slots[i].value) {
      throw InconsistentWord("re-encoded word disagrees at an unerased coordinate");
    }
  }
  return msg;
}

Message decode_errors(const CodeSpec& spec, const ReceivedWord& rcv, std::uint64_t t,
                      std::uint64_t budget) {
  std::vector<std::size_t> pool;  // unerased positions, candidates for the support
  for (std::size_t i = 0; i < rcv.slots.size(); ++i) {
    if (!rcv.slots[i].erased) pool.push_back(i);
  }
  t = std::min<std::uint64_t>(t, pool.size());

  const std::uint64_t per_candidate =
      std::max<std::uint64_t>(1, (spec.n1 + 2 * spec.n2) * spec.k);
  std::uint64_t candidates = 0;
  for (std::uint64_t s = 0; s <= t; ++s) {
    candidates += saturating_binomial(pool.size(), s, budget);
    if (candidates > budget / per_candidate) {
      throw BudgetExceeded("support enumeration needs more than " + std::to_string(budget) +
                           " elimination steps");
    }
  }

  for (std::uint64_t s = 0; s <= t; ++s) {
    std::vector<Message> found;
    std::vector<std::size_t> comb(s);
    for (std::uint64_t i = 0; i < s; ++i) comb[i] = i;
    for (;;) {
      ReceivedWord trial = rcv;
      for (std::size_t idx : comb) trial.slots[pool[idx]].erased = true;
      try {
        // A unique erasure decode already certifies that the re-encoding
        // matches rcv outside the support.
        found.push_back(decode_erasures(spec, trial));
      } catch (const AmbiguousDecoding&) {
      } catch (const InconsistentWord&) {
      }
      if (s == 0) break;
      std::size_t i = s;
      while (i > 0 && comb[i - 1] == pool.size() - s + (i - 1)) --i;
      if (i == 0) break;
      --i;
      ++comb[i];
      for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (found.size() == 1) return found.front();
    if (found.size() > 1) {
      throw DecodingFailure("several codewords lie at distance " + std::to_string(s) +
                            " from the received word");
    }
  }
  throw DecodingFailure("no codeword within distance " + std::to_string(t) +
                        " of the received word");
}

std::uint64_t hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.base_part.size() != b.base_part.size() || a.ext_part.size() != b.ext_part.size()) {
    throw ValidationError("shape_mismatch", "words have different coordinate layouts");
  }
  std::uint64_t dist = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dist += a.at(i) != b.at(i);
  return dist;
}

std::uint64_t codeword_weight(const Codeword& cw) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < cw.size(); ++i) w += cw.at(i) != 0;
  return w;
}

std::uint64_t brute_force_min_distance(const CodeSpec& spec, std::uint64_t budget) {
  if (saturating_power(spec.q(), spec.k, budget) > budget) {
    throw BudgetExceeded("q^k exceeds the enumeration budget of " + std::to_string(budget));
  }
  std::uint64_t best = spec.n + 1;
  for_each_codeword(spec, [&](const std::vector<Elem>& cw, const std::vector<std::uint32_t>&) {
    std::uint64_t w = 0;
    for (Elem v : cw) w += v != 0;
    if (w != 0 && w < best) best = w;
  });
  return best;
}

NearestResult nearest_codeword_oracle(const CodeSpec& spec, const Codeword& word,
                                      std::uint64_t budget) {
  if (saturating_power(spec.q(), spec.k, budget) > budget) {
    throw BudgetExceeded("q^k exceeds the enumeration budget of " + std::to_string(budget));
  }
  const std::vector<Elem> target = flatten(word);
  if (target.size() != spec.n) {
    throw ValidationError("word_length", "word length does not match the spec");
  }
  NearestResult result;
  result.distance = spec.n + 1;
  for_each_codeword(spec,
                    [&](const std::vector<Elem>& cw, const std::vector<std::uint32_t>& digits) {
                      std::uint64_t dist = 0;
                      for (std::size_t j = 0; j < cw.size(); ++j) dist += cw[j] != target[j];
                      if (dist < result.distance) {
                        result.distance = dist;
                        result.messages.clear();
                      }
                      if (dist == result.distance) result.messages.push_back(message_from_digits(digits));
                    });
  return result;
}

std::uint64_t erasure_sentinel(const CodeSpec& spec) { return spec.q() * spec.q(); }

std::vector<std::uint64_t> to_wire(const CodeSpec& spec, const ReceivedWord& rcv) {
  const std::uint64_t sentinel = erasure_sentinel(spec);
  std::vector<std::uint64_t> out;
  out.reserve(rcv.slots.size());
  for (const auto& slot : rcv.slots) out.push_back(slot.erased ? sentinel : slot.value);
  return out;
}

std::vector<std::uint64_t> to_wire(const CodeSpec& spec, const Codeword& cw) {
  (void)spec;
  std::vector<std::uint64_t> out;
  out.reserve(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i) out.push_back(cw.at(i));
  return out;
}

ReceivedWord word_from_wire(const CodeSpec& spec, const std::vector<std::uint64_t>& symbols) {
  if (symbols.size() != spec.n) {
    throw ValidationError("word_length", "expected n = " + std::to_string(spec.n) +
                                             " symbols, got " + std::to_string(symbols.size()));
  }
  const std::uint64_t sentinel = erasure_sentinel(spec);
  ReceivedWord rcv;
  rcv.slots.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::uint64_t v = symbols[i];
    if (v == sentinel) {
      rcv.slots.push_back({0, true});
      continue;
    }
    const std::uint64_t limit = i < spec.n1 ? spec.q() : sentinel;
    if (v >= limit) {
      throw ValidationError("symbol_out_of_range",
                            "symbol " + std::to_string(v) + " at position " + std::to_string(i) +
                                " is out of range (erasure sentinel is " + std::to_string(sentinel) + ")");
    }
    rcv.slots.push_back({v, false});
  }
  return rcv;
}

Message message_from_ints(const CodeSpec& spec, const std::vector<std::uint64_t>& symbols) {
  if (symbols.size() != spec.k) {
    throw ValidationError("message_length", "expected k = " + std::to_string(spec.k) +
                                                " symbols, got " + std::to_string(symbols.size()));
  }
  Message msg;
  msg.coeffs.reserve(symbols.size());
  for (std::uint64_t v : symbols) {
    if (v >= spec.q()) {
      throw ValidationError("symbol_out_of_range",
                            "message symbol " + std::to_string(v) + " is not in GF(q)");
    }
    msg.coeffs.push_back(v);
  }
  return msg;
}

}  // namespace eacc
