#include "eacc/construction.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace eacc {

std::pair<std::vector<Elem>, std::vector<Elem>> canonical_points(const QuadraticExtension& ext,
                                                                 std::uint64_t n1,
                                                                 std::uint64_t n2) {
  const std::uint64_t q = ext.base_order();
  if (n1 > q) {
    throw ValidationError("n1_exceeds_field",
                          "n1 = " + std::to_string(n1) + " exceeds the field size q = " +
                              std::to_string(q));
  }
  if (n2 > ext.pair_count()) {
    throw ValidationError("n2_exceeds_pairs",
                          "n2 = " + std::to_string(n2) + " exceeds the conjugate-pair count (q^2-q)/2 = " +
                              std::to_string(ext.pair_count()));
  }
  std::vector<Elem> alphas(n1);
  for (std::uint64_t i = 0; i < n1; ++i) alphas[i] = i;
  return {std::move(alphas), ext.representatives(n2)};
}

CodeSpec make_spec(QuadraticExtension ext, std::uint64_t n, std::uint64_t k, std::uint64_t n1) {
  if (n1 > n) {
    throw ValidationError("length_partition",
                          "n1 = " + std::to_string(n1) + " exceeds n = " + std::to_string(n));
  }
  CodeSpec spec{std::move(ext), n, k, n1, n - n1, {}, {}, ""};
  auto points = canonical_points(spec.ext, spec.n1, spec.n2);
  spec.alphas = std::move(points.first);
  spec.gammas = std::move(points.second);
  validate(spec);
  return spec;
}

CodeSpec make_spec(const PrimePower& pp, std::uint64_t n, std::uint64_t k, std::uint64_t n1) {
  return make_spec(QuadraticExtension(BaseField(pp)), n, k, n1);
}

void validate(const CodeSpec& spec) {
  const std::uint64_t q = spec.q();
  const std::uint64_t max_n = q + spec.ext.pair_count();
  if (spec.n != spec.n1 + spec.n2) {
    throw ValidationError("length_partition", "n must equal n1 + n2");
  }
  if (spec.n < 1 || spec.n > max_n) {
    throw ValidationError("n_out_of_range", "need 1 <= n <= (q^2+q)/2 = " + std::to_string(max_n) +
                                                ", got n = " + std::to_string(spec.n));
  }
  if (spec.n1 > q) {
    throw ValidationError("n1_exceeds_field", "n1 = " + std::to_string(spec.n1) +
                                                  " exceeds the field size q = " + std::to_string(q));
  }
  if (spec.n2 > spec.ext.pair_count()) {
    throw ValidationError("n2_exceeds_pairs",
                          "n2 = " + std::to_string(spec.n2) + " exceeds (q^2-q)/2 = " +
                              std::to_string(spec.ext.pair_count()));
  }
  if (spec.k < 1) {
    throw ValidationError("k_out_of_range", "k must be at least 1");
  }
  if (spec.k > spec.n + spec.n2) {
    // Interpolation needs deg f < n1 + 2*n2; beyond that encoding cannot
    // be injective.
    throw ValidationError("non_injective",
                          "k = " + std::to_string(spec.k) + " exceeds n + n2 = " +
                              std::to_string(spec.n + spec.n2));
  }
  if (spec.alphas.size() != spec.n1) {
    throw ValidationError("alpha_count", "expected n1 base evaluation points");
  }
  if (spec.gammas.size() != spec.n2) {
    throw ValidationError("gamma_count", "expected n2 extension evaluation points");
  }
  std::set<Elem> seen_alpha;
  for (Elem a : spec.alphas) {
    if (!spec.field().is_element(a)) {
      throw ValidationError("alpha_not_in_field", "alpha " + std::to_string(a) + " is not in GF(q)");
    }
    if (!seen_alpha.insert(a).second) {
      throw ValidationError("duplicate_alpha", "alpha " + std::to_string(a) + " repeats");
    }
  }
  std::set<Elem> seen_gamma;
  for (Elem g : spec.gammas) {
    if (!spec.ext.is_element(g)) {
      throw ValidationError("gamma_not_in_ext", "gamma " + std::to_string(g) + " is not in GF(q^2)");
    }
    if (spec.ext.in_base(g)) {
      throw ValidationError("gamma_in_base_field",
                            "gamma " + std::to_string(g) + " lies in GF(q), not GF(q^2)\\GF(q)");
    }
    if (!seen_gamma.insert(g).second) {
      throw ValidationError("duplicate_gamma", "gamma " + std::to_string(g) + " repeats");
    }
  }
  for (Elem g : spec.gammas) {
    if (seen_gamma.count(spec.ext.frobenius(g))) {
      throw ValidationError("conjugate_gammas", "gammas " + std::to_string(g) + " and its conjugate both present");
    }
  }
  for (Elem g : spec.gammas) {
    if (spec.ext.frobenius(g) < g) {
      throw ValidationError("gamma_not_representative",
                            "gamma " + std::to_string(g) + " is the larger member of its conjugate pair");
    }
  }
}

std::uint64_t min_distance_for(std::uint64_t n, std::uint64_t k, std::uint64_t n1,
                               std::uint64_t n2) {
  if (n1 >= k - 1) return n - k + 1;
  // Worst case: all n1 base points are roots plus floor((k-1-n1)/2)
  // conjugate pairs, each pair spending two of the k-1 root slots on one
  // coordinate.
  const std::uint64_t direct = n - (n1 + (k - 1 - n1) / 2);
  const std::uint64_t ceil_form = (n + n2 + 1 - k + 1) / 2;
  if (direct != ceil_form) throw std::logic_error("minimum distance closed forms disagree");
  return direct;
}

std::uint64_t min_distance(const CodeSpec& spec) {
  return min_distance_for(spec.n, spec.k, spec.n1, spec.n2);
}

EntanglementChoice best_entanglement(const QuadraticExtension& ext, std::uint64_t n,
                                     std::uint64_t k) {
  const std::uint64_t q = ext.base_order();
  const std::uint64_t max_n2 = std::min(n, ext.pair_count());
  EntanglementChoice best;
  bool found = false;
  for (std::uint64_t n2 = 0; n2 <= max_n2; ++n2) {
    const std::uint64_t n1 = n - n2;
    if (n1 > q) continue;
    if (k < 1 || k > n + n2) continue;
    const std::uint64_t d = min_distance_for(n, k, n1, n2);
    if (!found || d > best.d) {
      best = {n1, n2, d};
      found = true;
    }
  }
  if (!found) {
    throw ValidationError("no_feasible_split",
                          "no split n1 + n2 = " + std::to_string(n) + " admits k = " +
                              std::to_string(k) + " over GF(" + std::to_string(q) + ")");
  }
  return best;
}

std::string format_label(const CodeSpec& spec) {
  std::ostringstream os;
  os << "[" << spec.n << "," << spec.k << "," << min_distance(spec) << ";" << spec.c() << "]_"
     << spec.q();
  return os.str();
}

CodeSummary summarize(const CodeSpec& spec) {
  CodeSummary s;
  s.q = spec.q();
  s.n = spec.n;
  s.k = spec.k;
  s.n1 = spec.n1;
  s.n2 = spec.n2;
  s.c = spec.c();
  s.d = min_distance(spec);
  s.label = format_label(spec);
  s.erasure_capability = s.d - 1;
  s.error_capability = (s.d - 1) / 2;
  s.rate = Rational(s.k, s.n);
  s.message_count = 1;
  for (std::uint64_t i = 0; i < s.k; ++i) s.message_count *= s.q;
  return s;
}

std::string spec_to_json(const CodeSpec& spec) {
  nlohmann::ordered_json j;
  j["p"] = spec.field().characteristic();
  j["m"] = spec.field().degree();
  j["n"] = spec.n;
  j["k"] = spec.k;
  j["n1"] = spec.n1;
  j["n2"] = spec.n2;
  if (!spec.label.empty()) j["label"] = spec.label;
  return j.dump();
}

CodeSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("bad_spec_file", std::string("cannot parse spec file: ") + e.what());
  }
  for (const char* key : {"p", "m", "n", "k", "n1", "n2"}) {
    if (!j.contains(key) || !j[key].is_number_unsigned()) {
      throw ValidationError("bad_spec_file",
                            std::string("spec file is missing an unsigned integer field '") + key + "'");
    }
  }
  const auto pp = PrimePower::make(j["p"].get<std::uint64_t>(), j["m"].get<std::uint64_t>());
  const std::uint64_t n = j["n"].get<std::uint64_t>();
  const std::uint64_t n1 = j["n1"].get<std::uint64_t>();
  const std::uint64_t n2 = j["n2"].get<std::uint64_t>();
  if (n != n1 + n2) {
    throw ValidationError("length_partition", "spec file has n != n1 + n2");
  }
  CodeSpec spec = make_spec(pp, n, j["k"].get<std::uint64_t>(), n1);
  if (j.contains("label")) spec.label = j["label"].get<std::string>();
  return spec;
}

CodeSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("bad_spec_file", "cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return spec_from_json(buf.str());
}

void save_spec_file(const CodeSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("bad_spec_file", "cannot write spec file '" + path + "'");
  out << spec_to_json(spec) << "\n";
}

}  // namespace eacc
