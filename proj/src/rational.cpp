#include "eacc/rational.hpp"

#include "eacc/errors.hpp"

namespace eacc {

std::string format_rational(const Rational& r) {
  const Int num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw ValidationError("bad_rational", "cannot parse rational '" + text + "'");
  };
  if (text.empty()) return fail();
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const Int num(text.substr(0, slash));
      const Int den(text.substr(slash + 1));
      if (den == 0) return fail();
      return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos) return fail();
      Int den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const bool negative = !whole.empty() && whole[0] == '-';
      const Int whole_part(whole.empty() || whole == "-" ? "0" : whole);
      const Int frac_part(frac.empty() ? "0" : frac);
      Rational r = Rational(whole_part) + (negative ? -Rational(frac_part, den)
                                                    : Rational(frac_part, den));
      return r;
    }
    return Rational(Int(text));
  } catch (const std::runtime_error&) {
    return fail();
  }
}

}  // namespace eacc
