#ifndef SFT_RATIONAL_HPP_
#define SFT_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sft {

  // Exact scalars. Every value the library computes is an exact rational.
  using Rational = mpq_class;

  // Accepts "p/q" or "p" with optional leading '-'; q must be nonzero.
  // Throws Error(MalformedInput) otherwise.
  Rational parse_rational(std::string_view text);

  // Always "p/q" in lowest terms, e.g. "3/1", "-1/2".
  std::string format_rational(Rational const& value);

}  // namespace sft

#endif  // SFT_RATIONAL_HPP_
