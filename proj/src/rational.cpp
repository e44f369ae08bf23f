#include "sft/rational.hpp"

#include <cctype>

#include "sft/error.hpp"

namespace sft {

  namespace {
    bool is_integer_literal(std::string_view s) {
      if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    auto const slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den
        = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)
        || den.front() == '-') {
      throw Error(ErrorKind::MalformedInput,
                  "not a rational: '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num), 10);
    mpz_class q(std::string(den), 10);
    if (q == 0) {
      throw Error(ErrorKind::MalformedInput,
                  "zero denominator: '" + std::string(text) + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  std::string format_rational(Rational const& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
  }

}  // namespace sft
