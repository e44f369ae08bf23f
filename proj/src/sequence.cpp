#include "sft/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "sft/error.hpp"
#include "sft/word.hpp"

namespace sft {

  namespace {
    std::int64_t ssize(Word const& w) {
      return static_cast<std::int64_t>(w.size());
    }

    std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
      std::int64_t r = a % m;
      return r < 0 ? r + m : r;
    }
  }  // namespace

  EventuallyPeriodicSeq::EventuallyPeriodicSeq(Word         left,
                                               Word         core,
                                               Word         right,
                                               std::int64_t origin)
      : _left(std::move(left)),
        _core(std::move(core)),
        _right(std::move(right)),
        _origin(origin) {
    if (_left.empty() || _right.empty()) {
      throw Error(ErrorKind::InvalidSequence,
                  "left and right periods must be nonempty");
    }
  }

  EventuallyPeriodicSeq EventuallyPeriodicSeq::periodic(Word const& w) {
    return EventuallyPeriodicSeq(w, {}, w, 0);
  }

  Symbol EventuallyPeriodicSeq::at_position(std::int64_t p) const {
    if (p < 0) {
      return _left[floor_mod(p, ssize(_left))];
    }
    if (p < ssize(_core)) {
      return _core[p];
    }
    return _right[(p - ssize(_core)) % ssize(_right)];
  }

  Symbol EventuallyPeriodicSeq::operator[](std::int64_t coordinate) const {
    return at_position(coordinate + _origin);
  }

  Word EventuallyPeriodicSeq::window(std::int64_t first,
                                     std::size_t  length) const {
    Word out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
      out.push_back((*this)[first + static_cast<std::int64_t>(k)]);
    }
    return out;
  }

  bool operator==(EventuallyPeriodicSeq const& a,
                  EventuallyPeriodicSeq const& b) {
    std::int64_t const lo = std::min(a.core_begin(), b.core_begin())
                            - std::lcm(ssize(a._left), ssize(b._left));
    std::int64_t const hi = std::max(a.core_end(), b.core_end())
                            + std::lcm(ssize(a._right), ssize(b._right));
    for (std::int64_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) {
        return false;
      }
    }
    return true;
  }

  bool is_admissible(AdjacencyMatrix const& A, EventuallyPeriodicSeq const& s) {
    // One full turn of each period around the core covers every junction.
    Word unrolled = concat(concat(concat(s.left_period(), s.left_period()),
                                  s.core()),
                           concat(s.right_period(), s.right_period()));
    return is_admissible(A, unrolled);
  }

  EventuallyPeriodicSeq shift(EventuallyPeriodicSeq const& s, std::int64_t t) {
    return EventuallyPeriodicSeq(
        s.left_period(), s.core(), s.right_period(), s.origin() + t);
  }

  bool contains_word(EventuallyPeriodicSeq const& s, Word const& r) {
    if (r.empty()) {
      return true;
    }
    std::int64_t const reach
        = ssize(r) + std::max(ssize(s.left_period()), ssize(s.right_period()));
    std::int64_t const first = s.core_begin() - reach;
    std::int64_t const last  = s.core_end() + reach;
    for (std::int64_t start = first; start <= last; ++start) {
      bool match = true;
      for (std::int64_t k = 0; k < ssize(r) && match; ++k) {
        match = s[start + k] == r[k];
      }
      if (match) {
        return true;
      }
    }
    return false;
  }

  std::optional<std::int64_t>
  first_forward_difference(EventuallyPeriodicSeq const& a,
                           EventuallyPeriodicSeq const& b) {
    std::int64_t const hi
        = std::max<std::int64_t>({0, a.core_end(), b.core_end()})
          + std::lcm(ssize(a.right_period()), ssize(b.right_period()));
    for (std::int64_t i = 0; i < hi; ++i) {
      if (a[i] != b[i]) {
        return i;
      }
    }
    return std::nullopt;
  }

  EventuallyPeriodicSeq one_sided_point(AdjacencyMatrix const& A,
                                        Word const&            prefix,
                                        Word const&            period) {
    if (period.empty()) {
      throw Error(ErrorKind::InvalidSequence, "period must be nonempty");
    }
    Symbol const first = prefix.empty() ? period.front() : prefix.front();
    Word         left  = find_walk(A, first, first);
    left.pop_back();
    return EventuallyPeriodicSeq(std::move(left), prefix, period, 0);
  }

  std::string format_sequence(EventuallyPeriodicSeq const& s) {
    return "L:" + format_word(s.left_period()) + " C:" + format_word(s.core())
           + " R:" + format_word(s.right_period())
           + " O:" + std::to_string(s.origin());
  }

  EventuallyPeriodicSeq parse_sequence(std::string_view text) {
    auto bad = [&] {
      return Error(ErrorKind::MalformedInput,
                   "bad sequence literal '" + std::string(text) + "'");
    };
    std::string_view fields[4];
    char const*      tags[4] = {"L:", "C:", "R:", "O:"};
    std::string_view rest    = text;
    for (int k = 0; k < 4; ++k) {
      if (rest.substr(0, 2) != tags[k]) {
        throw bad();
      }
      rest.remove_prefix(2);
      auto const sp = k < 3 ? rest.find(' ') : rest.size();
      if (sp == std::string_view::npos) {
        throw bad();
      }
      fields[k] = rest.substr(0, sp);
      rest.remove_prefix(k < 3 ? sp + 1 : sp);
    }
    std::int64_t origin = 0;
    try {
      std::size_t used = 0;
      origin           = std::stoll(std::string(fields[3]), &used);
      if (used != fields[3].size()) {
        throw bad();
      }
    } catch (std::logic_error const&) {
      throw bad();
    }
    try {
      return EventuallyPeriodicSeq(parse_word(fields[0]),
                                   parse_word(fields[1]),
                                   parse_word(fields[2]),
                                   origin);
    } catch (Error const&) {
      throw bad();
    }
  }

}  // namespace sft
