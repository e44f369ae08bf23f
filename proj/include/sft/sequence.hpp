// Finitely described points of the two-sided shift.
//
// An EventuallyPeriodicSeq is the bi-infinite sequence
//
//   ... L L L . core . R R R ...
//
// with coordinate 0 sitting `origin` places after the start of the core
// (origin may be negative or run past the core). All certificate points are
// of this form. Equality is coordinatewise, not representational: periods are
// stored unreduced, and (12, "", 12, 0) equals (21, 1, 21, 0).

#ifndef SFT_SEQUENCE_HPP_
#define SFT_SEQUENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sft/graph.hpp"
#include "sft/types.hpp"

namespace sft {

  class EventuallyPeriodicSeq {
   public:
    // Throws InvalidSequence if either period is empty.
    EventuallyPeriodicSeq(Word left, Word core, Word right,
                          std::int64_t origin = 0);

    // The point w w w ... in both directions, w[0] at coordinate 0.
    static EventuallyPeriodicSeq periodic(Word const& w);

    Word const& left_period() const noexcept {
      return _left;
    }
    Word const& core() const noexcept {
      return _core;
    }
    Word const& right_period() const noexcept {
      return _right;
    }
    std::int64_t origin() const noexcept {
      return _origin;
    }

    // Coordinates below this lie in the left-periodic part.
    std::int64_t core_begin() const noexcept {
      return -_origin;
    }
    // Coordinates from this on lie in the right-periodic part.
    std::int64_t core_end() const noexcept {
      return static_cast<std::int64_t>(_core.size()) - _origin;
    }

    Symbol operator[](std::int64_t coordinate) const;

    // Coordinates [first, first + length).
    Word window(std::int64_t first, std::size_t length) const;

    // Coordinatewise equality of the underlying sequences.
    friend bool operator==(EventuallyPeriodicSeq const& a,
                           EventuallyPeriodicSeq const& b);

   private:
    Symbol at_position(std::int64_t position) const;

    Word         _left;
    Word         _core;
    Word         _right;
    std::int64_t _origin;
  };

  // All junctions admissible: L->L, L->core (or L->R if the core is empty),
  // inside the core, core->R, R->R. Throws SymbolOutOfRange.
  bool is_admissible(AdjacencyMatrix const& A, EventuallyPeriodicSeq const& s);

  // shift(s, t)[i] == s[i + t].
  EventuallyPeriodicSeq shift(EventuallyPeriodicSeq const& s, std::int64_t t);

  // Whether r occurs as a block of consecutive coordinates anywhere in s.
  // Exact: an occurrence outside the scanned window can be translated into
  // it by a multiple of the relevant period.
  bool contains_word(EventuallyPeriodicSeq const& s, Word const& r);

  // The least i >= 0 with a[i] != b[i], or nullopt when a and b agree on all
  // nonnegative coordinates (i.e. as points of the one-sided shift).
  std::optional<std::int64_t>
  first_forward_difference(EventuallyPeriodicSeq const& a,
                           EventuallyPeriodicSeq const& b);

  // The one-sided point prefix . period . period ... at coordinates >= 0,
  // completed to the left by repeating a closed walk into its first symbol,
  // so that it is also an admissible two-sided point. Throws NoPath if that
  // symbol lies on no cycle, InvalidSequence if period is empty.
  EventuallyPeriodicSeq one_sided_point(AdjacencyMatrix const& A,
                                        Word const&            prefix,
                                        Word const&            period);

  // "L:<word> C:<word> R:<word> O:<int>", e.g. "L:12 C: R:12 O:0".
  std::string           format_sequence(EventuallyPeriodicSeq const& s);
  EventuallyPeriodicSeq parse_sequence(std::string_view text);

}  // namespace sft

#endif  // SFT_SEQUENCE_HPP_
