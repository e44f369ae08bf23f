#ifndef SFT_TYPES_HPP_
#define SFT_TYPES_HPP_

#include <cstdint>
#include <vector>

namespace sft {

  // Symbols are 1-based: the alphabet of an n x n matrix is {1, ..., n}.
  using Symbol = std::uint32_t;

  // A finite string of symbols. Admissibility is a property checked against
  // a matrix, not an invariant of the type, because the empty word and
  // arbitrary connectors are needed while building witnesses.
  using Word = std::vector<Symbol>;

}  // namespace sft

#endif  // SFT_TYPES_HPP_
