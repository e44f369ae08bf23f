// Admissible words and the finite combinatorics of cylinders.

#ifndef SFT_WORD_HPP_
#define SFT_WORD_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sft/graph.hpp"
#include "sft/types.hpp"

namespace sft {

  // Word literals: one decimal digit per symbol ("121"), or, when some
  // symbol exceeds 9, dot-separated decimals ("1.10.2"). The empty string is
  // the empty word.
  Word        parse_word(std::string_view text);
  std::string format_word(Word const& w);

  // Every consecutive pair is an edge of Gr(A). Empty and one-symbol words
  // are admissible. Throws SymbolOutOfRange.
  bool is_admissible(AdjacencyMatrix const& A, Word const& w);

  // All admissible words of length k in lexicographic order. These index the
  // depth-k cylinders of X_A. Throws DepthZero when k == 0.
  std::vector<Word> enumerate_words(AdjacencyMatrix const& A, std::size_t k);

  // Admissible words w of length p with A(w_p, w_1) = 1, i.e. the words
  // whose infinite repetition is a point of X_A.
  std::vector<Word> periodic_points(AdjacencyMatrix const& A, std::size_t p);

  Word concat(Word a, Word const& b);

  // True when `prefix` is an initial segment of `w`.
  bool starts_with(Word const& w, Word const& prefix);

}  // namespace sft

#endif  // SFT_WORD_HPP_
