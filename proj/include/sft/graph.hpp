// The 0-1 matrix A defining a subshift of finite type, and the graph
// algorithms on Gr(A) that the certificates are built from.

#ifndef SFT_GRAPH_HPP_
#define SFT_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sft/types.hpp"

namespace sft {

  class AdjacencyMatrix {
   public:
    // Rows are given as 0/1 entries. Throws MalformedInput for an empty or
    // ragged matrix or a non-bit entry, ZeroRow for a symbol with no
    // successor.
    explicit AdjacencyMatrix(std::vector<std::vector<int>> const& rows);

    std::size_t size() const noexcept {
      return _n;
    }

    // 1-based; out-of-range symbols throw SymbolOutOfRange.
    bool edge(Symbol from, Symbol to) const;

    bool in_range(Symbol s) const noexcept {
      return s >= 1 && s <= _n;
    }

    // Successors of s in increasing order.
    std::vector<Symbol> successors(Symbol s) const;

    std::vector<std::vector<int>> rows() const;

    bool operator==(AdjacencyMatrix const&) const = default;

   private:
    void check_symbol(Symbol s) const;

    std::size_t               _n;
    std::vector<std::uint8_t> _bits;
  };

  // Matrix file format: decimal n on the first line, then n lines of n
  // single-space-separated bits. One trailing newline is allowed.
  AdjacencyMatrix parse_matrix(std::string_view text);
  std::string     format_matrix(AdjacencyMatrix const& A);

  // A path from every i to every j (a single symbol is a path from i to i).
  bool is_transitive(AdjacencyMatrix const& A);

  // Every row contains exactly one 1. This is the row condition only; it
  // does not require Gr(A) to be a single cycle.
  bool is_cycle(AdjacencyMatrix const& A);

  // Shortest admissible word from `from` to `to`, lexicographically smallest
  // among the shortest. find_path(A, i, i) is the one-symbol word i.
  // Throws NoPath.
  Word find_path(AdjacencyMatrix const& A, Symbol from, Symbol to);

  // As find_path, but the word uses at least one edge, so from == to yields
  // the shortest closed walk. Throws NoPath.
  Word find_walk(AdjacencyMatrix const& A, Symbol from, Symbol to);

  // Shortest (then lex smallest) walk with at least one edge from `from` to
  // `to` whose interior symbols all differ from `avoid`. The endpoints may
  // equal `avoid`; this is how first-return words are found.
  std::optional<Word> find_walk_avoiding(AdjacencyMatrix const& A,
                                         Symbol                 from,
                                         Symbol                 to,
                                         Symbol                 avoid);

  // {a : A(a, s) = 1}, the first symbols of the sigma-preimages of any
  // point starting with s.
  std::vector<Symbol> preimage_symbols(AdjacencyMatrix const& A, Symbol s);

}  // namespace sft

#endif  // SFT_GRAPH_HPP_
