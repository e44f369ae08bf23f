#include "sft/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sft/error.hpp"

namespace sft {

  AdjacencyMatrix::AdjacencyMatrix(std::vector<std::vector<int>> const& rows)
      : _n(rows.size()), _bits(rows.size() * rows.size(), 0) {
    if (_n == 0) {
      throw Error(ErrorKind::MalformedInput, "matrix must have n >= 1");
    }
    for (std::size_t i = 0; i < _n; ++i) {
      if (rows[i].size() != _n) {
        throw Error(ErrorKind::MalformedInput,
                    "row " + std::to_string(i + 1) + " has "
                        + std::to_string(rows[i].size()) + " entries, expected "
                        + std::to_string(_n));
      }
      bool any = false;
      for (std::size_t j = 0; j < _n; ++j) {
        int const v = rows[i][j];
        if (v != 0 && v != 1) {
          throw Error(ErrorKind::MalformedInput,
                      "entry (" + std::to_string(i + 1) + ","
                          + std::to_string(j + 1) + ") is not a bit");
        }
        _bits[i * _n + j] = static_cast<std::uint8_t>(v);
        any               = any || v == 1;
      }
      if (!any) {
        throw Error(ErrorKind::ZeroRow,
                    "symbol " + std::to_string(i + 1) + " has no successor");
      }
    }
  }

  void AdjacencyMatrix::check_symbol(Symbol s) const {
    if (!in_range(s)) {
      throw Error(ErrorKind::SymbolOutOfRange,
                  "symbol " + std::to_string(s) + " not in {1,...,"
                      + std::to_string(_n) + "}");
    }
  }

  bool AdjacencyMatrix::edge(Symbol from, Symbol to) const {
    check_symbol(from);
    check_symbol(to);
    return _bits[(from - 1) * _n + (to - 1)] != 0;
  }

  std::vector<Symbol> AdjacencyMatrix::successors(Symbol s) const {
    check_symbol(s);
    std::vector<Symbol> out;
    for (Symbol t = 1; t <= _n; ++t) {
      if (_bits[(s - 1) * _n + (t - 1)] != 0) {
        out.push_back(t);
      }
    }
    return out;
  }

  std::vector<std::vector<int>> AdjacencyMatrix::rows() const {
    std::vector<std::vector<int>> out(_n, std::vector<int>(_n, 0));
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        out[i][j] = _bits[i * _n + j];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrix file format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string_view> split(std::string_view text, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto const pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
          out.push_back(text.substr(start));
          return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
      }
    }

    [[noreturn]] void malformed(std::string const& why) {
      throw Error(ErrorKind::MalformedInput, "matrix file: " + why);
    }
  }  // namespace

  AdjacencyMatrix parse_matrix(std::string_view text) {
    if (!text.empty() && text.back() == '\n') {
      text.remove_suffix(1);
    }
    auto const lines = split(text, '\n');
    auto const head  = lines.front();
    if (head.empty() || head.size() > 6
        || !std::all_of(head.begin(), head.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      malformed("first line must be a decimal symbol count");
    }
    std::size_t const n = std::stoul(std::string(head));
    if (n == 0) {
      malformed("symbol count must be at least 1");
    }
    if (lines.size() != n + 1) {
      malformed("expected " + std::to_string(n) + " rows, found "
                + std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      auto const tokens = split(lines[i], ' ');
      if (tokens.size() != n) {
        malformed("row " + std::to_string(i) + " does not have "
                  + std::to_string(n) + " single-space-separated entries");
      }
      std::vector<int> row;
      row.reserve(n);
      for (auto tok : tokens) {
        if (tok != "0" && tok != "1") {
          malformed("row " + std::to_string(i) + " has non-bit entry '"
                    + std::string(tok) + "'");
        }
        row.push_back(tok == "1" ? 1 : 0);
      }
      rows.push_back(std::move(row));
    }
    return AdjacencyMatrix(rows);
  }

  std::string format_matrix(AdjacencyMatrix const& A) {
    std::string out = std::to_string(A.size()) + "\n";
    for (auto const& row : A.rows()) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += j == 0 ? "" : " ";
        out += row[j] == 1 ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t UNREACHED = std::numeric_limits<std::size_t>::max();

    // Backward breadth-first distances to `target`, where only symbols
    // other than `avoid` may be passed through. The target itself is
    // always allowed.
    std::vector<std::size_t> distances_to(AdjacencyMatrix const& A,
                                          Symbol                 target,
                                          std::optional<Symbol>  avoid) {
      std::size_t const        n = A.size();
      std::vector<std::size_t> dist(n + 1, UNREACHED);
      std::deque<Symbol>       queue{target};
      dist[target] = 0;
      while (!queue.empty()) {
        Symbol const v = queue.front();
        queue.pop_front();
        for (Symbol u = 1; u <= n; ++u) {
          if (dist[u] == UNREACHED && u != avoid && A.edge(u, v)) {
            dist[u] = dist[v] + 1;
            queue.push_back(u);
          }
        }
      }
      return dist;
    }

    // Greedy descent along `dist`, always taking the smallest admissible
    // successor, gives the lexicographically least shortest word.
    std::optional<Word> walk_impl(AdjacencyMatrix const& A,
                                  Symbol                 from,
                                  Symbol                 to,
                                  std::optional<Symbol>  avoid) {
      auto const dist = distances_to(A, to, avoid);
      // The first step leaves `from` regardless of `avoid`.
      std::size_t best      = UNREACHED;
      Symbol      best_next = 0;
      for (Symbol c : A.successors(from)) {
        if (dist[c] != UNREACHED && dist[c] < best) {
          best      = dist[c];
          best_next = c;
        }
      }
      if (best == UNREACHED) {
        return std::nullopt;
      }
      Word w{from, best_next};
      Symbol cur = best_next;
      while (cur != to) {
        for (Symbol d : A.successors(cur)) {
          if (dist[d] != UNREACHED && dist[d] + 1 == dist[cur]) {
            cur = d;
            break;
          }
        }
        w.push_back(cur);
      }
      return w;
    }
  }  // namespace

  bool is_transitive(AdjacencyMatrix const& A) {
    std::size_t const n = A.size();
    for (Symbol target = 1; target <= n; ++target) {
      auto const dist = distances_to(A, target, std::nullopt);
      for (Symbol s = 1; s <= n; ++s) {
        if (dist[s] == UNREACHED) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_cycle(AdjacencyMatrix const& A) {
    for (Symbol s = 1; s <= A.size(); ++s) {
      if (A.successors(s).size() != 1) {
        return false;
      }
    }
    return true;
  }

  Word find_path(AdjacencyMatrix const& A, Symbol from, Symbol to) {
    if (!A.in_range(from) || !A.in_range(to)) {
      throw Error(ErrorKind::SymbolOutOfRange, "find_path endpoint");
    }
    if (from == to) {
      return Word{from};
    }
    return find_walk(A, from, to);
  }

  Word find_walk(AdjacencyMatrix const& A, Symbol from, Symbol to) {
    if (!A.in_range(from) || !A.in_range(to)) {
      throw Error(ErrorKind::SymbolOutOfRange, "find_walk endpoint");
    }
    auto w = walk_impl(A, from, to, std::nullopt);
    if (!w) {
      throw Error(ErrorKind::NoPath,
                  "no path from " + std::to_string(from) + " to "
                      + std::to_string(to));
    }
    return std::move(*w);
  }

  std::optional<Word> find_walk_avoiding(AdjacencyMatrix const& A,
                                         Symbol                 from,
                                         Symbol                 to,
                                         Symbol                 avoid) {
    if (!A.in_range(from) || !A.in_range(to)) {
      throw Error(ErrorKind::SymbolOutOfRange, "find_walk_avoiding endpoint");
    }
    return walk_impl(A, from, to, avoid);
  }

  std::vector<Symbol> preimage_symbols(AdjacencyMatrix const& A, Symbol s) {
    std::vector<Symbol> out;
    for (Symbol a = 1; a <= A.size(); ++a) {
      if (A.edge(a, s)) {
        out.push_back(a);
      }
    }
    return out;
  }

}  // namespace sft
