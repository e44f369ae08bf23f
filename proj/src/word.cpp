#include "sft/word.hpp"

#include <algorithm>

#include "sft/error.hpp"

namespace sft {

  Word parse_word(std::string_view text) {
    Word w;
    if (text.find('.') != std::string_view::npos) {
      std::size_t start = 0;
      while (start <= text.size()) {
        auto const pos = std::min(text.find('.', start), text.size());
        auto const tok = text.substr(start, pos - start);
        if (tok.empty() || tok.size() > 9
            || !std::all_of(tok.begin(), tok.end(), [](char c) {
                 return c >= '0' && c <= '9';
               })) {
          throw Error(ErrorKind::MalformedInput,
                      "bad word literal '" + std::string(text) + "'");
        }
        w.push_back(static_cast<Symbol>(std::stoul(std::string(tok))));
        start = pos + 1;
      }
      return w;
    }
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(ErrorKind::MalformedInput,
                    "bad word literal '" + std::string(text) + "'");
      }
      w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
  }

  std::string format_word(Word const& w) {
    bool const dotted
        = std::any_of(w.begin(), w.end(), [](Symbol s) { return s > 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (dotted && i > 0) {
        out += '.';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  bool is_admissible(AdjacencyMatrix const& A, Word const& w) {
    for (Symbol s : w) {
      if (!A.in_range(s)) {
        throw Error(ErrorKind::SymbolOutOfRange,
                    "symbol " + std::to_string(s) + " in word '"
                        + format_word(w) + "'");
      }
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (!A.edge(w[i - 1], w[i])) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> enumerate_words(AdjacencyMatrix const& A, std::size_t k) {
    if (k == 0) {
      throw Error(ErrorKind::DepthZero, "cylinder depth must be >= 1");
    }
    std::vector<Word> layer;
    for (Symbol s = 1; s <= A.size(); ++s) {
      layer.push_back(Word{s});
    }
    // Extending in lex order keeps the output in lex order.
    for (std::size_t len = 1; len < k; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (Symbol t : A.successors(w.back())) {
          Word ext = w;
          ext.push_back(t);
          next.push_back(std::move(ext));
        }
      }
      layer = std::move(next);
    }
    return layer;
  }

  std::vector<Word> periodic_points(AdjacencyMatrix const& A, std::size_t p) {
    if (p == 0) {
      throw Error(ErrorKind::DepthZero, "period must be >= 1");
    }
    std::vector<Word> out;
    for (auto& w : enumerate_words(A, p)) {
      if (A.edge(w.back(), w.front())) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  bool starts_with(Word const& w, Word const& prefix) {
    return prefix.size() <= w.size()
           && std::equal(prefix.begin(), prefix.end(), w.begin());
  }

}  // namespace sft
