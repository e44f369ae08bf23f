// Shared helpers for the test suites: literals, seeded generators, and
// brute-force oracles that do not go through the library's own algorithms.

#ifndef SFT_TESTS_SUPPORT_HPP_
#define SFT_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sft/cylinder.hpp"
#include "sft/graph.hpp"
#include "sft/sequence.hpp"
#include "sft/transfer.hpp"
#include "sft/word.hpp"

namespace sft::test {

  inline AdjacencyMatrix M(std::vector<std::vector<int>> const& rows) {
    return AdjacencyMatrix(rows);
  }

  inline Word W(std::string const& s) {
    return parse_word(s);
  }

  inline Rational frac(long p, long q = 1) {
    Rational r{mpz_class(p), mpz_class(q)};
    r.canonicalize();
    return r;
  }

  inline AdjacencyMatrix golden() {
    return M({{1, 1}, {1, 0}});
  }

  inline AdjacencyMatrix full2() {
    return M({{1, 1}, {1, 1}});
  }

  // Every n x n 0-1 matrix without a zero row.
  inline std::vector<AdjacencyMatrix> all_matrices(std::size_t n) {
    std::vector<AdjacencyMatrix> out;
    std::size_t const            cells = n * n;
    for (std::size_t bits = 0; bits < (std::size_t(1) << cells); ++bits) {
      std::vector<std::vector<int>> rows(n, std::vector<int>(n));
      bool                          zero_row = false;
      for (std::size_t i = 0; i < n; ++i) {
        int sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
          rows[i][j] = static_cast<int>((bits >> (i * n + j)) & 1U);
          sum += rows[i][j];
        }
        zero_row = zero_row || sum == 0;
      }
      if (!zero_row) {
        out.emplace_back(rows);
      }
    }
    return out;
  }

  // All words of length k over {1..n} with admissible consecutive pairs,
  // found by filtering the full product, in lex order.
  inline std::vector<Word> brute_words(AdjacencyMatrix const& A,
                                       std::size_t            k) {
    std::size_t const n     = A.size();
    std::size_t       total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= n;
    }
    std::vector<Word> out;
    for (std::size_t code = 0; code < total; ++code) {
      Word        w(k);
      std::size_t c = code;
      for (std::size_t pos = k; pos-- > 0;) {
        w[pos] = static_cast<Symbol>(c % n + 1);
        c /= n;
      }
      bool ok = true;
      for (std::size_t p = 1; p < k && ok; ++p) {
        ok = A.rows()[w[p - 1] - 1][w[p] - 1] == 1;
      }
      if (ok) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  // Breadth-first reachability, written independently of the library.
  inline bool brute_reachable(AdjacencyMatrix const& A, Symbol i, Symbol j) {
    auto const       rows = A.rows();
    std::set<Symbol> seen{i};
    std::vector<Symbol> frontier{i};
    while (!frontier.empty()) {
      std::vector<Symbol> next;
      for (Symbol u : frontier) {
        for (Symbol v = 1; v <= A.size(); ++v) {
          if (rows[u - 1][v - 1] == 1 && seen.insert(v).second) {
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen.count(j) != 0;
  }

  class Generator {
   public:
    explicit Generator(unsigned seed) : _rng(seed) {}

    std::size_t uniform(std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(_rng);
    }

    bool coin(double p = 0.5) {
      return std::bernoulli_distribution(p)(_rng);
    }

    AdjacencyMatrix matrix(std::size_t max_n = 4) {
      std::size_t const n = uniform(1, max_n);
      while (true) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        bool                          ok = true;
        for (auto& row : rows) {
          int sum = 0;
          for (auto& x : row) {
            x = coin(0.6) ? 1 : 0;
            sum += x;
          }
          ok = ok && sum > 0;
        }
        if (ok) {
          return AdjacencyMatrix(rows);
        }
      }
    }

    Rational rational(bool nonnegative = false, int max_num = 9) {
      long num = static_cast<long>(uniform(0, max_num));
      if (!nonnegative && coin()) {
        num = -num;
      }
      return frac(num, static_cast<long>(uniform(1, 6)));
    }

    CylinderFunction function(AdjacencyMatrix const& A, std::size_t max_depth = 3,
                              bool nonnegative = false) {
      return CylinderFunction::tabulate(
          A, uniform(1, max_depth),
          [&](Word const&) { return rational(nonnegative); });
    }

    // Nonnegative, with roughly a third of its cylinders zero when
    // with_zeros is set, strictly positive otherwise.
    CylinderFunction weight_carrier(AdjacencyMatrix const& A,
                                    std::size_t max_depth, bool with_zeros) {
      return CylinderFunction::tabulate(
          A, uniform(1, max_depth), [&](Word const&) -> Rational {
            if (with_zeros && coin(0.33)) {
              return 0;
            }
            return frac(static_cast<long>(uniform(1, 9)),
                        static_cast<long>(uniform(1, 6)));
          });
    }

    DomainMask mask(AdjacencyMatrix const& A, std::size_t max_depth = 2) {
      std::size_t const k = uniform(1, max_depth);
      std::set<Word>    members;
      for (auto& w : enumerate_words(A, k)) {
        if (coin(0.6)) {
          members.insert(std::move(w));
        }
      }
      return DomainMask(A, k, std::move(members));
    }

    // f with support inside U.
    CylinderFunction supported_in(DomainMask const& U, std::size_t max_depth = 3) {
      auto const f = function(U.matrix(), max_depth);
      return f * U.indicator();
    }

    std::mt19937& engine() {
      return _rng;
    }

   private:
    std::mt19937 _rng;
  };

}  // namespace sft::test


namespace sft::test {

  // A point prefix . period . period ... of X_A from a random walk that is
  // stopped at its first repeated symbol after `lead` free steps. The left
  // part is filler; only forward coordinates are meaningful.
  inline EventuallyPeriodicSeq random_point(AdjacencyMatrix const& A,
                                            Generator&             gen) {
    Word walk{static_cast<Symbol>(gen.uniform(1, A.size()))};
    std::size_t const lead = gen.uniform(0, 6);
    while (true) {
      auto const succ = A.successors(walk.back());
      walk.push_back(succ[gen.uniform(0, succ.size() - 1)]);
      if (walk.size() <= lead + 1) {
        continue;
      }
      for (std::size_t p = lead; p + 1 < walk.size(); ++p) {
        if (walk[p] == walk.back()) {
          Word prefix(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(p));
          Word period(walk.begin() + static_cast<std::ptrdiff_t>(p), walk.end() - 1);
          return EventuallyPeriodicSeq(period, prefix, period, 0);
        }
      }
    }
  }

  // L_rho(f) on the cylinder [x], from the preimages found by filtering every
  // admissible word one longer than x for those ending in x.
  inline Rational brute_transfer(Weight const& rho, CylinderFunction const& f,
                                 Word const& x) {
    Rational sum = 0;
    for (auto const& y : brute_words(rho.matrix(), x.size() + 1)) {
      if (Word(y.begin() + 1, y.end()) == x && rho.domain().contains(y)) {
        sum += rho.carrier()(y) * f(y);
      }
    }
    return sum;
  }

}  // namespace sft::test

#endif  // SFT_TESTS_SUPPORT_HPP_
