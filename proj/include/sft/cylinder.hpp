// Locally constant functions on X_A and clopen subsets of X_A.
//
// A CylinderFunction of depth k is a table of exact rationals indexed by
// the admissible words of length k; its value at a point x is the entry for
// x_1 ... x_k. Functions of different depths are compared and combined after
// refining to a common depth, so equality here is equality of functions.

#ifndef SFT_CYLINDER_HPP_
#define SFT_CYLINDER_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "sft/graph.hpp"
#include "sft/rational.hpp"
#include "sft/sequence.hpp"
#include "sft/types.hpp"

namespace sft {

  class CylinderFunction {
   public:
    using table_type = std::map<Word, Rational>;

    // `values` must have exactly the keys enumerate_words(A, depth).
    // Throws DepthZero or MalformedInput.
    CylinderFunction(AdjacencyMatrix A, std::size_t depth, table_type values);

    static CylinderFunction constant(AdjacencyMatrix const& A,
                                     Rational const&        c,
                                     std::size_t            depth = 1);
    static CylinderFunction zero(AdjacencyMatrix const& A) {
      return constant(A, 0);
    }
    // 1 on the cylinder [w], 0 elsewhere; depth |w|.
    static CylinderFunction indicator(AdjacencyMatrix const& A, Word const& w);
    static CylinderFunction
    tabulate(AdjacencyMatrix const&                       A,
             std::size_t                                  depth,
             std::function<Rational(Word const&)> const& fn);

    AdjacencyMatrix const& matrix() const noexcept {
      return _matrix;
    }
    std::size_t depth() const noexcept {
      return _depth;
    }
    table_type const& values() const noexcept {
      return _values;
    }

    // Value on the cylinder named by w. w must be admissible with
    // |w| >= depth; longer words are read through their prefix.
    Rational const& operator()(Word const& w) const;

    // Equality as functions on X_A. Throws MatrixMismatch.
    friend bool operator==(CylinderFunction const& f,
                           CylinderFunction const& g);

   private:
    AdjacencyMatrix _matrix;
    std::size_t     _depth;
    table_type      _values;
  };

  // Same function at depth k2 >= f.depth(). Throws ShallowerDepth.
  CylinderFunction refine(CylinderFunction const& f, std::size_t k2);

  // alpha(f) = f o sigma, at depth f.depth() + 1.
  CylinderFunction alpha(CylinderFunction const& f);

  enum class PointwiseOp { add, mul, neg, abs };

  // Unary ops ignore g. Binary ops need g over the same matrix
  // (MatrixMismatch) and work at the common depth.
  CylinderFunction pointwise(PointwiseOp             op,
                             CylinderFunction const& f,
                             CylinderFunction const* g = nullptr);

  CylinderFunction operator+(CylinderFunction const& f,
                             CylinderFunction const& g);
  CylinderFunction operator-(CylinderFunction const& f,
                             CylinderFunction const& g);
  CylinderFunction operator*(CylinderFunction const& f,
                             CylinderFunction const& g);
  CylinderFunction operator-(CylinderFunction const& f);
  CylinderFunction operator*(Rational const& c, CylinderFunction const& f);

  // Value at the point whose forward coordinates are w (TooShort if
  // |w| < depth) or s[0], s[1], ....
  Rational eval(CylinderFunction const& f, Word const& w);
  Rational eval(CylinderFunction const& f, EventuallyPeriodicSeq const& s);

  // A clopen subset of X_A: the union of the listed depth-k cylinders.
  class DomainMask {
   public:
    // Members must be admissible words of length depth.
    DomainMask(AdjacencyMatrix A, std::size_t depth, std::set<Word> members);

    // U = X_A.
    static DomainMask full(AdjacencyMatrix const& A);

    AdjacencyMatrix const& matrix() const noexcept {
      return _matrix;
    }
    std::size_t depth() const noexcept {
      return _depth;
    }
    std::set<Word> const& members() const noexcept {
      return _members;
    }

    // Whether the cylinder [w] (|w| >= depth) lies in U.
    bool contains(Word const& w) const;

    CylinderFunction indicator() const;

    // Equality as subsets of X_A.
    friend bool operator==(DomainMask const& a, DomainMask const& b);

   private:
    AdjacencyMatrix _matrix;
    std::size_t     _depth;
    std::set<Word>  _members;
  };

  DomainMask refine(DomainMask const& U, std::size_t k2);

  // sigma(U) as a mask of depth max(k, 2) - 1: cylinders [w_1 ... w_k] map
  // onto [w_2 ... w_k].
  DomainMask mask_image(DomainMask const& U);

  // Function file: "depth <k>" then one "<word> <p>/<q>" line per admissible
  // depth-k word (every word exactly once).
  CylinderFunction parse_function(AdjacencyMatrix const& A,
                                  std::string_view       text);
  std::string      format_function(CylinderFunction const& f);

  // Mask section: "domain <k>" then one member word per line.
  DomainMask  parse_mask(AdjacencyMatrix const& A, std::string_view text);
  std::string format_mask(DomainMask const& U);

}  // namespace sft

#endif  // SFT_CYLINDER_HPP_
