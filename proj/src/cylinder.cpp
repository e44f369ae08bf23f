#include "sft/cylinder.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "sft/error.hpp"
#include "sft/word.hpp"

namespace sft {

  namespace {
    void require_same_matrix(AdjacencyMatrix const& a,
                             AdjacencyMatrix const& b) {
      if (!(a == b)) {
        throw Error(ErrorKind::MatrixMismatch,
                    "operands are defined over different matrices");
      }
    }

    Word prefix(Word const& w, std::size_t k) {
      return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CylinderFunction
  ////////////////////////////////////////////////////////////////////////

  CylinderFunction::CylinderFunction(AdjacencyMatrix A,
                                     std::size_t     depth,
                                     table_type      values)
      : _matrix(std::move(A)), _depth(depth), _values(std::move(values)) {
    auto const words = enumerate_words(_matrix, _depth);
    if (words.size() != _values.size()) {
      throw Error(ErrorKind::MalformedInput,
                  "cylinder function at depth " + std::to_string(_depth)
                      + " needs " + std::to_string(words.size())
                      + " values, got " + std::to_string(_values.size()));
    }
    for (auto const& w : words) {
      if (_values.find(w) == _values.end()) {
        throw Error(ErrorKind::MalformedInput,
                    "no value for cylinder [" + format_word(w) + "]");
      }
    }
  }

  CylinderFunction CylinderFunction::tabulate(
      AdjacencyMatrix const&                       A,
      std::size_t                                  depth,
      std::function<Rational(Word const&)> const& fn) {
    table_type values;
    for (auto& w : enumerate_words(A, depth)) {
      Rational v = fn(w);
      values.emplace(std::move(w), std::move(v));
    }
    return CylinderFunction(A, depth, std::move(values));
  }

  CylinderFunction CylinderFunction::constant(AdjacencyMatrix const& A,
                                              Rational const&        c,
                                              std::size_t            depth) {
    return tabulate(A, depth, [&c](Word const&) { return c; });
  }

  CylinderFunction CylinderFunction::indicator(AdjacencyMatrix const& A,
                                               Word const&            w) {
    if (w.empty()) {
      throw Error(ErrorKind::DepthZero, "indicator of the empty cylinder word");
    }
    if (!is_admissible(A, w)) {
      throw Error(ErrorKind::MalformedInput,
                  "indicator of non-admissible word " + format_word(w));
    }
    return tabulate(A, w.size(), [&w](Word const& v) {
      return Rational(v == w ? 1 : 0);
    });
  }

  Rational const& CylinderFunction::operator()(Word const& w) const {
    if (w.size() < _depth) {
      throw Error(ErrorKind::TooShort,
                  "word " + format_word(w) + " shorter than depth "
                      + std::to_string(_depth));
    }
    auto it = _values.find(prefix(w, _depth));
    if (it == _values.end()) {
      throw Error(ErrorKind::MalformedInput,
                  "word " + format_word(w) + " is not admissible");
    }
    return it->second;
  }

  bool operator==(CylinderFunction const& f, CylinderFunction const& g) {
    require_same_matrix(f._matrix, g._matrix);
    std::size_t const k = std::max(f._depth, g._depth);
    for (auto const& w : enumerate_words(f._matrix, k)) {
      if (f(w) != g(w)) {
        return false;
      }
    }
    return true;
  }

  CylinderFunction refine(CylinderFunction const& f, std::size_t k2) {
    if (k2 < f.depth()) {
      throw Error(ErrorKind::ShallowerDepth,
                  "cannot refine depth " + std::to_string(f.depth())
                      + " to depth " + std::to_string(k2));
    }
    if (k2 == f.depth()) {
      return f;
    }
    return CylinderFunction::tabulate(
        f.matrix(), k2, [&f](Word const& w) { return f(w); });
  }

  CylinderFunction alpha(CylinderFunction const& f) {
    return CylinderFunction::tabulate(
        f.matrix(), f.depth() + 1, [&f](Word const& w) {
          return f(Word(w.begin() + 1, w.end()));
        });
  }

  CylinderFunction pointwise(PointwiseOp             op,
                             CylinderFunction const& f,
                             CylinderFunction const* g) {
    switch (op) {
      case PointwiseOp::neg:
        return CylinderFunction::tabulate(
            f.matrix(), f.depth(), [&f](Word const& w) -> Rational {
              return -f(w);
            });
      case PointwiseOp::abs:
        return CylinderFunction::tabulate(
            f.matrix(), f.depth(), [&f](Word const& w) -> Rational {
              return ::abs(f(w));
            });
      case PointwiseOp::add:
      case PointwiseOp::mul:
        break;
    }
    if (g == nullptr) {
      throw Error(ErrorKind::MalformedInput, "binary op needs two operands");
    }
    require_same_matrix(f.matrix(), g->matrix());
    std::size_t const k = std::max(f.depth(), g->depth());
    if (op == PointwiseOp::add) {
      return CylinderFunction::tabulate(
          f.matrix(), k, [&](Word const& w) -> Rational {
            return f(w) + (*g)(w);
          });
    }
    return CylinderFunction::tabulate(
        f.matrix(), k, [&](Word const& w) -> Rational {
          return f(w) * (*g)(w);
        });
  }

  CylinderFunction operator+(CylinderFunction const& f,
                             CylinderFunction const& g) {
    return pointwise(PointwiseOp::add, f, &g);
  }

  CylinderFunction operator-(CylinderFunction const& f) {
    return pointwise(PointwiseOp::neg, f);
  }

  CylinderFunction operator-(CylinderFunction const& f,
                             CylinderFunction const& g) {
    return f + (-g);
  }

  CylinderFunction operator*(CylinderFunction const& f,
                             CylinderFunction const& g) {
    return pointwise(PointwiseOp::mul, f, &g);
  }

  CylinderFunction operator*(Rational const& c, CylinderFunction const& f) {
    return CylinderFunction::tabulate(
        f.matrix(), f.depth(), [&](Word const& w) -> Rational {
          return c * f(w);
        });
  }

  Rational eval(CylinderFunction const& f, Word const& w) {
    return f(w);
  }

  Rational eval(CylinderFunction const& f, EventuallyPeriodicSeq const& s) {
    return f(s.window(0, f.depth()));
  }

  ////////////////////////////////////////////////////////////////////////
  // DomainMask
  ////////////////////////////////////////////////////////////////////////

  DomainMask::DomainMask(AdjacencyMatrix A,
                         std::size_t     depth,
                         std::set<Word>  members)
      : _matrix(std::move(A)), _depth(depth), _members(std::move(members)) {
    if (_depth == 0) {
      throw Error(ErrorKind::DepthZero, "mask depth must be >= 1");
    }
    for (auto const& w : _members) {
      if (w.size() != _depth || !is_admissible(_matrix, w)) {
        throw Error(ErrorKind::MalformedInput,
                    "mask member '" + format_word(w)
                        + "' is not an admissible word of length "
                        + std::to_string(_depth));
      }
    }
  }

  DomainMask DomainMask::full(AdjacencyMatrix const& A) {
    auto const words = enumerate_words(A, 1);
    return DomainMask(A, 1, std::set<Word>(words.begin(), words.end()));
  }

  bool DomainMask::contains(Word const& w) const {
    if (w.size() < _depth) {
      throw Error(ErrorKind::TooShort,
                  "word " + format_word(w) + " shorter than mask depth");
    }
    return _members.count(prefix(w, _depth)) != 0;
  }

  CylinderFunction DomainMask::indicator() const {
    return CylinderFunction::tabulate(_matrix, _depth, [this](Word const& w) {
      return Rational(contains(w) ? 1 : 0);
    });
  }

  bool operator==(DomainMask const& a, DomainMask const& b) {
    require_same_matrix(a._matrix, b._matrix);
    std::size_t const k = std::max(a._depth, b._depth);
    for (auto const& w : enumerate_words(a._matrix, k)) {
      if (a.contains(w) != b.contains(w)) {
        return false;
      }
    }
    return true;
  }

  DomainMask refine(DomainMask const& U, std::size_t k2) {
    if (k2 < U.depth()) {
      throw Error(ErrorKind::ShallowerDepth, "cannot refine mask to depth "
                                                 + std::to_string(k2));
    }
    std::set<Word> members;
    for (auto& w : enumerate_words(U.matrix(), k2)) {
      if (U.contains(w)) {
        members.insert(std::move(w));
      }
    }
    return DomainMask(U.matrix(), k2, std::move(members));
  }

  DomainMask mask_image(DomainMask const& U) {
    DomainMask const deep = U.depth() >= 2 ? U : refine(U, 2);
    std::set<Word>   image;
    for (auto const& w : deep.members()) {
      image.emplace(w.begin() + 1, w.end());
    }
    return DomainMask(U.matrix(), deep.depth() - 1, std::move(image));
  }

  ////////////////////////////////////////////////////////////////////////
  // File formats
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> content_lines(std::string_view text) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(text)};
      std::string              line;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
          line.pop_back();
        }
        if (line.find_first_not_of(" \t") != std::string::npos) {
          out.push_back(line);
        }
      }
      return out;
    }

    std::size_t parse_header(std::string const& line, std::string_view key) {
      std::istringstream in(line);
      std::string        tag, extra;
      long long          depth = -1;
      if (!(in >> tag >> depth) || tag != key || (in >> extra) || depth < 1) {
        throw Error(ErrorKind::MalformedInput,
                    "expected '" + std::string(key) + " <k>' with k >= 1, got '"
                        + line + "'");
      }
      return static_cast<std::size_t>(depth);
    }
  }  // namespace

  CylinderFunction parse_function(AdjacencyMatrix const& A,
                                  std::string_view       text) {
    auto const lines = content_lines(text);
    if (lines.empty()) {
      throw Error(ErrorKind::MalformedInput, "empty function file");
    }
    std::size_t const            depth = parse_header(lines.front(), "depth");
    CylinderFunction::table_type values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream in(lines[i]);
      std::string        word, value, extra;
      if (!(in >> word >> value) || (in >> extra)) {
        throw Error(ErrorKind::MalformedInput,
                    "expected '<word> <p>/<q>', got '" + lines[i] + "'");
      }
      Word w = parse_word(word);
      if (w.size() != depth || !is_admissible(A, w)) {
        throw Error(ErrorKind::MalformedInput,
                    "'" + word + "' is not an admissible word of length "
                        + std::to_string(depth));
      }
      if (!values.emplace(std::move(w), parse_rational(value)).second) {
        throw Error(ErrorKind::MalformedInput, "duplicate word '" + word + "'");
      }
    }
    return CylinderFunction(A, depth, std::move(values));
  }

  std::string format_function(CylinderFunction const& f) {
    std::string out = "depth " + std::to_string(f.depth()) + "\n";
    for (auto const& [w, v] : f.values()) {
      out += format_word(w) + " " + format_rational(v) + "\n";
    }
    return out;
  }

  DomainMask parse_mask(AdjacencyMatrix const& A, std::string_view text) {
    auto const lines = content_lines(text);
    if (lines.empty()) {
      throw Error(ErrorKind::MalformedInput, "empty domain section");
    }
    std::size_t const depth = parse_header(lines.front(), "domain");
    std::set<Word>    members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      std::istringstream in(lines[i]);
      std::string        word, extra;
      in >> word;
      if (in >> extra) {
        throw Error(ErrorKind::MalformedInput,
                    "expected one word per line, got '" + lines[i] + "'");
      }
      members.insert(parse_word(word));
    }
    return DomainMask(A, depth, std::move(members));
  }

  std::string format_mask(DomainMask const& U) {
    std::string out = "domain " + std::to_string(U.depth()) + "\n";
    for (auto const& w : U.members()) {
      out += format_word(w) + "\n";
    }
    return out;
  }

}  // namespace sft
