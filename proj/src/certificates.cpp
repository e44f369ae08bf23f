#include "sft/certificates.hpp"

#include <algorithm>
#include <set>

#include "sft/error.hpp"
#include "sft/word.hpp"

namespace sft {

  namespace {
    void require_hypotheses(AdjacencyMatrix const& A) {
      if (!is_transitive(A)) {
        throw Error(ErrorKind::NotTransitive, "Gr(A) is not transitive");
      }
      if (is_cycle(A)) {
        throw Error(ErrorKind::GraphIsCycle,
                    "every row of A has exactly one 1");
      }
    }

    Word slice(Word const& w, std::size_t first, std::size_t last) {
      return Word(w.begin() + static_cast<std::ptrdiff_t>(first),
                  w.begin() + static_cast<std::ptrdiff_t>(last));
    }

    // Drops the first symbol.
    Word tail(Word const& w) {
      return slice(w, 1, w.size());
    }

    Word walk_avoiding(AdjacencyMatrix const& A,
                       Symbol                 from,
                       Symbol                 to,
                       Symbol                 avoid) {
      auto w = find_walk_avoiding(A, from, to, avoid);
      if (!w) {
        throw Error(ErrorKind::NoPath,
                    "no walk from " + std::to_string(from) + " to "
                        + std::to_string(to) + " avoiding "
                        + std::to_string(avoid));
      }
      return std::move(*w);
    }

    bool fail(std::string* reason, std::string const& why) {
      if (reason != nullptr) {
        *reason = why;
      }
      return false;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Nontrivial invariant open set V_r
  ////////////////////////////////////////////////////////////////////////

  InvariantSetCertificate find_nontrivial_invariant(AdjacencyMatrix const& A) {
    require_hypotheses(A);
    Symbol const x1 = 1;

    // Loops are stored without their closing x1.
    std::optional<Word> loop;
    for (Symbol c : A.successors(x1)) {
      if (c == x1) {
        continue;
      }
      auto back = find_walk_avoiding(A, c, x1, x1);
      if (!back) {
        continue;
      }
      back->pop_back();
      Word candidate = concat(Word{x1}, *back);
      if (!loop || candidate.size() < loop->size()) {
        loop = std::move(candidate);
      }
    }
    // n >= 2 here, and transitivity gives a loop through 1 and 2.
    Word const& x = loop.value();
    Word        r = concat(x, Word{x1});

    std::set<Symbol> const support(x.begin(), x.end());
    std::optional<Word>    other;
    for (Symbol y0 = 1; y0 <= A.size() && !other; ++y0) {
      if (support.count(y0) == 0) {
        Word l = concat(walk_avoiding(A, x1, y0, x1),
                        tail(walk_avoiding(A, y0, x1, x1)));
        l.pop_back();
        other = std::move(l);
      }
    }
    for (std::size_t q = 0; q < x.size() && !other; ++q) {
      Symbol const next = x[(q + 1) % x.size()];
      for (Symbol t : A.successors(x[q])) {
        if (t == next) {
          continue;
        }
        Word l = slice(x, 0, q + 1);
        if (t != x1) {
          l = concat(l, walk_avoiding(A, t, x1, x1));
          l.pop_back();
        }
        other = std::move(l);
        break;
      }
    }
    return {std::move(r),
            EventuallyPeriodicSeq::periodic(x),
            EventuallyPeriodicSeq::periodic(other.value())};
  }

  bool verify(AdjacencyMatrix const&         A,
              InvariantSetCertificate const& cert,
              std::string*                   reason,
              std::int64_t                   shift_range) {
    if (cert.r.empty() || !is_admissible(A, cert.r)) {
      return fail(reason, "r is not a nonempty admissible word");
    }
    if (!is_admissible(A, cert.member)) {
      return fail(reason, "member is not a point of the two-sided shift");
    }
    if (!is_admissible(A, cert.non_member)) {
      return fail(reason, "non-member is not a point of the two-sided shift");
    }
    for (std::int64_t t = -shift_range; t <= shift_range; ++t) {
      if (!contains_word(shift(cert.member, t), cert.r)) {
        return fail(reason, "r missing from member shifted by "
                                + std::to_string(t));
      }
      if (contains_word(shift(cert.non_member, t), cert.r)) {
        return fail(reason, "r occurs in non-member shifted by "
                                + std::to_string(t));
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimality
  ////////////////////////////////////////////////////////////////////////

  MinimalityWitness minimality_witness(AdjacencyMatrix const& A,
                                       Word const&            w,
                                       Word const&            z) {
    if (w.empty() || z.empty() || !is_admissible(A, w)
        || !is_admissible(A, z)) {
      throw Error(ErrorKind::MalformedInput,
                  "minimality witness needs nonempty admissible words");
    }
    if (!is_transitive(A)) {
      throw Error(ErrorKind::NotTransitive, "Gr(A) is not transitive");
    }
    if (starts_with(z, w)) {
      return {w, z, z, 0};
    }
    Word const link     = find_walk(A, w.back(), z.front());
    Word const interior = slice(link, 1, link.size() - 1);
    Word       s        = concat(concat(w, interior), z);
    return {w, z, std::move(s), w.size() + interior.size()};
  }

  bool verify(AdjacencyMatrix const&   A,
              MinimalityWitness const& witness,
              std::string*             reason) {
    auto const& s = witness.s_prefix;
    if (!is_admissible(A, s)) {
      return fail(reason, "s_prefix is not admissible");
    }
    if (!starts_with(s, witness.w)) {
      return fail(reason, "s_prefix does not start with w");
    }
    if (witness.t > s.size() || slice(s, witness.t, s.size()) != witness.z) {
      return fail(reason, "dropping t symbols of s_prefix does not leave z");
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Topological freeness
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::optional<EventuallyPeriodicSeq> forced_point(AdjacencyMatrix const& A,
                                                      Word const&            w,
                                                      std::size_t            i) {
      if (!A.edge(w.back(), w[i])) {
        return std::nullopt;
      }
      return one_sided_point(A, slice(w, 0, i), slice(w, i, w.size()));
    }

    // A period to follow w with, leaving the forced point of [w] (if any).
    Word escape_period(AdjacencyMatrix const& A, Word const& w, std::size_t i) {
      Word const block = slice(w, i, w.size());
      Symbol const last = w.back();
      if (!A.edge(last, block.front())) {
        return tail(find_walk(A, last, last));
      }
      std::set<Symbol> const support(block.begin(), block.end());
      for (Symbol y0 = 1; y0 <= A.size(); ++y0) {
        if (support.count(y0) == 0) {
          return tail(concat(find_walk(A, last, y0),
                             tail(find_walk(A, y0, last))));
        }
      }
      // Every symbol occurs in the block; leave it along an unused edge.
      for (std::size_t q = 0; q < block.size(); ++q) {
        Symbol const next = block[(q + 1) % block.size()];
        for (Symbol t : A.successors(block[q])) {
          if (t != next) {
            return concat(slice(block, 0, q + 1), find_path(A, t, last));
          }
        }
      }
      throw Error(ErrorKind::GraphIsCycle, "no edge leaves the periodic block");
    }
  }  // namespace

  FreenessCertificate freeness_certificate(AdjacencyMatrix const& A,
                                           std::size_t            i,
                                           std::size_t            j) {
    if (i >= j) {
      throw Error(ErrorKind::BadExponents,
                  "need i < j, got i = " + std::to_string(i)
                      + ", j = " + std::to_string(j));
    }
    require_hypotheses(A);
    FreenessCertificate cert{i, j, {}};
    for (auto& w : enumerate_words(A, j)) {
      auto forced  = forced_point(A, w, i);
      auto witness = one_sided_point(A, w, escape_period(A, w, i));
      auto diff    = first_forward_difference(
          shift(witness, static_cast<std::int64_t>(i)),
          shift(witness, static_cast<std::int64_t>(j)));
      cert.entries.push_back(FreenessEntry{
          std::move(w), std::move(forced), std::move(witness), diff.value()});
    }
    return cert;
  }

  bool verify(AdjacencyMatrix const&     A,
              FreenessCertificate const& cert,
              std::string*               reason) {
    auto const i = static_cast<std::int64_t>(cert.i);
    auto const j = static_cast<std::int64_t>(cert.j);
    if (i >= j) {
      return fail(reason, "exponents not ordered");
    }
    auto const words = enumerate_words(A, cert.j);
    if (words.size() != cert.entries.size()) {
      return fail(reason, "table does not cover every depth-j cylinder");
    }
    for (std::size_t e = 0; e < words.size(); ++e) {
      auto const& entry = cert.entries[e];
      auto const  name  = "[" + format_word(entry.word) + "]: ";
      if (entry.word != words[e]) {
        return fail(reason, name + "entry out of order or unknown");
      }
      if (!is_admissible(A, entry.witness)
          || entry.witness.window(0, cert.j) != entry.word) {
        return fail(reason, name + "witness is not an admissible point of "
                                   "the cylinder");
      }
      auto const diff
          = first_forward_difference(shift(entry.witness, i),
                                     shift(entry.witness, j));
      if (!diff || *diff != entry.difference_at) {
        return fail(reason, name + "witness does not separate sigma^i and "
                                   "sigma^j at the recorded coordinate");
      }
      // Any point of V^{i,j} in [word] repeats word[i..j) forever, so it is
      // determined by the word; recompute it and compare.
      auto const expected = forced_point(A, entry.word, cert.i);
      if (expected.has_value() != entry.forced_point.has_value()) {
        return fail(reason, name + "forced point presence is wrong");
      }
      if (expected) {
        auto const& forced = *entry.forced_point;
        if (!is_admissible(A, forced)
            || first_forward_difference(forced, *expected).has_value()) {
          return fail(reason, name + "forced point is not the periodic "
                                     "continuation of the word");
        }
        if (first_forward_difference(shift(forced, i), shift(forced, j))) {
          return fail(reason, name + "forced point is not in V^{i,j}");
        }
      }
    }
    return true;
  }

}  // namespace sft
