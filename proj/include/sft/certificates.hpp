// Checkable certificates for the dynamics of (X_A, sigma_A) and of the
// two-sided shift, for transitive A that is not a cycle:
//
//  * an open set V_r = {x : r occurs in x} of the two-sided shift that is
//    invariant under the shift and its inverse and is neither empty nor
//    everything (a point inside and a point outside);
//  * minimality of the one-sided shift: any cylinder [w] is carried onto
//    any cylinder [z] by a power of sigma_A;
//  * topological freeness: for i < j, V^{i,j} = {x : sigma^i x = sigma^j x}
//    meets every depth-j cylinder in at most one point, and each cylinder
//    has an explicit point outside V^{i,j}.
//
// V^{i,j} is closed, so its closure has empty interior exactly when no
// cylinder lies inside it; at most one point per depth-j cylinder settles
// that at every refinement depth at once.

#ifndef SFT_CERTIFICATES_HPP_
#define SFT_CERTIFICATES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sft/graph.hpp"
#include "sft/sequence.hpp"
#include "sft/types.hpp"

namespace sft {

  struct InvariantSetCertificate {
    Word                  r;
    EventuallyPeriodicSeq member;
    EventuallyPeriodicSeq non_member;
  };

  // r = x_1 ... x_m x_1 for the shortest (then lex least) first-return loop
  // at x_1 = 1 of length m >= 2. The member is (x_1 ... x_m) repeated; the
  // non-member is a periodic point whose loop at x_1 is a different
  // first-return loop, through a symbol missing from the x's if there is one
  // and otherwise leaving the x's along an unused edge.
  // Throws NotTransitive, GraphIsCycle.
  InvariantSetCertificate find_nontrivial_invariant(AdjacencyMatrix const& A);

  // Shift-invariance is checked on the member orbit for |t| <= shift_range.
  bool verify(AdjacencyMatrix const&         A,
              InvariantSetCertificate const& cert,
              std::string*                   reason      = nullptr,
              std::int64_t                   shift_range = 4);

  struct MinimalityWitness {
    Word        w;
    Word        z;
    Word        s_prefix;
    std::size_t t = 0;
  };

  // s_prefix begins with w and sigma^t maps [s_prefix] into [z]: dropping t
  // symbols of s_prefix leaves z. Throws NotTransitive, MalformedInput (w or
  // z empty or inadmissible).
  MinimalityWitness minimality_witness(AdjacencyMatrix const& A,
                                       Word const&            w,
                                       Word const&            z);

  bool verify(AdjacencyMatrix const&   A,
              MinimalityWitness const& witness,
              std::string*             reason = nullptr);

  struct FreenessEntry {
    Word word;
    // The only possible point of V^{i,j} in [word]: the word with its
    // block word[i..j) repeated forever, when that is admissible.
    std::optional<EventuallyPeriodicSeq> forced_point;
    // A point of [word] with sigma^i != sigma^j ...
    EventuallyPeriodicSeq witness;
    // ... first differing at this coordinate.
    std::int64_t difference_at = 0;
  };

  struct FreenessCertificate {
    std::size_t                i = 0;
    std::size_t                j = 0;
    std::vector<FreenessEntry> entries;
  };

  // One entry per admissible word of length j, in lexicographic order.
  // Throws NotTransitive, GraphIsCycle, BadExponents (i >= j).
  FreenessCertificate freeness_certificate(AdjacencyMatrix const& A,
                                           std::size_t            i,
                                           std::size_t            j);

  bool verify(AdjacencyMatrix const&     A,
              FreenessCertificate const& cert,
              std::string*               reason = nullptr);

}  // namespace sft

#endif  // SFT_CERTIFICATES_HPP_
