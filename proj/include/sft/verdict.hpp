// The decision pipeline and its JSON report.
//
// For transitive A that is not a cycle, the crossed product over the
// one-sided shift is simple (minimal and topologically free) while the
// covariance algebra, realised over the two-sided shift, has a nontrivial
// ideal (from an invariant open set), so the two are not *-isomorphic; and
// since nowhere-vanishing weights do not change the crossed product, no such
// weight repairs this. analyze() attaches a certificate for each dynamical
// ingredient and reports "inconclusive" whenever the hypotheses fail: there
// is no converse, so "isomorphic" is never reported.

#ifndef SFT_VERDICT_HPP_
#define SFT_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sft/certificates.hpp"
#include "sft/graph.hpp"

namespace sft {

  enum class OneSidedStatus { simple, inconclusive };
  enum class TwoSidedStatus { non_simple, inconclusive };
  enum class Conclusion { not_isomorphic, inconclusive };

  std::string_view to_string(OneSidedStatus s) noexcept;
  std::string_view to_string(TwoSidedStatus s) noexcept;
  std::string_view to_string(Conclusion c) noexcept;

  struct AnalysisVerdict {
    explicit AnalysisVerdict(AdjacencyMatrix m) : matrix(std::move(m)) {}

    AdjacencyMatrix matrix;
    std::size_t     depth_budget = 4;

    bool transitive = false;
    bool cycle      = false;
    // Names of failed hypotheses: "transitive" and/or "not_cycle".
    std::vector<std::string> hypothesis_failed;

    OneSidedStatus one_sided  = OneSidedStatus::inconclusive;
    TwoSidedStatus two_sided  = TwoSidedStatus::inconclusive;
    Conclusion     conclusion = Conclusion::inconclusive;
    bool           corollary_no_invertible_weight = false;

    std::optional<InvariantSetCertificate> invariant_set;
    std::vector<MinimalityWitness>         minimality;
    std::vector<FreenessCertificate>       freeness;

    std::vector<std::string> citations;
    std::vector<std::string> notes;
  };

  inline constexpr std::size_t default_depth_budget = 4;

  // Freeness tables cover 0 <= i < j <= depth_budget; minimality witnesses
  // cover every pair of cylinders of depth <= 2. Certificate failures turn
  // into an inconclusive verdict with a note. Throws MalformedInput if
  // depth_budget < 2.
  AnalysisVerdict analyze(AdjacencyMatrix const& A,
                          std::size_t            depth_budget
                          = default_depth_budget);

  // Re-checks a verdict from its contents alone: the hypotheses against the
  // matrix and, for not_isomorphic, every certificate. Returns the problems
  // found (empty when the verdict stands).
  std::vector<std::string> audit(AnalysisVerdict const& v);

  // JSON document with top-level keys matrix, depth_budget, hypotheses,
  // one_sided, two_sided, conclusion, corollary_no_invertible_weight,
  // certificates, citations, notes. Deterministic.
  std::string     render_report(AnalysisVerdict const& v);
  AnalysisVerdict parse_report(std::string_view text);

}  // namespace sft

#endif  // SFT_VERDICT_HPP_
