#include "sft/verdict.hpp"

#include <json.hpp>

#include "sft/error.hpp"
#include "sft/word.hpp"

namespace sft {

  using json = nlohmann::ordered_json;

  std::string_view to_string(OneSidedStatus s) noexcept {
    return s == OneSidedStatus::simple ? "simple" : "inconclusive";
  }

  std::string_view to_string(TwoSidedStatus s) noexcept {
    return s == TwoSidedStatus::non_simple ? "non_simple" : "inconclusive";
  }

  std::string_view to_string(Conclusion c) noexcept {
    return c == Conclusion::not_isomorphic ? "not_isomorphic" : "inconclusive";
  }

  namespace {
    // Labels name the results the pipeline rests on; "(cited)" marks those
    // taken from the ideal theory of the crossed product rather than
    // certified here.
    std::vector<std::string> const theorem_citations = {
        "Proposition (invariant open sets): V_r is a nontrivial open subset of "
        "the two-sided shift, invariant under the shift and its inverse",
        "Proposition (minimality): the only open sigma_A-invariant subsets of "
        "X_A are the empty set and X_A",
        "Proposition (topological freeness): (X_A, sigma_A) is topologically "
        "free",
        "sigma-extension (cited): the covariance algebra of (X_A, sigma_A) is "
        "the crossed product over the two-sided shift",
        "Ideal correspondence (cited): a nontrivial invariant open set gives a "
        "nontrivial ideal of the crossed product",
        "Simplicity criterion (cited): no nontrivial invariant open set and "
        "topological freeness give a simple crossed product",
        "Theorem: the covariance algebra and the crossed product by the "
        "partial endomorphism are not *-isomorphic",
        "Corollary: no transfer operator L_rho with rho nowhere zero makes "
        "them *-isomorphic, since such weights leave the crossed product "
        "unchanged up to *-isomorphism",
    };

    std::string const hypotheses_citation
        = "Theorem: requires Gr(A) transitive and not a cycle; nothing is "
          "asserted otherwise";

    std::string const minimality_note
        = "minimality is certified for forward sigma_A-invariant open sets, "
          "which covers sets invariant under sigma_A and its inverse";

    std::string const cycle_note
        = "the cycle test checks rows only (one successor per symbol); here "
          "Gr(A) is not a single cycle";

    std::vector<std::string> hypotheses_failed(bool transitive, bool cycle) {
      std::vector<std::string> out;
      if (!transitive) {
        out.emplace_back("transitive");
      }
      if (cycle) {
        out.emplace_back("not_cycle");
      }
      return out;
    }

    std::vector<MinimalityWitness> minimality_spot_checks(
        AdjacencyMatrix const& A) {
      std::vector<Word> cylinders;
      for (std::size_t k = 1; k <= 2; ++k) {
        for (auto& w : enumerate_words(A, k)) {
          cylinders.push_back(std::move(w));
        }
      }
      std::vector<MinimalityWitness> out;
      for (auto const& w : cylinders) {
        for (auto const& z : cylinders) {
          out.push_back(minimality_witness(A, w, z));
        }
      }
      return out;
    }
  }  // namespace

  AnalysisVerdict analyze(AdjacencyMatrix const& A, std::size_t depth_budget) {
    if (depth_budget < 2) {
      throw Error(ErrorKind::MalformedInput, "depth budget must be >= 2");
    }
    AnalysisVerdict v{A};
    v.depth_budget      = depth_budget;
    v.transitive        = is_transitive(A);
    v.cycle             = is_cycle(A);
    v.hypothesis_failed = hypotheses_failed(v.transitive, v.cycle);
    if (v.cycle && !v.transitive) {
      v.notes.push_back(cycle_note);
    }
    if (!v.hypothesis_failed.empty()) {
      v.citations.push_back(hypotheses_citation);
      return v;
    }

    try {
      v.invariant_set = find_nontrivial_invariant(A);
      v.minimality    = minimality_spot_checks(A);
      for (std::size_t j = 1; j <= depth_budget; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          v.freeness.push_back(freeness_certificate(A, i, j));
        }
      }
    } catch (Error const& e) {
      v.invariant_set.reset();
      v.minimality.clear();
      v.freeness.clear();
      v.notes.push_back(std::string("certificate construction failed: ")
                        + e.what());
      v.citations.push_back(hypotheses_citation);
      return v;
    }

    v.one_sided                      = OneSidedStatus::simple;
    v.two_sided                      = TwoSidedStatus::non_simple;
    v.conclusion                     = Conclusion::not_isomorphic;
    v.corollary_no_invertible_weight = true;
    v.citations                      = theorem_citations;
    v.notes.push_back(minimality_note);

    auto const problems = audit(v);
    if (!problems.empty()) {
      v.one_sided                      = OneSidedStatus::inconclusive;
      v.two_sided                      = TwoSidedStatus::inconclusive;
      v.conclusion                     = Conclusion::inconclusive;
      v.corollary_no_invertible_weight = false;
      for (auto const& p : problems) {
        v.notes.push_back("certificate rejected: " + p);
      }
    }
    return v;
  }

  std::vector<std::string> audit(AnalysisVerdict const& v) {
    std::vector<std::string> problems;
    AdjacencyMatrix const&   A = v.matrix;
    if (v.transitive != is_transitive(A)) {
      problems.emplace_back("transitivity flag disagrees with the matrix");
    }
    if (v.cycle != is_cycle(A)) {
      problems.emplace_back("cycle flag disagrees with the matrix");
    }
    if (v.hypothesis_failed != hypotheses_failed(is_transitive(A), is_cycle(A))) {
      problems.emplace_back("failed-hypothesis list disagrees with the matrix");
    }
    bool const claims = v.conclusion == Conclusion::not_isomorphic;
    if (!claims) {
      if (v.one_sided == OneSidedStatus::simple
          || v.two_sided == TwoSidedStatus::non_simple
          || v.corollary_no_invertible_weight) {
        problems.emplace_back("inconclusive verdict asserts a property");
      }
      return problems;
    }
    if (!v.hypothesis_failed.empty()) {
      problems.emplace_back("not_isomorphic claimed outside the hypotheses");
    }
    if (v.one_sided != OneSidedStatus::simple
        || v.two_sided != TwoSidedStatus::non_simple
        || !v.corollary_no_invertible_weight) {
      problems.emplace_back("not_isomorphic without both simplicity findings");
    }
    std::string why;
    if (!v.invariant_set) {
      problems.emplace_back("missing invariant-set certificate");
    } else if (!verify(A, *v.invariant_set, &why)) {
      problems.push_back("invariant-set certificate: " + why);
    }
    if (v.minimality.empty()) {
      problems.emplace_back("missing minimality witnesses");
    }
    for (auto const& m : v.minimality) {
      if (!verify(A, m, &why)) {
        problems.push_back("minimality witness " + format_word(m.w) + " -> "
                           + format_word(m.z) + ": " + why);
      }
    }
    std::size_t expected = 0;
    for (std::size_t j = 1; j <= v.depth_budget; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++expected) {
        if (expected >= v.freeness.size() || v.freeness[expected].i != i
            || v.freeness[expected].j != j) {
          problems.push_back("missing freeness table for i = "
                             + std::to_string(i)
                             + ", j = " + std::to_string(j));
          return problems;
        }
        if (!verify(A, v.freeness[expected], &why)) {
          problems.push_back("freeness table i = " + std::to_string(i)
                             + ", j = " + std::to_string(j) + ": " + why);
        }
      }
    }
    if (expected != v.freeness.size()) {
      problems.emplace_back("unexpected extra freeness tables");
    }
    return problems;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  namespace {
    json word_json(Word const& w) {
      return format_word(w);
    }

    json matrix_json(AdjacencyMatrix const& A) {
      return {{"n", A.size()}, {"rows", A.rows()}};
    }

    json invariant_json(InvariantSetCertificate const& c) {
      return {{"r", word_json(c.r)},
              {"member", format_sequence(c.member)},
              {"non_member", format_sequence(c.non_member)}};
    }

    json minimality_json(MinimalityWitness const& m) {
      return {{"w", word_json(m.w)},
              {"z", word_json(m.z)},
              {"s_prefix", word_json(m.s_prefix)},
              {"t", m.t}};
    }

    json freeness_json(FreenessCertificate const& c) {
      json entries = json::array();
      for (auto const& e : c.entries) {
        entries.push_back(
            {{"word", word_json(e.word)},
             {"forced_point", e.forced_point
                                  ? json(format_sequence(*e.forced_point))
                                  : json(nullptr)},
             {"witness", format_sequence(e.witness)},
             {"difference_at", e.difference_at}});
      }
      return {{"i", c.i}, {"j", c.j}, {"entries", std::move(entries)}};
    }

    template <typename Enum>
    Enum enum_from(json const& j, Enum positive, Enum negative) {
      auto const s = j.get<std::string>();
      if (s == to_string(positive)) {
        return positive;
      }
      if (s == to_string(negative)) {
        return negative;
      }
      throw Error(ErrorKind::MalformedInput, "unknown status '" + s + "'");
    }

    json status_json(std::string_view status,
                     std::vector<std::string> const& evidence) {
      return {{"status", status}, {"evidence", evidence}};
    }
  }  // namespace

  std::string render_report(AnalysisVerdict const& v) {
    bool const claims = v.conclusion == Conclusion::not_isomorphic;
    json       minimality = json::array();
    for (auto const& m : v.minimality) {
      minimality.push_back(minimality_json(m));
    }
    json freeness = json::array();
    for (auto const& f : v.freeness) {
      freeness.push_back(freeness_json(f));
    }
    json doc = {
        {"matrix", matrix_json(v.matrix)},
        {"depth_budget", v.depth_budget},
        {"hypotheses",
         {{"transitive", v.transitive},
          {"cycle", v.cycle},
          {"hypothesis_failed", v.hypothesis_failed}}},
        {"one_sided",
         status_json(to_string(v.one_sided),
                     claims ? std::vector<std::string>{"minimality", "freeness"}
                            : std::vector<std::string>{})},
        {"two_sided",
         status_json(to_string(v.two_sided),
                     claims ? std::vector<std::string>{"invariant_set"}
                            : std::vector<std::string>{})},
        {"conclusion", to_string(v.conclusion)},
        {"corollary_no_invertible_weight", v.corollary_no_invertible_weight},
        {"certificates",
         {{"invariant_set",
           v.invariant_set ? invariant_json(*v.invariant_set) : json(nullptr)},
          {"minimality", std::move(minimality)},
          {"freeness", std::move(freeness)}}},
        {"citations", v.citations},
        {"notes", v.notes},
    };
    return doc.dump(2) + "\n";
  }

  AnalysisVerdict parse_report(std::string_view text) {
    try {
      json const doc = json::parse(text);
      AnalysisVerdict v{
          AdjacencyMatrix(doc.at("matrix").at("rows")
                              .get<std::vector<std::vector<int>>>())};
      if (v.matrix.size() != doc.at("matrix").at("n").get<std::size_t>()) {
        throw Error(ErrorKind::MalformedInput, "matrix size mismatch");
      }
      v.depth_budget = doc.at("depth_budget").get<std::size_t>();
      auto const& hyp = doc.at("hypotheses");
      v.transitive    = hyp.at("transitive").get<bool>();
      v.cycle         = hyp.at("cycle").get<bool>();
      v.hypothesis_failed
          = hyp.at("hypothesis_failed").get<std::vector<std::string>>();
      v.one_sided = enum_from(doc.at("one_sided").at("status"),
                              OneSidedStatus::simple,
                              OneSidedStatus::inconclusive);
      v.two_sided = enum_from(doc.at("two_sided").at("status"),
                              TwoSidedStatus::non_simple,
                              TwoSidedStatus::inconclusive);
      v.conclusion = enum_from(doc.at("conclusion"),
                               Conclusion::not_isomorphic,
                               Conclusion::inconclusive);
      v.corollary_no_invertible_weight
          = doc.at("corollary_no_invertible_weight").get<bool>();

      auto const& certs = doc.at("certificates");
      auto const& inv   = certs.at("invariant_set");
      if (!inv.is_null()) {
        v.invariant_set = InvariantSetCertificate{
            parse_word(inv.at("r").get<std::string>()),
            parse_sequence(inv.at("member").get<std::string>()),
            parse_sequence(inv.at("non_member").get<std::string>())};
      }
      for (auto const& m : certs.at("minimality")) {
        v.minimality.push_back(
            {parse_word(m.at("w").get<std::string>()),
             parse_word(m.at("z").get<std::string>()),
             parse_word(m.at("s_prefix").get<std::string>()),
             m.at("t").get<std::size_t>()});
      }
      for (auto const& f : certs.at("freeness")) {
        FreenessCertificate c{f.at("i").get<std::size_t>(),
                              f.at("j").get<std::size_t>(),
                              {}};
        for (auto const& e : f.at("entries")) {
          std::optional<EventuallyPeriodicSeq> forced;
          if (!e.at("forced_point").is_null()) {
            forced = parse_sequence(e.at("forced_point").get<std::string>());
          }
          c.entries.push_back(
              {parse_word(e.at("word").get<std::string>()),
               std::move(forced),
               parse_sequence(e.at("witness").get<std::string>()),
               e.at("difference_at").get<std::int64_t>()});
        }
        v.freeness.push_back(std::move(c));
      }
      v.citations = doc.at("citations").get<std::vector<std::string>>();
      v.notes     = doc.at("notes").get<std::vector<std::string>>();
      return v;
    } catch (json::exception const& e) {
      throw Error(ErrorKind::MalformedInput,
                  std::string("report: ") + e.what());
    }
  }

}  // namespace sft
