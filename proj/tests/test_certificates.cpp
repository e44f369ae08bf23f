#include <doctest.h>

#include <map>

#include "sft/certificates.hpp"
#include "sft/error.hpp"
#include "support.hpp"

using namespace sft;
using namespace sft::test;

namespace {
  template <typename Fn>
  ErrorKind error_of(Fn&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::MalformedInput;
  }

  bool hypotheses_hold(AdjacencyMatrix const& A) {
    return is_transitive(A) && !is_cycle(A);
  }

  // Occurrence test by scanning far beyond the library's window.
  bool occurs_wide(EventuallyPeriodicSeq const& s, Word const& r) {
    for (std::int64_t start = -80; start <= 80; ++start) {
      if (s.window(start, r.size()) == r) {
        return true;
      }
    }
    return false;
  }

  std::vector<AdjacencyMatrix> hypothesis_matrices(std::size_t max_n) {
    std::vector<AdjacencyMatrix> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto& A : all_matrices(n)) {
        if (hypotheses_hold(A)) {
          out.push_back(std::move(A));
        }
      }
    }
    return out;
  }
}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("invariant set for the golden mean shift") {
    auto const A    = golden();
    auto const cert = find_nontrivial_invariant(A);
    CHECK(cert.r == W("121"));
    CHECK(cert.member == EventuallyPeriodicSeq::periodic(W("12")));
    CHECK(cert.non_member == EventuallyPeriodicSeq::periodic(W("1")));
    std::string why;
    CHECK_MESSAGE(verify(A, cert, &why), why);
  }

  TEST_CASE("invariant set for the full 2-shift") {
    auto const A    = full2();
    auto const cert = find_nontrivial_invariant(A);
    CHECK(cert.r == W("121"));
    CHECK(cert.member == EventuallyPeriodicSeq::periodic(W("12")));
    // Every symbol occurs in the loop 12, so the non-member leaves it along
    // the self-loop at 1.
    CHECK(cert.non_member == EventuallyPeriodicSeq::periodic(W("1")));
    CHECK(verify(A, cert));
  }

  TEST_CASE("invariant set through a symbol outside the loop") {
    auto const A    = M({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    auto const cert = find_nontrivial_invariant(A);
    CHECK(cert.r == W("121"));
    CHECK(cert.non_member == EventuallyPeriodicSeq::periodic(W("13")));
    CHECK(verify(A, cert));
  }

  TEST_CASE("invariant set hypotheses") {
    CHECK(error_of([] { find_nontrivial_invariant(M({{0, 1}, {1, 0}})); })
          == ErrorKind::GraphIsCycle);
    CHECK(error_of([] { find_nontrivial_invariant(M({{1, 1}, {0, 1}})); })
          == ErrorKind::NotTransitive);
  }

  TEST_CASE("verify rejects broken invariant certificates") {
    auto const A    = golden();
    auto       cert = find_nontrivial_invariant(A);
    auto       swapped = cert;
    std::swap(swapped.member, swapped.non_member);
    CHECK_FALSE(verify(A, swapped));
    auto bad_point       = cert;
    bad_point.non_member = EventuallyPeriodicSeq::periodic(W("2"));
    CHECK_FALSE(verify(A, bad_point));
    auto bad_r = cert;
    bad_r.r    = W("22");
    CHECK_FALSE(verify(A, bad_r));
  }

  TEST_CASE("invariant certificates for every hypothesis matrix, n <= 3") {
    for (auto const& A : hypothesis_matrices(3)) {
      auto const cert = find_nontrivial_invariant(A);
      std::string why;
      CHECK_MESSAGE(verify(A, cert, &why), why);
      CHECK(cert.r.front() == 1);
      CHECK(cert.r.back() == 1);
      CHECK(occurs_wide(cert.member, cert.r));
      CHECK_FALSE(occurs_wide(cert.non_member, cert.r));
      for (std::int64_t t = -4; t <= 4; ++t) {
        CHECK(contains_word(shift(cert.member, t), cert.r));
      }
    }
  }

  TEST_CASE("invariant certificates on random 4-symbol matrices") {
    Generator gen(53);
    int       tested = 0;
    while (tested < 300) {
      auto const A = gen.matrix(4);
      if (A.size() < 4 || !hypotheses_hold(A)) {
        continue;
      }
      ++tested;
      auto const cert = find_nontrivial_invariant(A);
      CHECK(verify(A, cert));
      CHECK_FALSE(occurs_wide(cert.non_member, cert.r));
    }
  }

  TEST_CASE("minimality_witness examples") {
    auto const A = golden();
    auto const m = minimality_witness(A, W("21"), W("12"));
    CHECK(m.s_prefix == W("2112"));
    CHECK(m.t == 2);
    CHECK(verify(A, m));
    auto const same = minimality_witness(A, W("121"), W("121"));
    CHECK(same.s_prefix == W("121"));
    CHECK(same.t == 0);
    CHECK(error_of([] { minimality_witness(M({{1, 0}, {0, 1}}), W("1"), W("2")); })
          == ErrorKind::NotTransitive);
    CHECK(error_of([&] { minimality_witness(A, W("22"), W("1")); })
          == ErrorKind::MalformedInput);
    CHECK(error_of([&] { minimality_witness(A, W(""), W("1")); })
          == ErrorKind::MalformedInput);
  }

  TEST_CASE("minimality witnesses carry points of [w] into [z]") {
    Generator gen(59);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& A : all_matrices(n)) {
        if (!is_transitive(A)) {
          continue;
        }
        std::vector<Word> cylinders;
        for (std::size_t k = 1; k <= 3; ++k) {
          for (auto& w : enumerate_words(A, k)) {
            cylinders.push_back(std::move(w));
          }
        }
        for (auto const& w : cylinders) {
          for (auto const& z : cylinders) {
            auto const m = minimality_witness(A, w, z);
            CHECK(verify(A, m));
            // Independent check on an actual point of [s_prefix].
            auto const tail  = find_walk(A, m.s_prefix.back(), m.s_prefix.back());
            auto const point = one_sided_point(
                A, m.s_prefix, Word(tail.begin() + 1, tail.end()));
            CHECK(point.window(0, w.size()) == w);
            CHECK(shift(point, static_cast<std::int64_t>(m.t)).window(0, z.size()) == z);
          }
        }
      }
    }
  }

  TEST_CASE("minimality witnesses at depth 4 over random transitive matrices") {
    Generator gen(61);
    int       tested = 0;
    while (tested < 5) {
      auto const A = gen.matrix(4);
      if (!is_transitive(A)) {
        continue;
      }
      ++tested;
      auto const words = enumerate_words(A, 4);
      for (int p = 0; p < 300; ++p) {
        auto const& w = words[gen.uniform(0, words.size() - 1)];
        auto const& z = words[gen.uniform(0, words.size() - 1)];
        CHECK(verify(A, minimality_witness(A, w, z)));
      }
    }
  }

  TEST_CASE("freeness certificate for the golden mean shift") {
    auto const A    = golden();
    auto const cert = freeness_certificate(A, 1, 2);
    REQUIRE(cert.entries.size() == 3);
    auto const& e = cert.entries[0];
    CHECK(e.word == W("11"));
    REQUIRE(e.forced_point);
    CHECK(e.forced_point->window(0, 8) == W("11111111"));
    CHECK(e.witness.window(0, 8) == W("11212121"));
    CHECK(e.difference_at == 0);
    CHECK_FALSE(cert.entries[1].forced_point);  // [12]: 2 cannot repeat
    CHECK(cert.entries[2].forced_point);        // [21]: 2 1 1 1 ...
    std::string why;
    CHECK_MESSAGE(verify(A, cert, &why), why);
  }

  TEST_CASE("freeness certificate errors") {
    auto const A = golden();
    CHECK(error_of([&] { freeness_certificate(A, 2, 2); }) == ErrorKind::BadExponents);
    CHECK(error_of([&] { freeness_certificate(A, 3, 1); }) == ErrorKind::BadExponents);
    CHECK(error_of([] { freeness_certificate(M({{0, 1}, {1, 0}}), 0, 1); })
          == ErrorKind::GraphIsCycle);
    CHECK(error_of([] { freeness_certificate(M({{1, 0}, {1, 1}}), 0, 1); })
          == ErrorKind::NotTransitive);
  }

  TEST_CASE("verify rejects broken freeness certificates") {
    auto const A    = golden();
    auto const cert = freeness_certificate(A, 1, 3);
    auto       a    = cert;
    a.entries.pop_back();
    CHECK_FALSE(verify(A, a));
    auto b = cert;
    b.entries[0].witness = *b.entries[0].forced_point;
    CHECK_FALSE(verify(A, b));
    auto c = cert;
    c.entries[0].forced_point.reset();
    CHECK_FALSE(verify(A, c));
    auto d = cert;
    d.entries[0].difference_at += 1;
    CHECK_FALSE(verify(A, d));
  }

  TEST_CASE("freeness: forced points are exactly V^{i,j}, n <= 3, j <= 4") {
    for (auto const& A : hypothesis_matrices(3)) {
      for (std::size_t j = 1; j <= 4; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          auto const cert = freeness_certificate(A, i, j);
          std::string why;
          CHECK_MESSAGE(verify(A, cert, &why), why);
          // Oracle: admissible words u of length j + k with u[p] = u[p + k]
          // for p >= i are exactly the points of V^{i,j}; each cylinder of
          // depth j holds at most one.
          std::size_t const k = j - i;
          std::map<Word, int> hits;
          for (auto const& u : brute_words(A, j + k)) {
            bool periodic = true;
            for (std::size_t p = i; p < j && periodic; ++p) {
              periodic = u[p] == u[p + k];
            }
            if (periodic) {
              ++hits[Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j))];
            }
          }
          for (auto const& e : cert.entries) {
            int const count = hits.count(e.word) ? hits[e.word] : 0;
            CHECK(count <= 1);
            CHECK(e.forced_point.has_value() == (count == 1));
            CHECK(e.witness.window(0, j) == e.word);
            CHECK(shift(e.witness, static_cast<std::int64_t>(i))
                      .window(0, static_cast<std::size_t>(e.difference_at) + 1)
                  != shift(e.witness, static_cast<std::int64_t>(j))
                         .window(0, static_cast<std::size_t>(e.difference_at) + 1));
          }
        }
      }
    }
  }

  TEST_CASE("freeness on random 4-symbol matrices") {
    Generator gen(67);
    int       tested = 0;
    while (tested < 40) {
      auto const A = gen.matrix(4);
      if (A.size() < 4 || !hypotheses_hold(A)) {
        continue;
      }
      ++tested;
      for (std::size_t j = 1; j <= 4; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          CHECK(verify(A, freeness_certificate(A, i, j)));
        }
      }
    }
  }
}
