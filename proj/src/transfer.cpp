#include "sft/transfer.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "sft/error.hpp"
#include "sft/word.hpp"

namespace sft {

  ////////////////////////////////////////////////////////////////////////
  // Weight
  ////////////////////////////////////////////////////////////////////////

  namespace {
    CylinderFunction masked_carrier(CylinderFunction const& carrier,
                                    DomainMask const&       domain) {
      if (!(carrier.matrix() == domain.matrix())) {
        throw Error(ErrorKind::MatrixMismatch,
                    "weight carrier and domain use different matrices");
      }
      std::size_t const k = std::max(carrier.depth(), domain.depth());
      return CylinderFunction::tabulate(
          carrier.matrix(), k, [&](Word const& w) -> Rational {
            if (!domain.contains(w)) {
              return 0;
            }
            if (carrier(w) < 0) {
              throw Error(ErrorKind::NegativeWeight,
                          "weight is negative on [" + format_word(w) + "]");
            }
            return carrier(w);
          });
    }
  }  // namespace

  Weight::Weight(CylinderFunction const& carrier, DomainMask domain)
      : _carrier(masked_carrier(carrier, domain)), _domain(std::move(domain)) {}

  Weight::Weight(CylinderFunction const& carrier)
      : Weight(carrier, DomainMask::full(carrier.matrix())) {}

  Weight Weight::constant(AdjacencyMatrix const& A, Rational const& c) {
    return Weight(CylinderFunction::constant(A, c));
  }

  ////////////////////////////////////////////////////////////////////////
  // L_rho
  ////////////////////////////////////////////////////////////////////////

  CylinderFunction transfer_apply(Weight const& rho, CylinderFunction const& f) {
    AdjacencyMatrix const& A = rho.matrix();
    if (!(A == f.matrix())) {
      throw Error(ErrorKind::MatrixMismatch,
                  "weight and function use different matrices");
    }
    DomainMask const& U = rho.domain();
    for (auto const& w :
         enumerate_words(A, std::max(f.depth(), U.depth()))) {
      if (!U.contains(w) && f(w) != 0) {
        throw Error(ErrorKind::SupportViolation,
                    "function is nonzero on [" + format_word(w)
                        + "], outside the domain");
      }
    }
    std::size_t const k = std::max(rho.carrier().depth(), f.depth());
    std::size_t const d = std::max<std::size_t>(k, 2) - 1;
    return CylinderFunction::tabulate(A, d, [&](Word const& x) {
      Rational sum = 0;
      Word     y;
      y.reserve(x.size() + 1);
      for (Symbol a : preimage_symbols(A, x.front())) {
        y.assign(1, a);
        y.insert(y.end(), x.begin(), x.end());
        if (U.contains(y)) {
          sum += rho.carrier()(y) * f(y);
        }
      }
      return sum;
    });
  }

  bool verify_transfer_identity(Weight const&           rho,
                                CylinderFunction const& f,
                                CylinderFunction const& g) {
    return transfer_apply(rho, f * alpha(g)) == transfer_apply(rho, f) * g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Recovering rho from L
  ////////////////////////////////////////////////////////////////////////

  namespace {
    [[noreturn]] void not_transfer(std::string const& why) {
      throw Error(ErrorKind::NotTransfer, why);
    }

    CylinderFunction query(AbstractTransferOp const& L,
                           CylinderFunction const&   f) {
      auto out = L(f);
      if (!(out.matrix() == f.matrix())) {
        not_transfer("operator output is over a different matrix");
      }
      return out;
    }
  }  // namespace

  Weight recover_weight(AdjacencyMatrix const&    A,
                        AbstractTransferOp const& L,
                        DomainMask const&         U) {
    if (!(A == U.matrix())) {
      throw Error(ErrorKind::MatrixMismatch, "domain uses a different matrix");
    }
    CylinderFunction rho = CylinderFunction::zero(A);
    for (auto const& w : U.members()) {
      auto const xi = CylinderFunction::indicator(A, w);
      rho           = rho + alpha(query(L, xi)) * xi;
    }
    for (auto const& [w, v] : rho.values()) {
      if (v < 0 && U.contains(w)) {
        throw Error(ErrorKind::NegativeWeight,
                    "recovered weight is negative on [" + format_word(w)
                        + "]; the operator is not positive");
      }
    }
    Weight recovered(rho, U);

    std::vector<CylinderFunction> basis;
    for (std::size_t k = U.depth(); k <= U.depth() + 1; ++k) {
      for (auto const& w : enumerate_words(A, k)) {
        if (U.contains(w)) {
          basis.push_back(CylinderFunction::indicator(A, w));
        }
      }
    }
    std::vector<CylinderFunction> images;
    images.reserve(basis.size());
    for (auto const& xi : basis) {
      images.push_back(query(L, xi));
      if (images.back() != transfer_apply(recovered, xi)) {
        not_transfer("operator disagrees with L_rho on a cylinder indicator");
      }
    }
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
      if (query(L, basis[i] + basis[i + 1]) != images[i] + images[i + 1]) {
        not_transfer("operator is not additive on cylinder indicators");
      }
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (Symbol s = 1; s <= A.size(); ++s) {
        auto const g = CylinderFunction::indicator(A, Word{s});
        if (query(L, basis[i] * alpha(g)) != images[i] * g) {
          not_transfer("operator violates L(f alpha(g)) = L(f) g");
        }
      }
    }
    return recovered;
  }

  ////////////////////////////////////////////////////////////////////////
  // Zero sets and equivalence
  ////////////////////////////////////////////////////////////////////////

  std::set<Word> zero_set(Weight const& rho, std::size_t k) {
    auto const     carrier = refine(rho.carrier(), k);
    std::set<Word> out;
    for (auto const& [w, v] : carrier.values()) {
      if (v == 0 && rho.domain().contains(w)) {
        out.insert(w);
      }
    }
    return out;
  }

  std::set<Word> zero_set(Weight const& rho) {
    return zero_set(rho, rho.carrier().depth());
  }

  WeightEquivalence weights_equivalent(Weight const& rho,
                                       Weight const& rho_prime) {
    if (!(rho.matrix() == rho_prime.matrix())) {
      throw Error(ErrorKind::MatrixMismatch,
                  "weights are over different matrices");
    }
    if (!(rho.domain() == rho_prime.domain())) {
      throw Error(ErrorKind::DomainMismatch,
                  "weights have different domains");
    }
    std::size_t const k
        = std::max(rho.carrier().depth(), rho_prime.carrier().depth());
    if (zero_set(rho, k) != zero_set(rho_prime, k)) {
      return {};
    }
    DomainMask const& U     = rho.domain();
    auto              ratio = CylinderFunction::tabulate(
        rho.matrix(), k, [&](Word const& w) -> Rational {
          if (!U.contains(w) || rho_prime.carrier()(w) == 0) {
            return 1;
          }
          return rho.carrier()(w) / rho_prime.carrier()(w);
        });
    assert(rho.carrier() == ratio * rho_prime.carrier());
    return {true, std::move(ratio)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Weight files
  ////////////////////////////////////////////////////////////////////////

  Weight parse_weight(AdjacencyMatrix const& A, std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto const eol  = std::min(text.find('\n', pos), text.size());
      auto const line = text.substr(pos, eol - pos);
      if (line.substr(0, 6) == "domain") {
        return Weight(parse_function(A, text.substr(0, pos)),
                      parse_mask(A, text.substr(pos)));
      }
      pos = eol + 1;
    }
    return Weight(parse_function(A, text));
  }

  std::string format_weight(Weight const& rho) {
    return format_function(rho.carrier()) + format_mask(rho.domain());
  }

}  // namespace sft
