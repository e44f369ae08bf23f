// Transfer operators for alpha(f) = f o sigma on X_A.
//
// For a weight rho >= 0 on the clopen set U,
//
//   L_rho(f)(x) = sum over y in U with sigma(y) = x of rho(y) f(y),
//
// and L_rho(f)(x) = 0 when x is not in sigma(U). On X_A the preimages of x
// are the points a.x with A(a, x_1) = 1, so everything reduces to finite
// sums over cylinder tables and is computed exactly.

#ifndef SFT_TRANSFER_HPP_
#define SFT_TRANSFER_HPP_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "sft/cylinder.hpp"
#include "sft/graph.hpp"

namespace sft {

  // A nonnegative locally constant weight on the domain U. The carrier is
  // kept at depth >= domain depth and is zero off U.
  class Weight {
   public:
    // Throws NegativeWeight if carrier is negative somewhere on U,
    // MatrixMismatch if carrier and domain disagree on A.
    Weight(CylinderFunction const& carrier, DomainMask domain);

    // rho on U = X_A.
    explicit Weight(CylinderFunction const& carrier);

    static Weight constant(AdjacencyMatrix const& A, Rational const& c);

    CylinderFunction const& carrier() const noexcept {
      return _carrier;
    }
    DomainMask const& domain() const noexcept {
      return _domain;
    }
    AdjacencyMatrix const& matrix() const noexcept {
      return _carrier.matrix();
    }

   private:
    CylinderFunction _carrier;
    DomainMask       _domain;
  };

  // L_rho(f), exactly, at depth max(rho depth, f depth) - 1 (at least 1).
  // Throws SupportViolation if f is nonzero on a cylinder outside U.
  CylinderFunction transfer_apply(Weight const& rho, CylinderFunction const& f);

  // L_rho(f . alpha(g)) == L_rho(f) . g.
  bool verify_transfer_identity(Weight const&           rho,
                                CylinderFunction const& f,
                                CylinderFunction const& g);

  // Any linear map from functions supported in U to functions on X_A. It is
  // only ever queried; it must be safe to call repeatedly.
  using AbstractTransferOp
      = std::function<CylinderFunction(CylinderFunction const&)>;

  // Reconstructs rho with L = L_rho as
  //
  //   rho = sum_w alpha(L(xi_w)) xi_w,
  //
  // where xi_w ranges over the indicators of the cylinders making up U. The
  // indicators form a partition of unity by idempotents, so xi_w is its own
  // square root, and sigma is injective on each of them.
  //
  // The result is checked against L on every cylinder indicator in U at
  // depths d and d + 1 (d = U.depth()), and L is probed for additivity and
  // the transfer identity on that basis. Throws NotTransfer on any
  // disagreement, NegativeWeight if the reconstructed weight is negative.
  Weight recover_weight(AdjacencyMatrix const&    A,
                        AbstractTransferOp const& L,
                        DomainMask const&         U);

  // Words of the carrier's depth inside U on which rho vanishes.
  std::set<Word> zero_set(Weight const& rho);

  // Same as zero_set, with the words refined to depth k >= carrier depth.
  std::set<Word> zero_set(Weight const& rho, std::size_t k);

  struct WeightEquivalence {
    bool equivalent = false;
    // When equivalent: r > 0 everywhere with rho == r * rho_prime on U.
    std::optional<CylinderFunction> ratio;
  };

  // rho and rho_prime differ by a nowhere-vanishing continuous factor on U.
  // For locally constant weights this holds exactly when the zero sets
  // agree: the quotient on the nonzero cylinders takes finitely many
  // positive values, and r is set to 1 on the common zeros.
  // Throws MatrixMismatch, DomainMismatch.
  WeightEquivalence weights_equivalent(Weight const& rho,
                                       Weight const& rho_prime);

  // Weight file: a function table followed by an optional domain section
  // (see parse_mask). Without one the domain is all of X_A.
  Weight      parse_weight(AdjacencyMatrix const& A, std::string_view text);
  std::string format_weight(Weight const& rho);

}  // namespace sft

#endif  // SFT_TRANSFER_HPP_
