#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocklie/charpoly.hpp"
#include "blocklie/group.hpp"
#include "blocklie/lie.hpp"
#include "blocklie/polynomial.hpp"
#include "blocklie/verma.hpp"

namespace blocklie {

// Reducibility of Verma modules over B(Z).
//
// A vector x^{-1} h(t) v of weight -1 is singular iff the probes L_{1,k} = x t^{k+1}
// kill it: every L_{a,k} with a >= 2 maps weight -1 into weight a-1 > 0, which is
// zero in a Verma module. With g = t^m the probe condition reads
//   Lambda(h' g + h g') = h(0) g(0) c   <=>   sum_j (j+m) h_j Lambda_{j+m-1} = [m == 0] h_0 c,
// which is one row of the same linear system used to detect characteristic
// polynomials. Rows m >= 1 only involve the shadow sequence s_n = n Lambda_{n-1}:
// they say s satisfies the recurrence with polynomial h, which is exactly when the
// generating series Delta(z) = c + sum z^{i+1} Lambda_i / i! is a quasipolynomial.
//
// Every negative verdict below is "within horizon": finite systems cannot refute
// an infinite one. Positive verdicts for recurrent weights built from f are full
// certificates.

/// Labels solving the annihilation condition of f with the given central charge.
HighestWeight labels_from_charpoly(const CharPoly& f, const Rational& central_charge,
                                   std::vector<Rational> initial);

/// Residual of the probe condition for h and g = t^m:
///   sum_j (j+m) h_j Lambda_{j+m-1} - [m == 0] h_0 c.
Rational annihilation_residual(const HighestWeight& weight, const std::vector<Rational>& h, int m);

/// Minimal-degree monic f (deg <= max_degree) whose residuals vanish for m = 0..horizon.
/// Ties within a degree resolve to the reduced-echelon representative.
/// Requires horizon >= 2 max_degree + 2.
std::optional<CharPoly> charpoly_from_labels(const HighestWeight& weight, int max_degree, int horizon);

/// s_n = n Lambda_{n-1} for n = 0..count-1 (s_0 = 0).
std::vector<Rational> shadow_sequence(const HighestWeight& weight, int count);

/// d_0 = c and d_{i+1} = Lambda_i / i! for i < n: n+1 coefficients.
std::vector<Rational> delta_series(const HighestWeight& weight, int n);

struct QuasiVerdict {
  bool found = false;
  /// Monic recurrence polynomial sum_j a_j s_{n+j} = 0 (n = 1..horizon), set iff found.
  std::optional<CharPoly> recurrence;
  int max_order = 0;
  int horizon = 0;
  int order() const { return recurrence ? recurrence->degree() : -1; }
};

/// Whether the shadow sequence satisfies a monic constant-coefficient recurrence of
/// order <= max_order on n = 1..horizon (Hankel kernel, minimal order first).
/// Requires horizon >= 2 max_order + 2.
QuasiVerdict is_quasipolynomial(const HighestWeight& weight, int max_order, int horizon);

struct DeltaReport {
  std::vector<Rational> coefficients;
  QuasiVerdict verdict;
};

DeltaReport delta_report(const HighestWeight& weight, int n, int max_order, int horizon);

struct SingularHorizon {
  int max_t_index = 2;  // I
  int probe_k = 10;     // K
  int probe_b = 3;      // B
};

struct ProbeResidual {
  std::size_t candidate = 0;
  BasisSymbol probe = BasisSymbol::central(GroupKind::Integers);
  ModuleVector residual;
};

struct SingularReport {
  GroupElement weight = GroupElement::zero(GroupKind::Integers);
  SingularHorizon horizon;
  std::vector<PBWMonomial> basis;
  std::vector<BasisSymbol> probes;
  std::vector<ModuleVector> candidates;
  std::vector<ProbeResidual> residuals;
  /// True iff every recorded residual is exactly zero.
  bool residuals_vanish() const;
};

/// Probes L_{b,k} with b = 1..B (multiples of `unit`), k = -1..K.
std::vector<BasisSymbol> probe_generators(const GroupElement& unit, const SingularHorizon& horizon);

/// Nullspace of v -> (act(L_{b,k}, v))_{b,k} on the truncated weight space at mu.
/// On the integers the part catalogue defaults to 1..-mu; otherwise it must be given.
/// Probe weights are multiples of the least positive element (discrete orders) or of
/// the smallest catalogue part (dense orders).
SingularReport singular_candidates(const HighestWeight& weight, const GroupElement& mu, const SingularHorizon& horizon,
                                   const std::vector<GroupElement>& parts = {}, bool parallel = true);

struct SingularVerification {
  bool passed = false;
  /// residual[m] = coefficient of v in L_{1,m-1} applied to the vector, m = 0..max_probe.
  std::vector<Scalar> residuals;
  std::optional<int> first_failure;
  /// The vector is x^{-1} f q v and the weight is recurrent with generating polynomial f:
  /// the probe identity then holds for every g, not just the probed ones.
  bool certified = false;
  /// L_{a,k} v = 0 for a = 2..4, k = -1..max_probe (positive target weight).
  bool higher_weights_vanish = false;
  Polynomial realized;  // h with v = x^{-1} h(t) v_Lambda
};

/// Checks a weight -1 vector against the probes g = t^m, m <= max_probe, by straightening.
/// Throws std::invalid_argument if v is not in the span of the L_{-1,i} v.
SingularVerification verify_singular(const HighestWeight& weight, const ModuleVector& v, const CharPoly& f,
                                     int max_probe = 20);

/// Polynomial h with v = x^{-1} h(t) v_Lambda for v in the span of L_{-1,i} v.
Polynomial weight_minus_one_polynomial(const ModuleVector& v);
ModuleVector weight_minus_one_vector(const Polynomial& h);

/// One factor (epsilon, k) of the product of 2x2 determinants.
struct ChainPart {
  GroupElement weight;
  int index = -1;
};

/// prod_m | j + i_1 + ... + i_{m-1} + 1    i_m + 1 |
///        | x - a_1 - ... - a_{m-1}        -a_m    |
/// over the parts (a_m, i_m) in the given order.
Scalar chain_determinant(const Scalar& x, int j, const std::vector<ChainPart>& parts);
/// The same product as a polynomial in x.
Polynomial chain_determinant_polynomial(int j, const std::vector<ChainPart>& parts);

/// f(x) for u = L_{-e_r,k_r} ... L_{-e_1,k_1} v with parts given as (e_1,k_1), ..., (e_r,k_r),
/// 0 < e_r < ... < e_1. The chain runs e_r first.
Scalar descent_coefficient(const Scalar& x, int j, const std::vector<ChainPart>& parts);

struct DescentCheck {
  GroupElement lambda = GroupElement::zero(GroupKind::DyadicRationals);  // weight of u
  PBWMonomial target;        // L_{-eps, j + k_1 + ... + k_r} v
  Scalar predicted;          // f(-lambda - eps)
  Scalar straightened;       // coefficient of target in L_{-lambda-eps, j} u
  bool passed = false;
};

/// Applies L_{-lambda-eps, j} to u by straightening and compares the coefficient of the
/// one-factor target with the determinant product. Dense instances only; order
/// violations (non-decreasing e's, eps >= e_r) throw std::invalid_argument.
DescentCheck descent_check(const HighestWeight& weight, int j, const std::vector<ChainPart>& parts,
                        const GroupElement& epsilon);

struct ReducibilityHorizons {
  int max_degree = 4;  // D
  int horizon = 14;    // N
  int probe_b = 3;     // B
};

struct ReducibilityReport {
  ReducibilityHorizons horizons;
  std::optional<CharPoly> charpoly;  // P_{-1} != 0 witness
  QuasiVerdict quasi;                // Delta quasipolynomial
  SingularReport singular;           // weight -1 singular vectors, I = D-1, K = N-1
  bool consistent = false;
  bool reducible = false;            // all detectors positive
  std::string verdict;               // rendered summary
  std::vector<std::string> inconsistencies;
};

/// Runs the three detectors with matching horizons and checks that they agree:
/// singular candidates exist iff a charpoly exists (same linear system), and a charpoly
/// f pairs with the recurrence h as f = h or f = t h.
ReducibilityReport reducibility_report(const HighestWeight& weight, const ReducibilityHorizons& horizons);

}  // namespace blocklie
