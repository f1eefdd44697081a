#pragma once

#include <vector>

#include "cohsys/intpoly.hpp"
#include "cohsys/moduli.hpp"

namespace cohsys {

// Poincare polynomial of the Grassmannian Gr(k, n_amb): the Gaussian
// binomial in t^2,
//   (1 - t^{2(N-k+1)}) ... (1 - t^{2N}) / (1 - t^2) ... (1 - t^{2k}).
// Degree 2k(N-k). Requires 0 <= k <= n_amb.
IntPoly poincare_grassmannian(int k, int n_amb);

// Poincare polynomial of M(2, d), the moduli space of stable rank-2
// bundles of odd degree d:
//   (1+t)^{2g} ((1+t^3)^{2g} - t^{2g} (1+t)^{2g}) / ((1-t^2)(1-t^4)).
// Independent of d apart from the parity requirement; throws ParityError
// for even d.
IntPoly poincare_rank2_moduli(int d, int g);

// Poincare polynomial of G_L(r, e, r-1) (the top chamber with one section
// fewer than the rank):
//   (1+t)^{2g} (1-t^{2(e+g-r+1)}) ... (1-t^{2(e+g-1)})
//     / ((1-t^2) ... (1-t^{2(r-1)})).
// For r = 1 both products are empty and the result is (1+t)^{2g}.
// Throws OutOfRange when e < max{1, r-g} (the space is empty).
IntPoly poincare_gl_corank1(int r, int e, int g);

// Poincare polynomial of the top-chamber moduli space G_L(n, d, n-2) for
// odd d: poincare_rank2_moduli(d, g) * poincare_grassmannian(n-2, d+2g-2).
// Requires k = n-2; throws ParityError for even d and OutOfRange when the
// non-emptiness conditions fail.
IntPoly poincare_gl(const SystemType& s);

// A chamber request: a type with k = n-2 together with a non-critical
// alpha strictly between alpha_T and d/2.
struct ChamberQuery {
    SystemType s;
    Rational alpha_prime;
};

// The wall-crossing correction relative to the top chamber:
//   sum over certified walls with alpha > alpha_prime of
//   (t^{2 c21} - t^{2 c12})/(1 - t^2) * P_{n1,d1} * P_{n2,d2}.
// Walls whose factor moduli are empty contribute zero. Works for either
// parity of d (the difference formula needs no coprimality).
IntPoly wall_crossing_sum(const SystemType& s, const Rational& alpha_prime);

// Poincare polynomial of G(alpha'; n, d, n-2) in the chamber containing
// alpha': poincare_gl + wall_crossing_sum. Requires n >= 3, k = n-2 and
// odd d. Throws CriticalAlpha when alpha' sits on a wall, OutOfRange when
// it is outside (alpha_T, d/2), and NegativeCoefficient if the computed
// polynomial fails the positivity sanity check.
IntPoly poincare_chamber(const ChamberQuery& q);

// The open alpha-intervals between consecutive walls, covering
// (alpha_T, d/2) from bottom to top. Requires k = n-2, n >= 3, d > 0.
struct ChamberInterval {
    Rational lo;
    Rational hi;
};

std::vector<ChamberInterval> chamber_intervals(const SystemType& s);
Rational chamber_midpoint(const ChamberInterval& c);

// Closed forms transcribed as displayed expressions, on an independent
// code path from the chamber engine; used as oracles against it.
enum class Chamber { low, high };

// n = 3, odd d: the single expression valid in every chamber.
IntPoly closed_form_rank3(int d, int g);

// n = 4, odd d: the high chamber ((d-2)/2, d/2) or, for d >= 3, the low
// chamber (max{(d-4)/2, 0}, (d-2)/2) with its wall-crossing correction.
IntPoly closed_form_rank4(int d, int g, Chamber chamber);

}  // namespace cohsys
