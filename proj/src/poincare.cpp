#include "cohsys/poincare.hpp"

#include <algorithm>
#include <string>

#include "cohsys/errors.hpp"

namespace cohsys {

namespace {

IntPoly one_minus_t2_range(int from, int to) {
    // prod_{i=from}^{to} (1 - t^{2i}); empty when from > to.
    IntPoly acc(1);
    for (int i = from; i <= to; ++i) acc = acc * IntPoly::one_minus_t_pow(2 * i);
    return acc;
}

void require_k_n_minus_2(const SystemType& s, const char* what) {
    if (s.k != s.n - 2) throw InvalidType(std::string(what) + " requires k = n-2");
}

// k <= n + (d-n)/g with denominators cleared.
bool within_section_bound(const SystemType& s) {
    return static_cast<long long>(s.k) * s.g <= static_cast<long long>(s.n) * s.g + s.d - s.n;
}

bool gl_corank1_nonempty(int r, int e, int g) { return e >= std::max(1, r - g); }

}  // namespace

IntPoly poincare_grassmannian(int k, int n_amb) {
    if (k < 0 || k > n_amb) throw InvalidParams("Grassmannian needs 0 <= k <= N");
    const IntPoly num = one_minus_t2_range(n_amb - k + 1, n_amb);
    const IntPoly den = one_minus_t2_range(1, k);
    return poly_div_exact(num, den);
}

IntPoly poincare_rank2_moduli(int d, int g) {
    if (d % 2 == 0) throw ParityError("rank-2 moduli formula needs odd degree");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    const unsigned g2 = static_cast<unsigned>(2 * g);
    const IntPoly a = IntPoly::one_plus_t_pow(1).pow(g2);           // (1+t)^{2g}
    const IntPoly b = IntPoly::one_plus_t_pow(3).pow(g2);           // (1+t^3)^{2g}
    const IntPoly num = a * (b - IntPoly::monomial(BigInt(1), 2 * g) * a);
    const IntPoly den = IntPoly::one_minus_t_pow(2) * IntPoly::one_minus_t_pow(4);
    return poly_div_exact(num, den);
}

IntPoly poincare_gl_corank1(int r, int e, int g) {
    if (r < 1) throw InvalidParams("rank must be >= 1");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    if (!gl_corank1_nonempty(r, e, g)) {
        throw OutOfRange("G_L(r, e, r-1) is empty: e < max{1, r-g}");
    }
    const IntPoly num = IntPoly::one_plus_t_pow(1).pow(static_cast<unsigned>(2 * g)) *
                        one_minus_t2_range(e + g - r + 1, e + g - 1);
    const IntPoly den = one_minus_t2_range(1, r - 1);
    return poly_div_exact(num, den);
}

IntPoly poincare_gl(const SystemType& s) {
    require_k_n_minus_2(s, "poincare_gl");
    if (s.d % 2 == 0) throw ParityError("poincare_gl needs odd degree");
    if (s.d <= 0 || !within_section_bound(s)) {
        throw OutOfRange("G_L(n, d, n-2) is empty for these parameters");
    }
    return poincare_rank2_moduli(s.d, s.g) * poincare_grassmannian(s.n - 2, s.d + 2 * s.g - 2);
}

IntPoly wall_crossing_sum(const SystemType& s, const Rational& alpha_prime) {
    require_k_n_minus_2(s, "wall_crossing_sum");
    IntPoly acc;
    if (s.n < 3) return acc;  // k = 0: no destabilizing pattern exists
    for (const WallPattern& w : certified_walls(s)) {
        if (!(w.alpha > alpha_prime)) continue;
        // A wall whose factor moduli are empty has an empty flip locus and
        // contributes nothing.
        if (!gl_corank1_nonempty(w.n1, w.d1, s.g)) continue;
        if (!gl_corank1_nonempty(w.n2, w.d2, s.g)) continue;
        if (w.c12 < 1 || w.c21 < 1) {
            throw NegativeCoefficient("flip constant below 1; violated hypothesis");
        }
        const IntPoly num = IntPoly::monomial(BigInt(1), 2 * static_cast<int>(w.c21)) -
                            IntPoly::monomial(BigInt(1), 2 * static_cast<int>(w.c12));
        const IntPoly kernel = poly_div_exact(num, IntPoly::one_minus_t_pow(2));
        acc += kernel * poincare_gl_corank1(w.n1, w.d1, s.g) *
               poincare_gl_corank1(w.n2, w.d2, s.g);
    }
    return acc;
}

IntPoly poincare_chamber(const ChamberQuery& q) {
    const SystemType& s = q.s;
    require_k_n_minus_2(s, "poincare_chamber");
    if (s.n < 3) throw InvalidType("poincare_chamber requires n >= 3");
    if (s.d % 2 == 0) throw ParityError("poincare_chamber needs odd degree");
    if (s.d <= 0 || !within_section_bound(s)) {
        throw OutOfRange("moduli spaces are empty for these parameters");
    }
    const Rational lo = alpha_torsion_free(s);
    const Rational hi = Rational(s.d, 2);
    if (!(q.alpha_prime > lo && q.alpha_prime < hi)) {
        throw OutOfRange("alpha' must lie strictly between alpha_T and d/2");
    }
    for (const WallPattern& w : certified_walls(s)) {
        if (w.alpha == q.alpha_prime) {
            throw CriticalAlpha("alpha' = " + w.alpha.to_string() + " is a critical value");
        }
    }
    IntPoly p = poincare_gl(s) + wall_crossing_sum(s, q.alpha_prime);
    for (const BigInt& c : p.coeffs()) {
        if (c.sign() < 0) {
            throw NegativeCoefficient("chamber polynomial has a negative coefficient");
        }
    }
    return p;
}

std::vector<ChamberInterval> chamber_intervals(const SystemType& s) {
    require_k_n_minus_2(s, "chamber_intervals");
    if (s.n < 3) throw InvalidType("chamber_intervals requires n >= 3");
    if (s.d <= 0) throw InvalidType("chamber_intervals requires d > 0");
    std::vector<Rational> cuts;
    cuts.push_back(alpha_torsion_free(s));
    for (const WallPattern& w : certified_walls(s)) {
        if (cuts.back() != w.alpha) cuts.push_back(w.alpha);  // walls arrive sorted
    }
    cuts.push_back(Rational(s.d, 2));
    std::vector<ChamberInterval> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) out.push_back({cuts[i], cuts[i + 1]});
    return out;
}

Rational chamber_midpoint(const ChamberInterval& c) { return (c.lo + c.hi) / Rational(2); }

IntPoly closed_form_rank3(int d, int g) {
    if (d % 2 == 0) throw ParityError("closed form needs odd degree");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    const unsigned g2 = static_cast<unsigned>(2 * g);
    const IntPoly opt = IntPoly::one_plus_t_pow(1);
    const IntPoly num = opt.pow(g2) *
                        (IntPoly::one_plus_t_pow(3).pow(g2) -
                         IntPoly::monomial(BigInt(1), 2 * g) * opt.pow(g2)) *
                        IntPoly::one_minus_t_pow(2 * (d + 2 * g - 2));
    const IntPoly den = IntPoly::one_minus_t_pow(2).pow(2) * IntPoly::one_minus_t_pow(4);
    return poly_div_exact(num, den);
}

IntPoly closed_form_rank4(int d, int g, Chamber chamber) {
    if (d % 2 == 0) throw ParityError("closed form needs odd degree");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    const unsigned g2 = static_cast<unsigned>(2 * g);
    const IntPoly opt = IntPoly::one_plus_t_pow(1);
    const IntPoly base_num = opt.pow(g2) *
                             (IntPoly::one_plus_t_pow(3).pow(g2) -
                              IntPoly::monomial(BigInt(1), 2 * g) * opt.pow(g2)) *
                             IntPoly::one_minus_t_pow(2 * (d + 2 * g - 3)) *
                             IntPoly::one_minus_t_pow(2 * (d + 2 * g - 2));
    const IntPoly base_den =
        IntPoly::one_minus_t_pow(2).pow(2) * IntPoly::one_minus_t_pow(4).pow(2);
    IntPoly result = poly_div_exact(base_num, base_den);
    if (chamber == Chamber::high) return result;

    if (d < 3) throw OutOfRange("no low chamber for d < 3");
    const IntPoly corr_num = (IntPoly::monomial(BigInt(1), 2 * g) -
                              IntPoly::monomial(BigInt(1), 6 * g + 2 * d - 10)) *
                             IntPoly::one_minus_t_pow(d - 3 + 2 * g) *
                             IntPoly::one_minus_t_pow(d - 1 + 2 * g) *
                             opt.pow(static_cast<unsigned>(4 * g));
    const IntPoly corr_den = IntPoly::one_minus_t_pow(2).pow(2) * IntPoly::one_minus_t_pow(4);
    return result + poly_div_exact(corr_num, corr_den);
}

}  // namespace cohsys
