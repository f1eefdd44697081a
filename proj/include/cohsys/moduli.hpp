#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cohsys/rational.hpp"

namespace cohsys {

// Numeric type of a coherent system: rank n, degree d, number of sections k,
// on a curve of genus g. The root parameter object for everything below.
struct SystemType {
    int n;  // rank, >= 1
    int d;  // degree
    int k;  // section count, >= 0
    int g;  // genus, >= 2

    SystemType(int n, int d, int k, int g);  // throws InvalidType

    // N = d + (n-k)(g-1), the ambient dimension of the Grassmannian fibre
    // Gr(k, N) of the top-chamber moduli space over M(n-k, d).
    long long ambient_dim() const {
        return static_cast<long long>(d) + static_cast<long long>(n - k) * (g - 1);
    }
};

// Expected dimension n^2(g-1) + 1 - k(k - d + n(g-1)). Pure formula; any d.
long long expected_dim(const SystemType& s);

// Largest alpha with alpha-semistable systems, d/(n-k). Requires 0 < k < n.
Rational alpha_upper(const SystemType& s);

// Threshold above which every semistable system is torsion-free:
// max{(d-n)/(n-k), 0}. Requires 0 < k < n.
Rational alpha_torsion_free(const SystemType& s);

// Upper bound for the injectivity threshold:
// max{((k-1)(d-n) - n*eps)/(k(n-k+1)), 0} with eps = min{k-1, g};
// exactly 0 when k = 1. Requires 1 <= k <= n.
Rational alpha_injective_bound(const SystemType& s);

// Non-emptiness of the moduli space at the given alpha: alpha > 0,
// (n-k)alpha < d, k <= n + (d-n)/g and (n,d,k) != (n,n,n), all evaluated
// exactly. Requires n >= 2 and 0 < k <= n.
bool is_nonempty(const SystemType& s, const Rational& alpha);

// A destabilizing numeric pattern: subsystem type (n1,d1,k1), quotient type
// (n2,d2,k2), the wall location alpha where the slopes agree, and the flip
// constants c12/c21 (plus-side / minus-side codimension of the flip locus).
// certified distinguishes walls whose realizability is proved (k = n-2)
// from purely numerical candidates.
struct WallPattern {
    int n1, d1, k1;
    int n2, d2, k2;
    Rational alpha;
    long long c12 = 0;
    long long c21 = 0;
    bool certified = false;
};

// Patterns sharing one wall value.
struct WallGroup {
    Rational alpha;
    std::vector<WallPattern> patterns;  // lexicographic in (n1, d1, k1)
};

// All numeric wall candidates with alpha in the open interval (lo, hi):
// subsystem triples (n1,d1,k1), 0 < n1 < n, 0 <= k1 <= min(k, n1), with a
// complementary quotient 0 <= k2 <= n2 and k1/n1 != k/n, such that the
// slope equation puts alpha strictly between lo and hi. Grouped by alpha,
// ascending. Requires 0 < k < n, d > 0, lo < hi <= d/(n-k).
std::vector<WallGroup> candidate_critical_values(const SystemType& s, const Rational& lo,
                                                 const Rational& hi);

// The flip-certified walls for k = n-2: integer solutions (n1, d1) of
//   2*n1 < n,   max{d + 2*n1 - n, 2*n1*d/n} < 2*d1 < d,
// each completed with k1 = n1-1, k2 = n2-1, alpha = (n*d1 - n1*d)/(n - 2*n1)
// and flip constants. Sorted by alpha ascending, then (n1, d1).
// Requires k = n-2, n >= 3, d > 0.
std::vector<WallPattern> certified_walls(const SystemType& s);

// Flip constants (c12, c21) of a pattern that sums to s:
//   c21 = n1*n2(g-1) - d1*n2 + d2*n1 + k2*d1 - k2*n1(g-1) - k1*k2
// and c12 with the subscripts interchanged.
std::pair<long long, long long> flip_constants(const WallPattern& p, const SystemType& s);

// Codimension bound chains for both sides of a wall in the range
// alpha_T < alpha < d/(n-k), in the labelling with k1/n1 < k/n < k2/n2:
//   plus side:  c12 >= (g-1)(n1-k1)(n2-k2) + d1*n2 - d2*n1 + 1 >= g+1
//   minus side: c21 >= (n1-k1)(n2-k2)(g-1) + 1 >= g
// Patterns labelled the other way round are checked with the roles swapped.
// The chains are asserted for patterns realized by actual extensions; when
// a factor type violates k_i <= n_i + (d_i - n_i)/g no coherent system of
// that type exists, the flip locus is empty, and the bounds hold vacuously
// (e.g. the (n1,d1) = (2,1) wall of (n,d,g) = (7,3,2)).
bool check_codim_bounds(const WallPattern& p, const SystemType& s);

// Dimension bookkeeping attached to a certified wall.
struct FlipLocusData {
    WallPattern pattern;
    long long base_dim;         // expected_dim(sub) + expected_dim(quotient)
    long long fibre_dim_plus;   // c21 - 1
    long long fibre_dim_minus;  // c12 - 1
    long long codim_plus;       // c12
    long long codim_minus;      // c21
};

FlipLocusData flip_locus_data(const WallPattern& p, const SystemType& s);

// Minimum codimension of the strictly-semistable locus in the top-chamber
// moduli space, as a function of the quotient rank n-k. Closed form
// (n-k-1)(g-1); nullopt (no bound, empty minimum) when n-k = 1.
std::optional<long long> codim_semistable_locus(int quotient_rank, int g);

// The same quantity from its definition: the minimum of
// (sum_{i<j} m_i*m_j)(g-1) over all partitions m_1+...+m_r = n-k with
// r >= 2. Independent of the closed form; used as an oracle.
std::optional<long long> codim_semistable_locus_by_partitions(int quotient_rank, int g);

}  // namespace cohsys
