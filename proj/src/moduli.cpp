#include "cohsys/moduli.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "cohsys/errors.hpp"

namespace cohsys {

namespace {

long long ll(int v) { return static_cast<long long>(v); }

void require_wall_domain(const SystemType& s) {
    if (!(s.k > 0 && s.k < s.n)) {
        throw InvalidType("wall enumeration requires 0 < k < n");
    }
    if (s.d <= 0) {
        throw InvalidType("wall enumeration requires d > 0");
    }
}

}  // namespace

SystemType::SystemType(int n_, int d_, int k_, int g_) : n(n_), d(d_), k(k_), g(g_) {
    if (n < 1) throw InvalidType("rank must be >= 1");
    if (k < 0) throw InvalidType("section count must be >= 0");
    if (g < 2) throw InvalidType("genus must be >= 2");
}

long long expected_dim(const SystemType& s) {
    const long long n = ll(s.n), d = ll(s.d), k = ll(s.k), g = ll(s.g);
    return n * n * (g - 1) + 1 - k * (k - d + n * (g - 1));
}

Rational alpha_upper(const SystemType& s) {
    if (!(s.k > 0 && s.k < s.n)) throw InvalidType("alpha_upper requires 0 < k < n");
    return Rational(s.d, s.n - s.k);
}

Rational alpha_torsion_free(const SystemType& s) {
    if (!(s.k > 0 && s.k < s.n)) throw InvalidType("alpha_T requires 0 < k < n");
    return std::max(Rational(s.d - s.n, s.n - s.k), Rational(0));
}

Rational alpha_injective_bound(const SystemType& s) {
    if (!(s.k >= 1 && s.k <= s.n)) throw InvalidType("alpha_I bound requires 1 <= k <= n");
    if (s.k == 1) return Rational(0);
    const long long eps = std::min(ll(s.k) - 1, ll(s.g));
    const long long num = (ll(s.k) - 1) * (ll(s.d) - s.n) - ll(s.n) * eps;
    const long long den = ll(s.k) * (ll(s.n) - s.k + 1);
    return std::max(Rational(num, den), Rational(0));
}

bool is_nonempty(const SystemType& s, const Rational& alpha) {
    if (s.n < 2 || s.k <= 0 || s.k > s.n) {
        throw InvalidType("non-emptiness criterion requires n >= 2 and 0 < k <= n");
    }
    if (!(alpha > Rational(0))) return false;
    if (!(Rational(s.n - s.k) * alpha < Rational(s.d))) return false;
    // k <= n + (d-n)/g, cleared of denominators.
    if (!(ll(s.k) * s.g <= ll(s.n) * s.g + s.d - s.n)) return false;
    if (s.k == s.n && s.d == s.n) return false;
    return true;
}

std::pair<long long, long long> flip_constants(const WallPattern& p, const SystemType& s) {
    if (p.n1 + p.n2 != s.n || p.d1 + p.d2 != s.d || p.k1 + p.k2 != s.k) {
        throw InvalidType("pattern does not sum to the given type");
    }
    const long long n1 = p.n1, d1 = p.d1, k1 = p.k1;
    const long long n2 = p.n2, d2 = p.d2, k2 = p.k2;
    const long long gm1 = ll(s.g) - 1;
    const long long c21 = n1 * n2 * gm1 - d1 * n2 + d2 * n1 + k2 * d1 - k2 * n1 * gm1 - k1 * k2;
    const long long c12 = n1 * n2 * gm1 - d2 * n1 + d1 * n2 + k1 * d2 - k1 * n2 * gm1 - k1 * k2;
    return {c12, c21};
}

std::vector<WallGroup> candidate_critical_values(const SystemType& s, const Rational& lo,
                                                 const Rational& hi) {
    require_wall_domain(s);
    if (!(lo < hi)) throw InvalidRange("lo must be strictly below hi");
    if (hi > alpha_upper(s)) {
        throw InvalidRange("hi exceeds d/(n-k); moduli spaces are empty beyond it");
    }
    const Rational lo_eff = std::max(lo, Rational(0));  // critical values are positive

    std::map<Rational, std::vector<WallPattern>> groups;
    for (int n1 = 1; n1 < s.n; ++n1) {
        const int n2 = s.n - n1;
        const int k1_min = std::max(0, s.k - n2);
        const int k1_max = std::min(s.k, n1);
        for (int k1 = k1_min; k1 <= k1_max; ++k1) {
            const long long denom = ll(n1) * s.k - ll(s.n) * k1;
            if (denom == 0) continue;  // k1/n1 == k/n: not a wall
            // alpha = (n*d1 - n1*d)/denom; strictly between lo_eff and hi.
            // Solve for the integer range of d1.
            const Rational a = lo_eff * Rational(denom) + Rational(ll(n1) * s.d);
            const Rational b = hi * Rational(denom) + Rational(ll(n1) * s.d);
            const Rational lower = (denom > 0 ? a : b) / Rational(s.n);
            const Rational upper = (denom > 0 ? b : a) / Rational(s.n);
            const long long d1_first = (lower.floor() + BigInt(1)).to_int64();
            const long long d1_last = (upper.ceil() - BigInt(1)).to_int64();
            for (long long d1 = d1_first; d1 <= d1_last; ++d1) {
                const Rational alpha(ll(s.n) * d1 - ll(n1) * s.d, denom);
                WallPattern p;
                p.n1 = n1;
                p.d1 = static_cast<int>(d1);
                p.k1 = k1;
                p.n2 = n2;
                p.d2 = s.d - p.d1;
                p.k2 = s.k - k1;
                p.alpha = alpha;
                std::tie(p.c12, p.c21) = flip_constants(p, s);
                groups[alpha].push_back(std::move(p));
            }
        }
    }

    std::vector<WallGroup> out;
    out.reserve(groups.size());
    for (auto& [alpha, patterns] : groups) {
        std::sort(patterns.begin(), patterns.end(), [](const WallPattern& a, const WallPattern& b) {
            return std::tie(a.n1, a.d1, a.k1) < std::tie(b.n1, b.d1, b.k1);
        });
        out.push_back(WallGroup{alpha, std::move(patterns)});
    }
    return out;
}

std::vector<WallPattern> certified_walls(const SystemType& s) {
    if (s.k != s.n - 2) throw InvalidType("certified walls are only known for k = n-2");
    if (s.n < 3) throw InvalidType("certified walls require n >= 3");
    if (s.d <= 0) throw InvalidType("wall enumeration requires d > 0");

    std::vector<WallPattern> walls;
    for (int n1 = 1; 2 * n1 < s.n; ++n1) {
        // max{d + 2*n1 - n, 2*n1*d/n} < 2*d1 < d
        const Rational lower = std::max(Rational(s.d + 2 * n1 - s.n), Rational(2LL * n1 * s.d, s.n));
        const Rational half_lower = lower / Rational(2);
        const long long d1_first = (half_lower.floor() + BigInt(1)).to_int64();
        const long long d1_last = (Rational(s.d, 2).ceil() - BigInt(1)).to_int64();
        for (long long d1 = d1_first; d1 <= d1_last; ++d1) {
            WallPattern p;
            p.n1 = n1;
            p.d1 = static_cast<int>(d1);
            p.k1 = n1 - 1;
            p.n2 = s.n - n1;
            p.d2 = s.d - p.d1;
            p.k2 = p.n2 - 1;
            p.alpha = Rational(ll(s.n) * d1 - ll(n1) * s.d, s.n - 2 * n1);
            std::tie(p.c12, p.c21) = flip_constants(p, s);
            p.certified = true;
            walls.push_back(std::move(p));
        }
    }
    std::sort(walls.begin(), walls.end(), [](const WallPattern& a, const WallPattern& b) {
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return std::tie(a.n1, a.d1) < std::tie(b.n1, b.d1);
    });
    return walls;
}

bool check_codim_bounds(const WallPattern& p, const SystemType& s) {
    const Rational at = alpha_torsion_free(s);
    if (!(p.alpha > at && p.alpha < alpha_upper(s))) {
        throw InvalidRange("codimension bounds apply for alpha_T < alpha < d/(n-k)");
    }
    // Standardize to the labelling with k1/n1 < k/n < k2/n2; the input may
    // carry the sub/quotient roles either way round.
    long long n1 = p.n1, d1 = p.d1, k1 = p.k1;
    long long n2 = p.n2, d2 = p.d2, k2 = p.k2;
    long long c12 = p.c12, c21 = p.c21;
    if (k1 * n2 == k2 * n1) throw InvalidRange("pattern has k1/n1 == k/n; not a wall");
    if (k1 * n2 > k2 * n1) {
        std::swap(n1, n2);
        std::swap(d1, d2);
        std::swap(k1, k2);
        std::swap(c12, c21);
    }
    // The chains are proved for extension types that occur. A factor type
    // with k_i > n_i + (d_i - n_i)/g admits no coherent systems, so the
    // pattern is never realized and the bounds are vacuous.
    const auto admits_systems = [&](long long ni, long long di, long long ki) {
        return ki * s.g <= ni * s.g + di - ni;
    };
    if (!admits_systems(n1, d1, k1) || !admits_systems(n2, d2, k2)) return true;

    const long long gm1 = ll(s.g) - 1;
    const long long plus_mid = gm1 * (n1 - k1) * (n2 - k2) + d1 * n2 - d2 * n1 + 1;
    const bool plus_ok = c12 >= plus_mid && plus_mid >= ll(s.g) + 1;
    const long long minus_mid = (n1 - k1) * (n2 - k2) * gm1 + 1;
    const bool minus_ok = c21 >= minus_mid && minus_mid >= ll(s.g);
    return plus_ok && minus_ok;
}

FlipLocusData flip_locus_data(const WallPattern& p, const SystemType& s) {
    const auto [c12, c21] = flip_constants(p, s);
    FlipLocusData f{p, 0, 0, 0, 0, 0};
    f.base_dim = expected_dim(SystemType(p.n1, p.d1, p.k1, s.g)) +
                 expected_dim(SystemType(p.n2, p.d2, p.k2, s.g));
    f.fibre_dim_plus = c21 - 1;
    f.fibre_dim_minus = c12 - 1;
    f.codim_plus = c12;
    f.codim_minus = c21;
    return f;
}

std::optional<long long> codim_semistable_locus(int quotient_rank, int g) {
    if (quotient_rank < 1) throw InvalidParams("quotient rank must be >= 1");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    if (quotient_rank == 1) return std::nullopt;  // no partition with r >= 2
    return ll(quotient_rank - 1) * (g - 1);
}

namespace {

// Minimum of sum_{i<j} m_i*m_j over partitions of `remaining` into parts
// <= max_part, at least two parts in total.
void min_pair_sum(int remaining, int max_part, long long part_sum, long long pair_sum, int count,
                  long long& best) {
    if (remaining == 0) {
        if (count >= 2) best = std::min(best, pair_sum);
        return;
    }
    for (int m = std::min(max_part, remaining); m >= 1; --m) {
        min_pair_sum(remaining - m, m, part_sum + m, pair_sum + ll(m) * part_sum, count + 1, best);
    }
}

}  // namespace

std::optional<long long> codim_semistable_locus_by_partitions(int quotient_rank, int g) {
    if (quotient_rank < 1) throw InvalidParams("quotient rank must be >= 1");
    if (g < 2) throw InvalidParams("genus must be >= 2");
    long long best = std::numeric_limits<long long>::max();
    min_pair_sum(quotient_rank, quotient_rank, 0, 0, 0, best);
    if (best == std::numeric_limits<long long>::max()) return std::nullopt;
    return best * (g - 1);
}

}  // namespace cohsys
