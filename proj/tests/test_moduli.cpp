#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "cohsys/errors.hpp"
#include "cohsys/moduli.hpp"

using namespace cohsys;

namespace {

// Find the patterns at a given wall value, if any.
const WallGroup* group_at(const std::vector<WallGroup>& groups, const Rational& alpha) {
    for (const auto& grp : groups) {
        if (grp.alpha == alpha) return &grp;
    }
    return nullptr;
}

bool has_pattern(const WallGroup& grp, int n1, int d1, int k1) {
    for (const auto& p : grp.patterns) {
        if (p.n1 == n1 && p.d1 == d1 && p.k1 == k1) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("SystemType validation") {
    CHECK_THROWS_AS(SystemType(0, 0, 0, 2), InvalidType);
    CHECK_THROWS_AS(SystemType(2, 0, -1, 2), InvalidType);
    CHECK_THROWS_AS(SystemType(2, 0, 1, 1), InvalidType);
    CHECK(SystemType(3, 5, 1, 2).ambient_dim() == 7);  // d + (n-k)(g-1)
}

TEST_CASE("expected dimension") {
    CHECK(expected_dim(SystemType(1, 0, 0, 2)) == 2);  // the Jacobian, dim g
    CHECK(expected_dim(SystemType(2, 3, 1, 2)) == 5);
    CHECK(expected_dim(SystemType(3, 5, 1, 2)) == 11);
    CHECK(expected_dim(SystemType(2, -4, 0, 3)) == 9);  // pure formula, any d
}

TEST_CASE("torsion-free threshold") {
    CHECK(alpha_torsion_free(SystemType(3, 5, 1, 2)) == Rational(1));
    CHECK(alpha_torsion_free(SystemType(4, 3, 2, 2)) == Rational(0));  // d <= n branch
    CHECK(alpha_torsion_free(SystemType(4, 7, 2, 2)) == Rational(3, 2));
    CHECK_THROWS_AS(alpha_torsion_free(SystemType(3, 5, 0, 2)), InvalidType);
    CHECK_THROWS_AS(alpha_torsion_free(SystemType(3, 5, 3, 2)), InvalidType);
}

TEST_CASE("injectivity bound") {
    CHECK(alpha_injective_bound(SystemType(5, 40, 1, 3)) == Rational(0));  // k = 1
    CHECK(alpha_injective_bound(SystemType(3, 5, 2, 2)) == Rational(0));   // clamped at 0
    CHECK(alpha_injective_bound(SystemType(4, 20, 3, 2)) == Rational(4));
    CHECK_THROWS_AS(alpha_injective_bound(SystemType(3, 5, 0, 2)), InvalidType);
}

TEST_CASE("non-emptiness criterion") {
    CHECK_FALSE(is_nonempty(SystemType(3, 3, 3, 2), Rational(1)));  // (n,n,n) excluded
    CHECK(is_nonempty(SystemType(3, 5, 1, 2), Rational(1)));
    CHECK_FALSE(is_nonempty(SystemType(2, 1, 2, 2), Rational(1, 2)));  // 2 <= 2 - 1/2 fails
    CHECK_FALSE(is_nonempty(SystemType(3, 5, 1, 2), Rational(0)));     // needs alpha > 0
    CHECK_FALSE(is_nonempty(SystemType(3, 5, 1, 2), Rational(3)));     // (n-k)alpha < d fails
    CHECK(is_nonempty(SystemType(3, 4, 3, 2), Rational(100)));  // k = n, large alpha allowed
    CHECK_THROWS_AS(is_nonempty(SystemType(1, 5, 1, 2), Rational(1)), InvalidType);
    CHECK_THROWS_AS(is_nonempty(SystemType(3, 5, 0, 2), Rational(1)), InvalidType);
    CHECK_THROWS_AS(is_nonempty(SystemType(3, 5, 4, 2), Rational(1)), InvalidType);
}

TEST_CASE("candidate walls for (2,3,1)") {
    const SystemType s(2, 3, 1, 2);
    const auto groups = candidate_critical_values(s, Rational(0), Rational(3));
    const WallGroup* at_one = group_at(groups, Rational(1));
    REQUIRE(at_one != nullptr);
    CHECK(has_pattern(*at_one, 1, 1, 1));
    for (const auto& grp : groups) {
        for (const auto& p : grp.patterns) {
            CHECK(p.n1 + p.n2 == s.n);
            CHECK(p.d1 + p.d2 == s.d);
            CHECK(p.k1 + p.k2 == s.k);
            CHECK_FALSE(p.certified);
            // slope equality holds exactly at alpha
            const Rational lhs = (Rational(p.d1) + p.alpha * Rational(p.k1)) / Rational(p.n1);
            const Rational rhs = (Rational(s.d) + p.alpha * Rational(s.k)) / Rational(s.n);
            CHECK(lhs == rhs);
        }
    }

    CHECK(candidate_critical_values(s, Rational(2), Rational(3)).empty());
    CHECK(candidate_critical_values(s, Rational(5, 4), Rational(3, 2)).empty());
    CHECK_THROWS_AS(candidate_critical_values(s, Rational(2), Rational(2)), InvalidRange);
    CHECK_THROWS_AS(candidate_critical_values(s, Rational(9, 2), Rational(7, 2)), InvalidRange);
}

TEST_CASE("candidate walls are sorted and grouped") {
    const SystemType s(4, 7, 2, 2);
    const auto groups = candidate_critical_values(s, Rational(0), alpha_upper(s));
    for (size_t i = 1; i < groups.size(); ++i) CHECK(groups[i - 1].alpha < groups[i].alpha);
    for (const auto& grp : groups) {
        CHECK(!grp.patterns.empty());
        for (size_t i = 1; i < grp.patterns.size(); ++i) {
            const auto& a = grp.patterns[i - 1];
            const auto& b = grp.patterns[i];
            CHECK(std::tie(a.n1, a.d1, a.k1) < std::tie(b.n1, b.d1, b.k1));
        }
    }
}

TEST_CASE("certified walls for (4,7)") {
    const SystemType s(4, 7, 2, 2);
    const auto walls = certified_walls(s);
    REQUIRE(walls.size() == 1);
    const WallPattern& w = walls[0];
    CHECK(w.n1 == 1);
    CHECK(w.d1 == 3);
    CHECK(w.k1 == 0);
    CHECK(w.n2 == 3);
    CHECK(w.d2 == 4);
    CHECK(w.k2 == 2);
    CHECK(w.alpha == Rational(5, 2));
    CHECK(w.c21 == 2);  // = g
    CHECK(w.c12 == 8);  // = 3g + d - 5
    CHECK(w.certified);
}

TEST_CASE("certified walls empty cases") {
    CHECK(certified_walls(SystemType(3, 5, 1, 2)).empty());
    CHECK(certified_walls(SystemType(4, 1, 2, 2)).empty());
    CHECK_THROWS_AS(certified_walls(SystemType(4, 7, 1, 2)), InvalidType);  // k != n-2
    CHECK_THROWS_AS(certified_walls(SystemType(4, -3, 2, 2)), InvalidType);
}

TEST_CASE("flip constants and the subscript swap") {
    const SystemType s(4, 7, 2, 2);
    WallPattern p{1, 3, 0, 3, 4, 2, Rational(5, 2), 0, 0, false};
    const auto [c12, c21] = flip_constants(p, s);
    CHECK(c12 == 8);
    CHECK(c21 == 2);
    WallPattern swapped{3, 4, 2, 1, 3, 0, Rational(5, 2), 0, 0, false};
    const auto [s12, s21] = flip_constants(swapped, s);
    CHECK(s12 == c21);
    CHECK(s21 == c12);
    WallPattern bad{1, 3, 0, 3, 4, 1, Rational(5, 2), 0, 0, false};
    CHECK_THROWS_AS(flip_constants(bad, s), InvalidType);
}

TEST_CASE("specialized flip constants agree with the general formula") {
    // For every certified wall, the k = n-2 closed forms for c21/c12 must
    // reproduce the general expressions.
    for (int n = 3; n <= 7; ++n) {
        for (int d = 1; d <= 15; ++d) {
            for (int g = 2; g <= 4; ++g) {
                const SystemType s(n, d, n - 2, g);
                for (const auto& w : certified_walls(s)) {
                    const long long c21s = 1LL * w.n1 * (g - 1) + 1LL * d * w.n1 -
                                           1LL * w.d1 * (w.n1 + 1) -
                                           1LL * (w.n1 - 1) * (n - w.n1 - 1);
                    const long long c12s = 1LL * (n - w.n1) * (g - 1) - d +
                                           1LL * w.d1 * (n - w.n1 + 1) -
                                           1LL * (w.n1 - 1) * (n - w.n1 - 1);
                    CHECK(w.c21 == c21s);
                    CHECK(w.c12 == c12s);
                }
            }
        }
    }
}

TEST_CASE("codimension bound chains") {
    const SystemType s(4, 7, 2, 2);
    const auto walls = certified_walls(s);
    REQUIRE(walls.size() == 1);
    CHECK(check_codim_bounds(walls[0], s));

    // A corrupted pattern (c12 forced below the chain) must fail.
    WallPattern bad = walls[0];
    bad.c12 = 1;
    CHECK_FALSE(check_codim_bounds(bad, s));

    // Out of the torsion-free range: precondition violation.
    WallPattern low = walls[0];
    low.alpha = Rational(1);
    CHECK_THROWS_AS(check_codim_bounds(low, s), InvalidRange);
}

TEST_CASE("unrealizable patterns satisfy the bounds vacuously") {
    // (7, 3) at g = 2 has a numeric wall (n1,d1) = (2,1) whose quotient
    // type (5,2,4) violates k <= n + (d-n)/g: no such coherent system
    // exists, the flip locus is empty and the chains are vacuous even
    // though c21 = 1 < g numerically.
    const SystemType s(7, 3, 5, 2);
    const auto walls = certified_walls(s);
    REQUIRE(walls.size() == 2);
    CHECK(walls[0].alpha == Rational(1, 3));
    CHECK(walls[0].n1 == 2);
    CHECK(walls[0].d1 == 1);
    CHECK(walls[0].c21 == 1);
    CHECK(5LL * s.g + walls[0].d2 - 5 < 4LL * s.g);  // quotient type admits no systems
    CHECK(check_codim_bounds(walls[0], s));
}

TEST_CASE("flip locus dimension bookkeeping") {
    const SystemType s(4, 7, 2, 2);
    const auto walls = certified_walls(s);
    REQUIRE(walls.size() == 1);
    const FlipLocusData f = flip_locus_data(walls[0], s);
    CHECK(f.base_dim == 10);  // beta(1,3,0) + beta(3,4,2) = 2 + 8
    CHECK(f.fibre_dim_plus == 1);
    CHECK(f.fibre_dim_minus == 7);
    CHECK(f.codim_plus == 8);
    CHECK(f.codim_minus == 2);
    CHECK(f.base_dim + f.fibre_dim_plus + f.codim_plus == expected_dim(s));
    CHECK(f.base_dim + f.fibre_dim_minus + f.codim_minus == expected_dim(s));
}

TEST_CASE("semistable locus codimension") {
    CHECK(codim_semistable_locus(2, 3) == 2);
    CHECK(codim_semistable_locus(3, 3) == 4);
    CHECK_FALSE(codim_semistable_locus(1, 5).has_value());
    CHECK_FALSE(codim_semistable_locus_by_partitions(1, 5).has_value());
    CHECK(codim_semistable_locus_by_partitions(2, 3) == 2);
    CHECK(codim_semistable_locus_by_partitions(3, 3) == 4);  // min{4, 6} over {1,2},{1,1,1}
    CHECK_THROWS_AS(codim_semistable_locus(0, 2), InvalidParams);
    for (int nk = 2; nk <= 7; ++nk) {
        for (int g = 2; g <= 6; ++g) {
            CHECK(codim_semistable_locus(nk, g) == codim_semistable_locus_by_partitions(nk, g));
        }
    }
}

TEST_CASE("beta decomposition identity") {
    // beta(n,d,k) = beta(n-k,d,0) + k(N-k) with N = d + (n-k)(g-1).
    for (int n = 2; n <= 10; ++n) {
        for (int d = -30; d <= 30; ++d) {
            for (int k = 1; k < n; ++k) {
                for (int g = 2; g <= 6; ++g) {
                    const SystemType s(n, d, k, g);
                    const long long lhs = expected_dim(s);
                    const long long rhs = expected_dim(SystemType(n - k, d, 0, g)) +
                                          1LL * k * (s.ambient_dim() - k);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("threshold ordering and dominance") {
    for (int n = 3; n <= 8; ++n) {
        for (int k = 2; k < n; ++k) {
            for (int d = n + 1; d <= 30; ++d) {
                for (int g = 2; g <= 5; ++g) {
                    const SystemType s(n, d, k, g);
                    const Rational ai = alpha_injective_bound(s);
                    const Rational at = alpha_torsion_free(s);
                    CHECK(ai < at);
                    CHECK(ai <= Rational(1LL * d * (k - 1), 1LL * k * (n - k + 1)));
                    CHECK(at <= std::max(Rational(1LL * k * d - n, 1LL * k * (n - k)), Rational(0)));
                }
            }
        }
    }
}

TEST_CASE("certified walls are candidate walls") {
    for (int n = 3; n <= 6; ++n) {
        for (int d = 1; d <= 15; ++d) {
            for (int g = 2; g <= 4; ++g) {
                const SystemType s(n, d, n - 2, g);
                const auto certified = certified_walls(s);
                if (certified.empty()) continue;
                const auto candidates =
                    candidate_critical_values(s, alpha_torsion_free(s), Rational(d, 2));
                for (const auto& w : certified) {
                    const WallGroup* grp = group_at(candidates, w.alpha);
                    REQUIRE(grp != nullptr);
                    CHECK(has_pattern(*grp, w.n1, w.d1, w.k1));
                }
            }
        }
    }
}

TEST_CASE("every certified wall passes the codimension chains") {
    for (int n = 3; n <= 6; ++n) {
        for (int d = 1; d <= 15; ++d) {
            for (int g = 2; g <= 4; ++g) {
                const SystemType s(n, d, n - 2, g);
                for (const auto& w : certified_walls(s)) {
                    CHECK(check_codim_bounds(w, s));
                    const FlipLocusData f = flip_locus_data(w, s);
                    CHECK(f.base_dim + f.fibre_dim_plus + f.codim_plus == expected_dim(s));
                }
            }
        }
    }
}
