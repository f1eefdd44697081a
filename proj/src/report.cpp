#include "cohsys/report.hpp"

#include <numeric>
#include <utility>

#include "cohsys/errors.hpp"

namespace cohsys {

GroupDesc GroupDesc::trivial() { return {}; }

GroupDesc GroupDesc::free_abelian(long long rank) {
    GroupDesc g;
    g.kind = Kind::free_abelian;
    g.rank = rank;
    return g;
}

GroupDesc GroupDesc::cyclic(long long order) {
    GroupDesc g;
    g.kind = Kind::cyclic;
    g.order = order;
    return g;
}

GroupDesc GroupDesc::jacobian() {
    GroupDesc g;
    g.kind = Kind::jacobian;
    return g;
}

GroupDesc GroupDesc::picard_of_moduli(int m_rank, int m_deg) {
    GroupDesc g;
    g.kind = Kind::picard_of_moduli;
    g.m_rank = m_rank;
    g.m_deg = m_deg;
    return g;
}

GroupDesc GroupDesc::product(std::vector<GroupDesc> parts) {
    GroupDesc g;
    g.kind = Kind::product;
    g.parts = std::move(parts);
    return g;
}

GroupDesc GroupDesc::extension(GroupDesc sub, GroupDesc quotient) {
    GroupDesc g;
    g.kind = Kind::extension;
    g.parts.push_back(std::move(sub));
    g.parts.push_back(std::move(quotient));
    return g;
}

GroupDesc GroupDesc::grassmannian_pi2(int k, int n) {
    GroupDesc g;
    g.kind = Kind::grassmannian_pi2;
    g.gr_k = k;
    g.gr_n = n;
    return g;
}

bool GroupDesc::mentions_cyclic(long long o) const {
    if (kind == Kind::cyclic && order == o) return true;
    for (const auto& part : parts) {
        if (part.mentions_cyclic(o)) return true;
    }
    return false;
}

std::string GroupDesc::render() const {
    switch (kind) {
        case Kind::trivial:
            return "0";
        case Kind::free_abelian:
            return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
        case Kind::cyclic:
            return "Z_" + std::to_string(order);
        case Kind::jacobian:
            return "J(C)";
        case Kind::picard_of_moduli:
            if (m_rank == 1) return "Pic(J^" + std::to_string(m_deg) + ")";
            return "Pic(M(" + std::to_string(m_rank) + "," + std::to_string(m_deg) + "))";
        case Kind::product: {
            std::string out;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i > 0) out += " x ";
                out += parts[i].render();
            }
            return out;
        }
        case Kind::extension:
            return "extension of " + parts[1].render() + " by " + parts[0].render();
        case Kind::grassmannian_pi2:
            return "pi_2(Gr(" + std::to_string(gr_k) + "," + std::to_string(gr_n) + "))";
    }
    return "?";
}

namespace {

bool at_section_bound(const SystemType& s) {
    // k = n + (d-n)/g exactly, with denominators cleared.
    return static_cast<long long>(s.k) * s.g == static_cast<long long>(s.n) * s.g + s.d - s.n;
}

}  // namespace

TopologyReport topology_report(const SystemType& s, const Rational& alpha,
                               bool include_conjectures) {
    if (!(s.k > 0 && s.k < s.n)) {
        throw InvalidType("topology report requires 0 < k < n");
    }
    TopologyReport r(s, alpha);

    if (s.d <= 0) {
        r.reason = "requires d > 0";
        return r;
    }
    const Rational at = alpha_torsion_free(s);
    const Rational au = alpha_upper(s);
    if (alpha == at || alpha == au) {
        r.reason = "boundary value: every hypothesis is a strict inequality";
        return r;
    }
    if (!(alpha > at && alpha < au)) {
        r.reason = "alpha outside (alpha_T, d/(n-k))";
        return r;
    }
    r.nonempty = is_nonempty(s, alpha);
    if (!r.nonempty) {
        r.reason = "moduli space is empty (non-emptiness conditions fail)";
        return r;
    }

    r.applicable = true;
    const long long p = std::gcd(static_cast<long long>(s.n - s.k), static_cast<long long>(s.d));
    r.p = p;
    const bool boundary = at_section_bound(s);
    const int two_g = 2 * s.g;

    // The exceptional case: g = 2, k = n-2, d even. The Picard/homotopy
    // statements are unproved there; record the flag and populate nothing.
    if (s.g == 2 && s.k == s.n - 2 && s.d % 2 == 0) {
        r.exceptions.push_back("g2_k_n-2_d_even_unknown");
        const std::string why = "excluded case g=2, k=n-2, d even: statements unproved";
        r.pic.condition = why;
        r.pic0.condition = why;
        r.pi1.condition = why;
        r.pi2.condition = why;
        return r;
    }

    const std::string range_cond = "alpha_T < alpha < d/(n-k), d > 0, k <= n + (d-n)/g";

    if (boundary) {
        r.pic.value = GroupDesc::picard_of_moduli(s.n - s.k, s.d);
        r.pic.condition = range_cond + ", k = n + (d-n)/g exactly (Z factor dropped)";
    } else {
        r.pic.value = GroupDesc::product(
            {GroupDesc::picard_of_moduli(s.n - s.k, s.d), GroupDesc::free_abelian(1)});
        r.pic.condition = range_cond + ", k < n + (d-n)/g";
    }

    r.pic0.value = GroupDesc::jacobian();
    r.pic0.condition = range_cond;

    r.pi1.value = GroupDesc::free_abelian(two_g);
    r.pi1.condition = range_cond + "; pi_1 = H_1(C,Z)";

    if (s.k == s.n - 1) {
        const int fibre_n = s.d + s.g - 1;
        r.fibration = TopologyReport::Fibration{s.d, s.n - 1, fibre_n};
        r.pi2.value = GroupDesc::grassmannian_pi2(s.n - 1, fibre_n);
        r.pi2.condition =
            "k = n-1: pi_i(G) = pi_i(Gr(n-1, d+g-1)) for i >= 2 (Grassmann fibration over J^d)";
        if (s.d >= s.n - s.g && s.d < s.n) {
            r.brill_noether = "G^" + std::to_string(s.d + s.g - s.n - 1) + "_" +
                              std::to_string(s.d + 2 * s.g - 2);
        }
    } else {
        if (boundary) {
            // pi_2 = Z x Z_p; the Z_p factor is trivial in the coprime case.
            if (p > 1) {
                r.pi2.value = GroupDesc::product(
                    {GroupDesc::free_abelian(1), GroupDesc::cyclic(p)});
            } else {
                r.pi2.value = GroupDesc::free_abelian(1);
            }
            r.pi2.condition = range_cond + ", k = n + (d-n)/g exactly";
        } else if (p == 1) {
            r.pi2.value = GroupDesc::product(
                {GroupDesc::free_abelian(1), GroupDesc::free_abelian(1)});
            r.pi2.condition = range_cond + ", GCD(n-k, d) = 1";
        } else {
            r.pi2.value = GroupDesc::extension(
                GroupDesc::free_abelian(1),
                GroupDesc::product({GroupDesc::free_abelian(1), GroupDesc::cyclic(p)}));
            r.pi2.condition =
                range_cond + ", GCD(n-k, d) = " + std::to_string(p) +
                " > 1: only the exact sequence 0 -> Z -> pi_2 -> Z x Z_p -> 0 is known";
            if (include_conjectures) {
                const long long q = std::gcd(std::gcd(static_cast<long long>(s.n),
                                                      static_cast<long long>(s.d)),
                                             static_cast<long long>(s.k));
                std::vector<GroupDesc> parts = {GroupDesc::free_abelian(1),
                                                GroupDesc::free_abelian(1)};
                if (q > 1) parts.push_back(GroupDesc::cyclic(q));
                r.pi2_conjecture = GroupDesc::product(std::move(parts));
                r.pi2_conjecture_note =
                    "conjecture, not a theorem: pi_2 = Z x Z x Z_q with q = GCD(n, d, k)";
            }
        }
    }

    return r;
}

}  // namespace cohsys
