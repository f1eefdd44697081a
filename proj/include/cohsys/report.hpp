#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohsys/moduli.hpp"

namespace cohsys {

// Symbolic description of a group, structured so tests can assert on the
// shape rather than on rendered text.
struct GroupDesc {
    enum class Kind {
        trivial,          // 0
        free_abelian,     // Z^rank
        cyclic,           // Z_order
        jacobian,         // J(C)
        picard_of_moduli, // Pic(M(m_rank, m_deg)); Pic(J^d) when m_rank = 1
        product,          // parts[0] x parts[1] x ...
        extension,        // 0 -> parts[0] -> G -> parts[1] -> 0, unresolved
        grassmannian_pi2, // pi_2(Gr(gr_k, gr_n))
    };

    Kind kind = Kind::trivial;
    long long rank = 0;
    long long order = 0;
    int m_rank = 0, m_deg = 0;
    int gr_k = 0, gr_n = 0;
    std::vector<GroupDesc> parts;

    static GroupDesc trivial();
    static GroupDesc free_abelian(long long rank);
    static GroupDesc cyclic(long long order);
    static GroupDesc jacobian();
    static GroupDesc picard_of_moduli(int m_rank, int m_deg);
    static GroupDesc product(std::vector<GroupDesc> parts);
    static GroupDesc extension(GroupDesc sub, GroupDesc quotient);
    static GroupDesc grassmannian_pi2(int k, int n);

    // True if this description or any part of it mentions Z_order with the
    // given order.
    bool mentions_cyclic(long long order) const;

    std::string render() const;  // "Z^4", "Pic(M(2,7)) x Z", "extension of Z x Z_2 by Z", ...

    friend bool operator==(const GroupDesc&, const GroupDesc&) = default;
};

// One report entry: either a populated value together with the hypothesis
// it was checked under, or empty with the failed condition.
struct ReportField {
    std::optional<GroupDesc> value;
    std::string condition;
};

// Condition-checked topology facts for G(alpha; n, d, k).
struct TopologyReport {
    TopologyReport(SystemType type, Rational a) : s(type), alpha(std::move(a)) {}

    SystemType s;
    Rational alpha;

    bool applicable = false;  // umbrella hypotheses hold at (s, alpha)
    std::string reason;       // failed condition when not applicable
    bool nonempty = false;

    std::optional<long long> p;  // GCD(n-k, d), set when applicable

    ReportField pic;   // Picard group
    ReportField pic0;  // Picard variety
    ReportField pi1;   // fundamental group
    ReportField pi2;   // second homotopy group

    // Conjectural resolution of pi2 in the non-coprime case; only filled
    // on explicit request and never asserted as a theorem.
    std::optional<GroupDesc> pi2_conjecture;
    std::string pi2_conjecture_note;

    // For k = n-1: the moduli space is a Grassmann fibration over J^d.
    struct Fibration {
        int base_degree;  // J^{base_degree}
        int gr_k, gr_n;   // fibre Gr(gr_k, gr_n)
    };
    std::optional<Fibration> fibration;

    // For k = n-1 with n-g <= d < n: the classical variety identified with
    // the Brill-Noether locus B(n, d, n-1).
    std::optional<std::string> brill_noether;

    std::vector<std::string> exceptions;
};

// Build the report, populating each field only when the hypotheses of the
// corresponding statement hold at (s, alpha), all checked exactly.
// Requires 0 < k < n. include_conjectures opts into clearly-labelled
// conjectural content.
TopologyReport topology_report(const SystemType& s, const Rational& alpha,
                               bool include_conjectures = false);

}  // namespace cohsys
