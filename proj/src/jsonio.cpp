#include "cohsys/jsonio.hpp"

#include <numeric>

#include "cohsys/errors.hpp"

namespace cohsys {

json json_of(const BigInt& v) {
    if (v.fits_int64()) return json(v.to_int64());
    return json(v.to_string());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InvalidParams("expected an integer or decimal string");
}

json json_of(const Rational& r) {
    return json{{"num", json_of(r.num())}, {"den", json_of(r.den())}};
}

Rational rational_from_json(const json& j) {
    return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

json json_of(const SystemType& s) {
    return json{{"n", s.n}, {"d", s.d}, {"k", s.k}, {"g", s.g}};
}

json json_of(const WallPattern& p) {
    return json{{"n1", p.n1}, {"d1", p.d1}, {"k1", p.k1},
                {"n2", p.n2}, {"d2", p.d2}, {"k2", p.k2},
                {"c12", p.c12}, {"c21", p.c21}, {"certified", p.certified}};
}

WallPattern wall_pattern_from_json(const json& j) {
    WallPattern p;
    p.n1 = j.at("n1").get<int>();
    p.d1 = j.at("d1").get<int>();
    p.k1 = j.at("k1").get<int>();
    p.n2 = j.at("n2").get<int>();
    p.d2 = j.at("d2").get<int>();
    p.k2 = j.at("k2").get<int>();
    p.c12 = j.at("c12").get<long long>();
    p.c21 = j.at("c21").get<long long>();
    p.certified = j.at("certified").get<bool>();
    return p;
}

json json_of(const std::vector<WallGroup>& groups) {
    json arr = json::array();
    for (const auto& grp : groups) {
        json patterns = json::array();
        for (const auto& p : grp.patterns) patterns.push_back(json_of(p));
        arr.push_back(json{{"alpha", json_of(grp.alpha)}, {"patterns", patterns}});
    }
    return arr;
}

std::vector<WallGroup> wall_groups_from_json(const json& j) {
    std::vector<WallGroup> out;
    for (const auto& item : j) {
        WallGroup grp;
        grp.alpha = rational_from_json(item.at("alpha"));
        for (const auto& pj : item.at("patterns")) {
            WallPattern p = wall_pattern_from_json(pj);
            p.alpha = grp.alpha;
            grp.patterns.push_back(std::move(p));
        }
        out.push_back(std::move(grp));
    }
    return out;
}

json json_of(const GroupDesc& g) {
    switch (g.kind) {
        case GroupDesc::Kind::trivial:
            return json{{"kind", "trivial"}};
        case GroupDesc::Kind::free_abelian:
            return json{{"kind", "free_abelian"}, {"rank", g.rank}};
        case GroupDesc::Kind::cyclic:
            return json{{"kind", "cyclic"}, {"order", g.order}};
        case GroupDesc::Kind::jacobian:
            return json{{"kind", "jacobian"}};
        case GroupDesc::Kind::picard_of_moduli:
            return json{{"kind", "picard_of_moduli"}, {"rank", g.m_rank}, {"degree", g.m_deg}};
        case GroupDesc::Kind::product:
        case GroupDesc::Kind::extension: {
            json parts = json::array();
            for (const auto& part : g.parts) parts.push_back(json_of(part));
            const char* kind = g.kind == GroupDesc::Kind::product ? "product" : "extension";
            return json{{"kind", kind}, {"parts", parts}};
        }
        case GroupDesc::Kind::grassmannian_pi2:
            return json{{"kind", "grassmannian_pi2"}, {"gr_k", g.gr_k}, {"gr_n", g.gr_n}};
    }
    return json();
}

json info_payload(const SystemType& s) {
    json out;
    out["type"] = json_of(s);
    out["beta"] = expected_dim(s);

    if (s.k > 0 && s.k < s.n) {
        out["alpha_T"] = json_of(alpha_torsion_free(s));
    } else {
        out["alpha_T"] = nullptr;
    }
    if (s.k >= 1 && s.k <= s.n) {
        out["alpha_I_bound"] = json_of(alpha_injective_bound(s));
    } else {
        out["alpha_I_bound"] = nullptr;
    }

    // The alpha-independent non-emptiness conditions; when they hold the
    // moduli space is non-empty exactly for 0 < alpha < d/(n-k) (k < n)
    // or for all alpha > 0 (k = n).
    if (s.k >= 1 && s.k <= s.n && s.n >= 2) {
        const bool some_alpha =
            s.d > 0 &&
            static_cast<long long>(s.k) * s.g <= static_cast<long long>(s.n) * s.g + s.d - s.n &&
            !(s.k == s.n && s.d == s.n);
        out["nonempty"] = some_alpha;
        if (some_alpha) {
            json range;
            range["lo"] = json_of(Rational(0));
            if (s.k < s.n) {
                range["hi"] = json_of(alpha_upper(s));
            } else {
                range["hi"] = nullptr;  // stabilizes: non-empty for every alpha > 0
            }
            out["nonempty_range"] = range;
        } else {
            out["nonempty_range"] = nullptr;
        }
    } else {
        out["nonempty"] = nullptr;
        out["nonempty_range"] = nullptr;
    }
    return out;
}

json poincare_payload(const SystemType& s, const IntPoly& p) {
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(json_of(p.coeff(i)));
    return json{{"coeffs", coeffs},
                {"degree", p.degree()},
                {"beta", expected_dim(s)},
                {"palindrome", p.palindromic()}};
}

namespace {

json field_json(const ReportField& f) {
    json out;
    if (f.value) {
        out["group"] = f.value->render();
        out["structure"] = json_of(*f.value);
    }
    out["condition"] = f.condition;
    return out;
}

}  // namespace

json report_payload(const TopologyReport& r) {
    json out;
    out["type"] = json_of(r.s);
    out["alpha"] = json_of(r.alpha);
    out["applicable"] = r.applicable;
    if (!r.applicable) {
        out["reason"] = r.reason;
        out["exceptions"] = r.exceptions;
        return out;
    }
    out["nonempty"] = r.nonempty;
    if (r.p) out["p"] = *r.p;
    out["pic"] = field_json(r.pic);
    out["pic0"] = field_json(r.pic0);
    out["pi1"] = field_json(r.pi1);
    out["pi2"] = field_json(r.pi2);
    if (r.pi2_conjecture) {
        out["pi2_conjecture"] = json{{"group", r.pi2_conjecture->render()},
                                     {"structure", json_of(*r.pi2_conjecture)},
                                     {"conjecture", true},
                                     {"note", r.pi2_conjecture_note}};
    }
    if (r.fibration) {
        out["fibration"] = json{
            {"base", "J^" + std::to_string(r.fibration->base_degree)},
            {"fibre", "Gr(" + std::to_string(r.fibration->gr_k) + "," +
                          std::to_string(r.fibration->gr_n) + ")"},
            {"base_degree", r.fibration->base_degree},
            {"gr_k", r.fibration->gr_k},
            {"gr_n", r.fibration->gr_n}};
    }
    if (r.brill_noether) out["brill_noether"] = *r.brill_noether;
    out["exceptions"] = r.exceptions;
    return out;
}

std::string poincare_csv(const IntPoly& p) {
    std::string header, values;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) {
            header += ',';
            values += ',';
        }
        header += "b" + std::to_string(i);
        values += p.coeff(i).to_string();
    }
    return header + "\n" + values + "\n";
}

}  // namespace cohsys
