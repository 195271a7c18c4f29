#include "surgeq/verdict.hpp"

#include <sstream>

#include "surgeq/milnor.hpp"

namespace surgeq {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Equivalent: return "Equivalent";
        case VerdictStatus::NotEquivalent: return "NotEquivalent";
        default: return "Unknown";
    }
}

std::string linking_form_to_string(const LinkingForm& f) {
    std::ostringstream os;
    os << "orders=[";
    for (std::size_t i = 0; i < f.orders.size(); ++i) os << (i ? "," : "") << f.orders[i].get_str();
    os << "] values=" << f.values.to_string();
    return os.str();
}

namespace {

bool cup_form_computable(const FramedLink& link) {
    return link.zero_framed_unlinked() && (link.longitudes || link.braid);
}

Verdict from_iso(Verdict v, const IsoAnswer& iso, const std::string& yes_rule, const std::string& no_rule) {
    switch (iso.status) {
        case IsoStatus::Yes:
            v.status = VerdictStatus::Equivalent;
            v.rule = yes_rule;
            break;
        case IsoStatus::No:
            v.status = VerdictStatus::NotEquivalent;
            v.rule = no_rule;
            break;
        default:
            v.status = VerdictStatus::Unknown;
            v.rule = no_rule;
            break;
    }
    if (!iso.reason.empty()) v.notes = iso.reason;
    return v;
}

}  // namespace

Verdict compare_integral_2(const FramedLink& a, const FramedLink& b, int depth, const Int& bound) {
    Verdict v;
    v.relation = "integral2";

    FramedLink ea = expand_to_integral(a), eb = expand_to_integral(b);
    FirstHomology ha = first_homology(presentation_matrix(ea));
    FirstHomology hb = first_homology(presentation_matrix(eb));
    v.certificate.push_back({"first homology", ha.to_string(), hb.to_string()});

    if (!(ha == hb)) {
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "first homology differs";
        return v;
    }

    if (ha.is_torsion_free()) {
        if (ha.betti < 3) {
            v.status = VerdictStatus::Equivalent;
            v.rule = "m<3";
            v.notes = "H1 is free of rank < 3, where the triple cup form vanishes";
            return v;
        }
        if (cup_form_computable(a) && cup_form_computable(b)) {
            TrilinearForm fa = from_mu_triple(a), fb = from_mu_triple(b);
            v.certificate.push_back({"triple cup form", fa.to_string(), fb.to_string()});
            OrbitInvariants ia = orbit_invariants(fa), ib = orbit_invariants(fb);
            v.certificate.push_back({"cup form orbit invariants", ia.to_string(), ib.to_string()});
            return from_iso(std::move(v), equivalent(fa, fb, depth), "torsion-free H1: cup form orbits agree",
                            "torsion-free H1: cup form orbit test");
        }
        v.status = VerdictStatus::Unknown;
        v.rule = "torsion-free H1 of rank >= 3";
        v.notes = "triple cup form is only computable from 0-framed unlinked presentations with longitude data";
        return v;
    }

    LinkingForm la = linking_form(presentation_matrix(ea));
    LinkingForm lb = linking_form(presentation_matrix(eb));
    v.certificate.push_back({"linking form", linking_form_to_string(la), linking_form_to_string(lb)});

    const bool cyclic_torsion = ha.factors.size() == 1;
    if (ha.betti == 0 && cyclic_torsion) {
        Int ca = cyclic_class(la), cb = cyclic_class(lb);
        v.certificate.push_back({"cyclic linking class", ca.get_str(), cb.get_str()});
        return from_iso(std::move(v), isomorphic(la, lb, bound), "cyclic H1: linking class agrees mod square units",
                        "cyclic H1: linking classes in distinct square-unit classes");
    }
    if (ha.betti == 1 && cyclic_torsion) {
        Int ca = cyclic_class(la), cb = cyclic_class(lb);
        v.certificate.push_back({"cyclic linking class", ca.get_str(), cb.get_str()});
        return from_iso(std::move(v), isomorphic(la, lb, bound), "H1 = Z x Z_n: linking form decides",
                        "H1 = Z x Z_n: linking forms nonisomorphic");
    }

    IsoAnswer iso = isomorphic(la, lb, bound);
    if (iso.status == IsoStatus::No) {
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "linking forms nonisomorphic";
        v.notes = iso.reason;
        return v;
    }
    v.status = VerdictStatus::Unknown;
    v.rule = "H1 outside the classified cases";
    v.notes = "torsion-coefficient cup products are not computed; matching linking forms are not sufficient here";
    return v;
}

Verdict compare_rational_2(const FramedLink& a, const FramedLink& b, int depth) {
    Verdict v;
    v.relation = "rational2";

    FirstHomology ha = first_homology(presentation_matrix(expand_to_integral(a)));
    FirstHomology hb = first_homology(presentation_matrix(expand_to_integral(b)));
    v.certificate.push_back({"first Betti number", std::to_string(ha.betti), std::to_string(hb.betti)});

    if (ha.betti != hb.betti) {
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "first Betti number differs";
        return v;
    }
    if (ha.betti < 3) {
        v.status = VerdictStatus::Equivalent;
        v.rule = "b1<3";
        return v;
    }
    if (cup_form_computable(a) && cup_form_computable(b)) {
        TrilinearForm fa = from_mu_triple(a), fb = from_mu_triple(b);
        v.certificate.push_back({"integral cup form", fa.to_string(), fb.to_string()});
        OrbitInvariants ia = orbit_invariants(fa), ib = orbit_invariants(fb);
        v.certificate.push_back({"cup form orbit invariants", ia.to_string(), ib.to_string()});
        return from_iso(std::move(v), equivalent(fa, fb, depth), "integral cup form orbits agree",
                        "integral cup form orbit test");
    }
    v.status = VerdictStatus::Unknown;
    v.rule = "b1 >= 3";
    v.notes = "integral cup form is only computable from 0-framed unlinked presentations with longitude data";
    return v;
}

Verdict k_equiv_to_standard(const FramedLink& link, int k) {
    if (k < 2) throw PreconditionViolatedError("k must be at least 2");
    for (const Framing& f : link.framings)
        if (!(f.p == 0 && f.q == 1)) throw PreconditionViolatedError("all framings must be 0/1");
    if (!link.lk.is_zero()) throw PreconditionViolatedError("all pairwise linking numbers must vanish");
    if (!link.longitudes && !link.braid) throw PreconditionViolatedError("longitude or braid data required");

    Verdict v;
    v.relation = "k=" + std::to_string(k);

    std::optional<int> len = first_nonvanishing_length(link, 2 * k - 1);
    if (!len) {
        v.status = VerdictStatus::Equivalent;
        v.rule = "all mu-bar of length < 2k vanish";
        v.certificate.push_back({"first nonvanishing mu-bar length up to " + std::to_string(2 * k - 1), "none", ""});
        return v;
    }
    for (const auto& [idx, val] : mu_table(link, *len)) {
        if (val == 0) continue;
        std::ostringstream is;
        for (std::size_t i = 0; i < idx.size(); ++i) is << (i ? "," : "") << idx[i];
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "nonvanishing mu-bar of length < 2k";
        v.certificate.push_back({"mu-bar(" + is.str() + ")", val.get_str(), "0 for the standard manifold"});
        return v;
    }
    throw MilnorError("first_nonvanishing_length reported a length with no nonzero value");
}

FramedLink lens_space(const Int& n, const Int& q) {
    FramedLink l;
    l.framings.emplace_back(n, q);
    l.lk = IntMatrix(1, 1);
    return l;
}

Verdict lens_compare(const Int& n, const Int& q, const Int& n2, const Int& q2) {
    auto check = [](const Int& nn, const Int& qq) {
        if (nn < 2) throw InvalidLensParametersError("lens order must be >= 2");
        Int g;
        mpz_gcd(g.get_mpz_t(), qq.get_mpz_t(), nn.get_mpz_t());
        if (g != 1) throw InvalidLensParametersError("q must be a unit mod n");
    };
    check(n, q);
    check(n2, q2);

    Verdict v;
    v.relation = "lens";
    v.certificate.push_back({"H1 order", n.get_str(), n2.get_str()});
    if (n != n2) {
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "H1 orders differ";
        return v;
    }
    Int prod;
    Int qq = q * q2;
    mpz_fdiv_r(prod.get_mpz_t(), qq.get_mpz_t(), n.get_mpz_t());
    v.certificate.push_back({"q q' mod n", prod.get_str(), ""});
    if (is_square_unit(prod, n)) {
        v.status = VerdictStatus::Equivalent;
        v.rule = "q q' is a square unit mod n";
    } else {
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "q q' is not a square unit mod n";
    }
    return v;
}

}  // namespace surgeq
