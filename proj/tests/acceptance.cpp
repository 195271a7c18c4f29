// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, no tolerances.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "surgeq/io.hpp"
#include "surgeq/linking_iso.hpp"
#include "surgeq/milnor.hpp"
#include "surgeq/trilinear.hpp"
#include "surgeq/verdict.hpp"

using namespace surgeq;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << what << "\n";
    if (!ok) ++failures;
}

FramedLink fixture(const std::string& name) { return load_link(std::string(SURGEQ_FIXTURE_DIR) + "/" + name); }

std::vector<long> units_mod(long n) {
    std::vector<long> out;
    for (long a = 1; a < n; ++a) {
        Int g, aa(a), nn(n);
        mpz_gcd(g.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t());
        if (g == 1) out.push_back(a);
    }
    return out;
}

// brute-force rule: exists a unit k with q q' = k^2 mod n
bool lens_rule_oracle(long n, long q, long q2) {
    for (long k : units_mod(n))
        if ((k * k - q * q2) % n == 0) return true;
    return false;
}

bool criterion1() {
    bool ok = true;
    for (long n = 2; n <= 30 && ok; ++n) {
        std::vector<long> us = units_mod(n);
        for (long q : us)
            for (long q2 : us) {
                bool expect = lens_rule_oracle(n, q, q2);
                Verdict v = lens_compare(Int(n), Int(q), Int(n), Int(q2));
                if ((v.status == VerdictStatus::Equivalent) != expect) ok = false;
                Verdict pipeline = compare_integral_2(lens_space(Int(n), Int(q)), lens_space(Int(n), Int(q2)));
                if (pipeline.status != v.status) ok = false;
            }
    }
    ok = ok && lens_compare(Int(7), Int(1), Int(7), Int(2)).status == VerdictStatus::Equivalent;
    ok = ok && lens_compare(Int(5), Int(1), Int(5), Int(2)).status == VerdictStatus::NotEquivalent;
    ok = ok && lens_compare(Int(7), Int(1), Int(7), Int(6)).status == VerdictStatus::NotEquivalent;
    ok = ok && lens_compare(Int(5), Int(1), Int(5), Int(4)).status == VerdictStatus::Equivalent;
    ok = ok && lens_compare(Int(2), Int(1), Int(2), Int(1)).status == VerdictStatus::Equivalent;
    return ok;
}

bool criterion2() {
    bool ok = true;
    for (long n = 2; n <= 20; ++n)
        for (long q : units_mod(n)) {
            FramedLink lens = lens_space(Int(n), Int(q));
            LinkingForm f = linking_form(presentation_matrix(expand_to_integral(lens)));
            if (f.orders.size() != 1 || f.orders[0] != n) {
                ok = false;
                continue;
            }
            Int a = cyclic_class(f);
            // a must be k^2 q mod n for some unit k (enumeration, independent
            // of the is_square_unit route)
            bool in_class = false;
            for (long k : units_mod(n))
                if ((Int(k) * k * q - a) % n == 0) in_class = true;
            if (!in_class) ok = false;
        }
    return ok;
}

bool criterion3() {
    bool ok = true;
    FramedLink borr = fixture("borromean.json");
    ok = ok && borr.lk.is_zero();
    MuInvariant mu = mu_bar(borr, {1, 2, 3});
    ok = ok && abs(mu.value) == 1 && mu.modulus == 0;
    TrilinearForm f = from_mu_triple(borr);
    ok = ok && orbit_invariants(f).content == 1;

    FramedLink unlink = fixture("unlink_3.json");
    ok = ok && compare_integral_2(borr, unlink).status == VerdictStatus::NotEquivalent;
    ok = ok && compare_rational_2(borr, unlink).status == VerdictStatus::NotEquivalent;

    std::vector<std::string> family = {"unlink_3.json", "borromean.json", "borromean_pow_2.json",
                                       "borromean_pow_3.json"};
    std::vector<Int> values;
    for (const auto& name : family)
        values.push_back(mu_bar(fixture(name), {1, 2, 3}).value);
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = 0; b < family.size(); ++b) {
            bool expect = abs(values[a]) == abs(values[b]);
            Verdict v = compare_integral_2(fixture(family[a]), fixture(family[b]));
            if ((v.status == VerdictStatus::Equivalent) != expect) ok = false;
            if (v.status == VerdictStatus::Unknown) ok = false;
        }
    return ok;
}

bool criterion4() {
    FramedLink wh = fixture("whitehead.json");
    bool ok = mu_bar(wh, {1, 2}).value == 0;
    auto len = first_nonvanishing_length(wh, 6);
    ok = ok && len && *len == 4;
    MuInvariant mu = mu_bar(wh, {1, 1, 2, 2});
    ok = ok && abs(mu.value) == 1 && mu.modulus == 0;
    ok = ok && k_equiv_to_standard(wh, 2).status == VerdictStatus::Equivalent;
    ok = ok && k_equiv_to_standard(wh, 3).status == VerdictStatus::NotEquivalent;
    return ok;
}

bool criterion5() {
    std::vector<std::string> spheres = {"sphere_plus1.json", "sphere_minus1.json", "sphere_chain.json",
                                        "sphere_half.json"};
    bool ok = true;
    for (const auto& a : spheres) {
        FramedLink la = fixture(a);
        if (abs(presentation_matrix(expand_to_integral(la)).det()) != 1) ok = false;
        for (const auto& b : spheres)
            if (compare_integral_2(la, fixture(b)).status != VerdictStatus::Equivalent) ok = false;
    }
    return ok;
}

bool criterion6() {
    std::mt19937 gen(20260808);
    auto pick = [&](long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    };
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = static_cast<std::size_t>(pick(1, 3));
        FramedLink l;
        for (std::size_t i = 0; i < m; ++i) {
            Int p(pick(-9, 9)), q(pick(1, 9));
            if (p == 0) q = 1;
            Int g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 0) {
                p /= g;
                q /= g;
            }
            l.framings.emplace_back(p, q);
        }
        l.lk = IntMatrix(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                long v = pick(-3, 3);
                l.lk.at(i, j) = v;
                l.lk.at(j, i) = v;
            }

        FramedLink e = expand_to_integral(l);
        FirstHomology before = first_homology(presentation_matrix(l));
        FirstHomology after = first_homology(presentation_matrix(e));
        if (!(before == after)) {
            ok = false;
            continue;
        }
        if (is_admissible_rational_2surgery(l)) {
            LinkingForm fb = linking_form_rational(l);
            LinkingForm fa = linking_form(presentation_matrix(e));
            IsoAnswer iso = isomorphic(fb, fa, Int(100000));
            if (iso.status != IsoStatus::Yes) ok = false;
        }
    }
    return ok;
}

bool criterion7() {
    bool ok = true;
    // cyclic fast path vs enumeration for all orders <= 200 and all unit pairs
    for (long n = 2; n <= 200 && ok; ++n) {
        std::vector<long> us = units_mod(n);
        std::set<long> square_units;
        for (long k : us) square_units.insert((k * k) % n);
        // production route per unit (factorization + Euler criterion)
        std::set<long> fast_set;
        for (long u : us)
            if (is_square_unit(Int(u), Int(n))) fast_set.insert(u);
        if (fast_set != square_units) {
            ok = false;
            break;
        }
        for (long a : us)
            for (long a2 : us) {
                Int inv;
                Int aa(a), nn(n);
                mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t());
                long ratio = static_cast<long>(Int((inv * a2) % n).get_si());
                bool fast = fast_set.contains(ratio);
                bool oracle = square_units.contains(ratio);
                if (fast != oracle) ok = false;
            }
    }

    // m = 4: content test vs the depth-12 generator search
    std::mt19937 gen(424242);
    auto pick = [&](long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    };
    for (int trial = 0; trial < 100; ++trial) {
        TrilinearForm f = TrilinearForm::zero(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int k = j + 1; k <= 4; ++k) f.set(i, j, k, Int(pick(-3, 3)));
        Int c = orbit_invariants(f).content;
        TrilinearForm canonical = TrilinearForm::zero(4);
        if (c != 0) canonical.set(1, 2, 3, c);
        // equal content: the search must connect them within depth 12
        auto w = orbit_connect(f, canonical, 12);
        if (!w) {
            ok = false;
            continue;
        }
        if (apply_gl(*w, f) != canonical) ok = false;
        // different content: search failure is consistent only because the
        // contents differ
        TrilinearForm other = TrilinearForm::zero(4);
        other.set(1, 2, 3, c + 1);
        if (orbit_connect(f, other, 4)) ok = false;
        if (equivalent(f, other).status != IsoStatus::No) ok = false;
    }
    return ok;
}

bool criterion8() {
    std::mt19937 gen(1234321);
    auto pick = [&](long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(gen);
    };
    bool ok = true;
    int done = 0;
    while (done < 100) {
        std::size_t n = static_cast<std::size_t>(pick(1, 6));
        RatMatrix q(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rat v = make_rat(Int(pick(-5, 5)), Int(pick(1, 3)));
                q.at(i, j) = v;
                q.at(j, i) = v;
            }
        if (q.det() == 0) continue;
        ++done;
        IntMatrix p = prefix_nonsingular_basis(q);
        if (!p.is_unimodular()) ok = false;
        RatMatrix t = RatMatrix(p.transpose()).mul(q).mul(RatMatrix(p));
        for (std::size_t i = 1; i <= n; ++i) {
            RatMatrix lead(i, i);
            for (std::size_t a = 0; a < i; ++a)
                for (std::size_t b = 0; b < i; ++b) lead.at(a, b) = t.at(a, b);
            if (lead.det() == 0) ok = false;
        }
    }
    return ok;
}

bool criterion9() {
    bool ok = true;
    for (int m = 1; m <= 6; ++m) {
        Int binom = Int(m) * (m - 1) * (m - 2) / 6;
        if (free_nilpotent_h3_rank(m, 2) != binom) ok = false;
    }
    ok = ok && free_nilpotent_h3_rank(2, 3) == 1;
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 8; ++k) {
            Int total = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) total += d * witt_rank(m, d);
            Int expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
            if (total != expect) ok = false;
        }
    return ok;
}

bool criterion10() {
    std::vector<std::string> fixtures = {"unlink_3.json",        "borromean.json", "borromean_pow_2.json",
                                         "borromean_pow_3.json", "whitehead.json", "mu1234_link.json"};
    bool ok = true;
    for (const auto& name : fixtures) {
        FramedLink l = fixture(name);
        FirstHomology h = first_homology(presentation_matrix(l));
        if (!h.is_torsion_free() || h.betti > 4) ok = false;
        FramedLink m = mirror(l);
        if (compare_integral_2(l, m).status != VerdictStatus::Equivalent) ok = false;
        if (compare_rational_2(l, m).status != VerdictStatus::Equivalent) ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "lens-space classification matches the unit-square rule for n <= 30", criterion1());
    report(2, "linking form of L(n,q) sits in the square class of q for n <= 20", criterion2());
    report(3, "Borromean pipeline and the mu(123)=n family", criterion3());
    report(4, "Whitehead fixture: first nonvanishing mu at length 4, k=2 vs k=3", criterion4());
    report(5, "homology spheres collapse under integral 2-equivalence", criterion5());
    report(6, "H1 and linking-form class survive chain expansion (200 random)", criterion6());
    report(7, "fast paths agree with brute-force oracles (cyclic forms, rank-4 orbits)", criterion7());
    report(8, "prefix-nonsingular bases: unimodular, all leading minors nonzero (100 random)", criterion8());
    report(9, "free-nilpotent H3 ranks and the necklace identity", criterion9());
    report(10, "torsion-free fixtures are equivalent to their mirrors", criterion10());

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
