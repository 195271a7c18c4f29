#include <doctest.h>

#include "oracles.hpp"
#include "surgeq/homology.hpp"

using namespace surgeq;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix diag(const std::vector<long>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

FramedLink unknot(long p, long q) {
    FramedLink l;
    l.framings.emplace_back(Int(p), Int(q));
    l.lk = IntMatrix(1, 1);
    return l;
}

}  // namespace

TEST_CASE("first homology: frozen examples") {
    SUBCASE("[n] gives Z/n") {
        for (long n = 2; n <= 9; ++n) {
            FirstHomology h = first_homology(diag({n}));
            CHECK(h.betti == 0);
            REQUIRE(h.factors.size() == 1);
            CHECK(h.factors[0] == n);
        }
    }
    SUBCASE("0-framed 3-unlink gives Z^3") {
        FirstHomology h = first_homology(IntMatrix(3, 3));
        CHECK(h.betti == 3);
        CHECK(h.factors.empty());
    }
    SUBCASE("[[3,1],[1,2]] gives Z/5") {
        FirstHomology h = first_homology(from_rows({{3, 1}, {1, 2}}));
        CHECK(h.betti == 0);
        REQUIRE(h.factors.size() == 1);
        CHECK(h.factors[0] == 5);
    }
    SUBCASE("unimodular matrices give the trivial group") {
        CHECK(first_homology(from_rows({{2, 1}, {1, 1}})).is_trivial());
        CHECK(first_homology(IntMatrix::identity(4)).is_trivial());
    }
}

TEST_CASE("linking form: frozen examples") {
    SUBCASE("[2] gives lambda = 1/2") {
        LinkingForm f = linking_form(diag({2}));
        REQUIRE(f.orders.size() == 1);
        CHECK(f.orders[0] == 2);
        CHECK(f.values.at(0, 0) == make_rat(1, 2));
    }
    SUBCASE("[n] matches L(n,1)") {
        for (long n = 2; n <= 12; ++n) {
            LinkingForm f = linking_form(diag({n}));
            CHECK(f.values.at(0, 0) == make_rat(1, n));
        }
    }
    SUBCASE("the 5/2 chain gives the class of 2/5") {
        LinkingForm f = linking_form(from_rows({{3, 1}, {1, 2}}));
        REQUIRE(f.orders.size() == 1);
        CHECK(f.orders[0] == 5);
        // 2/5 and 3/5 lie in one square class (3 = 2 * 4^2 mod 5)
        Rat v = f.values.at(0, 0);
        bool in_class = v == make_rat(2, 5) || v == make_rat(3, 5);
        CHECK(in_class);
    }
    SUBCASE("not symmetric is rejected") {
        CHECK_THROWS_AS(linking_form(from_rows({{1, 2}, {0, 1}})), NotSymmetricError);
    }
}

TEST_CASE("linking form equals V^-1 mod 1 for nonsingular V") {
    oracles::Rng rng(607);
    int done = 0;
    while (done < 80) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
        IntMatrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                long x = rng.pick(-5, 5);
                v.at(i, j) = x;
                v.at(j, i) = x;
            }
        if (v.det() == 0) continue;
        ++done;

        LinkingForm f = linking_form(v);
        // under the natural identification coker(V) = sum Z_di with generator
        // lifts U^-1 e_i, lambda(gi, gj) = (U^-1 e_i)^T V^-1 (U^-1 e_j)
        SmithDecomposition s = smith_normal_form(v);
        RatMatrix u_inv = rational_inverse(RatMatrix(s.left));
        RatMatrix v_inv = rational_inverse(RatMatrix(v));
        RatMatrix pairing = u_inv.transpose().mul(v_inv).mul(u_inv);
        std::vector<std::size_t> torsion;
        for (std::size_t i = 0; i < n; ++i)
            if (s.diagonal.at(i, i) > 1) torsion.push_back(i);
        REQUIRE(f.orders.size() == torsion.size());
        for (std::size_t a = 0; a < torsion.size(); ++a)
            for (std::size_t b = 0; b < torsion.size(); ++b)
                CHECK(f.values.at(a, b) == mod1(pairing.at(torsion[a], torsion[b])));
    }
}

TEST_CASE("linking form properties on random symmetric matrices") {
    oracles::Rng rng(11);
    int done = 0;
    while (done < 80) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
        IntMatrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                long x = rng.pick(-5, 5);
                v.at(i, j) = x;
                v.at(j, i) = x;
            }
        ++done;
        LinkingForm f = linking_form(v);  // singular allowed: free part splits off

        // symmetry and denominator constraints
        for (std::size_t i = 0; i < f.rank(); ++i)
            for (std::size_t j = 0; j < f.rank(); ++j) {
                CHECK(f.values.at(i, j) == f.values.at(j, i));
                Int g;
                mpz_gcd(g.get_mpz_t(), f.orders[i].get_mpz_t(), f.orders[j].get_mpz_t());
                CHECK(g % f.values.at(i, j).get_den() == 0);
                CHECK(f.values.at(i, j) >= 0);
                CHECK(f.values.at(i, j) < 1);
            }
        if (v.det() != 0) CHECK(is_nondegenerate(f));
    }
}

TEST_CASE("meridian-class pairing reproduces V^-1 mod 1") {
    oracles::Rng rng(1905);
    int done = 0;
    while (done < 60) {
        std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
        IntMatrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                long x = rng.pick(-5, 5);
                v.at(i, j) = x;
                v.at(j, i) = x;
            }
        if (v.det() == 0) continue;
        ++done;
        LinkingForm f = linking_form(v);
        SmithDecomposition s = smith_normal_form(v);
        std::vector<std::size_t> torsion;
        for (std::size_t i = 0; i < n; ++i)
            if (s.diagonal.at(i, i) > 1) torsion.push_back(i);
        RatMatrix vinv = rational_inverse(RatMatrix(v));
        // class of meridian e_i has coordinates (U e_i) on the generators
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat acc = 0;
                for (std::size_t a = 0; a < torsion.size(); ++a)
                    for (std::size_t b = 0; b < torsion.size(); ++b)
                        acc += Rat(s.left.at(torsion[a], i)) * Rat(s.left.at(torsion[b], j)) * f.values.at(a, b);
                CHECK(mod1(acc) == mod1(vinv.at(i, j)));
            }
    }
}

TEST_CASE("linking form is bilinear and independent of chosen lifts") {
    oracles::Rng rng(7070);
    int done = 0;
    while (done < 50) {
        std::size_t n = static_cast<std::size_t>(rng.pick(2, 4));
        IntMatrix v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                long x = rng.pick(-4, 4);
                v.at(i, j) = x;
                v.at(j, i) = x;
            }
        if (v.det() == 0) continue;
        ++done;
        LinkingForm f = linking_form(v);
        if (f.rank() == 0) continue;

        // bilinearity of the coordinate extension on random elements
        auto pair_elts = [&](const std::vector<long>& a, const std::vector<long>& b) {
            Rat acc = 0;
            for (std::size_t i = 0; i < f.rank(); ++i)
                for (std::size_t j = 0; j < f.rank(); ++j) acc += Rat(a[i]) * Rat(b[j]) * f.values.at(i, j);
            return mod1(acc);
        };
        std::vector<long> x(f.rank()), y(f.rank()), z(f.rank()), xpy(f.rank());
        for (std::size_t i = 0; i < f.rank(); ++i) {
            x[i] = rng.pick(-6, 6);
            y[i] = rng.pick(-6, 6);
            z[i] = rng.pick(-6, 6);
            xpy[i] = x[i] + y[i];
        }
        CHECK(pair_elts(xpy, z) == mod1(pair_elts(x, z) + pair_elts(y, z)));
        CHECK(pair_elts(x, y) == pair_elts(y, x));

        // lift independence: lambda(g_i, g_j) via x~^T V^-1 y~ is unchanged
        // when either lift moves by a column combination of V
        RatMatrix vinv = rational_inverse(RatMatrix(v));
        SmithDecomposition s = smith_normal_form(v);
        RatMatrix u_inv = rational_inverse(RatMatrix(s.left));
        std::vector<std::size_t> torsion;
        for (std::size_t i = 0; i < n; ++i)
            if (s.diagonal.at(i, i) > 1) torsion.push_back(i);
        for (std::size_t a = 0; a < torsion.size(); ++a)
            for (std::size_t b = 0; b < torsion.size(); ++b) {
                std::vector<Rat> lift_a(n), lift_b(n);
                for (std::size_t r = 0; r < n; ++r) {
                    lift_a[r] = u_inv.at(r, torsion[a]);
                    lift_b[r] = u_inv.at(r, torsion[b]);
                }
                // shift lift_a by V * w  for a random integer w
                std::vector<long> w(n);
                for (std::size_t r = 0; r < n; ++r) w[r] = rng.pick(-3, 3);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) lift_a[r] += Rat(v.at(r, c)) * Rat(w[c]);
                Rat acc = 0;
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) acc += lift_a[r] * vinv.at(r, c) * lift_b[c];
                CHECK(mod1(acc) == f.values.at(a, b));
            }
    }
}

TEST_CASE("rational-matrix linking form agrees with the lens convention") {
    SUBCASE("lens spaces: lambda(1,1) = q/n") {
        for (long n = 2; n <= 12; ++n)
            for (long q = 1; q < n; ++q) {
                Int g;
                Int qq(q), nn(n);
                mpz_gcd(g.get_mpz_t(), qq.get_mpz_t(), nn.get_mpz_t());
                if (g != 1) continue;
                LinkingForm f = linking_form_rational(unknot(n, q));
                REQUIRE(f.orders.size() == 1);
                CHECK(f.orders[0] == n);
                CHECK(f.values.at(0, 0) == make_rat(q, n));
            }
    }
    SUBCASE("longitudinal surgery is rejected") {
        CHECK_THROWS_AS(linking_form_rational(unknot(0, 1)), SingularError);
    }
}

TEST_CASE("nondegeneracy check rejects a degenerate matrix") {
    LinkingForm f;
    f.orders = {Int(4)};
    f.values = RatMatrix(1, 1);
    f.values.at(0, 0) = make_rat(1, 2);  // 2/4: pairing has kernel Z2
    CHECK_FALSE(is_nondegenerate(f));
    f.values.at(0, 0) = make_rat(1, 4);
    CHECK(is_nondegenerate(f));
}
