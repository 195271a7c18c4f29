#include "surgeq/linking_iso.hpp"

#include <algorithm>
#include <map>

namespace surgeq {

IsoAnswer IsoAnswer::yes(IntMatrix w, std::string why) {
    return IsoAnswer{IsoStatus::Yes, std::move(w), std::move(why)};
}
IsoAnswer IsoAnswer::no(std::string why) { return IsoAnswer{IsoStatus::No, std::nullopt, std::move(why)}; }
IsoAnswer IsoAnswer::unknown(std::string why) { return IsoAnswer{IsoStatus::Unknown, std::nullopt, std::move(why)}; }

Int cyclic_class(const LinkingForm& form) {
    if (form.rank() != 1) throw NotCyclicError("cyclic_class: group is not cyclic");
    const Int& n = form.orders[0];
    Rat v = mod1(form.values.at(0, 0));
    // v = a/n with gcd(a, n) = 1
    Rat scaled = v * Rat(n);
    if (scaled.get_den() != 1) throw DegenerateError("cyclic_class: value denominator does not divide the order");
    Int a = scaled.get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw DegenerateError("cyclic_class: self-linking is not a unit");
    return a;
}

namespace {

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int pow_int(const Int& b, int e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

bool is_square_unit(const Int& a, const Int& n) {
    if (n < 1) throw LinkingIsoError("is_square_unit: modulus must be positive");
    if (n == 1) return true;
    Int am;
    mpz_fdiv_r(am.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), n.get_mpz_t());
    if (g != 1) return false;

    for (const auto& [p, e] : factorize(n)) {
        Int pe = pow_int(p, e);
        Int u;
        mpz_fdiv_r(u.get_mpz_t(), am.get_mpz_t(), pe.get_mpz_t());
        if (p == 2) {
            if (e == 1) continue;
            Int mod8 = e == 2 ? Int(4) : Int(8);
            if (u % mod8 != 1) return false;
        } else {
            // Euler criterion mod p
            Int exp = (p - 1) / 2, r;
            mpz_powm(r.get_mpz_t(), u.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
            if (r != 1) return false;
        }
    }
    return true;
}

namespace {

Rat pair_elements(const LinkingForm& f, const std::vector<Int>& v, const std::vector<Int>& w) {
    Rat acc = 0;
    for (std::size_t i = 0; i < f.rank(); ++i)
        for (std::size_t j = 0; j < f.rank(); ++j) acc += Rat(v[i]) * Rat(w[j]) * f.values.at(i, j);
    return mod1(acc);
}

bool is_bijective(const std::vector<Int>& orders_from, const std::vector<Int>& orders_to, const IntMatrix& w) {
    if (orders_from.size() != orders_to.size()) return false;
    const std::size_t t = orders_from.size();
    Int o1 = 1, o2 = 1;
    for (const Int& d : orders_from) o1 *= d;
    for (const Int& d : orders_to) o2 *= d;
    if (o1 != o2) return false;
    if (t == 0) return true;
    // surjective (hence bijective): coker of [W | diag(orders_to)] trivial
    IntMatrix stacked(t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) stacked.at(i, j) = w.at(i, j);
        stacked.at(i, t + i) = orders_to[i];
    }
    SmithDecomposition s = smith_normal_form(stacked);
    for (std::size_t i = 0; i < t; ++i)
        if (s.diagonal.at(i, i) != 1) return false;
    return true;
}

struct PrimaryBlock {
    std::vector<Int> orders;            // p-power orders, ascending
    std::vector<std::size_t> sources;   // index of the originating generator
    std::vector<Int> multipliers;       // h_j = m_j * g_{source_j}
    RatMatrix values;
};

PrimaryBlock primary_block(const LinkingForm& f, const Int& p) {
    PrimaryBlock b;
    for (std::size_t j = 0; j < f.rank(); ++j) {
        Int d = f.orders[j], pe = 1;
        while (d % p == 0) {
            d /= p;
            pe *= p;
        }
        if (pe == 1) continue;
        b.orders.push_back(pe);
        b.sources.push_back(j);
        b.multipliers.push_back(f.orders[j] / pe);
    }
    const std::size_t t = b.orders.size();
    b.values = RatMatrix(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            b.values.at(i, j) =
                mod1(Rat(b.multipliers[i]) * Rat(b.multipliers[j]) * f.values.at(b.sources[i], b.sources[j]));
    return b;
}

LinkingForm block_as_form(const PrimaryBlock& b) {
    LinkingForm f;
    f.orders = b.orders;
    f.values = b.values;
    return f;
}

// Lexicographic backtracking over generator images inside one primary block.
// Elements are coordinate vectors; candidate images of g_j must be killed by
// its order and must reproduce the pairings chosen so far.
class BlockSearch {
public:
    BlockSearch(const LinkingForm& f1, const LinkingForm& f2) : f1_(f1), f2_(f2), t_(f1.rank()) {}

    std::optional<IntMatrix> run() {
        images_.assign(t_, {});
        if (search(0)) {
            IntMatrix w(t_, t_);
            for (std::size_t j = 0; j < t_; ++j)
                for (std::size_t i = 0; i < t_; ++i) w.at(i, j) = images_[j][i];
            return w;
        }
        return std::nullopt;
    }

private:
    bool search(std::size_t j) {
        if (j == t_) {
            IntMatrix w(t_, t_);
            for (std::size_t c = 0; c < t_; ++c)
                for (std::size_t r = 0; r < t_; ++r) w.at(r, c) = images_[c][r];
            return is_bijective(f1_.orders, f2_.orders, w);
        }
        std::vector<Int> v(t_, 0);
        return enumerate(j, v, 0);
    }

    bool enumerate(std::size_t j, std::vector<Int>& v, std::size_t coord) {
        if (coord == t_) {
            if (!pairings_match(j, v)) return false;
            images_[j] = v;
            if (search(j + 1)) return true;
            images_[j].clear();
            return false;
        }
        // killed by order of g_j: coordinate i must be a multiple of
        // orders2[i] / gcd(orders2[i], order1[j])
        Int g;
        mpz_gcd(g.get_mpz_t(), f2_.orders[coord].get_mpz_t(), f1_.orders[j].get_mpz_t());
        Int step = f2_.orders[coord] / g;
        for (Int x = 0; x < f2_.orders[coord]; x += step) {
            v[coord] = x;
            if (enumerate(j, v, coord + 1)) return true;
        }
        return false;
    }

    bool pairings_match(std::size_t j, const std::vector<Int>& v) const {
        for (std::size_t a = 0; a < j; ++a)
            if (pair_elements(f2_, images_[a], v) != mod1(f1_.values.at(a, j))) return false;
        return pair_elements(f2_, v, v) == mod1(f1_.values.at(j, j));
    }

    const LinkingForm& f1_;
    const LinkingForm& f2_;
    std::size_t t_;
    std::vector<std::vector<Int>> images_;
};

}  // namespace

bool witness_carries(const LinkingForm& f1, const LinkingForm& f2, const IntMatrix& w) {
    const std::size_t t = f1.rank();
    if (f2.rank() != t || w.rows() != t || w.cols() != t) return false;
    // column j of w expresses the j-th generator of f2's group in f1's
    // generators; transporting f1's values must reproduce f2's:
    // w^T L1 w = L2 mod 1
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Rat acc = 0;
            for (std::size_t a = 0; a < t; ++a)
                for (std::size_t b = 0; b < t; ++b) acc += Rat(w.at(a, i)) * Rat(w.at(b, j)) * f1.values.at(a, b);
            if (mod1(acc) != mod1(f2.values.at(i, j))) return false;
        }
    // well-defined: order of g_j^(2) kills the image
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t i = 0; i < t; ++i)
            if ((f2.orders[j] * w.at(i, j)) % f1.orders[i] != 0) return false;
    return is_bijective(f2.orders, f1.orders, w);
}

IsoAnswer isomorphic(const LinkingForm& f1, const LinkingForm& f2, const Int& bound) {
    if (f1.orders != f2.orders) return IsoAnswer::no("invariant factors differ");
    const std::size_t t = f1.rank();
    if (t == 0) return IsoAnswer::yes(IntMatrix(0, 0), "trivial torsion");

    if (t == 1) {
        Int n = f1.orders[0];
        Int a1, a2;
        try {
            a1 = cyclic_class(f1);
            a2 = cyclic_class(f2);
        } catch (const DegenerateError& e) {
            return IsoAnswer::unknown(std::string("degenerate form: ") + e.what());
        }
        // need unit k with k^2 a1 = a2 mod n (the witness scales f1's
        // generator and must reproduce f2's value)
        Int a1inv;
        if (mpz_invert(a1inv.get_mpz_t(), a1.get_mpz_t(), n.get_mpz_t()) == 0)
            return IsoAnswer::unknown("degenerate form");
        if (!is_square_unit(a2 * a1inv, n))
            return IsoAnswer::no("cyclic classes differ modulo square units: " + a1.get_str() + " vs " + a2.get_str() +
                                 " mod " + n.get_str());
        for (Int k = 1; k < n; ++k) {
            Int g;
            mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), n.get_mpz_t());
            if (g != 1) continue;
            if ((k * k * a1 - a2) % n == 0) {
                IntMatrix w(1, 1);
                w.at(0, 0) = k;
                if (!witness_carries(f1, f2, w)) break;
                return IsoAnswer::yes(std::move(w), "unit-square class match");
            }
        }
        return IsoAnswer::unknown("unit-square test passed but no witness found");
    }

    if (f1.group_order() > bound)
        return IsoAnswer::unknown("non-cyclic torsion of order " + f1.group_order().get_str() +
                                  " exceeds the brute-force bound " + bound.get_str());

    // primary decomposition: blocks for distinct primes are orthogonal
    std::vector<std::pair<Int, int>> primes = factorize(f1.group_order());
    IntMatrix witness(t, t);
    struct Solved {
        PrimaryBlock b1, b2;
        IntMatrix w;
    };
    std::vector<Solved> solved;
    for (const auto& [p, e] : primes) {
        PrimaryBlock b1 = primary_block(f1, p);
        PrimaryBlock b2 = primary_block(f2, p);
        LinkingForm pf1 = block_as_form(b1), pf2 = block_as_form(b2);
        std::optional<IntMatrix> w;
        if (b1.orders.size() == 1) {
            IsoAnswer sub = isomorphic(pf1, pf2, bound);
            if (sub.status == IsoStatus::No)
                return IsoAnswer::no("p = " + p.get_str() + " blocks differ: " + sub.reason);
            if (sub.status == IsoStatus::Unknown) return IsoAnswer::unknown(sub.reason);
            w = sub.witness;
        } else {
            // images of pf2's generators inside pf1's group
            w = BlockSearch(pf2, pf1).run();
            if (!w)
                return IsoAnswer::no("no form-preserving isomorphism on the " + p.get_str() + "-primary block");
        }
        solved.push_back({std::move(b1), std::move(b2), std::move(*w)});
    }

    // g_j^(2) splits as sum over primes of alpha_{j,p} h_{j,p}; push each
    // part through its block witness into f1's generators
    for (std::size_t j = 0; j < t; ++j) {
        std::vector<std::pair<std::size_t, std::size_t>> parts;  // (block, index inside block)
        for (std::size_t s = 0; s < solved.size(); ++s) {
            const auto& src = solved[s].b2.sources;
            auto it = std::find(src.begin(), src.end(), j);
            if (it != src.end()) parts.emplace_back(s, static_cast<std::size_t>(it - src.begin()));
        }
        for (const auto& [s, idx] : parts) {
            const Int& pe = solved[s].b2.orders[idx];        // p-power order of the part
            const Int& mj = solved[s].b2.multipliers[idx];   // h = m * g
            // alpha * m_j = 1 mod pe, anything mod the rest
            Int alpha;
            if (mpz_invert(alpha.get_mpz_t(), mj.get_mpz_t(), pe.get_mpz_t()) == 0)
                return IsoAnswer::unknown("internal CRT failure");
            for (std::size_t r = 0; r < solved[s].b1.orders.size(); ++r) {
                const Int& coeff = solved[s].w.at(r, idx);
                std::size_t gi = solved[s].b1.sources[r];
                witness.at(gi, j) += alpha * coeff * solved[s].b1.multipliers[r];
            }
        }
        for (std::size_t i = 0; i < t; ++i)
            mpz_fdiv_r(witness.at(i, j).get_mpz_t(), witness.at(i, j).get_mpz_t(), f1.orders[i].get_mpz_t());
    }

    if (!witness_carries(f1, f2, witness)) return IsoAnswer::unknown("assembled witness failed its check");
    return IsoAnswer::yes(std::move(witness), "primary-block isomorphisms assembled");
}

}  // namespace surgeq
