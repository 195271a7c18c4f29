#include "surgeq/milnor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace surgeq {

MagnusSeries MagnusSeries::one(int truncation) {
    MagnusSeries s(truncation);
    s.terms_[{}] = 1;
    return s;
}

Int MagnusSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void MagnusSeries::set(const Monomial& m, Int c) {
    if (static_cast<int>(m.size()) > trunc_) return;
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

MagnusSeries MagnusSeries::mul(const MagnusSeries& o) const {
    MagnusSeries r(trunc_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (static_cast<int>(ma.size() + mb.size()) > trunc_) continue;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            auto [it, fresh] = r.terms_.try_emplace(m, 0);
            it->second += ca * cb;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

MagnusSeries magnus_expand(const FreeWord& w, int truncation) {
    if (truncation < 1) throw MilnorError("magnus_expand: truncation must be >= 1");
    MagnusSeries acc = MagnusSeries::one(truncation);
    for (const GenLetter& l : w.letters()) {
        MagnusSeries f(truncation);
        // x -> 1 + X;  x^-1 -> 1 - X + X^2 - ...
        f.set({}, 1);
        MagnusSeries::Monomial m;
        Int sign = l.exp;
        for (int d = 1; d <= truncation; ++d) {
            m.push_back(l.gen);
            f.set(m, sign);
            if (l.exp == 1) break;  // inverse keeps the whole geometric tail
            sign = -sign;
        }
        acc = acc.mul(f);
    }
    return acc;
}

namespace {

// sigma_i: x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i  (inverse letters give
// the inverse automorphism); images composed along the braid word.
void apply_letter(std::vector<FreeWord>& img, const BraidLetter& l) {
    const std::size_t i = static_cast<std::size_t>(l.index) - 1;
    FreeWord a = img[i], b = img[i + 1];
    if (l.sign == 1) {
        img[i] = a * b * a.inverse();
        img[i + 1] = a;
    } else {
        img[i] = b;
        img[i + 1] = b.inverse() * a * b;
    }
}

}  // namespace

std::vector<FreeWord> artin_longitudes(const BraidWord& braid) {
    if (!braid.is_pure()) throw NotPureError("artin_longitudes: braid is not pure");
    const int n = braid.strands;
    std::vector<FreeWord> img;
    img.reserve(n);
    for (int i = 1; i <= n; ++i) img.push_back(FreeWord::generator(i));
    for (const BraidLetter& l : braid.letters) apply_letter(img, l);

    std::vector<FreeWord> longs;
    longs.reserve(n);
    for (int i = 0; i < n; ++i) {
        const FreeWord& u = img[i];
        // pure braid: image of x_{i+1} is w x_{i+1} w^-1; peel the conjugator
        const auto& ls = u.letters();
        if (ls.size() % 2 == 0) throw MilnorError("artin_longitudes: image is not a conjugate");
        std::size_t half = ls.size() / 2;
        if (ls[half].gen != i + 1 || ls[half].exp != 1)
            throw MilnorError("artin_longitudes: image is not a conjugate of the meridian");
        FreeWord w(std::vector<GenLetter>(ls.begin(), ls.begin() + half));
        Int e = w.exponent_sum(i + 1);
        if (!e.fits_slong_p()) throw MilnorError("artin_longitudes: framing correction overflow");
        longs.push_back(w * FreeWord::generator(i + 1).power(-e.get_si()));
    }
    return longs;
}

std::vector<FreeWord> link_longitudes(const FramedLink& link) {
    if (link.longitudes) return *link.longitudes;
    if (link.braid) return artin_longitudes(*link.braid);
    throw NoLongitudeDataError("link has neither longitude words nor a braid");
}

namespace {

Int gcd(Int a, Int b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Raw Magnus coefficient of mu(I): coefficient of X_{i1}..X_{i_{r-1}} in the
// longitude of component i_r.
Int raw_mu(const std::vector<FreeWord>& longs, const std::vector<int>& index) {
    std::vector<int> mono(index.begin(), index.end() - 1);
    const FreeWord& ell = longs[static_cast<std::size_t>(index.back()) - 1];
    return magnus_expand(ell, static_cast<int>(mono.size())).coefficient(mono);
}

void proper_subsequences(const std::vector<int>& index, std::set<std::vector<int>>& out) {
    const std::size_t r = index.size();
    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) sub.push_back(index[i]);
        if (sub.size() >= 2) out.insert(sub);
    }
}

}  // namespace

MuInvariant mu_bar(const FramedLink& link, const std::vector<int>& index) {
    if (index.size() < 2) throw MilnorError("mu_bar: index must have length >= 2");
    const int m = static_cast<int>(link.components());
    for (int i : index)
        if (i < 1 || i > m) throw IndexOutOfRangeError("mu_bar: component index out of range");
    std::vector<FreeWord> longs = link_longitudes(link);

    MuInvariant mu;
    mu.index = index;
    mu.value = raw_mu(longs, index);

    // Milnor's indeterminacy: gcd of mu over proper sub-indices and their
    // cyclic permutations.
    std::set<std::vector<int>> subs;
    proper_subsequences(index, subs);
    Int delta = 0;
    for (const std::vector<int>& s : subs) {
        std::vector<int> rot = s;
        for (std::size_t k = 0; k < s.size(); ++k) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            delta = gcd(delta, raw_mu(longs, rot));
        }
    }
    mu.modulus = delta;
    if (delta > 0) mpz_fdiv_r(mu.value.get_mpz_t(), mu.value.get_mpz_t(), delta.get_mpz_t());
    return mu;
}

std::map<std::vector<int>, Int> mu_table(const FramedLink& link, int length) {
    if (length < 2) throw MilnorError("mu_table: length must be >= 2");
    std::vector<FreeWord> longs = link_longitudes(link);
    const int m = static_cast<int>(link.components());

    std::map<std::vector<int>, Int> out;
    std::vector<MagnusSeries> expanded;
    expanded.reserve(longs.size());
    for (const FreeWord& ell : longs) expanded.push_back(magnus_expand(ell, length - 1));

    std::vector<int> idx(length, 1);
    for (;;) {
        std::vector<int> mono(idx.begin(), idx.end() - 1);
        out[idx] = expanded[static_cast<std::size_t>(idx.back()) - 1].coefficient(mono);
        int pos = length - 1;
        while (pos >= 0 && idx[pos] == m) idx[pos--] = 1;
        if (pos < 0) break;
        ++idx[pos];
    }
    return out;
}

std::optional<int> first_nonvanishing_length(const FramedLink& link, int max_length) {
    for (int r = 2; r <= max_length; ++r)
        for (const auto& [idx, v] : mu_table(link, r))
            if (v != 0) return r;
    return std::nullopt;
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

Int witt_rank(int m, int k) {
    if (m < 1 || k < 1) throw MilnorError("witt_rank: wants m, k >= 1");
    Int total = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        Int term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k / d));
        total += mobius(d) * term;
    }
    if (total % k != 0) throw MilnorError("witt_rank: divisibility failure");
    return total / k;
}

Int free_nilpotent_h3_rank(int m, int k) {
    if (m < 1 || k < 2) throw MilnorError("free_nilpotent_h3_rank: wants m >= 1, k >= 2");
    Int total = 0;
    for (int i = k; i <= 2 * k - 2; ++i) total += m * witt_rank(m, i) - witt_rank(m, i + 1);
    return total;
}

}  // namespace surgeq
