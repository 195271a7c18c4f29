#include "surgeq/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace surgeq {

Framing::Framing(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q < 1) throw PresentationError("framing: q must be positive");
    Int g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (p == 0 ? q != 1 : g != 1) throw PresentationError("framing: p/q not in lowest terms");
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);  // perm[pos] = strand currently at pos
    for (const BraidLetter& l : letters) {
        if (l.index < 1 || l.index >= strands) throw PresentationError("braid letter index out of range");
        std::swap(perm[l.index - 1], perm[l.index]);
    }
    // image[i] = final position of the strand that started at i
    std::vector<int> image(strands);
    for (int pos = 0; pos < strands; ++pos) image[perm[pos]] = pos;
    return image;
}

bool BraidWord::is_pure() const {
    std::vector<int> image = permutation();
    for (int i = 0; i < strands; ++i)
        if (image[i] != i) return false;
    return true;
}

IntMatrix BraidWord::closure_linking() const {
    if (!is_pure()) throw PresentationError("closure_linking: braid is not pure");
    IntMatrix twice(strands, strands);
    std::vector<int> at(strands);  // strand at each position
    std::iota(at.begin(), at.end(), 0);
    for (const BraidLetter& l : letters) {
        int a = at[l.index - 1], b = at[l.index];
        twice.at(a, b) += l.sign;
        twice.at(b, a) += l.sign;
        std::swap(at[l.index - 1], at[l.index]);
    }
    IntMatrix lk(strands, strands);
    for (int i = 0; i < strands; ++i)
        for (int j = 0; j < strands; ++j) {
            if (i == j) continue;
            if (twice.at(i, j) % 2 != 0) throw PresentationError("closure_linking: odd crossing count in pure braid");
            lk.at(i, j) = twice.at(i, j) / 2;
        }
    return lk;
}

BraidWord BraidWord::mirrored() const {
    BraidWord m = *this;
    for (BraidLetter& l : m.letters) l.sign = -l.sign;
    return m;
}

FreeWord::FreeWord(std::vector<GenLetter> letters) : letters_(std::move(letters)) {
    for (const GenLetter& l : letters_) {
        if (l.gen < 1 || (l.exp != 1 && l.exp != -1))
            throw PresentationError("free word letter out of range");
    }
    reduce();
}

FreeWord FreeWord::generator(int gen, int exp) {
    FreeWord w;
    long e = exp;
    int sign = e >= 0 ? 1 : -1;
    for (long i = 0; i < std::abs(e); ++i) w.letters_.push_back({gen, sign});
    return w;
}

void FreeWord::reduce() {
    std::vector<GenLetter> out;
    for (const GenLetter& l : letters_) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
    return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    FreeWord w;
    w.letters_ = letters_;
    w.letters_.insert(w.letters_.end(), o.letters_.begin(), o.letters_.end());
    w.reduce();
    return w;
}

FreeWord FreeWord::conjugated_by(const FreeWord& g) const { return g * *this * g.inverse(); }

FreeWord FreeWord::power(long e) const {
    FreeWord base = e >= 0 ? *this : inverse();
    FreeWord w;
    for (long i = 0; i < std::abs(e); ++i) w = w * base;
    return w;
}

FreeWord FreeWord::letters_inverted() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (const GenLetter& l : letters_) w.letters_.push_back({l.gen, -l.exp});
    w.reduce();
    return w;
}

Int FreeWord::exponent_sum(int gen) const {
    Int s = 0;
    for (const GenLetter& l : letters_)
        if (l.gen == gen) s += l.exp;
    return s;
}

int FreeWord::max_generator() const {
    int m = 0;
    for (const GenLetter& l : letters_) m = std::max(m, l.gen);
    return m;
}

std::string FreeWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << " ";
        os << "x" << letters_[i].gen;
        if (letters_[i].exp == -1) os << "^-1";
    }
    return os.str();
}

FreeWord FreeWord::parse(const std::string& s) {
    std::istringstream is(s);
    std::string tok;
    std::vector<GenLetter> letters;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 'x') throw PresentationError("bad word token: " + tok);
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        int gen = 0;
        try {
            gen = std::stoi(idx);
        } catch (...) {
            throw PresentationError("bad word token: " + tok);
        }
        int exp = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            if (e == "-1")
                exp = -1;
            else if (e == "1")
                exp = 1;
            else
                throw PresentationError("bad word exponent (only +/-1 letters): " + tok);
        }
        if (gen < 1) throw PresentationError("bad word token: " + tok);
        letters.push_back({gen, exp});
    }
    return FreeWord(std::move(letters));
}

void FramedLink::validate() const {
    const std::size_t m = components();
    if (lk.rows() != m || lk.cols() != m) throw PresentationError("lk matrix size does not match component count");
    for (std::size_t i = 0; i < m; ++i) {
        if (lk.at(i, i) != 0) throw PresentationError("lk diagonal must be zero");
        for (std::size_t j = i + 1; j < m; ++j)
            if (lk.at(i, j) != lk.at(j, i)) throw PresentationError("lk matrix must be symmetric");
    }
    for (const Framing& f : framings) Framing check(f.p, f.q);
    if (braid) {
        if (static_cast<std::size_t>(braid->strands) != m)
            throw PresentationError("braid strand count does not match component count");
        if (!braid->is_pure()) throw PresentationError("braid is not pure");
        if (braid->closure_linking() != lk) throw PresentationError("braid closure linking numbers do not match lk");
    }
    if (longitudes) {
        if (longitudes->size() != m) throw PresentationError("longitude count does not match component count");
        for (std::size_t i = 0; i < m; ++i) {
            const FreeWord& w = (*longitudes)[i];
            if (w.max_generator() > static_cast<int>(m))
                throw PresentationError("longitude uses a meridian beyond the component count");
            for (std::size_t j = 0; j < m; ++j) {
                Int want = (i == j) ? Int(0) : lk.at(i, j);
                if (w.exponent_sum(static_cast<int>(j) + 1) != want)
                    throw PresentationError("longitude exponent sums do not match lk");
            }
        }
    }
}

bool FramedLink::all_integral() const {
    return std::all_of(framings.begin(), framings.end(), [](const Framing& f) { return f.is_integral(); });
}

bool FramedLink::zero_framed_unlinked() const {
    return lk.is_zero() && std::all_of(framings.begin(), framings.end(),
                                       [](const Framing& f) { return f.p == 0 && f.q == 1; });
}

IntMatrix presentation_matrix(const FramedLink& link) {
    const std::size_t m = link.components();
    IntMatrix a(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        a.at(i, i) = link.framings[i].p;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) a.at(i, j) = link.framings[i].q * link.lk.at(i, j);
    }
    return a;
}

std::vector<Int> chain_expansion(const Int& p, const Int& q) {
    if (p <= 0 || q <= 0) throw PresentationError("chain_expansion: wants p, q > 0");
    std::vector<Int> out;
    Int num = p, den = q;
    while (den != 0) {
        Int a;
        mpz_cdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.push_back(a);
        Int next_num = den;
        Int next_den = a * den - num;  // in [0, den)
        num = next_num;
        den = next_den;
    }
    return out;
}

FramedLink expand_to_integral(const FramedLink& link) {
    if (link.all_integral()) return link;

    std::vector<std::vector<Int>> chains(link.components());
    std::size_t total = 0;
    for (std::size_t i = 0; i < link.components(); ++i) {
        const Framing& f = link.framings[i];
        if (f.is_integral()) {
            chains[i] = {f.p};
        } else if (f.p > 0) {
            chains[i] = chain_expansion(f.p, f.q);
        } else {
            chains[i] = chain_expansion(-f.p, f.q);
            for (Int& a : chains[i]) a = -a;
        }
        total += chains[i].size();
    }

    FramedLink out;
    out.lk = IntMatrix(total, total);
    std::vector<std::size_t> head(link.components());  // index of c1 per original component
    std::size_t pos = 0;
    for (std::size_t i = 0; i < link.components(); ++i) {
        head[i] = pos;
        for (std::size_t t = 0; t < chains[i].size(); ++t) {
            out.framings.emplace_back(chains[i][t], Int(1));
            if (t + 1 < chains[i].size()) {
                out.lk.at(pos + t, pos + t + 1) = 1;
                out.lk.at(pos + t + 1, pos + t) = 1;
            }
        }
        pos += chains[i].size();
    }
    for (std::size_t i = 0; i < link.components(); ++i)
        for (std::size_t j = 0; j < link.components(); ++j)
            if (i != j) out.lk.at(head[i], head[j]) = link.lk.at(i, j);
    return out;
}

FramedLink mirror(const FramedLink& link) {
    FramedLink out = link;
    for (Framing& f : out.framings) f.p = -f.p;
    out.lk = link.lk.negated();
    if (out.braid) out.braid = out.braid->mirrored();
    if (out.longitudes)
        for (FreeWord& w : *out.longitudes) w = w.letters_inverted();
    return out;
}

bool is_admissible_2surgery(const FramedLink& link) {
    if (!link.lk.is_zero()) return false;
    return std::all_of(link.framings.begin(), link.framings.end(),
                       [](const Framing& f) { return f.q == 1 && (f.p == 1 || f.p == -1); });
}

bool is_admissible_rational_2surgery(const FramedLink& link) {
    return RatMatrix(presentation_matrix(link)).det() != 0;
}

}  // namespace surgeq
