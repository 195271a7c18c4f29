#include "surgeq/trilinear.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "surgeq/milnor.hpp"

namespace surgeq {

namespace {

// Sorts a triple, returning the permutation sign (0 on repeats).
int sort_triple(int& i, int& j, int& k) {
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (j > k) {
        std::swap(j, k);
        sign = -sign;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (i == j || j == k) return 0;
    return sign;
}

}  // namespace

Int TrilinearForm::coefficient(int i, int j, int k) const {
    int sign = sort_triple(i, j, k);
    if (sign == 0) return 0;
    auto it = coeffs.find({i, j, k});
    return it == coeffs.end() ? Int(0) : Int(sign * it->second);
}

void TrilinearForm::set(int i, int j, int k, const Int& c) {
    int sign = sort_triple(i, j, k);
    if (sign == 0) throw TrilinearError("TrilinearForm::set: repeated index");
    if (i < 1 || k > m) throw DimensionMismatchError("TrilinearForm::set: index out of range");
    Triple t{i, j, k};
    if (c == 0)
        coeffs.erase(t);
    else
        coeffs[t] = sign * c;
}

TrilinearForm TrilinearForm::negated() const {
    TrilinearForm f = *this;
    for (auto& [t, c] : f.coeffs) c = -c;
    return f;
}

std::string TrilinearForm::to_string() const {
    std::ostringstream os;
    os << "m=" << m << " {";
    bool first = true;
    for (const auto& [t, c] : coeffs) {
        if (!first) os << ", ";
        os << t[0] << "," << t[1] << "," << t[2] << ": " << c.get_str();
        first = false;
    }
    os << "}";
    return os.str();
}

Int evaluate(const TrilinearForm& f, const std::vector<Int>& u, const std::vector<Int>& v,
             const std::vector<Int>& w) {
    const std::size_t m = static_cast<std::size_t>(f.m);
    if (u.size() != m || v.size() != m || w.size() != m)
        throw DimensionMismatchError("evaluate: vector length does not match form rank");
    Int acc = 0;
    for (const auto& [t, c] : f.coeffs) {
        std::size_t i = static_cast<std::size_t>(t[0]) - 1;
        std::size_t j = static_cast<std::size_t>(t[1]) - 1;
        std::size_t k = static_cast<std::size_t>(t[2]) - 1;
        Int det = u[i] * (v[j] * w[k] - v[k] * w[j]) - v[i] * (u[j] * w[k] - u[k] * w[j]) +
                  w[i] * (u[j] * v[k] - u[k] * v[j]);
        acc += c * det;
    }
    return acc;
}

TrilinearForm apply_gl(const IntMatrix& p, const TrilinearForm& f) {
    const int m = f.m;
    if (p.rows() != static_cast<std::size_t>(m) || p.cols() != static_cast<std::size_t>(m))
        throw DimensionMismatchError("apply_gl: matrix size does not match form rank");
    TrilinearForm out = TrilinearForm::zero(m);
    for (int r = 1; r <= m; ++r)
        for (int s = r + 1; s <= m; ++s)
            for (int t = s + 1; t <= m; ++t) {
                Int acc = 0;
                for (const auto& [idx, c] : f.coeffs) {
                    const int i = idx[0], j = idx[1], k = idx[2];
                    // det of P rows {r,s,t}, columns {i,j,k}
                    const Int &a = p.at(r - 1, i - 1), &b = p.at(r - 1, j - 1), &cc = p.at(r - 1, k - 1);
                    const Int &d = p.at(s - 1, i - 1), &e = p.at(s - 1, j - 1), &ff = p.at(s - 1, k - 1);
                    const Int &g = p.at(t - 1, i - 1), &h = p.at(t - 1, j - 1), &ii = p.at(t - 1, k - 1);
                    acc += c * (a * (e * ii - ff * h) - b * (d * ii - ff * g) + cc * (d * h - e * g));
                }
                if (acc != 0) out.coeffs[{r, s, t}] = acc;
            }
    return out;
}

TrilinearForm from_mu_triple(const FramedLink& link) {
    for (const Framing& f : link.framings)
        if (!(f.p == 0 && f.q == 1)) throw NotZeroFramedError("from_mu_triple: framings must all be 0/1");
    if (!link.lk.is_zero()) throw LinkingNonzeroError("from_mu_triple: pairwise linking numbers must vanish");
    if (!link.longitudes && !link.braid)
        throw NoLongitudeDataError("from_mu_triple: need longitude words or a braid");

    const int m = static_cast<int>(link.components());
    TrilinearForm f = TrilinearForm::zero(m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int k = j + 1; k <= m; ++k) {
                MuInvariant mu = mu_bar(link, {i, j, k});
                if (mu.modulus != 0)
                    throw TrilinearError("from_mu_triple: length-3 invariant has nonzero indeterminacy");
                if (mu.value != 0) f.coeffs[{i, j, k}] = mu.value;
            }
    return f;
}

std::string OrbitInvariants::to_string() const {
    std::ostringstream os;
    os << "m=" << m << " content=" << content.get_str() << " contraction=[";
    for (std::size_t i = 0; i < contraction_factors.size(); ++i)
        os << (i ? "," : "") << contraction_factors[i].get_str();
    os << "]";
    return os.str();
}

OrbitInvariants orbit_invariants(const TrilinearForm& f) {
    OrbitInvariants inv;
    inv.m = f.m;
    inv.content = 0;
    for (const auto& [t, c] : f.coeffs) {
        Int a = abs(c);
        mpz_gcd(inv.content.get_mpz_t(), inv.content.get_mpz_t(), a.get_mpz_t());
    }

    const int m = f.m;
    const std::size_t pairs = m >= 2 ? static_cast<std::size_t>(m) * (m - 1) / 2 : 0;
    IntMatrix contraction(static_cast<std::size_t>(m), pairs);
    std::size_t col = 0;
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k, ++col)
            for (int i = 1; i <= m; ++i) contraction.at(i - 1, col) = f.coefficient(i, j, k);
    SmithDecomposition s = smith_normal_form(contraction);
    for (std::size_t i = 0; i < std::min(contraction.rows(), contraction.cols()); ++i)
        if (s.diagonal.at(i, i) != 0) inv.contraction_factors.push_back(s.diagonal.at(i, i));
    return inv;
}

namespace {

// --- the Lambda^3 Z^4 <-> Z^4 duality ---------------------------------------
// v is defined by  omega ^ x = <v, x> vol, so v = (-a234, a134, -a124, a123)
// and Lambda^3 P corresponds to v -> det(P) P^-T v.

std::array<Int, 4> dual_vector(const TrilinearForm& f) {
    return {-f.coefficient(2, 3, 4), f.coefficient(1, 3, 4), -f.coefficient(1, 2, 4), f.coefficient(1, 2, 3)};
}

// Unimodular Q with Q v = (g, 0, 0, 0), g = gcd >= 0.
IntMatrix gcd_reduce_vector(std::array<Int, 4> v) {
    IntMatrix q = IntMatrix::identity(4);
    for (std::size_t r = 1; r < 4; ++r) {
        // fold v[r] into v[0]
        if (v[r] == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v[0].get_mpz_t(), v[r].get_mpz_t());
        Int a = v[0] / g, b = v[r] / g;
        // rows 0 and r of Q get premultiplied by [[s, t], [-b, a]] (det 1)
        for (std::size_t c = 0; c < 4; ++c) {
            Int q0 = q.at(0, c), qr = q.at(r, c);
            q.at(0, c) = s * q0 + t * qr;
            q.at(r, c) = -b * q0 + a * qr;
        }
        v[0] = g;
        v[r] = 0;
    }
    if (v[0] < 0) {
        for (std::size_t c = 0; c < 4; ++c) q.at(0, c) = -q.at(0, c);
    }
    return q;
}

// P realizing a chosen unimodular Q on dual vectors: det(P) P^-T = Q.
IntMatrix realize_dual(const IntMatrix& q) {
    RatMatrix qinv_t = rational_inverse(RatMatrix(q)).transpose();
    Int detq = q.det();
    IntMatrix p(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rat x = Rat(detq) * qinv_t.at(i, j);
            if (x.get_den() != 1) throw TrilinearError("realize_dual: non-integral entry");
            p.at(i, j) = x.get_num();
        }
    return p;
}

IntMatrix int_inverse_unimodular(const IntMatrix& p) {
    RatMatrix inv = rational_inverse(RatMatrix(p));
    if (!inv.is_integral()) throw TrilinearError("matrix is not unimodular");
    return inv.to_int();
}

std::string form_key(const TrilinearForm& f) { return f.to_string(); }

std::vector<IntMatrix> generator_moves(int m) {
    std::vector<IntMatrix> moves;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            for (int sgn : {1, -1}) {
                IntMatrix p = IntMatrix::identity(static_cast<std::size_t>(m));
                p.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = sgn;
                moves.push_back(std::move(p));
            }
        }
    for (int i = 0; i + 1 < m; ++i) {
        IntMatrix p = IntMatrix::identity(static_cast<std::size_t>(m));
        p.swap_cols(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
        moves.push_back(std::move(p));
    }
    IntMatrix flip = IntMatrix::identity(static_cast<std::size_t>(m));
    flip.at(0, 0) = -1;
    moves.push_back(std::move(flip));
    return moves;
}

struct SearchNode {
    TrilinearForm form;
    IntMatrix reach;  // Lambda^3(reach) applied to the side's start equals form
};

// Bidirectional breadth-first search over generator moves; returns T with
// Lambda^3(T) f1 = f2 when the frontiers meet within the depth budget.
std::optional<IntMatrix> orbit_search(const TrilinearForm& f1, const TrilinearForm& f2, int depth,
                                      std::size_t node_cap = 200000) {
    const int m = f1.m;
    if (f1 == f2) return IntMatrix::identity(static_cast<std::size_t>(m));
    std::vector<IntMatrix> moves = generator_moves(m);

    std::unordered_map<std::string, IntMatrix> seen_fwd, seen_bwd;
    std::deque<SearchNode> fwd, bwd;
    fwd.push_back({f1, IntMatrix::identity(static_cast<std::size_t>(m))});
    bwd.push_back({f2, IntMatrix::identity(static_cast<std::size_t>(m))});
    seen_fwd.emplace(form_key(f1), fwd.front().reach);
    seen_bwd.emplace(form_key(f2), bwd.front().reach);

    for (int layer = 0; layer < depth; ++layer) {
        bool forward = layer % 2 == 0;
        auto& frontier = forward ? fwd : bwd;
        auto& seen_own = forward ? seen_fwd : seen_bwd;
        auto& seen_other = forward ? seen_bwd : seen_fwd;
        std::deque<SearchNode> next;
        for (const SearchNode& node : frontier) {
            for (const IntMatrix& mv : moves) {
                TrilinearForm nf = apply_gl(mv, node.form);
                std::string key = form_key(nf);
                if (seen_own.contains(key)) continue;
                IntMatrix reach = mv.mul(node.reach);
                auto hit = seen_other.find(key);
                if (hit != seen_other.end()) {
                    // forward: Lambda^3(reach) f1 = nf = Lambda^3(other) f2
                    const IntMatrix& other = hit->second;
                    if (forward) return int_inverse_unimodular(other).mul(reach);
                    return int_inverse_unimodular(reach).mul(other);
                }
                seen_own.emplace(std::move(key), reach);
                next.push_back({std::move(nf), std::move(reach)});
                if (seen_fwd.size() + seen_bwd.size() > node_cap) return std::nullopt;
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

IsoAnswer yes_checked(const TrilinearForm& f1, const TrilinearForm& f2, IntMatrix witness, std::string why) {
    if (!witness.is_unimodular() || apply_gl(witness, f1) != f2)
        throw TrilinearError("internal: orbit witness failed its check");
    return IsoAnswer::yes(std::move(witness), std::move(why));
}

}  // namespace

std::optional<IntMatrix> orbit_connect(const TrilinearForm& f1, const TrilinearForm& f2, int depth) {
    if (f1.m != f2.m) return std::nullopt;
    std::optional<IntMatrix> w = orbit_search(f1, f2, depth);
    if (w && apply_gl(*w, f1) != f2) throw TrilinearError("internal: orbit witness failed its check");
    return w;
}

IsoAnswer equivalent(const TrilinearForm& f1, const TrilinearForm& f2, int depth) {
    if (f1.m != f2.m) return IsoAnswer::no("ranks differ");
    const int m = f1.m;

    if (m <= 2) return yes_checked(f1, f2, IntMatrix::identity(static_cast<std::size_t>(m)), "rank < 3, forms vanish");

    if (m == 3) {
        Int a = f1.coefficient(1, 2, 3), b = f2.coefficient(1, 2, 3);
        if (abs(a) != abs(b)) return IsoAnswer::no("|a_123| differs: " + a.get_str() + " vs " + b.get_str());
        IntMatrix w = IntMatrix::identity(3);
        if (a != b) w.at(0, 0) = -1;  // negates the form
        return yes_checked(f1, f2, std::move(w), "rank 3: |a_123| classifies");
    }

    if (m == 4) {
        OrbitInvariants i1 = orbit_invariants(f1), i2 = orbit_invariants(f2);
        if (i1.content != i2.content)
            return IsoAnswer::no("contents differ: " + i1.content.get_str() + " vs " + i2.content.get_str());
        // reduce both dual vectors to (g,0,0,0) and compose
        IntMatrix p1 = realize_dual(gcd_reduce_vector(dual_vector(f1)));
        IntMatrix p2 = realize_dual(gcd_reduce_vector(dual_vector(f2)));
        IntMatrix w = int_inverse_unimodular(p2).mul(p1);
        return yes_checked(f1, f2, std::move(w), "rank 4: content classifies");
    }

    OrbitInvariants i1 = orbit_invariants(f1), i2 = orbit_invariants(f2);
    if (!(i1 == i2)) return IsoAnswer::no("orbit invariants differ: " + i1.to_string() + " vs " + i2.to_string());
    std::optional<IntMatrix> w = orbit_search(f1, f2, depth);
    if (w) return yes_checked(f1, f2, std::move(*w), "connected by generator moves");
    return IsoAnswer::unknown("orbit invariants agree but the depth-" + std::to_string(depth) +
                              " search did not connect the forms");
}

}  // namespace surgeq
