#pragma once

#include <array>
#include <map>
#include <vector>

#include "surgeq/linking_iso.hpp"
#include "surgeq/presentation.hpp"

namespace surgeq {

struct TrilinearError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotZeroFramedError : TrilinearError {
    using TrilinearError::TrilinearError;
};
struct LinkingNonzeroError : TrilinearError {
    using TrilinearError::TrilinearError;
};
struct DimensionMismatchError : TrilinearError {
    using TrilinearError::TrilinearError;
};

using Triple = std::array<int, 3>;  // strictly increasing, 1-based

// An alternating integer trilinear form on Z^m, stored as the coefficients of
// sum a_ijk e_i ^ e_j ^ e_k over increasing triples.
struct TrilinearForm {
    int m = 0;
    std::map<Triple, Int> coeffs;  // nonzero entries only

    static TrilinearForm zero(int m) { return TrilinearForm{m, {}}; }

    bool operator==(const TrilinearForm& o) const = default;
    bool is_zero() const { return coeffs.empty(); }
    Int coefficient(int i, int j, int k) const;   // any index order, signed
    void set(int i, int j, int k, const Int& c);  // any index order, signed

    TrilinearForm negated() const;
    std::string to_string() const;
};

Int evaluate(const TrilinearForm& f, const std::vector<Int>& u, const std::vector<Int>& v, const std::vector<Int>& w);

// Pushforward along P in GL_m(Z): coefficients of sum a_ijk Pe_i ^ Pe_j ^ Pe_k.
TrilinearForm apply_gl(const IntMatrix& p, const TrilinearForm& f);

// Triple cup product form of the 0-surgery manifold, in the meridian-dual
// basis: a_ijk = mu-bar(i j k).  Requires all framings 0/1, lk = 0, and
// longitude/braid data.
TrilinearForm from_mu_triple(const FramedLink& link);

// GL_m(Z)-invariant data usable as sound NotEquivalent certificates.
struct OrbitInvariants {
    int m = 0;
    Int content;                           // gcd of coefficients, 0 for the zero form
    std::vector<Int> contraction_factors;  // invariant factors of the contraction matrix

    bool operator==(const OrbitInvariants& o) const = default;
    std::string to_string() const;
};

OrbitInvariants orbit_invariants(const TrilinearForm& f);

// Orbit equivalence under GL_m(Z).  Complete for m <= 4 (trivial for m <= 2,
// |a_123| for m = 3, content for m = 4, all with checked witnesses); m >= 5
// is decided by invariants (No) or a depth-bounded bidirectional search over
// generator moves (Yes), else Unknown.
IsoAnswer equivalent(const TrilinearForm& f1, const TrilinearForm& f2, int depth = 12);

// The bidirectional search over GL_m(Z) generator moves on its own: a matrix
// T with apply_gl(T, f1) = f2 when the frontiers meet within depth.
std::optional<IntMatrix> orbit_connect(const TrilinearForm& f1, const TrilinearForm& f2, int depth);

}  // namespace surgeq
