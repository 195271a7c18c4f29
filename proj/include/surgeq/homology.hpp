#pragma once

#include <vector>

#include "surgeq/matrix.hpp"
#include "surgeq/presentation.hpp"

namespace surgeq {

// H1 as Z^betti (+) Z_d1 (+) ... with d1 | d2 | ..., each di >= 2.
struct FirstHomology {
    std::size_t betti = 0;
    std::vector<Int> factors;

    bool operator==(const FirstHomology& o) const = default;
    bool is_trivial() const { return betti == 0 && factors.empty(); }
    bool is_torsion_free() const { return factors.empty(); }
    Int torsion_order() const;
    std::string to_string() const;
};

// The Q/Z-valued linking form on the torsion of H1, on generators aligned
// with the invariant-factor decomposition.  values(i,j) is a rational in
// [0,1) representing lambda(g_i, g_j) mod 1.
struct LinkingForm {
    std::vector<Int> orders;
    RatMatrix values;

    bool operator==(const LinkingForm& o) const = default;
    std::size_t rank() const { return orders.size(); }
    Int group_order() const;
};

FirstHomology first_homology(const IntMatrix& a);

// Linking form of the 3-manifold presented by a symmetric integral matrix V:
// for torsion classes x, y with lifts and V z = n x~, lambda = (z . y~)/n
// mod 1.  Convention pinned by lambda(1,1) = q/n for L(n,q).
LinkingForm linking_form(const IntMatrix& v);

// Same form computed from a rational presentation without expanding: B_ii =
// p_i/q_i, B_ij = lk(i,j).  Requires B nonsingular (rationally admissible
// presentations).
LinkingForm linking_form_rational(const FramedLink& link);

// Adjoint-bijectivity of the form, checked exactly.
bool is_nondegenerate(const LinkingForm& f);

Rat mod1(const Rat& x);

}  // namespace surgeq
