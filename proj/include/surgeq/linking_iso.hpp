#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surgeq/homology.hpp"

namespace surgeq {

struct LinkingIsoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCyclicError : LinkingIsoError {
    using LinkingIsoError::LinkingIsoError;
};
struct DegenerateError : LinkingIsoError {
    using LinkingIsoError::LinkingIsoError;
};

enum class IsoStatus { Yes, No, Unknown };

// Answer to an isomorphism question.  When status = Yes the witness matrix W
// maps the first form's generators into the second group (column i = image
// of g_i) and satisfies W^T L2 W = L1 mod 1; it is always re-checked before
// being returned.
struct IsoAnswer {
    IsoStatus status = IsoStatus::Unknown;
    std::optional<IntMatrix> witness;
    std::string reason;

    static IsoAnswer yes(IntMatrix w, std::string why = "");
    static IsoAnswer no(std::string why);
    static IsoAnswer unknown(std::string why);
};

// For a form on Z_n with lambda(g,g) = a/n, gcd(a,n) = 1: returns a.  Two
// cyclic forms are isomorphic iff their classes agree modulo squares of
// units.
Int cyclic_class(const LinkingForm& form);

// True iff a is a unit and a square of a unit mod n (exact, via the prime
// factorization of n).
bool is_square_unit(const Int& a, const Int& n);

// Decides isomorphism of linking forms.  Cyclic groups use the unit-square
// test; non-cyclic torsion of order <= bound is decided by enumerating group
// isomorphisms per primary block; larger non-cyclic groups give Unknown.
IsoAnswer isomorphic(const LinkingForm& f1, const LinkingForm& f2, const Int& bound = Int(10000));

// Exact witness check: W^T L2 W = L1 mod 1 and W bijective on the groups.
bool witness_carries(const LinkingForm& f1, const LinkingForm& f2, const IntMatrix& w);

}  // namespace surgeq
