#pragma once

#include <string>
#include <vector>

#include "surgeq/homology.hpp"
#include "surgeq/linking_iso.hpp"
#include "surgeq/presentation.hpp"
#include "surgeq/trilinear.hpp"

namespace surgeq {

struct PreconditionViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidLensParametersError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class VerdictStatus { Equivalent, NotEquivalent, Unknown };

std::string to_string(VerdictStatus s);

// One named invariant value for each input, quoted verbatim so a verdict can
// be audited without re-running.
struct CertificateEntry {
    std::string invariant;
    std::string value_a;
    std::string value_b;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::string relation;  // "integral2", "rational2", "k=K", "lens"
    std::string rule;      // the classification case that decided
    std::vector<CertificateEntry> certificate;
    std::string notes;
};

// Decides 2-surgery equivalence where the classification applies: matching
// H1 is necessary; then torsion-free H1 is decided by the cup-form orbit,
// cyclic and Z x Z_n torsion by the linking form, and anything else is
// NotEquivalent on a linking-form mismatch or honest Unknown.
Verdict compare_integral_2(const FramedLink& a, const FramedLink& b, int depth = 12,
                           const Int& bound = Int(10000));

// Rational 2-surgery equivalence: Betti numbers must match; b1 < 3 is always
// Equivalent; otherwise the integral cup form orbit decides when computable.
Verdict compare_rational_2(const FramedLink& a, const FramedLink& b, int depth = 12);

// Is the 0-surgery on this link k-surgery equivalent to #^m S^1 x S^2?
// Requires 0/1 framings, vanishing linking numbers and longitude data;
// equivalent iff all mu-bar of length < 2k vanish.
Verdict k_equiv_to_standard(const FramedLink& link, int k);

// Surgery equivalence of lens spaces L(n,q), L(n',q'): equal orders and
// q q' a square unit mod n.
Verdict lens_compare(const Int& n, const Int& q, const Int& n2, const Int& q2);

// n/q surgery on the unknot.
FramedLink lens_space(const Int& n, const Int& q);

std::string linking_form_to_string(const LinkingForm& f);

}  // namespace surgeq
