#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surgeq/matrix.hpp"

namespace surgeq {

struct PresentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Surgery coefficient p/q in lowest terms, q >= 1.  q = 1 means integral
// surgery.
struct Framing {
    Int p;
    Int q;

    Framing() : p(0), q(1) {}
    Framing(Int p_, Int q_);

    bool is_integral() const { return q == 1; }
    Rat value() const { return make_rat(p, q); }
    bool operator==(const Framing& o) const = default;
};

// One letter of a braid word: generator index in [1, strands-1], sign +/-1.
struct BraidLetter {
    int index;
    int sign;
    bool operator==(const BraidLetter& o) const = default;
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    bool operator==(const BraidWord& o) const = default;
    std::vector<int> permutation() const;  // image of each strand, 0-based
    bool is_pure() const;
    // Pairwise linking numbers of the closure (pure braids only).
    IntMatrix closure_linking() const;
    BraidWord mirrored() const;  // every crossing sign flipped
};

// A letter of a free-group word: generator index >= 1, exponent +/-1.
struct GenLetter {
    int gen;
    int exp;
    bool operator==(const GenLetter& o) const = default;
};

// Freely reduced word in x1..xm.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<GenLetter> letters);

    static FreeWord generator(int gen, int exp = 1);

    const std::vector<GenLetter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;
    FreeWord conjugated_by(const FreeWord& g) const;  // g * w * g^-1
    FreeWord power(long e) const;
    // Letterwise x_j^e -> x_j^-e (not the group inverse).
    FreeWord letters_inverted() const;

    Int exponent_sum(int gen) const;
    int max_generator() const;

    bool operator==(const FreeWord& o) const = default;
    std::string to_string() const;             // "x1 x2^-1 ..."
    static FreeWord parse(const std::string& s);

private:
    std::vector<GenLetter> letters_;
    void reduce();
};

// A framed-link surgery presentation in S^3.
struct FramedLink {
    std::vector<Framing> framings;
    IntMatrix lk;  // symmetric, zero diagonal
    std::optional<BraidWord> braid;
    std::optional<std::vector<FreeWord>> longitudes;

    std::size_t components() const { return framings.size(); }
    bool operator==(const FramedLink& o) const = default;

    // Checks every structural invariant; throws PresentationError.
    void validate() const;
    bool all_integral() const;
    bool zero_framed_unlinked() const;  // all framings 0/1 and lk = 0
};

// Matrix A with A_ii = p_i and A_ij = q_i * lk(i,j); coker(A) = H1 of the
// surgered manifold.  Symmetric exactly when all framings are integral.
IntMatrix presentation_matrix(const FramedLink& link);

// Replaces every p/q component (q >= 2) by a chain of integer-framed circles
// via the continued fraction p/q = a1 - 1/(a2 - ... - 1/ak), consecutive
// circles linking once.  Braid/longitude data is dropped when anything
// expands.
FramedLink expand_to_integral(const FramedLink& link);

// Orientation reverse of the surgered manifold: negates framings and linking
// numbers; braid words get mirrored, longitude words letterwise inverted.
FramedLink mirror(const FramedLink& link);

// True iff every framing is +/-1 integral and all pairwise linking numbers
// vanish.
bool is_admissible_2surgery(const FramedLink& link);

// True iff the presentation matrix is nonsingular over Q.
bool is_admissible_rational_2surgery(const FramedLink& link);

// The continued-fraction expansion used by expand_to_integral, exposed for
// tests: p/q > 0, all tail terms >= 2.
std::vector<Int> chain_expansion(const Int& p, const Int& q);

}  // namespace surgeq
