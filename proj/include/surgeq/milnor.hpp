#pragma once

#include <map>
#include <optional>
#include <vector>

#include "surgeq/presentation.hpp"

namespace surgeq {

struct MilnorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPureError : MilnorError {
    using MilnorError::MilnorError;
};
struct NoLongitudeDataError : MilnorError {
    using MilnorError::MilnorError;
};
struct IndexOutOfRangeError : MilnorError {
    using MilnorError::MilnorError;
};

// Truncated Magnus series: x_i -> 1 + X_i, noncommuting monomials up to
// degree L with integer coefficients.
class MagnusSeries {
public:
    using Monomial = std::vector<int>;  // generator indices, 1-based

    explicit MagnusSeries(int truncation) : trunc_(truncation) {}
    static MagnusSeries one(int truncation);

    int truncation() const { return trunc_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    Int coefficient(const Monomial& m) const;

    MagnusSeries mul(const MagnusSeries& o) const;
    bool operator==(const MagnusSeries& o) const = default;

    void set(const Monomial& m, Int c);

private:
    int trunc_;
    std::map<Monomial, Int> terms_;
};

MagnusSeries magnus_expand(const FreeWord& w, int truncation);

// A Milnor invariant: the index sequence, the value, and the indeterminacy
// modulus Delta(I) (0 = well-defined over Z; otherwise value is reduced into
// [0, modulus)).
struct MuInvariant {
    std::vector<int> index;
    Int value;
    Int modulus;
    bool operator==(const MuInvariant& o) const = default;
};

// Seifert-framed longitudes of the closure of a pure braid, as words in the
// meridians x1..xm: the Artin conjugator w_i of x_i -> w_i x_i w_i^-1,
// times x_i^-e so the longitude has zero exponent in its own meridian.
std::vector<FreeWord> artin_longitudes(const BraidWord& braid);

// Longitudes of a link, from stored words or its pure braid.
std::vector<FreeWord> link_longitudes(const FramedLink& link);

MuInvariant mu_bar(const FramedLink& link, const std::vector<int>& index);

// Smallest r <= max_length with a nonzero mu-bar of length r (exact: at the
// first nonvanishing length every Delta is 0); nullopt when all vanish.
std::optional<int> first_nonvanishing_length(const FramedLink& link, int max_length = 8);

// All raw mu coefficients of a given length, by index sequence.
std::map<std::vector<int>, Int> mu_table(const FramedLink& link, int length);

// Witt number: rank of the degree-k piece of the free Lie ring on m
// generators, (1/k) sum_{d|k} mobius(d) m^(k/d).
Int witt_rank(int m, int k);

// rank of H3 of the free nilpotent group F/F_k on m generators:
// sum_{i=k}^{2k-2} (m*W(m,i) - W(m,i+1)).
Int free_nilpotent_h3_rank(int m, int k);

}  // namespace surgeq
