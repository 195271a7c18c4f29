#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace surgeq {

using Int = mpz_class;
using Rat = mpq_class;

// All arithmetic in this library is exact; there is no floating point anywhere.

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularError : MatrixError {
    using MatrixError::MatrixError;
};
struct NotSymmetricError : MatrixError {
    using MatrixError::MatrixError;
};

// Builds a canonical rational (lowest terms, positive denominator).
Rat make_rat(const Int& num, const Int& den);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& o) const;
    std::vector<Int> mul(const std::vector<Int>& v) const;
    IntMatrix negated() const;

    // Exact determinant (square matrices), via fraction-free elimination.
    Int det() const;
    bool is_unimodular() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void scale_row(std::size_t i, const Int& c);
    void scale_col(std::size_t j, const Int& c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    RatMatrix transpose() const;
    RatMatrix mul(const RatMatrix& o) const;
    Rat det() const;

    // True when every entry is integral; then to_int() is exact.
    bool is_integral() const;
    IntMatrix to_int() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// left * A * right = diagonal, with left/right unimodular and the diagonal
// entries nonnegative, each dividing the next.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    IntMatrix diagonal;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Exact inverse; throws SingularError when det = 0.
RatMatrix rational_inverse(const RatMatrix& a);

// For symmetric nonsingular rational q, returns unimodular P such that every
// leading principal minor of P^T q P is nonzero.  Pivots are chosen
// lowest-index-first, so results are deterministic.
IntMatrix prefix_nonsingular_basis(const RatMatrix& q);

}  // namespace surgeq
