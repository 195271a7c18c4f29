#include "surgeq/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace surgeq {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw MatrixError("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw MatrixError("IntMatrix::mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::mul(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw MatrixError("IntMatrix::mul: vector size mismatch");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix r = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = -r.at(i, j);
    return r;
}

Int IntMatrix::det() const {
    if (!is_square()) throw MatrixError("det: matrix not square");
    Rat d = RatMatrix(*this).det();
    return d.get_num();
}

bool IntMatrix::is_unimodular() const {
    if (!is_square()) return false;
    Int d = det();
    return d == 1 || d == -1;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::scale_row(std::size_t i, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) *= c;
}

void IntMatrix::scale_col(std::size_t j, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) *= c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), e_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw MatrixError("RatMatrix::mul: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Rat RatMatrix::det() const {
    if (!is_square()) throw MatrixError("det: matrix not square");
    RatMatrix a = *this;
    std::size_t n = rows_;
    Rat d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col) == 0) continue;
            Rat f = a.at(i, col) / a.at(col, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

bool RatMatrix::is_integral() const {
    for (const Rat& x : e_)
        if (x.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::to_int() const {
    if (!is_integral()) throw MatrixError("to_int: non-integral entry");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).get_num();
    return m;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Position of an entry with minimal nonzero |value| in the trailing block, or
// nothing when the block is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t r = a.rows(), c = a.cols();
    SmithDecomposition s{IntMatrix::identity(r), IntMatrix::identity(c), a};
    IntMatrix& d = s.diagonal;
    IntMatrix& u = s.left;
    IntMatrix& w = s.right;

    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(d, t, pi, pj)) break;  // trailing block zero
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        w.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    // remainder becomes the smaller pivot
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                w.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    w.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // pivot must divide every entry of the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }

        if (d.at(t, t) < 0) {
            d.scale_row(t, -1);
            u.scale_row(t, -1);
        }
    }
    return s;
}

RatMatrix rational_inverse(const RatMatrix& a) {
    if (!a.is_square()) throw MatrixError("rational_inverse: matrix not square");
    const std::size_t n = a.rows();
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col) == 0) ++piv;
        if (piv == n) throw SingularError("rational_inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = m.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Schur complement of the leading i-by-i block of t (assumed nonsingular).
RatMatrix schur_complement(const RatMatrix& t, std::size_t i) {
    const std::size_t n = t.rows();
    const std::size_t k = n - i;
    if (i == 0) {
        RatMatrix d(k, k);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) d.at(a, b) = t.at(a, b);
        return d;
    }
    RatMatrix top(i, i), b(i, k);
    for (std::size_t a = 0; a < i; ++a) {
        for (std::size_t c = 0; c < i; ++c) top.at(a, c) = t.at(a, c);
        for (std::size_t c = 0; c < k; ++c) b.at(a, c) = t.at(a, i + c);
    }
    RatMatrix corr = b.transpose().mul(rational_inverse(top)).mul(b);
    RatMatrix d(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c) d.at(a, c) = t.at(i + a, i + c) - corr.at(a, c);
    return d;
}

}  // namespace

IntMatrix prefix_nonsingular_basis(const RatMatrix& q) {
    if (!q.is_square() || !q.is_symmetric()) throw NotSymmetricError("prefix_nonsingular_basis: q not symmetric");
    if (q.det() == 0) throw SingularError("prefix_nonsingular_basis: q singular");
    const std::size_t n = q.rows();
    IntMatrix p = IntMatrix::identity(n);

    for (std::size_t i = 0; i < n; ++i) {
        RatMatrix t = RatMatrix(p.transpose()).mul(q).mul(RatMatrix(p));
        RatMatrix d = schur_complement(t, i);
        if (d.at(0, 0) != 0) continue;
        // lowest-index-first: prefer a nonzero diagonal entry, else mix in the
        // first column with a nonzero pairing (then the new diagonal is twice
        // that pairing)
        std::size_t k = d.rows();
        std::size_t j = 1;
        while (j < k && d.at(j, j) == 0) ++j;
        if (j < k) {
            p.swap_cols(i, i + j);
        } else {
            j = 1;
            while (j < k && d.at(0, j) == 0) ++j;
            if (j == k) throw SingularError("prefix_nonsingular_basis: degenerate Schur complement");
            p.add_col_multiple(i, i + j, 1);
        }
    }
    return p;
}

}  // namespace surgeq
