#include "surgeq/homology.hpp"

#include <sstream>

namespace surgeq {

Int FirstHomology::torsion_order() const {
    Int t = 1;
    for (const Int& d : factors) t *= d;
    return t;
}

std::string FirstHomology::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (const Int& d : factors) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Int LinkingForm::group_order() const {
    Int t = 1;
    for (const Int& d : orders) t *= d;
    return t;
}

Rat mod1(const Rat& x) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rat(fl);
}

FirstHomology first_homology(const IntMatrix& a) {
    if (!a.is_square()) throw MatrixError("first_homology: matrix not square");
    SmithDecomposition s = smith_normal_form(a);
    FirstHomology h;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int& d = s.diagonal.at(i, i);
        if (d == 0)
            ++h.betti;
        else if (d > 1)
            h.factors.push_back(d);
    }
    return h;
}

namespace {

// Shared by the integral and rational paths: relations = rows of A (H1 =
// coker(A^T)), pairing of meridian lifts through B^-1.  For the integral
// case A = B = V.
LinkingForm linking_form_impl(const IntMatrix& a, const RatMatrix& b_inv) {
    SmithDecomposition s = smith_normal_form(a.transpose());
    const std::size_t n = a.rows();

    RatMatrix u_inv = rational_inverse(RatMatrix(s.left));
    std::vector<std::size_t> torsion;
    for (std::size_t i = 0; i < n; ++i)
        if (s.diagonal.at(i, i) > 1) torsion.push_back(i);

    LinkingForm f;
    f.orders.reserve(torsion.size());
    for (std::size_t i : torsion) f.orders.push_back(s.diagonal.at(i, i));

    // lift of generator g_i = column i of U^-1
    f.values = RatMatrix(torsion.size(), torsion.size());
    for (std::size_t a_ = 0; a_ < torsion.size(); ++a_)
        for (std::size_t b_ = 0; b_ < torsion.size(); ++b_) {
            Rat acc = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    acc += u_inv.at(r, torsion[a_]) * b_inv.at(r, c) * u_inv.at(c, torsion[b_]);
            f.values.at(a_, b_) = mod1(acc);
        }

    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = i; j < torsion.size(); ++j)
            if (f.values.at(i, j) != f.values.at(j, i))
                throw MatrixError("linking form came out non-symmetric");
    return f;
}

}  // namespace

LinkingForm linking_form(const IntMatrix& v) {
    if (!v.is_square() || !v.is_symmetric()) throw NotSymmetricError("linking_form: V must be symmetric");

    // Singular V: split torsion from the free part first.  U V W = D; the
    // torsion block in the new basis is the nonzero part of D conjugated
    // back, but the lift-solve formula below handles it uniformly: with
    // z_i = W e_i we get V z_i = d_i (U^-1 e_i) exactly, so
    // lambda(g_i, g_j) = (W^T U^-1)_ij / d_i mod 1.
    SmithDecomposition s = smith_normal_form(v);
    const std::size_t n = v.rows();
    RatMatrix u_inv = rational_inverse(RatMatrix(s.left));

    std::vector<std::size_t> torsion;
    for (std::size_t i = 0; i < n; ++i)
        if (s.diagonal.at(i, i) > 1) torsion.push_back(i);

    LinkingForm f;
    for (std::size_t i : torsion) f.orders.push_back(s.diagonal.at(i, i));
    f.values = RatMatrix(torsion.size(), torsion.size());
    IntMatrix wt = s.right.transpose();
    for (std::size_t a = 0; a < torsion.size(); ++a)
        for (std::size_t b = 0; b < torsion.size(); ++b) {
            Rat acc = 0;
            for (std::size_t r = 0; r < n; ++r) acc += Rat(wt.at(torsion[a], r)) * u_inv.at(r, torsion[b]);
            f.values.at(a, b) = mod1(acc / Rat(s.diagonal.at(torsion[a], torsion[a])));
        }

    for (std::size_t i = 0; i < torsion.size(); ++i)
        for (std::size_t j = i; j < torsion.size(); ++j)
            if (f.values.at(i, j) != f.values.at(j, i))
                throw MatrixError("linking form came out non-symmetric");
    return f;
}

LinkingForm linking_form_rational(const FramedLink& link) {
    const std::size_t m = link.components();
    RatMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        b.at(i, i) = link.framings[i].value();
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) b.at(i, j) = Rat(link.lk.at(i, j));
    }
    if (b.det() == 0) throw SingularError("linking_form_rational: presentation not rationally admissible");
    IntMatrix a = presentation_matrix(link);
    return linking_form_impl(a, rational_inverse(b));
}

bool is_nondegenerate(const LinkingForm& f) {
    const std::size_t t = f.rank();
    if (t == 0) return true;
    // integer adjoint matrix: A_ij = d_i * lambda(g_i, g_j)
    IntMatrix adj(t, t);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            Rat v = Rat(f.orders[i]) * f.values.at(i, j);
            if (v.get_den() != 1) return false;  // not even a homomorphism
            adj.at(i, j) = v.get_num();
        }
    // bijective iff coker of [adj | diag(d)] is trivial
    IntMatrix stacked(t, 2 * t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) stacked.at(i, j) = adj.at(i, j);
        stacked.at(i, t + i) = f.orders[i];
    }
    SmithDecomposition s = smith_normal_form(stacked);
    for (std::size_t i = 0; i < t; ++i)
        if (s.diagonal.at(i, i) != 1) return false;
    return true;
}

}  // namespace surgeq
