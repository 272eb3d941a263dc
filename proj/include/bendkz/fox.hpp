#pragma once

#include "bendkz/braids.hpp"
#include "bendkz/cmatrix.hpp"
#include "bendkz/laurent.hpp"

#include <map>
#include <vector>

namespace bendkz::fox {

using braids::Braid;
using braids::Word;
using xalg::CMat;
using xalg::cplx;
using xalg::LaurentMatrix;
using xalg::LaurentPoly;
using xalg::Rational;

/// Element of the group ring C[F_n]: reduced words with rational coefficients,
/// like terms combined, no zero coefficients.
class GroupRingElement {
public:
    explicit GroupRingElement(int n) : n_(n) {}
    int rank() const { return n_; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Rational& c);
    GroupRingElement& operator+=(const GroupRingElement& o);
    friend GroupRingElement operator*(const Word& w, const GroupRingElement& e);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    /// Push-forward along x_j -> t_j.
    LaurentPoly abelianized() const;

private:
    int n_;
    std::map<Word, Rational> terms_;
};

/// Fox derivative d(w)/d(x_k) in C[F_n]; on group elements the derivation law
/// reads D(uv) = D(u) + u D(v), with D(x_j) = delta_{jk}.
GroupRingElement fox_derivative(const Word& w, int k);

/// Image of the Fox derivative under x_j -> t_j.
LaurentPoly abelianized_fox(const Word& w, int k);

enum class GassnerKind { full, reduced };

/// Gassner matrix over the Laurent ring. Full matrices are n x n in the
/// d/dx basis; reduced ones are (n-1) x (n-1) in the d/dy basis with
/// y_i = x_1...x_i. Matrices act on coefficient columns.
struct GassnerMatrix {
    int n;
    GassnerKind kind;
    LaurentMatrix body;
};

/// Full Gassner matrix of a pure braid: entry (i,j) is the abelianized Fox
/// derivative d(sigma-bar(b) x_i)/d(x_j).
GassnerMatrix gassner(const Braid& b);

/// Reduced Gassner matrix: the action restricted to derivations annihilating
/// x_1...x_n, written in the d/dy basis. The change of basis is exact; the
/// constructor checks the bottom row of the y-basis matrix is (0,...,0,1).
GassnerMatrix reduced_gassner(const Braid& b);

/// The row (1-t_1, ..., 1-t_n): coefficients of the coboundary derivation in
/// the d/dx basis.
std::vector<LaurentPoly> coboundary_vector(int n);

/// Coefficients of the coboundary derivation in the d/dy basis:
/// (1 - t_1...t_k) for k = 1..n.
std::vector<LaurentPoly> coboundary_vector_y(int n);

/// Change-of-basis matrices between d/dx and d/dy coefficient columns:
/// d = L c with L lower triangular of monomials t_1...t_{m-1}.
LaurentMatrix y_basis_matrix(int n);
LaurentMatrix y_basis_matrix_inverse(int n);

CMat specialize(const LaurentMatrix& m, const std::vector<cplx>& alpha);

/// Specialized reduced Gassner action on the quotient of C^{n-1} by the
/// specialized coboundary line, in the complement spanned by the first n-2
/// coordinate directions. Requires prod(alpha) = 1 and every alpha_j not in
/// {0, 1}.
CMat quotient_rep(const Braid& b, const std::vector<cplx>& alpha);

/// Specialized coboundary direction inside the reduced space:
/// (1 - alpha_1...alpha_k) for k = 1..n-1.
std::vector<cplx> quotient_fixed_line(const std::vector<cplx>& alpha);

/// Dual-representation matrix: the transpose of the supplied inverse, so that
/// g -> rho(g^{-1})^T is a homomorphism whenever rho is.
CMat dualize(const CMat& m, const CMat& m_inverse);

} // namespace bendkz::fox
