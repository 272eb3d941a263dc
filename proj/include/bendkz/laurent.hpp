#pragma once

#include "bendkz/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace bendkz::xalg {

using cplx = std::complex<double>;

/// Multivariate Laurent polynomial in t_1..t_nvars with exact rational
/// coefficients. Stored terms never carry a zero coefficient and every
/// exponent vector has length nvars.
class LaurentPoly {
public:
    using Expo = std::vector<int>;

    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, Rational c);
    /// The monomial c * t_var^power, var in 1..nvars.
    static LaurentPoly monomial(int nvars, int var, int power, Rational c = Rational(1));

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    void add_term(const Expo& e, const Rational& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Value at t_j := alpha_j, all alpha_j nonzero.
    cplx specialize(const std::vector<cplx>& alpha) const;
    /// Exact value at t = (1,...,1): the sum of the coefficients.
    Rational eval_at_one() const;

    std::string str() const;

private:
    int nvars_;
    std::map<Expo, Rational> terms_;
};

/// Dense matrix of Laurent polynomials sharing one variable count.
class LaurentMatrix {
public:
    LaurentMatrix(int rows, int cols, int nvars);
    static LaurentMatrix identity(int n, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    LaurentPoly& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const LaurentPoly& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b);

    LaurentPoly determinant() const; // cofactor expansion; intended for small sizes

private:
    int rows_, cols_, nvars_;
    std::vector<LaurentPoly> entries_;
};

/// Integer power of a nonzero complex number (binary powering, exact for e = 0).
cplx cpow_int(cplx base, int e);

} // namespace bendkz::xalg
