#include "bendkz/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bendkz::xalg {

LaurentPoly LaurentPoly::constant(int nvars, Rational c) {
    LaurentPoly p(nvars);
    p.add_term(Expo(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, int var, int power, Rational c) {
    if (var < 1 || var > nvars) throw std::invalid_argument("LaurentPoly::monomial: bad variable");
    LaurentPoly p(nvars);
    Expo e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var - 1)] = power;
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Expo& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: variable-count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPoly: variable-count mismatch");
    LaurentPoly p(a.nvars_);
    LaurentPoly::Expo e(static_cast<std::size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

cplx cpow_int(cplx base, int e) {
    if (e == 0) return {1.0, 0.0};
    bool inv = e < 0;
    unsigned k = inv ? static_cast<unsigned>(-(long long)e) : static_cast<unsigned>(e);
    cplx acc{1.0, 0.0};
    cplx b = base;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return inv ? cplx{1.0, 0.0} / acc : acc;
}

cplx LaurentPoly::specialize(const std::vector<cplx>& alpha) const {
    if (static_cast<int>(alpha.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::specialize: alpha length mismatch");
    for (const cplx& a : alpha)
        if (a == cplx{0.0, 0.0})
            throw std::invalid_argument("LaurentPoly::specialize: zero specialization value");
    cplx s{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        cplx m = c.to_complex();
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) m *= cpow_int(alpha[k], e[k]);
        s += m;
    }
    return s;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) os << "*t" << (k + 1) << "^" << e[k];
    }
    return os.str();
}

LaurentMatrix::LaurentMatrix(int rows, int cols, int nvars)
    : rows_(rows), cols_(cols), nvars_(nvars),
      entries_(static_cast<std::size_t>(rows) * cols, LaurentPoly(nvars)) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("LaurentMatrix: bad shape");
}

LaurentMatrix LaurentMatrix::identity(int n, int nvars) {
    LaurentMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::constant(nvars, Rational(1));
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_)
        throw std::invalid_argument("LaurentMatrix: shape or variable-count mismatch");
    LaurentMatrix m(a.rows_, b.cols_, a.nvars_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            LaurentPoly s(a.nvars_);
            for (int k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
            m.at(i, j) = s;
        }
    return m;
}

bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.nvars_ == b.nvars_ &&
           a.entries_ == b.entries_;
}

LaurentPoly LaurentMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("LaurentMatrix::determinant: not square");
    if (rows_ == 1) return at(0, 0);
    LaurentPoly det(nvars_);
    for (int j = 0; j < cols_; ++j) {
        if (at(0, j).is_zero()) continue;
        LaurentMatrix minor(rows_ - 1, cols_ - 1, nvars_);
        for (int r = 1; r < rows_; ++r) {
            int cc = 0;
            for (int c = 0; c < cols_; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = at(r, c);
            }
        }
        LaurentPoly term = at(0, j) * minor.determinant();
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace bendkz::xalg
