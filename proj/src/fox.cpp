#include "bendkz/fox.hpp"

#include <stdexcept>

namespace bendkz::fox {

using braids::Letter;

void GroupRingElement::add(const Word& w, const Rational& c) {
    if (w.rank() != n_) throw std::invalid_argument("GroupRingElement: rank mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement operator*(const Word& w, const GroupRingElement& e) {
    GroupRingElement r(e.rank());
    for (const auto& [v, c] : e.terms_) r.add(w * v, c);
    return r;
}

LaurentPoly GroupRingElement::abelianized() const {
    LaurentPoly p(n_);
    for (const auto& [w, c] : terms_) {
        auto ab = braids::abelianize(w);
        LaurentPoly::Expo e(static_cast<std::size_t>(n_), 0);
        for (std::size_t k = 0; k < ab.size(); ++k) e[k] = static_cast<int>(ab[k]);
        p.add_term(e, c);
    }
    return p;
}

GroupRingElement fox_derivative(const Word& w, int k) {
    const int n = w.rank();
    if (k < 1 || k > n) throw std::invalid_argument("fox_derivative: index out of range");
    GroupRingElement d(n);
    Word prefix(n);
    for (const Letter& l : w.letters()) {
        if (l.gen == k) {
            if (l.exp == 1) {
                d.add(prefix, Rational(1));
            } else {
                d.add(prefix * Word::generator(n, k, -1), Rational(-1));
            }
        }
        prefix = prefix * Word(n, {l});
    }
    return d;
}

LaurentPoly abelianized_fox(const Word& w, int k) {
    const int n = w.rank();
    if (k < 1 || k > n) throw std::invalid_argument("abelianized_fox: index out of range");
    LaurentPoly p(n);
    std::vector<int> expo(static_cast<std::size_t>(n), 0);
    for (const Letter& l : w.letters()) {
        if (l.gen == k) {
            if (l.exp == 1) {
                p.add_term(expo, Rational(1));
            } else {
                expo[static_cast<std::size_t>(k - 1)] -= 1;
                p.add_term(expo, Rational(-1));
                expo[static_cast<std::size_t>(k - 1)] += 1;
            }
        }
        expo[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    }
    return p;
}

GassnerMatrix gassner(const Braid& b) {
    if (!braids::is_pure(b)) throw std::invalid_argument("gassner: braid is not pure");
    const int n = b.n;
    LaurentMatrix m(n, n, n);
    for (int i = 1; i <= n; ++i) {
        Word wi = braids::braid_act(b, Word::generator(n, i));
        for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = abelianized_fox(wi, j);
    }
    return GassnerMatrix{n, GassnerKind::full, m};
}

LaurentMatrix y_basis_matrix(int n) {
    // d_k = sum_{m<=k} t_1...t_{m-1} c_m
    LaurentMatrix l(n, n, n);
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= k; ++m) {
            LaurentPoly::Expo e(static_cast<std::size_t>(n), 0);
            for (int q = 1; q < m; ++q) e[static_cast<std::size_t>(q - 1)] = 1;
            LaurentPoly mono(n);
            mono.add_term(e, Rational(1));
            l.at(k - 1, m - 1) = mono;
        }
    return l;
}

LaurentMatrix y_basis_matrix_inverse(int n) {
    // c_m = t_1^-1...t_{m-1}^-1 (d_m - d_{m-1})
    LaurentMatrix li(n, n, n);
    for (int m = 1; m <= n; ++m) {
        LaurentPoly::Expo e(static_cast<std::size_t>(n), 0);
        for (int q = 1; q < m; ++q) e[static_cast<std::size_t>(q - 1)] = -1;
        LaurentPoly mono(n);
        mono.add_term(e, Rational(1));
        li.at(m - 1, m - 1) = mono;
        if (m >= 2) {
            LaurentPoly neg(n);
            neg.add_term(e, Rational(-1));
            li.at(m - 1, m - 2) = neg;
        }
    }
    return li;
}

GassnerMatrix reduced_gassner(const Braid& b) {
    const GassnerMatrix full = gassner(b);
    const int n = full.n;
    if (n < 2) throw std::invalid_argument("reduced_gassner: need n >= 2");
    LaurentMatrix gy = y_basis_matrix(n) * full.body * y_basis_matrix_inverse(n);
    // D(x_1...x_n) is invariant, so the bottom row must be (0,...,0,1) exactly.
    for (int j = 0; j < n - 1; ++j)
        if (!gy.at(n - 1, j).is_zero())
            throw std::runtime_error("reduced_gassner: y-basis bottom row not annihilated");
    if (!(gy.at(n - 1, n - 1) == LaurentPoly::constant(n, Rational(1))))
        throw std::runtime_error("reduced_gassner: y-basis corner entry is not 1");
    LaurentMatrix red(n - 1, n - 1, n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j) red.at(i, j) = gy.at(i, j);
    return GassnerMatrix{n, GassnerKind::reduced, red};
}

std::vector<LaurentPoly> coboundary_vector(int n) {
    std::vector<LaurentPoly> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        LaurentPoly p = LaurentPoly::constant(n, Rational(1));
        p -= LaurentPoly::monomial(n, i, 1);
        v.push_back(p);
    }
    return v;
}

std::vector<LaurentPoly> coboundary_vector_y(int n) {
    std::vector<LaurentPoly> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        LaurentPoly p = LaurentPoly::constant(n, Rational(1));
        LaurentPoly::Expo e(static_cast<std::size_t>(n), 0);
        for (int q = 1; q <= k; ++q) e[static_cast<std::size_t>(q - 1)] = 1;
        p.add_term(e, Rational(-1));
        v.push_back(p);
    }
    return v;
}

CMat specialize(const LaurentMatrix& m, const std::vector<cplx>& alpha) {
    CMat out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j).specialize(alpha);
    return out;
}

std::vector<cplx> quotient_fixed_line(const std::vector<cplx>& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<cplx> v(static_cast<std::size_t>(n - 1));
    cplx prod{1.0, 0.0};
    for (int k = 1; k <= n - 1; ++k) {
        prod *= alpha[static_cast<std::size_t>(k - 1)];
        v[static_cast<std::size_t>(k - 1)] = cplx{1.0, 0.0} - prod;
    }
    return v;
}

CMat quotient_rep(const Braid& b, const std::vector<cplx>& alpha) {
    const int n = b.n;
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("quotient_rep: alpha length mismatch");
    cplx prod{1.0, 0.0};
    for (const cplx& a : alpha) {
        if (a == cplx{0.0, 0.0} || std::abs(a - cplx{1.0, 0.0}) < 1e-12)
            throw std::invalid_argument("quotient_rep: alpha_j in {0, 1}");
        prod *= a;
    }
    if (std::abs(prod - cplx{1.0, 0.0}) > 1e-10)
        throw std::invalid_argument("quotient_rep: product of alpha_j is not 1");
    if (n < 3) throw std::invalid_argument("quotient_rep: need n >= 3");

    CMat r = specialize(reduced_gassner(b).body, alpha);
    std::vector<cplx> vb = quotient_fixed_line(alpha);
    const int d = n - 1;
    // Complement = span(e_1..e_{n-2}); valid because v_{n-1} = 1 - 1/alpha_n != 0.
    cplx vlast = vb[static_cast<std::size_t>(d - 1)];
    CMat q(n - 2, n - 2);
    for (int j = 0; j < n - 2; ++j) {
        Eigen::VectorXcd col(d);
        for (int i = 0; i < d; ++i) col(i) = r(i, j);
        cplx t = col(d - 1) / vlast;
        for (int i = 0; i < n - 2; ++i) q(i, j) = col(i) - t * vb[static_cast<std::size_t>(i)];
    }
    return q;
}

CMat dualize(const CMat& m, const CMat& m_inverse) {
    if (m.rows() != m.cols() || m_inverse.rows() != m_inverse.cols() || m.rows() != m_inverse.rows())
        throw std::invalid_argument("dualize: shape mismatch");
    if ((m * m_inverse - CMat::Identity(m.rows(), m.cols())).norm() >
        1e-6 * std::max(1.0, m.norm()))
        throw std::invalid_argument("dualize: supplied matrix is not the inverse");
    return m_inverse.transpose();
}

} // namespace bendkz::fox
