#include "bendkz/cmatrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bendkz::xalg {

double max_abs(const CMat& m) {
    double v = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) v = std::max(v, std::abs(m(i, j)));
    return v;
}

std::vector<double> singular_values(const CMat& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> s(svd.singularValues().data(),
                          svd.singularValues().data() + svd.singularValues().size());
    return s;
}

double cond(const CMat& m) {
    auto s = singular_values(m);
    if (s.empty() || s.back() == 0.0) return std::numeric_limits<double>::infinity();
    return s.front() / s.back();
}

CMat inverse(const CMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    if (cond(a) > kSingularCondition)
        throw std::runtime_error("inverse: matrix singular to tolerance");
    Eigen::MatrixXcd ac = a;
    return CMat(ac.partialPivLu().inverse());
}

CRow solve_row(const CMat& a, const CRow& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_row: matrix not square");
    if (a.rows() != b.cols()) throw std::invalid_argument("solve_row: shape mismatch");
    if (cond(a) > kSingularCondition)
        throw std::runtime_error("solve_row: matrix singular to tolerance");
    // x a = b  <=>  a^T x^T = b^T
    Eigen::MatrixXcd at = a.transpose();
    Eigen::VectorXcd xt = at.partialPivLu().solve(b.transpose());
    return xt.transpose();
}

std::vector<cplx> eigenvalues(const CMat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues: matrix not square");
    if (a.rows() > kEigenMaxDim) throw std::invalid_argument("eigenvalues: dimension over limit");
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, /*computeEigenvectors=*/false);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
    return ev;
}

std::optional<Intertwiner> find_intertwiner(const std::vector<std::pair<CMat, CMat>>& pairs) {
    if (pairs.empty()) return std::nullopt;
    const Eigen::Index d = pairs.front().first.rows();
    for (const auto& [a, b] : pairs)
        if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d)
            throw std::invalid_argument("find_intertwiner: pair dimensions disagree");

    // vec is column-major: vec(A X - X B) = (I (x) A - B^T (x) I) vec(X).
    const Eigen::Index d2 = d * d;
    Eigen::MatrixXcd k(static_cast<Eigen::Index>(pairs.size()) * d2, d2);
    k.setZero();
    Eigen::Index row0 = 0;
    for (const auto& [a, b] : pairs) {
        for (Eigen::Index cb = 0; cb < d; ++cb)
            for (Eigen::Index rb = 0; rb < d; ++rb) {
                // block (rb, cb) of I (x) A is delta_{rb,cb} A; of B^T (x) I is B(cb, rb) I.
                for (Eigen::Index i = 0; i < d; ++i) {
                    for (Eigen::Index j = 0; j < d; ++j) {
                        cplx v{0.0, 0.0};
                        if (rb == cb) v += a(i, j);
                        if (i == j) v -= b(cb, rb);
                        k(row0 + rb * d + i, cb * d + j) += v;
                    }
                }
            }
        row0 += d2;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(k, Eigen::ComputeThinV);
    Eigen::VectorXcd xv = svd.matrixV().col(d2 - 1);
    CMat x(d, d);
    for (Eigen::Index c = 0; c < d; ++c)
        for (Eigen::Index r = 0; r < d; ++r) x(r, c) = xv(c * d + r);
    double fn = x.norm();
    if (fn > 0) x /= fn;

    double res = 0.0;
    for (const auto& [a, b] : pairs) res = std::max(res, (a * x - x * b).norm());
    return Intertwiner{x, res, cond(x)};
}

double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (const cplx& va : a) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double dd = std::abs(va - b[j]);
            if (dd < best) {
                best = dd;
                bi = j;
            }
        }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace bendkz::xalg
