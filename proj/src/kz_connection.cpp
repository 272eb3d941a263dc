#include "bendkz/kz.hpp"

#include <cmath>
#include <stdexcept>

namespace bendkz::kz {

CMat jp_matrix(int i, int j, const LambdaVector& lambda) {
    const int n = lambda.n();
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("jp_matrix: index out of range");
    CMat m = CMat::Zero(n, n);
    if (i == j) return m;
    if (i > j) std::swap(i, j);
    const cplx li = lambda.values[static_cast<std::size_t>(i - 1)];
    const cplx lj = lambda.values[static_cast<std::size_t>(j - 1)];
    m(i - 1, i - 1) = lj;
    m(i - 1, j - 1) = -lj;
    m(j - 1, i - 1) = -li;
    m(j - 1, j - 1) = li;
    return m;
}

RelationReport check_infinitesimal_braid(const LambdaVector& lambda) {
    const int n = lambda.n();
    RelationReport rep;
    auto comm = [](const CMat& a, const CMat& b) { return CMat(a * b - b * a); };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            CMat jij = jp_matrix(i, j, lambda);
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    rep.max_disjoint_commutator = std::max(
                        rep.max_disjoint_commutator,
                        xalg::max_abs(comm(jij, jp_matrix(k, l, lambda))));
                }
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j) continue;
                CMat s = jij + jp_matrix(j, k, lambda) + jp_matrix(k, i, lambda);
                rep.max_triple_commutator =
                    std::max(rep.max_triple_commutator, xalg::max_abs(comm(jij, s)));
            }
        }
    return rep;
}

CRow omega_apply(const ConfigPoint& z, const std::vector<cplx>& zdot, const LambdaVector& lambda,
                 const CRow& v) {
    const int n = z.n();
    if (static_cast<int>(zdot.size()) != n || lambda.n() != n || v.cols() != n)
        throw std::invalid_argument("omega_apply: size mismatch");
    for (std::size_t a = 0; a < z.z.size(); ++a)
        for (std::size_t b = a + 1; b < z.z.size(); ++b)
            if (z.z[a] == z.z[b]) throw std::invalid_argument("omega_apply: coincident punctures");
    CRow out = CRow::Zero(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            cplx num = zdot[static_cast<std::size_t>(i - 1)] - zdot[static_cast<std::size_t>(j - 1)];
            if (num == cplx{0.0, 0.0}) continue;
            cplx den = z.z[static_cast<std::size_t>(i - 1)] - z.z[static_cast<std::size_t>(j - 1)];
            cplx f = num / den;
            const cplx li = lambda.values[static_cast<std::size_t>(i - 1)];
            const cplx lj = lambda.values[static_cast<std::size_t>(j - 1)];
            // v * J_ij touches only coordinates i and j
            cplx vi = v(i - 1), vj = v(j - 1);
            out(i - 1) += f * (lj * vi - li * vj);
            out(j - 1) += f * (-lj * vi + li * vj);
        }
    return out;
}

namespace {

// Omega(s) for one segment: only the mover's velocity is nonzero.
CMat segment_omega(const ConfigSegment& seg, double s, const LambdaVector& lambda) {
    const int n = static_cast<int>(seg.fixed.size());
    const int m = seg.mover;
    const cplx zm = seg.curve.at(s);
    const cplx vm = seg.curve.velocity(s);
    CMat om = CMat::Zero(n, n);
    const cplx lm = lambda.values[static_cast<std::size_t>(m - 1)];
    for (int k = 1; k <= n; ++k) {
        if (k == m) continue;
        const cplx zk = seg.fixed[static_cast<std::size_t>(k - 1)];
        const cplx f = vm / (zm - zk);
        const cplx lk = lambda.values[static_cast<std::size_t>(k - 1)];
        // f * J_{m,k} with the symmetric convention J_ij = J_ji
        om(m - 1, m - 1) += f * lk;
        om(m - 1, k - 1) -= f * lk;
        om(k - 1, m - 1) -= f * lm;
        om(k - 1, k - 1) += f * lm;
    }
    return om;
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

} // namespace

CMat transport(const ConfigPath& path, const LambdaVector& lambda, const TransportOptions& opt) {
    if (path.segments.empty()) throw std::invalid_argument("transport: empty path");
    if (!(opt.tol > 0)) throw std::invalid_argument("transport: tol must be positive");
    const int n = lambda.n();
    const double clearance = path.clearance();
    if (!(clearance > 0)) throw std::runtime_error("transport: path clearance violation");

    CMat t = CMat::Identity(n, n);
    for (const ConfigSegment& seg : path.segments) {
        if (static_cast<int>(seg.fixed.size()) != n)
            throw std::invalid_argument("transport: segment size mismatch");
        const double seg_len = seg.curve.length();
        if (seg_len == 0.0) continue;
        // parameter step bound from the physical step bound
        const double h_max = std::min(1.0, opt.max_step_frac * clearance / seg_len);
        double s = 0.0;
        double h = h_max;
        CMat k1 = t * segment_omega(seg, s, lambda);
        while (s < 1.0) {
            h = std::min(h, 1.0 - s);
            const CMat k2 =
                (t + h * a21 * k1) * segment_omega(seg, s + c2 * h, lambda);
            const CMat k3 =
                (t + h * (a31 * k1 + a32 * k2)) * segment_omega(seg, s + c3 * h, lambda);
            const CMat k4 = (t + h * (a41 * k1 + a42 * k2 + a43 * k3)) *
                            segment_omega(seg, s + c4 * h, lambda);
            const CMat k5 = (t + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)) *
                            segment_omega(seg, s + c5 * h, lambda);
            const CMat k6 = (t + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)) *
                            segment_omega(seg, s + h, lambda);
            const CMat t5 = t + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
            const CMat k7 = t5 * segment_omega(seg, s + h, lambda);
            const CMat err =
                h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

            // error per unit path length, mixed absolute/relative scale
            double escale = 0.0;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    escale = std::max(escale,
                                      std::abs(err(r, c)) / (1.0 + std::abs(t5(r, c))));
            const double budget = opt.tol * h * seg_len;
            if (escale <= budget) {
                s += h;
                t = t5;
                k1 = k7; // FSAL
                double grow = 0.9 * std::pow(budget / std::max(escale, 1e-300), 0.2);
                h = std::min(h * std::min(5.0, std::max(0.2, grow)), h_max);
            } else {
                double shrink = 0.9 * std::pow(budget / escale, 0.2);
                h *= std::min(0.9, std::max(0.1, shrink));
                if (h * seg_len < 1e-14)
                    throw std::runtime_error("transport: step-size underflow on a segment");
            }
        }
    }
    return t;
}

} // namespace bendkz::kz
