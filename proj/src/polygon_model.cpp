#include "bendkz/polygon.hpp"

#include <cmath>
#include <stdexcept>

namespace bendkz::polygon {

namespace {

/// Common line direction of a degenerate configuration, sign-canonicalized so
/// the largest-magnitude component is positive.
Vec3 direction_of(const LinkageConfig& e) {
    if (!e.is_degenerate())
        throw std::invalid_argument("direction_of: configuration is not degenerate");
    Vec3 u = (1.0 / norm(e.edges[0])) * e.edges[0];
    int m = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(u[static_cast<std::size_t>(k)]) > std::abs(u[static_cast<std::size_t>(m)]))
            m = k;
    if (u[static_cast<std::size_t>(m)] < 0) u = -1.0 * u;
    return u;
}

struct Frame {
    Vec3 u, x, y;
};

Frame frame_of(const LinkageConfig& e) {
    Vec3 u = direction_of(e);
    // pick the coordinate axis least aligned with u and orthogonalize
    int a = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(u[static_cast<std::size_t>(k)]) < std::abs(u[static_cast<std::size_t>(a)]))
            a = k;
    Vec3 ax{0, 0, 0};
    ax[static_cast<std::size_t>(a)] = 1.0;
    Vec3 x = ax - dot(ax, u) * u;
    x = (1.0 / norm(x)) * x;
    Vec3 y = cross(u, x);
    return {u, x, y};
}

} // namespace

TangentVector linearization_closed(const LinkageConfig& e_deg, int i, int j,
                                   const TangentVector& delta) {
    const int n = e_deg.n();
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("linearization_closed: need 1 <= i < j <= n");
    if (delta.n() != n) throw std::invalid_argument("linearization_closed: size mismatch");
    Vec3 u = direction_of(e_deg);
    const double si = dot(e_deg.edges[static_cast<std::size_t>(i - 1)], u); // eps_i r_i
    const double sj = dot(e_deg.edges[static_cast<std::size_t>(j - 1)], u); // eps_j r_j
    TangentVector out;
    out.deltas.assign(static_cast<std::size_t>(n), Vec3{0, 0, 0});
    Vec3 udi = cross(u, delta.deltas[static_cast<std::size_t>(i - 1)]);
    Vec3 udj = cross(u, delta.deltas[static_cast<std::size_t>(j - 1)]);
    out.deltas[static_cast<std::size_t>(i - 1)] = sj * udi - si * udj;
    out.deltas[static_cast<std::size_t>(j - 1)] = (-sj) * udi + si * udj;
    return out;
}

Eigen::MatrixXd linearization_closed_matrix(const LinkageConfig& e_deg, int i, int j) {
    const int n = e_deg.n();
    Frame fr = frame_of(e_deg);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int l = 0; l < n; ++l)
        for (int c = 0; c < 2; ++c) {
            TangentVector basis;
            basis.deltas.assign(static_cast<std::size_t>(n), Vec3{0, 0, 0});
            basis.deltas[static_cast<std::size_t>(l)] = (c == 0) ? fr.x : fr.y;
            TangentVector img = linearization_closed(e_deg, i, j, basis);
            for (int k = 0; k < n; ++k) {
                const Vec3& d = img.deltas[static_cast<std::size_t>(k)];
                m(2 * k, 2 * l + c) = dot(d, fr.x);
                m(2 * k + 1, 2 * l + c) = dot(d, fr.y);
            }
        }
    return m;
}

Eigen::MatrixXd linearization_fd(const LinkageConfig& e_deg, int i, int j, double h) {
    if (!(h >= 1e-6 && h <= 1e-3)) throw std::invalid_argument("linearization_fd: h out of range");
    if (!e_deg.is_degenerate())
        throw std::invalid_argument("linearization_fd: configuration is not degenerate");
    const int n = e_deg.n();
    Frame fr = frame_of(e_deg);
    std::vector<int> pair{i, j};

    auto retract = [](LinkageConfig e) {
        for (std::size_t k = 0; k < e.edges.size(); ++k) {
            double nk = norm(e.edges[k]);
            e.edges[k] = (e.radii[k] / nk) * e.edges[k];
        }
        return e;
    };

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int l = 0; l < n; ++l)
        for (int c = 0; c < 2; ++c) {
            Vec3 dir = (c == 0) ? fr.x : fr.y;
            LinkageConfig ep = e_deg, em = e_deg;
            ep.edges[static_cast<std::size_t>(l)] =
                ep.edges[static_cast<std::size_t>(l)] + h * dir;
            em.edges[static_cast<std::size_t>(l)] =
                em.edges[static_cast<std::size_t>(l)] - h * dir;
            TangentVector bp = bending_field(retract(ep), pair);
            TangentVector bm = bending_field(retract(em), pair);
            for (int k = 0; k < n; ++k) {
                Vec3 d = (1.0 / (2.0 * h)) *
                         (bp.deltas[static_cast<std::size_t>(k)] -
                          bm.deltas[static_cast<std::size_t>(k)]);
                m(2 * k, 2 * l + c) = dot(d, fr.x);
                m(2 * k + 1, 2 * l + c) = dot(d, fr.y);
            }
        }
    return m;
}

std::vector<cplx> TangentModel::psi(const TangentVector& delta) const {
    std::vector<cplx> w;
    w.reserve(delta.deltas.size());
    for (const Vec3& d : delta.deltas) w.emplace_back(dot(d, frame_x), dot(d, frame_y));
    return w;
}

TangentModel tangent_model(const LinkageConfig& e_deg) {
    if (!e_deg.is_degenerate())
        throw std::invalid_argument("tangent_model: configuration is not degenerate");
    const int n = e_deg.n();
    Frame fr = frame_of(e_deg);
    TangentModel tm;
    tm.config = e_deg;
    tm.u = fr.u;
    tm.frame_x = fr.x;
    tm.frame_y = fr.y;

    for (int c = 0; c < 2; ++c) {
        Vec3 v = (c == 0) ? fr.x : fr.y;
        TangentVector t;
        for (int k = 0; k < n; ++k)
            t.deltas.push_back(cross(e_deg.edges[static_cast<std::size_t>(k)], v));
        tm.v_e.push_back(t);
    }

    tm.j_matrix = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
        tm.j_matrix(2 * k + 1, 2 * k) = 1.0;  // u x frame_x = frame_y
        tm.j_matrix(2 * k, 2 * k + 1) = -1.0; // u x frame_y = -frame_x
    }
    return tm;
}

std::map<std::pair<int, int>, CMat> theorem_a_matrices(const OrientationVector& eps,
                                                       const std::vector<double>& r) {
    LinkageConfig e = degenerate_config(eps, r, Vec3{0, 0, 1});
    const int n = e.n();
    std::map<std::pair<int, int>, CMat> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Eigen::MatrixXd l = linearization_closed_matrix(e, i, j);
            CMat mcol(n, n);
            double scale = l.cwiseAbs().maxCoeff();
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    double b11 = l(2 * k, 2 * m), b12 = l(2 * k, 2 * m + 1);
                    double b21 = l(2 * k + 1, 2 * m), b22 = l(2 * k + 1, 2 * m + 1);
                    // split into C-linear and antilinear parts; the latter must vanish
                    cplx lin{0.5 * (b11 + b22), 0.5 * (b21 - b12)};
                    cplx anti{0.5 * (b11 - b22), 0.5 * (b21 + b12)};
                    if (std::abs(anti) > 1e-12 * std::max(1.0, scale))
                        throw std::runtime_error(
                            "theorem_a_matrices: linearization does not commute with J");
                    mcol(k, m) = lin;
                }
            // row convention: w -> w M, matching the connection side
            out.emplace(std::make_pair(i, j), CMat(mcol.transpose()));
        }
    return out;
}

} // namespace bendkz::polygon
