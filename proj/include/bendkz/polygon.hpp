#pragma once

#include "bendkz/cmatrix.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bendkz::polygon {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
    double operator[](int k) const { return k == 0 ? x : (k == 1 ? y : z); }
    double& operator[](int k) { return k == 0 ? x : (k == 1 ? y : z); }
};

using xalg::CMat;
using xalg::cplx;

Vec3 cross(const Vec3& a, const Vec3& b);
double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);

/// Edge-orientation signs of a degenerate polygon.
struct OrientationVector {
    std::vector<int> signs; // +-1
    int n() const { return static_cast<int>(signs.size()); }
};

/// n-gon linkage: edge vectors with prescribed lengths. closed == true means
/// the edges sum to zero (a point of M~_r); false allows open linkages (N~_r).
struct LinkageConfig {
    std::vector<Vec3> edges;
    std::vector<double> radii;
    bool closed = false;

    int n() const { return static_cast<int>(edges.size()); }
    Vec3 edge_sum() const;
    /// max_k | |e_k| - r_k | and, when closed, |sum e_k| as well.
    double constraint_defect() const;
    /// All pairwise cross products below 1e-10 * r_i r_j.
    bool is_degenerate() const;
};

/// Per-edge variation vectors delta_k, tangent to the spheres at e_k.
struct TangentVector {
    std::vector<Vec3> deltas;
    int n() const { return static_cast<int>(deltas.size()); }
};

/// f_I(e) = |sum_{i in I} e_i|^2.
double bending_potential(const LinkageConfig& e, const std::vector<int>& idx);

/// B_I(e): delta_i = e_I x e_i for i in I, zero otherwise.
TangentVector bending_field(const LinkageConfig& e, const std::vector<int>& idx);

/// Flow of B_I for time t: rotates the edges in I about e_I by angle t |e_I|.
LinkageConfig bending_flow(const LinkageConfig& e, const std::vector<int>& idx, double t);

/// A potential with an analytic per-edge gradient.
struct PotentialSpec {
    std::string name;
    std::function<double(const LinkageConfig&)> value;
    std::function<Vec3(const LinkageConfig&, int)> grad; // gradient in edge k (1-based)

    static PotentialSpec f(const std::vector<int>& idx);       // bending potential f_I
    static PotentialSpec g(int i, int j);                      // e_i . e_j
    static PotentialSpec h(int i, int j, int k);               // e_i . (e_j x e_k)
};

/// Lie-Poisson bracket on the product of spheres:
/// {F, G}(e) = sum_k e_k . (grad_k F x grad_k G).
double poisson_bracket(const PotentialSpec& f, const PotentialSpec& g, const LinkageConfig& e);

/// Degenerate configuration e_k = r_k eps_k u; requires sum eps_k r_k = 0.
LinkageConfig degenerate_config(const OrientationVector& eps, const std::vector<double>& r,
                                const Vec3& u);

/// Closed-form linearization of the bending field B_ij at a degenerate e:
/// delta'_i = eps_j r_j (u x delta_i) - eps_i r_i (u x delta_j), the negated
/// value in slot j, zero elsewhere.
TangentVector linearization_closed(const LinkageConfig& e_deg, int i, int j,
                                   const TangentVector& delta);

/// Return the 2n x 2n real matrix of linearization_closed in the frame basis
/// (e_x, e_y per edge) for u = third frame axis.
Eigen::MatrixXd linearization_closed_matrix(const LinkageConfig& e_deg, int i, int j);

/// Finite-difference linearization with sphere retraction, same basis.
Eigen::MatrixXd linearization_fd(const LinkageConfig& e_deg, int i, int j, double h = 1e-5);

/// Frame data, almost complex structure and holomorphic coordinates at a
/// degenerate configuration.
struct TangentModel {
    LinkageConfig config;
    Vec3 u;
    Vec3 frame_x, frame_y;               // orthonormal frame of the plane u-perp
    std::vector<TangentVector> v_e;      // basis of V_e (2 vectors)
    Eigen::MatrixXd j_matrix;            // complex structure on the 2n frame basis

    /// Holomorphic coordinate per edge: w_k = delta_k . frame_x + i delta_k . frame_y.
    std::vector<cplx> psi(const TangentVector& delta) const;
};

TangentModel tangent_model(const LinkageConfig& e_deg);

/// The matrices psi A_ij psi^{-1} on C^n obtained by conjugating the real
/// linearization through the holomorphic coordinates, in the row convention
/// (w -> w M). Keys are (i, j) with i < j.
std::map<std::pair<int, int>, CMat> theorem_a_matrices(const OrientationVector& eps,
                                                       const std::vector<double>& r);

/// CSV rows "t,e1x,e1y,e1z,..." of a bending-flow trajectory.
std::string flow_csv(const LinkageConfig& e, const std::vector<int>& idx, double t_max, int steps);

} // namespace bendkz::polygon
