#pragma once

#include "bendkz/cmatrix.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bendkz::kz {

using xalg::CMat;
using xalg::cplx;
using xalg::CRow;

/// Weight vector lambda_1..lambda_n of the connection.
struct LambdaVector {
    std::vector<cplx> values;
    int n() const { return static_cast<int>(values.size()); }
    bool sum_zero(double tol = 1e-12) const;
    /// lambda_k = i eps_k r_k from a closed orientation/radius datum.
    static LambdaVector from_linkage(const std::vector<int>& eps, const std::vector<double>& r);
};

/// Point of the configuration space: n pairwise distinct complex numbers.
struct ConfigPoint {
    std::vector<cplx> z;
    int n() const { return static_cast<int>(z.size()); }
    double min_gap() const;
    static ConfigPoint base(int n); // (0, 1, ..., n-1)
};

/// Planar curve pieces for one moving coordinate.
struct PlanarCurve {
    enum class Kind { line, arc } kind;
    cplx a, b;          // line endpoints
    cplx center;        // arc data
    double radius = 0.0, theta0 = 0.0, theta1 = 0.0;

    static PlanarCurve line(cplx a, cplx b) { return {Kind::line, a, b, {0, 0}, 0, 0, 0}; }
    static PlanarCurve arc(cplx c, double r, double t0, double t1) {
        return {Kind::arc, {0, 0}, {0, 0}, c, r, t0, t1};
    }
    cplx at(double s) const;      // s in [0,1]
    cplx velocity(double s) const;
    double length() const;
};

/// One segment of a configuration path: coordinate `mover` (1-based) follows
/// `curve`, all others stay at the values in `fixed`.
struct ConfigSegment {
    int mover;
    PlanarCurve curve;
    std::vector<cplx> fixed; // full config; entry mover-1 gives the start point
};

/// Piecewise-smooth path in the configuration space.
struct ConfigPath {
    std::vector<ConfigSegment> segments;
    ConfigPoint start() const;
    ConfigPoint end() const;
    bool closed(double tol = 1e-12) const;
    /// Minimum pairwise gap along the path (dense sampling).
    double clearance(int samples_per_segment = 512) const;
    ConfigPath reversed() const;
    /// Winding number of (z_mover - z_fixed_index) accumulated over the path.
    double winding(int mover, int other, int samples_per_segment = 2048) const;
};

/// Jordan-Pochhammer matrix: zero except rows/columns {i, j} where the block
/// is [[lambda_j, -lambda_j], [-lambda_i, lambda_i]]. J_ii = 0, J_ij = J_ji.
CMat jp_matrix(int i, int j, const LambdaVector& lambda);

struct RelationReport {
    double max_disjoint_commutator = 0.0;
    double max_triple_commutator = 0.0;
    double max_overall() const { return std::max(max_disjoint_commutator, max_triple_commutator); }
};

/// Commutator norms of the infinitesimal braid relations for the J_ij family.
RelationReport check_infinitesimal_braid(const LambdaVector& lambda);

/// Row-convention connection action: v * (sum over pairs of
/// (zdot_i - zdot_j)/(z_i - z_j) J_ij(lambda)).
CRow omega_apply(const ConfigPoint& z, const std::vector<cplx>& zdot, const LambdaVector& lambda,
                 const CRow& v);

struct TransportOptions {
    double tol = 1e-10;        // local error per unit path length
    double max_step_frac = 0.1; // max physical step as a fraction of clearance
};

/// Fundamental solution T with F(end) = F(start) * T for parallel rows F,
/// by adaptive embedded Runge-Kutta 5(4). Deterministic for fixed inputs.
CMat transport(const ConfigPath& path, const LambdaVector& lambda, const TransportOptions& opt = {});

struct LoopGeometry {
    double dip_frac = 0.35;    // dip depth as a fraction of the minimal gap
    double radius_frac = 0.22; // encircling radius as a fraction of the minimal gap
};

/// Closed loop realizing the band generator: z_j dips below the real axis,
/// travels to z_i, encircles it once counterclockwise and returns. The base
/// configuration must be real and strictly increasing.
ConfigPath pure_braid_loop(int i, int j, const ConfigPoint& base, const LoopGeometry& geom = {});

/// Contractible rectangle loop of coordinate `mover` in the lower half plane.
ConfigPath rectangle_loop(int mover, const ConfigPoint& base, double depth, double width);

/// Filtration C lambda in C^n_0 in C^n with deterministic orthonormal row
/// bases and the quotient basis for W_lambda = C^n_0 / C lambda.
struct Filtration {
    LambdaVector lambda;
    CMat basis_full;     // n x n identity rows
    CMat basis_zero_sum; // (n-1) x n orthonormal rows spanning C^n_0
    CRow basis_line;     // unit row along lambda
    CMat basis_quotient; // (n-2) x n orthonormal rows of C^n_0 orthogonal to lambda
};

Filtration filtration_basis(const LambdaVector& lambda);

/// Monodromy data of one generator loop, in the row convention
/// F(end) = F(start) * T over the counterclockwise loop for A_ij.
struct GeneratorMonodromy {
    CMat on_cn;       // n x n
    CMat on_zero_sum; // (n-1) x (n-1) in the zero-sum basis rows
    CMat on_quotient; // (n-2) x (n-2) in the quotient basis rows
    double restriction_defect = 0.0; // invariance defect of C^n_0 and C lambda
};

struct MonodromyRep {
    Filtration filtration;
    std::map<std::pair<int, int>, GeneratorMonodromy> generators;
    double max_defect = 0.0;
};

MonodromyRep monodromy_rep(const LambdaVector& lambda, double tol = 1e-10,
                           const LoopGeometry& geom = {});

} // namespace bendkz::kz
