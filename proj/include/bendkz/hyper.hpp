#pragma once

#include "bendkz/cmatrix.hpp"
#include "bendkz/kz.hpp"

#include <functional>
#include <vector>

namespace bendkz::hyper {

using kz::PlanarCurve;
using xalg::CMat;
using xalg::cplx;

/// Punctures and exponents of the integrand
/// Phi(xi) = prod_k (xi - z_k)^{lambda_k}.
struct IntegrandSpec {
    std::vector<cplx> z;
    std::vector<cplx> lambda;
    int n() const { return static_cast<int>(z.size()); }
    void validate() const; // distinct punctures, non-integer lambda
    /// exp(2 pi i lambda_k), the local monodromy factor of Phi around z_k.
    cplx chi(int k) const;
};

/// Curve piece small enough that the argument of (xi - z_k) moves by less
/// than pi/2 for every puncture; carries the continued logs at its start.
struct Subarc {
    PlanarCurve curve;
    std::vector<cplx> log_seed; // continued log(start - z_k), one per puncture
};

/// Closed branch-tracked loop. winding[k] is the (integer) total winding
/// around z_k accumulated by the log continuation.
struct Loop {
    std::vector<Subarc> arcs;
    std::vector<double> winding;
};

/// Weighted loops with cancelling twisted boundary:
/// sum_m weight_m (chi(loop_m) - 1) = 0.
struct TwistedCycle {
    struct Component {
        Loop loop;
        cplx weight;
    };
    std::vector<Component> comps;
};

/// Placement of the loop system. All loops share the real basepoint
/// (basepoint_x, 0) to the right of every puncture; connectors run parallel
/// to the real axis at depth conn_depth below it.
struct CycleGeometry {
    double basepoint_x = 0.0;
    double conn_depth = 0.0;
    double loop_radius = 0.0;
    double winf_center_x = 0.0;
    double winf_radius = 0.0;
    static CycleGeometry from_spec(const IntegrandSpec& spec);
};

struct CycleBasis {
    std::vector<TwistedCycle> w; // w_1 .. w_{n-1}
    TwistedCycle w_inf;
    CycleGeometry geom;
};

/// Branch-continued value of Phi at parameter t of a subarc.
cplx phi_eval(const IntegrandSpec& spec, const Subarc& arc, double t);

/// Loop with prescribed seed logs at its start point, winding once
/// counterclockwise around z_k: basepoint -> below the axis -> circle -> back.
Loop loop_around(const IntegrandSpec& spec, int k, const CycleGeometry& geom,
                 const std::vector<cplx>& base_logs);

/// Counterclockwise circle enclosing all punctures (the w_infinity carrier).
Loop loop_infinity(const IntegrandSpec& spec, const CycleGeometry& geom);

cplx loop_character(const IntegrandSpec& spec, const Loop& loop);
double boundary_defect(const IntegrandSpec& spec, const TwistedCycle& c);

/// Basis w_1..w_{n-1} plus w_inf at a real increasing configuration.
/// w_i = (chi_{i+1} - 1) loop_i - (chi_i - 1) loop_{i+1}; w_inf has weight 1.
CycleBasis cycle_basis(const IntegrandSpec& spec, const CycleGeometry* geom = nullptr);

/// Integral over a twisted cycle of g(xi, Phi(xi)) dxi, normalized by
/// -1/(2 pi i); adaptive quadrature to absolute tolerance tol per component.
cplx cycle_integral(const IntegrandSpec& spec, const TwistedCycle& c,
                    const std::function<cplx(cplx, cplx)>& g, double tol);

/// Period of eta_j = lambda_j Phi dxi/(xi - z_j) over the cycle.
cplx period(const IntegrandSpec& spec, const TwistedCycle& c, int j, double tol = 1e-9);

/// (n-1) x n matrix with entry (i, j) = period(w_i, eta_j); rows solve the
/// hypergeometric system at the given configuration.
CMat period_matrix(const IntegrandSpec& spec, double tol = 1e-9,
                   const CycleGeometry* geom = nullptr);

} // namespace bendkz::hyper
