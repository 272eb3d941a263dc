#include "bendkz/hyper.hpp"

#include <cmath>
#include <stdexcept>

namespace bendkz::hyper {

namespace {
constexpr double kTau = 2.0 * 3.14159265358979323846;

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
constexpr double kKronrodX[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                                 0.741531185599394, 0.586087235467691, 0.405845151377397,
                                 0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                                 0.140653259715525, 0.169004726639267, 0.190350578064785,
                                 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469};

struct PanelResult {
    cplx integral;
    double error;
};

PanelResult gk15(const std::function<cplx(double)>& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    cplx ik{0.0, 0.0}, ig{0.0, 0.0};
    for (int i = 0; i < 8; ++i) {
        if (kKronrodX[i] == 0.0) {
            cplx v = f(c);
            ik += kKronrodW[i] * v;
            ig += kGaussW[3] * v;
        } else {
            cplx vl = f(c - h * kKronrodX[i]);
            cplx vr = f(c + h * kKronrodX[i]);
            ik += kKronrodW[i] * (vl + vr);
            if (i % 2 == 1) ig += kGaussW[i / 2] * (vl + vr);
        }
    }
    ik *= h;
    ig *= h;
    return {ik, std::abs(ik - ig)};
}

cplx adaptive_panel(const std::function<cplx(double)>& f, double a, double b, double tol,
                    int depth) {
    PanelResult r = gk15(f, a, b);
    if (r.error <= tol || (b - a) < 1e-14) {
        if (depth <= 0 && r.error > tol)
            throw std::runtime_error("quadrature non-convergence on a cycle component");
        if (r.error <= tol) return r.integral;
    }
    if (depth <= 0) throw std::runtime_error("quadrature non-convergence on a cycle component");
    double m = 0.5 * (a + b);
    return adaptive_panel(f, a, m, 0.5 * tol, depth - 1) +
           adaptive_panel(f, m, b, 0.5 * tol, depth - 1);
}

cplx integrate_loop(const IntegrandSpec& spec, const Loop& loop,
                    const std::function<cplx(cplx, cplx)>& g, double tol) {
    if (loop.arcs.empty()) return {0.0, 0.0};
    const double tol_arc = tol / static_cast<double>(loop.arcs.size());
    cplx total{0.0, 0.0};
    for (const Subarc& arc : loop.arcs) {
        auto f = [&](double t) -> cplx {
            cplx xi = arc.curve.at(t);
            return g(xi, phi_eval(spec, arc, t)) * arc.curve.velocity(t);
        };
        total += adaptive_panel(f, 0.0, 1.0, tol_arc, 28);
    }
    return total;
}
} // namespace

CycleBasis cycle_basis(const IntegrandSpec& spec, const CycleGeometry* geom_in) {
    spec.validate();
    const int n = spec.n();
    for (int k = 0; k < n; ++k) {
        if (std::abs(spec.z[static_cast<std::size_t>(k)].imag()) > 0)
            throw std::invalid_argument("cycle_basis: punctures must be real");
        if (k + 1 < n && !(spec.z[static_cast<std::size_t>(k)].real() <
                           spec.z[static_cast<std::size_t>(k + 1)].real()))
            throw std::invalid_argument("cycle_basis: punctures must be increasing");
    }
    CycleBasis basis;
    basis.geom = geom_in ? *geom_in : CycleGeometry::from_spec(spec);

    // all loops share the basepoint and its principal-branch seeds
    const cplx p0{basis.geom.basepoint_x, 0.0};
    std::vector<cplx> base_logs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) base_logs[static_cast<std::size_t>(k)] = std::log(p0 - spec.z[static_cast<std::size_t>(k)]);

    std::vector<Loop> loops;
    loops.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) loops.push_back(loop_around(spec, k, basis.geom, base_logs));

    for (int i = 1; i <= n - 1; ++i) {
        cplx chi_i = spec.chi(i), chi_ip = spec.chi(i + 1);
        if (std::abs(chi_i - cplx{1.0, 0.0}) < 1e-12 || std::abs(chi_ip - cplx{1.0, 0.0}) < 1e-12)
            throw std::invalid_argument("cycle_basis: degenerate weights (chi_j = 1)");
        TwistedCycle w;
        w.comps.push_back({loops[static_cast<std::size_t>(i - 1)], chi_ip - cplx{1.0, 0.0}});
        w.comps.push_back({loops[static_cast<std::size_t>(i)], -(chi_i - cplx{1.0, 0.0})});
        double defect = boundary_defect(spec, w);
        if (defect > 1e-12)
            throw std::runtime_error("cycle_basis: twisted boundary fails to cancel");
        basis.w.push_back(std::move(w));
    }

    TwistedCycle winf;
    winf.comps.push_back({loop_infinity(spec, basis.geom), cplx{1.0, 0.0}});
    if (boundary_defect(spec, winf) > 1e-12)
        throw std::runtime_error("cycle_basis: w_inf has nontrivial monodromy (sum lambda != 0?)");
    basis.w_inf = std::move(winf);
    return basis;
}

cplx cycle_integral(const IntegrandSpec& spec, const TwistedCycle& c,
                    const std::function<cplx(cplx, cplx)>& g, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("cycle_integral: tol must be positive");
    cplx s{0.0, 0.0};
    for (const auto& comp : c.comps)
        s += comp.weight * integrate_loop(spec, comp.loop, g, tol);
    // normalization -1/(2 pi i), fixed by the residue pairing at infinity
    return s * cplx{0.0, 1.0} / kTau;
}

cplx period(const IntegrandSpec& spec, const TwistedCycle& c, int j, double tol) {
    const cplx zj = spec.z[static_cast<std::size_t>(j - 1)];
    const cplx lj = spec.lambda[static_cast<std::size_t>(j - 1)];
    return cycle_integral(
        spec, c, [&](cplx xi, cplx phi) { return lj * phi / (xi - zj); }, tol);
}

CMat period_matrix(const IntegrandSpec& spec, double tol, const CycleGeometry* geom) {
    CycleBasis basis = cycle_basis(spec, geom);
    const int n = spec.n();
    CMat p(n - 1, n);
    for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n; ++j)
            p(i - 1, j - 1) = period(spec, basis.w[static_cast<std::size_t>(i - 1)], j, tol);
    return p;
}

} // namespace bendkz::hyper
