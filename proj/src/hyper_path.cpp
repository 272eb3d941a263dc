#include "bendkz/hyper.hpp"

#include <cmath>
#include <stdexcept>

namespace bendkz::hyper {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTau = 2.0 * kPi;

double dist_point_segment(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// Lower bound for the distance from a curve to a puncture.
double curve_puncture_distance(const PlanarCurve& c, cplx z) {
    if (c.kind == PlanarCurve::Kind::line) return dist_point_segment(z, c.a, c.b);
    return std::abs(std::abs(z - c.center) - c.radius);
}
} // namespace

void IntegrandSpec::validate() const {
    if (z.size() != lambda.size()) throw std::invalid_argument("IntegrandSpec: size mismatch");
    for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b)
            if (std::abs(z[a] - z[b]) < 1e-9)
                throw std::invalid_argument("IntegrandSpec: punctures not distinct");
    for (const cplx& l : lambda) {
        if (std::abs(l.imag()) < 1e-12 && std::abs(l.real() - std::round(l.real())) < 1e-12)
            throw std::invalid_argument("IntegrandSpec: integer lambda_j");
    }
}

cplx IntegrandSpec::chi(int k) const {
    return std::exp(cplx{0.0, kTau} * lambda[static_cast<std::size_t>(k - 1)]);
}

cplx phi_eval(const IntegrandSpec& spec, const Subarc& arc, double t) {
    cplx xi = arc.curve.at(t);
    cplx xi0 = arc.curve.at(0.0);
    cplx s{0.0, 0.0};
    for (std::size_t k = 0; k < spec.z.size(); ++k) {
        cplx lk = arc.log_seed[k] + std::log((xi - spec.z[k]) / (xi0 - spec.z[k]));
        s += spec.lambda[k] * lk;
    }
    return std::exp(s);
}

namespace {

/// Append a primitive curve to a loop, splitting it so each piece subtends a
/// small argument from every puncture and threading the log seeds.
void append_curve(Loop& loop, const IntegrandSpec& spec, const PlanarCurve& c,
                  std::vector<cplx>& logs) {
    double dmin = std::numeric_limits<double>::infinity();
    for (const cplx& z : spec.z) dmin = std::min(dmin, curve_puncture_distance(c, z));
    if (!(dmin > 0)) throw std::runtime_error("append_curve: curve passes through a puncture");
    const double len = c.length();
    if (len == 0.0) return;
    int pieces = std::max(1, static_cast<int>(std::ceil(len / (0.45 * dmin))));
    for (int p = 0; p < pieces; ++p) {
        double t0 = static_cast<double>(p) / pieces;
        double t1 = static_cast<double>(p + 1) / pieces;
        PlanarCurve piece = c;
        if (c.kind == PlanarCurve::Kind::line) {
            piece.a = c.at(t0);
            piece.b = c.at(t1);
        } else {
            piece.theta0 = c.theta0 + t0 * (c.theta1 - c.theta0);
            piece.theta1 = c.theta0 + t1 * (c.theta1 - c.theta0);
        }
        Subarc arc{piece, logs};
        // advance the seeds to the end of the piece by principal relative logs
        cplx xs = piece.at(0.0), xe = piece.at(1.0);
        for (std::size_t k = 0; k < spec.z.size(); ++k)
            logs[k] += std::log((xe - spec.z[k]) / (xs - spec.z[k]));
        loop.arcs.push_back(std::move(arc));
    }
}

} // namespace

CycleGeometry CycleGeometry::from_spec(const IntegrandSpec& spec) {
    double xmax = -std::numeric_limits<double>::infinity();
    double amax = 0.0, cx = 0.0, gap = std::numeric_limits<double>::infinity();
    for (const cplx& z : spec.z) {
        xmax = std::max(xmax, z.real());
        amax = std::max(amax, std::abs(z));
        cx += z.real();
    }
    cx /= spec.n();
    for (std::size_t a = 0; a < spec.z.size(); ++a)
        for (std::size_t b = a + 1; b < spec.z.size(); ++b)
            gap = std::min(gap, std::abs(spec.z[a] - spec.z[b]));
    CycleGeometry g;
    g.basepoint_x = xmax + std::max(1.0, 0.75 * gap);
    g.conn_depth = 0.35 * gap;
    g.loop_radius = 0.2 * gap;
    g.winf_center_x = cx;
    g.winf_radius = amax + 1.0;
    return g;
}

Loop loop_around(const IntegrandSpec& spec, int k, const CycleGeometry& geom,
                 const std::vector<cplx>& base_logs) {
    const cplx zk = spec.z[static_cast<std::size_t>(k - 1)];
    const cplx p0{geom.basepoint_x, 0.0};
    const cplx id{0.0, 1.0};
    const double d = geom.conn_depth, r = geom.loop_radius;
    if (!(r > 0) || !(d > r)) throw std::invalid_argument("loop_around: bad geometry");

    Loop loop;
    std::vector<cplx> logs = base_logs;
    append_curve(loop, spec, PlanarCurve::line(p0, p0 - id * d), logs);
    append_curve(loop, spec, PlanarCurve::line(p0 - id * d, cplx{zk.real(), 0.0} - id * d), logs);
    append_curve(loop, spec, PlanarCurve::line(cplx{zk.real(), 0.0} - id * d, zk - id * r), logs);
    append_curve(loop, spec, PlanarCurve::arc(zk, r, -0.5 * kPi, 1.5 * kPi), logs);
    append_curve(loop, spec, PlanarCurve::line(zk - id * r, cplx{zk.real(), 0.0} - id * d), logs);
    append_curve(loop, spec, PlanarCurve::line(cplx{zk.real(), 0.0} - id * d, p0 - id * d), logs);
    append_curve(loop, spec, PlanarCurve::line(p0 - id * d, p0), logs);

    loop.winding.resize(spec.z.size());
    for (std::size_t m = 0; m < spec.z.size(); ++m) {
        double w = (logs[m] - base_logs[m]).imag() / kTau;
        if (std::abs(w - std::round(w)) > 1e-9)
            throw std::runtime_error("loop_around: non-integer winding after continuation");
        loop.winding[m] = std::round(w);
    }
    return loop;
}

Loop loop_infinity(const IntegrandSpec& spec, const CycleGeometry& geom) {
    Loop loop;
    cplx center{geom.winf_center_x, 0.0};
    cplx start = center + geom.winf_radius;
    std::vector<cplx> logs(spec.z.size());
    for (std::size_t k = 0; k < spec.z.size(); ++k) logs[k] = std::log(start - spec.z[k]);
    std::vector<cplx> logs0 = logs;
    append_curve(loop, spec, PlanarCurve::arc(center, geom.winf_radius, 0.0, kTau), logs);
    loop.winding.resize(spec.z.size());
    for (std::size_t m = 0; m < spec.z.size(); ++m)
        loop.winding[m] = std::round((logs[m] - logs0[m]).imag() / kTau);
    return loop;
}

cplx loop_character(const IntegrandSpec& spec, const Loop& loop) {
    cplx s{0.0, 0.0};
    for (std::size_t k = 0; k < spec.z.size(); ++k) s += spec.lambda[k] * loop.winding[k];
    return std::exp(cplx{0.0, kTau} * s);
}

double boundary_defect(const IntegrandSpec& spec, const TwistedCycle& c) {
    cplx s{0.0, 0.0};
    for (const auto& comp : c.comps)
        s += comp.weight * (loop_character(spec, comp.loop) - cplx{1.0, 0.0});
    return std::abs(s);
}

} // namespace bendkz::hyper
