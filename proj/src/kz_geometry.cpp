#include "bendkz/kz.hpp"

#include <cmath>
#include <stdexcept>

namespace bendkz::kz {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool LambdaVector::sum_zero(double tol) const {
    cplx s{0.0, 0.0};
    for (const cplx& v : values) s += v;
    return std::abs(s) < tol;
}

LambdaVector LambdaVector::from_linkage(const std::vector<int>& eps, const std::vector<double>& r) {
    if (eps.size() != r.size()) throw std::invalid_argument("LambdaVector: eps/r size mismatch");
    LambdaVector l;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        if (eps[k] != 1 && eps[k] != -1) throw std::invalid_argument("LambdaVector: eps must be +-1");
        if (r[k] <= 0) throw std::invalid_argument("LambdaVector: radii must be positive");
        l.values.push_back(cplx{0.0, eps[k] * r[k]});
    }
    return l;
}

double ConfigPoint::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) g = std::min(g, std::abs(z[i] - z[j]));
    return g;
}

ConfigPoint ConfigPoint::base(int n) {
    ConfigPoint p;
    for (int k = 0; k < n; ++k) p.z.push_back(cplx{static_cast<double>(k), 0.0});
    return p;
}

cplx PlanarCurve::at(double s) const {
    if (kind == Kind::line) return a + s * (b - a);
    double th = theta0 + s * (theta1 - theta0);
    return center + radius * cplx{std::cos(th), std::sin(th)};
}

cplx PlanarCurve::velocity(double s) const {
    if (kind == Kind::line) return b - a;
    double th = theta0 + s * (theta1 - theta0);
    double dth = theta1 - theta0;
    return radius * dth * cplx{-std::sin(th), std::cos(th)};
}

double PlanarCurve::length() const {
    if (kind == Kind::line) return std::abs(b - a);
    return radius * std::abs(theta1 - theta0);
}

ConfigPoint ConfigPath::start() const {
    if (segments.empty()) throw std::invalid_argument("ConfigPath: empty path");
    ConfigPoint p{segments.front().fixed};
    p.z[static_cast<std::size_t>(segments.front().mover - 1)] = segments.front().curve.at(0.0);
    return p;
}

ConfigPoint ConfigPath::end() const {
    if (segments.empty()) throw std::invalid_argument("ConfigPath: empty path");
    ConfigPoint p{segments.back().fixed};
    p.z[static_cast<std::size_t>(segments.back().mover - 1)] = segments.back().curve.at(1.0);
    return p;
}

bool ConfigPath::closed(double tol) const {
    ConfigPoint s = start(), e = end();
    for (std::size_t k = 0; k < s.z.size(); ++k)
        if (std::abs(s.z[k] - e.z[k]) > tol) return false;
    return true;
}

double ConfigPath::clearance(int samples_per_segment) const {
    double c = std::numeric_limits<double>::infinity();
    for (const ConfigSegment& seg : segments) {
        for (int s = 0; s <= samples_per_segment; ++s) {
            double t = static_cast<double>(s) / samples_per_segment;
            cplx zm = seg.curve.at(t);
            for (std::size_t k = 0; k < seg.fixed.size(); ++k) {
                if (static_cast<int>(k) == seg.mover - 1) continue;
                c = std::min(c, std::abs(zm - seg.fixed[k]));
            }
        }
        // gaps among the stationary coordinates
        for (std::size_t i = 0; i < seg.fixed.size(); ++i)
            for (std::size_t j = i + 1; j < seg.fixed.size(); ++j) {
                if (static_cast<int>(i) == seg.mover - 1 || static_cast<int>(j) == seg.mover - 1)
                    continue;
                c = std::min(c, std::abs(seg.fixed[i] - seg.fixed[j]));
            }
    }
    return c;
}

ConfigPath ConfigPath::reversed() const {
    ConfigPath p;
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        ConfigSegment s = *it;
        if (s.curve.kind == PlanarCurve::Kind::line) {
            std::swap(s.curve.a, s.curve.b);
        } else {
            std::swap(s.curve.theta0, s.curve.theta1);
        }
        p.segments.push_back(s);
    }
    return p;
}

double ConfigPath::winding(int mover, int other, int samples_per_segment) const {
    double acc = 0.0;
    for (const ConfigSegment& seg : segments) {
        cplx zo = seg.fixed[static_cast<std::size_t>(other - 1)];
        if (seg.mover != mover) {
            if (seg.mover == other) {
                // relative position reverses sign of the motion; track it too
                zo = seg.fixed[static_cast<std::size_t>(mover - 1)];
                cplx prev = seg.curve.at(0.0) - zo;
                for (int s = 1; s <= samples_per_segment; ++s) {
                    double t = static_cast<double>(s) / samples_per_segment;
                    cplx cur = seg.curve.at(t) - zo;
                    acc -= std::arg(cur / prev);
                    prev = cur;
                }
            }
            continue;
        }
        cplx prev = seg.curve.at(0.0) - zo;
        for (int s = 1; s <= samples_per_segment; ++s) {
            double t = static_cast<double>(s) / samples_per_segment;
            cplx cur = seg.curve.at(t) - zo;
            acc += std::arg(cur / prev);
            prev = cur;
        }
    }
    return acc / (2.0 * kPi);
}

ConfigPath pure_braid_loop(int i, int j, const ConfigPoint& base, const LoopGeometry& geom) {
    const int n = base.n();
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pure_braid_loop: need 1 <= i < j <= n");
    for (int k = 0; k < n; ++k) {
        if (std::abs(base.z[static_cast<std::size_t>(k)].imag()) > 0)
            throw std::invalid_argument("pure_braid_loop: base configuration must be real");
        if (k + 1 < n && !(base.z[static_cast<std::size_t>(k)].real() <
                           base.z[static_cast<std::size_t>(k + 1)].real()))
            throw std::invalid_argument("pure_braid_loop: base must be increasing");
    }
    const double g = base.min_gap();
    const double dip = geom.dip_frac * g;
    const double rad = geom.radius_frac * g;
    if (!(dip > 0) || !(rad > 0) || rad >= 0.5 * g || dip >= g || rad >= dip)
        throw std::invalid_argument("pure_braid_loop: geometry violates clearance");

    const cplx zi = base.z[static_cast<std::size_t>(i - 1)];
    const cplx zj = base.z[static_cast<std::size_t>(j - 1)];
    const cplx id{0.0, 1.0};

    ConfigPath p;
    auto add_line = [&](cplx a, cplx b) {
        p.segments.push_back({j, PlanarCurve::line(a, b), base.z});
    };
    add_line(zj, zj - id * dip);
    add_line(zj - id * dip, zi - id * dip);
    add_line(zi - id * dip, zi - id * rad);
    p.segments.push_back(
        {j, PlanarCurve::arc(zi, rad, -0.5 * kPi, 1.5 * kPi), base.z});
    add_line(zi - id * rad, zi - id * dip);
    add_line(zi - id * dip, zj - id * dip);
    add_line(zj - id * dip, zj);
    return p;
}

ConfigPath rectangle_loop(int mover, const ConfigPoint& base, double depth, double width) {
    const cplx z0 = base.z[static_cast<std::size_t>(mover - 1)];
    const cplx id{0.0, 1.0};
    ConfigPath p;
    auto add_line = [&](cplx a, cplx b) {
        p.segments.push_back({mover, PlanarCurve::line(a, b), base.z});
    };
    add_line(z0, z0 - id * depth);
    add_line(z0 - id * depth, z0 - id * depth + width);
    add_line(z0 - id * depth + width, z0 + width);
    add_line(z0 + width, z0);
    return p;
}

} // namespace bendkz::kz
