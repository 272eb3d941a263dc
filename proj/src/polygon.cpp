#include "bendkz/polygon.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bendkz::polygon {

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Vec3 LinkageConfig::edge_sum() const {
    Vec3 s{0, 0, 0};
    for (const Vec3& e : edges) s = s + e;
    return s;
}

double LinkageConfig::constraint_defect() const {
    double d = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k)
        d = std::max(d, std::abs(norm(edges[k]) - radii[k]));
    if (closed) d = std::max(d, norm(edge_sum()));
    return d;
}

bool LinkageConfig::is_degenerate() const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (norm(cross(edges[i], edges[j])) > 1e-10 * radii[i] * radii[j]) return false;
    return true;
}

namespace {
void check_index_set(const LinkageConfig& e, const std::vector<int>& idx) {
    for (int i : idx)
        if (i < 1 || i > e.n()) throw std::invalid_argument("index set out of range");
}

Vec3 partial_sum(const LinkageConfig& e, const std::vector<int>& idx) {
    Vec3 s{0, 0, 0};
    for (int i : idx) s = s + e.edges[static_cast<std::size_t>(i - 1)];
    return s;
}

bool contains(const std::vector<int>& idx, int k) {
    for (int i : idx)
        if (i == k) return true;
    return false;
}

/// Rodrigues rotation about axis a by angle t|a| (identity when a = 0).
Vec3 rotate_about(const Vec3& a, double t, const Vec3& v) {
    double na = norm(a);
    if (na == 0.0) return v;
    Vec3 axis = (1.0 / na) * a;
    double th = t * na;
    double c = std::cos(th), s = std::sin(th);
    return c * v + s * cross(axis, v) + ((1.0 - c) * dot(axis, v)) * axis;
}
} // namespace

double bending_potential(const LinkageConfig& e, const std::vector<int>& idx) {
    check_index_set(e, idx);
    Vec3 s = partial_sum(e, idx);
    return dot(s, s);
}

TangentVector bending_field(const LinkageConfig& e, const std::vector<int>& idx) {
    check_index_set(e, idx);
    Vec3 ei = partial_sum(e, idx);
    TangentVector t;
    t.deltas.assign(static_cast<std::size_t>(e.n()), Vec3{0, 0, 0});
    for (int i : idx)
        t.deltas[static_cast<std::size_t>(i - 1)] =
            cross(ei, e.edges[static_cast<std::size_t>(i - 1)]);
    return t;
}

LinkageConfig bending_flow(const LinkageConfig& e, const std::vector<int>& idx, double t) {
    check_index_set(e, idx);
    Vec3 ei = partial_sum(e, idx);
    LinkageConfig out = e;
    for (int i : idx)
        out.edges[static_cast<std::size_t>(i - 1)] =
            rotate_about(ei, t, e.edges[static_cast<std::size_t>(i - 1)]);
    return out;
}

PotentialSpec PotentialSpec::f(const std::vector<int>& idx) {
    PotentialSpec p;
    std::ostringstream nm;
    nm << "f_{";
    for (std::size_t k = 0; k < idx.size(); ++k) nm << (k ? "," : "") << idx[k];
    nm << "}";
    p.name = nm.str();
    p.value = [idx](const LinkageConfig& e) { return bending_potential(e, idx); };
    p.grad = [idx](const LinkageConfig& e, int k) -> Vec3 {
        if (!contains(idx, k)) return {0, 0, 0};
        return 2.0 * partial_sum(e, idx);
    };
    return p;
}

PotentialSpec PotentialSpec::g(int i, int j) {
    PotentialSpec p;
    p.name = "g_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    p.value = [i, j](const LinkageConfig& e) {
        return dot(e.edges[static_cast<std::size_t>(i - 1)], e.edges[static_cast<std::size_t>(j - 1)]);
    };
    p.grad = [i, j](const LinkageConfig& e, int k) -> Vec3 {
        Vec3 out{0, 0, 0};
        if (k == i) out = out + e.edges[static_cast<std::size_t>(j - 1)];
        if (k == j) out = out + e.edges[static_cast<std::size_t>(i - 1)];
        return out;
    };
    return p;
}

PotentialSpec PotentialSpec::h(int i, int j, int k) {
    PotentialSpec p;
    p.name = "h_{" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "}";
    p.value = [i, j, k](const LinkageConfig& e) {
        return dot(e.edges[static_cast<std::size_t>(i - 1)],
                   cross(e.edges[static_cast<std::size_t>(j - 1)],
                         e.edges[static_cast<std::size_t>(k - 1)]));
    };
    p.grad = [i, j, k](const LinkageConfig& e, int m) -> Vec3 {
        const Vec3& ei = e.edges[static_cast<std::size_t>(i - 1)];
        const Vec3& ej = e.edges[static_cast<std::size_t>(j - 1)];
        const Vec3& ek = e.edges[static_cast<std::size_t>(k - 1)];
        Vec3 out{0, 0, 0};
        if (m == i) out = out + cross(ej, ek);
        if (m == j) out = out + cross(ek, ei);
        if (m == k) out = out + cross(ei, ej);
        return out;
    };
    return p;
}

double poisson_bracket(const PotentialSpec& f, const PotentialSpec& g, const LinkageConfig& e) {
    double s = 0.0;
    for (int k = 1; k <= e.n(); ++k)
        s += dot(e.edges[static_cast<std::size_t>(k - 1)], cross(f.grad(e, k), g.grad(e, k)));
    return s;
}

LinkageConfig degenerate_config(const OrientationVector& eps, const std::vector<double>& r,
                                const Vec3& u) {
    if (eps.signs.size() != r.size()) throw std::invalid_argument("degenerate_config: size mismatch");
    if (std::abs(norm(u) - 1.0) > 1e-12) throw std::invalid_argument("degenerate_config: u not unit");
    double closure = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] <= 0) throw std::invalid_argument("degenerate_config: radii must be positive");
        closure += eps.signs[k] * r[k];
    }
    if (std::abs(closure) > 1e-12)
        throw std::invalid_argument("degenerate_config: sum eps_k r_k != 0");
    LinkageConfig e;
    e.radii = r;
    e.closed = true;
    for (std::size_t k = 0; k < r.size(); ++k) e.edges.push_back((eps.signs[k] * r[k]) * u);
    return e;
}

std::string flow_csv(const LinkageConfig& e, const std::vector<int>& idx, double t_max, int steps) {
    std::ostringstream os;
    os << "t";
    for (int k = 1; k <= e.n(); ++k) os << ",e" << k << "x,e" << k << "y,e" << k << "z";
    os << "\n";
    for (int s = 0; s <= steps; ++s) {
        double t = t_max * s / steps;
        LinkageConfig cur = bending_flow(e, idx, t);
        os << t;
        for (const Vec3& v : cur.edges) os << "," << v[0] << "," << v[1] << "," << v[2];
        os << "\n";
    }
    return os.str();
}

} // namespace bendkz::polygon
