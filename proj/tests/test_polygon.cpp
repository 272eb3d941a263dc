#include <doctest.h>

#include "bendkz/polygon.hpp"

#include <cmath>
#include <random>

using namespace bendkz::polygon;
using bendkz::xalg::cplx;
using bendkz::xalg::CMat;

namespace {

LinkageConfig unit_square() {
    LinkageConfig e;
    e.edges = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
    e.radii = {1, 1, 1, 1};
    e.closed = true;
    return e;
}

LinkageConfig onb_config() {
    LinkageConfig e;
    e.edges = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    e.radii = {1, 1, 1};
    return e;
}

LinkageConfig random_config(std::mt19937_64& rng, const std::vector<double>& r) {
    std::normal_distribution<double> g(0.0, 1.0);
    LinkageConfig e;
    e.radii = r;
    for (double rk : r) {
        Vec3 v{g(rng), g(rng), g(rng)};
        e.edges.push_back((rk / norm(v)) * v);
    }
    return e;
}

PotentialSpec product(const PotentialSpec& a, const PotentialSpec& b) {
    PotentialSpec p;
    p.name = a.name + "*" + b.name;
    p.value = [a, b](const LinkageConfig& e) { return a.value(e) * b.value(e); };
    p.grad = [a, b](const LinkageConfig& e, int k) {
        return b.value(e) * a.grad(e, k) + a.value(e) * b.grad(e, k);
    };
    return p;
}

} // namespace

TEST_SUITE("polygon") {

TEST_CASE("bending potential on the unit square") {
    LinkageConfig e = unit_square();
    CHECK(bending_potential(e, {1, 3}) == doctest::Approx(0.0));
    CHECK(bending_potential(e, {1, 2}) == doctest::Approx(2.0));
    CHECK(bending_potential(e, {}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(bending_potential(e, {5}), std::invalid_argument);

    // degenerate pair value (eps_i r_i + eps_j r_j)^2
    OrientationVector eps{{1, 1, -1, -1}};
    LinkageConfig d = degenerate_config(eps, {1, 1, 1, 1}, {0, 0, 1});
    CHECK(bending_potential(d, {1, 2}) == doctest::Approx(4.0));
    CHECK(bending_potential(d, {2, 3}) == doctest::Approx(0.0));
}

TEST_CASE("bending field on the unit square and at degenerate configs") {
    LinkageConfig e = unit_square();
    TangentVector b = bending_field(e, {1, 2});
    CHECK(norm(b.deltas[0] - Vec3{0, 0, -1}) < 1e-15);
    CHECK(norm(b.deltas[1] - Vec3{0, 0, 1}) < 1e-15);
    CHECK(norm(b.deltas[2]) == 0.0);
    CHECK(norm(b.deltas[3]) == 0.0);

    OrientationVector eps{{1, 1, -1, -1}};
    LinkageConfig d = degenerate_config(eps, {1, 1, 1, 1}, {0, 0, 1});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            TangentVector bd = bending_field(d, {i, j});
            for (const Vec3& v : bd.deltas) CHECK(norm(v) < 1e-14);
        }
    TangentVector ball = bending_field(d, {1, 2, 3});
    for (const Vec3& v : ball.deltas) CHECK(norm(v) < 1e-14);
}

TEST_CASE("bending flow conservation") {
    std::mt19937_64 rng(13);
    LinkageConfig e = unit_square();
    CHECK(norm(bending_flow(e, {1, 2}, 0.0).edges[0] - e.edges[0]) == 0.0);

    std::uniform_real_distribution<double> ts(-3.0, 3.0);
    for (int it = 0; it < 50; ++it) {
        double t = ts(rng);
        LinkageConfig cur = bending_flow(e, {1, 2}, t);
        // e_I is constant along the flow
        Vec3 ei = cur.edges[0] + cur.edges[1];
        CHECK(norm(ei - Vec3{1, 1, 0}) < 1e-12);
        // radii, closure and the potential are preserved
        CHECK(cur.constraint_defect() < 1e-12);
        CHECK(std::abs(bending_potential(cur, {1, 2}) - 2.0) < 1e-12);
    }

    // flow derivative at t = 0 is the bending field
    LinkageConfig r = random_config(rng, {1.0, 1.2, 0.8, 1.5});
    const double h = 1e-5;
    TangentVector field = bending_field(r, {2, 3});
    LinkageConfig p = bending_flow(r, {2, 3}, h);
    LinkageConfig m = bending_flow(r, {2, 3}, -h);
    for (int k = 0; k < 4; ++k) {
        Vec3 fd = (1.0 / (2 * h)) * (p.edges[static_cast<std::size_t>(k)] -
                                     m.edges[static_cast<std::size_t>(k)]);
        CHECK(norm(fd - field.deltas[static_cast<std::size_t>(k)]) < 1e-8);
    }
}

TEST_CASE("poisson bracket frozen values") {
    LinkageConfig e = onb_config();
    CHECK(poisson_bracket(PotentialSpec::g(1, 2), PotentialSpec::g(2, 3), e) ==
          doctest::Approx(-1.0));
    CHECK(poisson_bracket(PotentialSpec::f({1, 2}), PotentialSpec::f({2, 3}), e) ==
          doctest::Approx(-4.0));
}

TEST_CASE("poisson identities at random configurations") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        int n = 4 + static_cast<int>(rng() % 3);
        std::vector<double> radii;
        std::uniform_real_distribution<double> ur(0.5, 2.0);
        for (int k = 0; k < n; ++k) radii.push_back(ur(rng));
        LinkageConfig e = random_config(rng, radii);

        CHECK(std::abs(poisson_bracket(PotentialSpec::f({1, 2}), PotentialSpec::f({3, 4}), e)) <
              1e-9);
        double triple = poisson_bracket(PotentialSpec::f({1, 2}), PotentialSpec::f({2, 3}), e) +
                        poisson_bracket(PotentialSpec::f({1, 2}), PotentialSpec::f({3, 1}), e);
        CHECK(std::abs(triple) < 1e-8);
        double target = -4.0 * dot(e.edges[0], cross(e.edges[1], e.edges[2]));
        CHECK(poisson_bracket(PotentialSpec::f({1, 2}), PotentialSpec::f({2, 3}), e) ==
              doctest::Approx(target).epsilon(1e-10));
        CHECK(poisson_bracket(PotentialSpec::g(1, 2), PotentialSpec::g(2, 3), e) ==
              doctest::Approx(-poisson_bracket(PotentialSpec::g(2, 3), PotentialSpec::g(1, 2), e)));
    }
}

TEST_CASE("poisson antisymmetry and leibniz") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 50; ++it) {
        LinkageConfig e = random_config(rng, {1.0, 1.3, 0.7, 1.1});
        auto f = PotentialSpec::f({1, 2});
        auto g = PotentialSpec::g(2, 3);
        auto h = PotentialSpec::h(1, 2, 3);
        CHECK(poisson_bracket(f, g, e) == doctest::Approx(-poisson_bracket(g, f, e)));
        double lhs = poisson_bracket(f, product(g, h), e);
        double rhs = poisson_bracket(f, g, e) * h.value(e) + g.value(e) * poisson_bracket(f, h, e);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
}

TEST_CASE("degenerate configurations") {
    OrientationVector eps{{1, 1, -1, -1}};
    LinkageConfig d = degenerate_config(eps, {1, 1, 1, 1}, {0, 0, 1});
    CHECK(norm(d.edges[0] - Vec3{0, 0, 1}) == 0.0);
    CHECK(norm(d.edges[3] - Vec3{0, 0, -1}) == 0.0);
    CHECK(norm(d.edge_sum()) == 0.0);
    CHECK(d.is_degenerate());
    CHECK_THROWS_AS(degenerate_config(eps, {1, 1, 1, 2}, {0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(degenerate_config(eps, {1, 1, 1, 1}, {0, 0, 2}), std::invalid_argument);
}

TEST_CASE("closed-form linearization structure") {
    OrientationVector eps{{1, 1, -1, -1}};
    LinkageConfig d = degenerate_config(eps, {1.0, 2.0, 1.5, 1.5}, {0, 0, 1});

    // block structure: input supported away from {i, j} maps to zero
    TangentVector away;
    away.deltas = {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    TangentVector img = linearization_closed(d, 1, 2, away);
    for (const Vec3& v : img.deltas) CHECK(norm(v) == 0.0);

    // V_e is annihilated and outputs sum to zero
    TangentModel tm = tangent_model(d);
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            for (const auto& ve : tm.v_e) {
                TangentVector out = linearization_closed(d, i, j, ve);
                for (const Vec3& v : out.deltas) CHECK(norm(v) < 1e-13);
            }
            TangentVector rnd;
            for (int k = 0; k < 4; ++k) rnd.deltas.push_back(Vec3{g(rng), g(rng), 0.0});
            TangentVector out = linearization_closed(d, i, j, rnd);
            Vec3 s{0, 0, 0};
            for (const Vec3& v : out.deltas) s = s + v;
            CHECK(norm(s) < 1e-13);
        }
}

TEST_CASE("finite differences match the closed form") {
    OrientationVector eps{{1, 1, -1, -1}};
    LinkageConfig d = degenerate_config(eps, {1.0, 2.0, 1.5, 1.5}, {0, 0, 1});
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
            Eigen::MatrixXd closed = linearization_closed_matrix(d, i, j);
            Eigen::MatrixXd fd = linearization_fd(d, i, j);
            CHECK((fd - closed).norm() < 1e-5 * closed.norm());
        }
    CHECK_THROWS_AS(linearization_fd(d, 1, 2, 1e-2), std::invalid_argument);
    CHECK_THROWS_AS(linearization_fd(unit_square(), 1, 2), std::invalid_argument);
}

TEST_CASE("tangent model: complex structure and psi images") {
    OrientationVector eps{{1, 1, 1, -1, -1}};
    std::vector<double> r{1.0, 1.0, 1.0, 1.5, 1.5};
    LinkageConfig d = degenerate_config(eps, r, {0, 0, 1});
    TangentModel tm = tangent_model(d);
    const int n = 5;

    Eigen::MatrixXd j2 = tm.j_matrix * tm.j_matrix;
    CHECK((j2 + Eigen::MatrixXd::Identity(2 * n, 2 * n)).norm() == 0.0);

    // psi(V_e) spans C v(eps, r)
    Eigen::VectorXcd v(n);
    for (int k = 0; k < n; ++k) v(k) = eps.signs[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)];
    for (const auto& ve : tm.v_e) {
        auto w = tm.psi(ve);
        Eigen::VectorXcd wv(n);
        for (int k = 0; k < n; ++k) wv(k) = w[static_cast<std::size_t>(k)];
        // wv parallel to v
        Eigen::MatrixXcd stack(2, n);
        stack.row(0) = wv.transpose();
        stack.row(1) = v.transpose();
        auto sv = bendkz::xalg::singular_values(CMat(stack));
        CHECK(sv.back() < 1e-10 * sv.front());
    }

    // zero-sum tangent vectors map into the zero-sum subspace
    std::mt19937_64 rng(29);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int it = 0; it < 20; ++it) {
        TangentVector t;
        Vec3 acc{0, 0, 0};
        for (int k = 0; k + 1 < n; ++k) {
            Vec3 dv{g(rng), g(rng), 0.0};
            acc = acc + dv;
            t.deltas.push_back(dv);
        }
        t.deltas.push_back(Vec3{-acc.x, -acc.y, 0.0});
        auto w = tm.psi(t);
        cplx s{0, 0};
        for (const cplx& wk : w) s += wk;
        CHECK(std::abs(s) < 1e-12);
    }
}

TEST_CASE("theorem A matrices match i J_ij and kill v(eps, r)") {
    OrientationVector eps{{1, 1, -1, -1}};
    std::vector<double> r{1.0, 1.0, 1.0, 1.0};
    auto mats = theorem_a_matrices(eps, r);
    const int n = 4;

    for (const auto& [pair, m] : mats) {
        auto [i, j] = pair;
        // i J_ij at (eps r), which is J_ij at lambda = i eps r
        CMat expect = CMat::Zero(n, n);
        cplx li{0.0, eps.signs[static_cast<std::size_t>(i - 1)] * r[static_cast<std::size_t>(i - 1)]};
        cplx lj{0.0, eps.signs[static_cast<std::size_t>(j - 1)] * r[static_cast<std::size_t>(j - 1)]};
        expect(i - 1, i - 1) = lj;
        expect(i - 1, j - 1) = -lj;
        expect(j - 1, i - 1) = -li;
        expect(j - 1, j - 1) = li;
        CHECK(bendkz::xalg::max_abs(m - expect) < 1e-12);

        // the row v(eps, r) is annihilated; images stay in the zero-sum space
        Eigen::RowVectorXcd v(n);
        for (int k = 0; k < n; ++k)
            v(k) = eps.signs[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(k)];
        CHECK((v * m).norm() < 1e-12);
        Eigen::RowVectorXcd probe = Eigen::RowVectorXcd::Ones(n);
        cplx rowsum{0, 0};
        Eigen::RowVectorXcd img = probe * m;
        for (int k = 0; k < n; ++k) rowsum += img(k);
        CHECK(std::abs(rowsum) < 1e-12);
    }
}

TEST_CASE("flow csv emission") {
    LinkageConfig e = unit_square();
    std::string csv = flow_csv(e, {1, 2}, 1.0, 4);
    CHECK(csv.find("t,e1x") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}

} // TEST_SUITE
