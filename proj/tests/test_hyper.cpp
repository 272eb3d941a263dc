#include <doctest.h>

#include "bendkz/hyper.hpp"

#include <cmath>
#include <random>

using namespace bendkz::hyper;
using bendkz::xalg::cplx;
using bendkz::xalg::CMat;

namespace {
constexpr double kTau = 2.0 * 3.14159265358979323846;

IntegrandSpec linkage_spec(const std::vector<int>& eps, const std::vector<double>& r) {
    IntegrandSpec s;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        s.z.push_back(cplx{static_cast<double>(k), 0.0});
        s.lambda.push_back(cplx{0.0, eps[k] * r[k]});
    }
    return s;
}
} // namespace

TEST_SUITE("hyper") {

TEST_CASE("phi evaluation basics") {
    IntegrandSpec s = linkage_spec({1, 1, -1}, {1, 1, 2});
    CycleGeometry geom = CycleGeometry::from_spec(s);
    std::vector<cplx> base_logs;
    cplx p0{geom.basepoint_x, 0.0};
    for (const cplx& z : s.z) base_logs.push_back(std::log(p0 - z));

    // principal branches at a real point right of the punctures: lambda = 0 -> 1
    IntegrandSpec zero = s;
    for (auto& l : zero.lambda) l = cplx{0.5, 0.0}; // placeholder, overwritten below
    Loop loop = loop_around(s, 1, geom, base_logs);
    const Subarc& first = loop.arcs.front();
    {
        IntegrandSpec szero = s;
        for (auto& l : szero.lambda) l = cplx{0.0, 0.0};
        Subarc arc = first; // same geometry, same seeds
        CHECK(std::abs(phi_eval(szero, arc, 0.0) - cplx{1.0, 0.0}) == 0.0);
    }

    // real lambda, principal branches, real point: Phi is real positive
    {
        IntegrandSpec sreal = s;
        sreal.lambda = {cplx{0.3, 0}, cplx{-0.7, 0}, cplx{0.4, 0}};
        CHECK(phi_eval(sreal, first, 0.0).real() > 0.0);
        CHECK(std::abs(phi_eval(sreal, first, 0.0).imag()) < 1e-14);
    }

    // continuation once around z_1 multiplies Phi by chi_1
    cplx start = phi_eval(s, loop.arcs.front(), 0.0);
    cplx end = phi_eval(s, loop.arcs.back(), 1.0);
    CHECK(std::abs(end / start - s.chi(1)) < 1e-10 * std::abs(s.chi(1)));
    CHECK(loop.winding[0] == doctest::Approx(1.0));
    CHECK(loop.winding[1] == doctest::Approx(0.0));
    CHECK(loop.winding[2] == doctest::Approx(0.0));
}

TEST_CASE("cycle basis construction and audits") {
    IntegrandSpec s = linkage_spec({1, 1, -1, -1}, {1, 1, 1, 1});
    CycleBasis basis = cycle_basis(s);
    REQUIRE(basis.w.size() == 3);

    for (const auto& c : basis.w) {
        CHECK(boundary_defect(s, c) < 1e-12);
        REQUIRE(c.comps.size() == 2);
        // each loop winds once around exactly one puncture
        for (const auto& comp : c.comps) {
            int ones = 0;
            for (double w : comp.loop.winding) {
                CHECK((std::abs(w) < 1e-12 || std::abs(w - 1.0) < 1e-12));
                if (std::abs(w - 1.0) < 1e-12) ++ones;
            }
            CHECK(ones == 1);
        }
    }
    for (double w : basis.w_inf.comps.front().loop.winding) CHECK(w == doctest::Approx(1.0));

    // construction requires a real increasing configuration
    IntegrandSpec bad = s;
    bad.z[1] = cplx{0.5, 0.3};
    CHECK_THROWS_AS(cycle_basis(bad), std::invalid_argument);
}

TEST_CASE("w_infinity periods and row sums") {
    IntegrandSpec s = linkage_spec({1, 1, -1}, {1, 1, 2});
    CycleBasis basis = cycle_basis(s);
    for (int i = 1; i <= 3; ++i) {
        cplx p = period(s, basis.w_inf, i, 1e-10);
        CHECK(std::abs(p + s.lambda[static_cast<std::size_t>(i - 1)]) < 1e-8);
    }
    for (const auto& c : basis.w) {
        cplx sum{0, 0};
        for (int j = 1; j <= 3; ++j) sum += period(s, c, j, 1e-10);
        CHECK(std::abs(sum) < 1e-7);
    }
}

TEST_CASE("period linearity in the weights") {
    IntegrandSpec s = linkage_spec({1, -1}, {1.5, 1.5});
    CycleBasis basis = cycle_basis(s);
    TwistedCycle doubled = basis.w[0];
    for (auto& c : doubled.comps) c.weight *= 2.0;
    cplx p1 = period(s, basis.w[0], 1, 1e-10);
    cplx p2 = period(s, doubled, 1, 1e-10);
    CHECK(std::abs(p2 - 2.0 * p1) < 1e-9 * std::max(1.0, std::abs(p1)));
}

TEST_CASE("exactness: integrals of d(f Phi) vanish") {
    IntegrandSpec s = linkage_spec({1, 1, -1}, {1, 1, 2});
    CycleBasis basis = cycle_basis(s);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int it = 0; it < 5; ++it) {
        // random polynomial f of degree <= 3
        std::vector<cplx> coef(4);
        for (auto& c : coef) c = cplx{u(rng), u(rng)};
        auto f = [&coef](cplx x) {
            return coef[0] + x * (coef[1] + x * (coef[2] + x * coef[3]));
        };
        auto fp = [&coef](cplx x) { return coef[1] + x * (2.0 * coef[2] + x * 3.0 * coef[3]); };
        auto integrand = [&](cplx xi, cplx phi) {
            cplx logd{0, 0};
            for (std::size_t k = 0; k < s.z.size(); ++k) logd += s.lambda[k] / (xi - s.z[k]);
            return (fp(xi) + f(xi) * logd) * phi;
        };
        for (const auto& c : basis.w)
            CHECK(std::abs(cycle_integral(s, c, integrand, 1e-10)) < 1e-7);
        CHECK(std::abs(cycle_integral(s, basis.w_inf, integrand, 1e-10)) < 1e-7);
    }
}

TEST_CASE("deformation invariance of periods") {
    IntegrandSpec s = linkage_spec({1, 1, -1, -1}, {1, 1, 1, 1});
    CycleGeometry g1 = CycleGeometry::from_spec(s);
    CycleGeometry g2 = g1;
    g2.loop_radius *= 0.55;
    g2.conn_depth *= 1.3;
    g2.winf_radius += 0.7;
    CMat p1 = hyper::period_matrix(s, 1e-10, &g1);
    CMat p2 = hyper::period_matrix(s, 1e-10, &g2);
    CHECK(bendkz::xalg::max_abs(p1 - p2) < 1e-6 * std::max(1.0, bendkz::xalg::max_abs(p1)));
}

TEST_CASE("period matrix shape, zero-sum rows and rank") {
    IntegrandSpec s2 = linkage_spec({1, -1}, {1.2, 1.2});
    CMat p2 = period_matrix(s2, 1e-10);
    REQUIRE(p2.rows() == 1);
    REQUIRE(p2.cols() == 2);
    CHECK(std::abs(p2(0, 0) + p2(0, 1)) < 1e-8 * std::max(1.0, std::abs(p2(0, 0))));

    IntegrandSpec s = linkage_spec({1, 1, 1, -1, -1}, {1, 1, 1, 1.5, 1.5});
    CMat p = period_matrix(s, 1e-9);
    REQUIRE(p.rows() == 4);
    REQUIRE(p.cols() == 5);
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        cplx sum{0, 0};
        for (Eigen::Index j = 0; j < p.cols(); ++j) sum += p(i, j);
        CHECK(std::abs(sum) < 1e-6);
    }
    auto sv = bendkz::xalg::singular_values(p);
    CHECK(sv.back() / sv.front() > 1e-6);
}

} // TEST_SUITE
