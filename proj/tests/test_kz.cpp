#include <doctest.h>

#include "bendkz/kz.hpp"

#include <cmath>
#include <random>

using namespace bendkz::kz;
using bendkz::xalg::cplx;
using bendkz::xalg::CMat;
using bendkz::xalg::CRow;

namespace {
constexpr double kTau = 2.0 * 3.14159265358979323846;

LambdaVector random_lambda(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-2, 2);
    LambdaVector l;
    for (int k = 0; k < n; ++k) l.values.push_back(cplx{u(rng), u(rng)});
    return l;
}

LambdaVector zero_sum_lambda(std::mt19937_64& rng, int n) {
    LambdaVector l = random_lambda(rng, n);
    cplx s{0, 0};
    for (int k = 0; k + 1 < n; ++k) s += l.values[static_cast<std::size_t>(k)];
    l.values[static_cast<std::size_t>(n - 1)] = -s;
    return l;
}
} // namespace

TEST_SUITE("kz") {

TEST_CASE("jordan-pochhammer matrices") {
    LambdaVector lam{{cplx{1, 0}, cplx{2, 0}, cplx{-3, 0}}};
    CMat j12 = jp_matrix(1, 2, lam);
    CHECK(j12(0, 0) == cplx{2, 0});
    CHECK(j12(0, 1) == cplx{-2, 0});
    CHECK(j12(1, 0) == cplx{-1, 0});
    CHECK(j12(1, 1) == cplx{1, 0});
    CHECK(j12(2, 2) == cplx{0, 0});
    CHECK(bendkz::xalg::max_abs(jp_matrix(2, 1, lam) - j12) == 0.0);
    CHECK(bendkz::xalg::max_abs(jp_matrix(2, 2, lam)) == 0.0);

    // spectrum {0, 0, lambda_1 + lambda_2}
    auto ev = bendkz::xalg::eigenvalues(j12);
    CHECK(bendkz::xalg::multiset_distance(ev, {cplx{0, 0}, cplx{0, 0}, cplx{3, 0}}) < 1e-12);
}

TEST_CASE("infinitesimal braid relations") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 6; ++n)
        for (int s = 0; s < 25; ++s) {
            RelationReport rep = check_infinitesimal_braid(random_lambda(rng, n));
            CHECK(rep.max_overall() < 1e-12);
        }
    LambdaVector zero{{cplx{0, 0}, cplx{0, 0}, cplx{0, 0}}};
    CHECK(check_infinitesimal_braid(zero).max_overall() == 0.0);
}

TEST_CASE("omega apply") {
    std::mt19937_64 rng(22);
    const int n = 4;
    LambdaVector lam = zero_sum_lambda(rng, n);
    ConfigPoint z = ConfigPoint::base(n);
    std::vector<cplx> zdot(static_cast<std::size_t>(n));
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& v : zdot) v = cplx{u(rng), u(rng)};

    CRow zero_v = CRow::Zero(n);
    CHECK(omega_apply(z, std::vector<cplx>(static_cast<std::size_t>(n), cplx{0, 0}), lam, zero_v)
              .norm() == 0.0);

    // the row lambda is annihilated pointwise
    CRow lrow(n);
    for (int k = 0; k < n; ++k) lrow(k) = lam.values[static_cast<std::size_t>(k)];
    CHECK(omega_apply(z, zdot, lam, lrow).norm() < 1e-13);

    // arbitrary rows land in the zero-sum subspace
    for (int it = 0; it < 20; ++it) {
        CRow v(n);
        for (int k = 0; k < n; ++k) v(k) = cplx{u(rng), u(rng)};
        CRow out = omega_apply(z, zdot, lam, v);
        cplx s{0, 0};
        for (int k = 0; k < n; ++k) s += out(k);
        CHECK(std::abs(s) < 1e-13);
    }
}

TEST_CASE("loop winding numbers") {
    ConfigPoint base = ConfigPoint::base(3);
    ConfigPath l12 = pure_braid_loop(1, 2, base);
    CHECK(l12.closed());
    CHECK(std::abs(l12.winding(2, 1) - 1.0) < 1e-9);
    CHECK(std::abs(l12.winding(2, 3)) < 1e-9);

    ConfigPath l13 = pure_braid_loop(1, 3, base);
    CHECK(std::abs(l13.winding(3, 1) - 1.0) < 1e-9);
    CHECK(std::abs(l13.winding(3, 2)) < 1e-9);
    CHECK(l13.clearance() > 0.1);
}

TEST_CASE("transport: constant and contractible paths") {
    std::mt19937_64 rng(33);
    const int n = 3;
    LambdaVector lam = zero_sum_lambda(rng, n);
    ConfigPoint base = ConfigPoint::base(n);

    ConfigPath constant;
    constant.segments.push_back({1, PlanarCurve::line(base.z[0], base.z[0]), base.z});
    CHECK(bendkz::xalg::max_abs(transport(constant, lam) - CMat::Identity(n, n)) == 0.0);

    ConfigPath rect = rectangle_loop(3, base, 0.3, 0.4);
    CMat t = transport(rect, lam);
    CHECK(bendkz::xalg::max_abs(t - CMat::Identity(n, n)) < 1e-9);
}

TEST_CASE("transport around an isolated pair matches the residue exponential") {
    std::mt19937_64 rng(44);
    const int n = 3;
    LambdaVector lam = zero_sum_lambda(rng, n);
    ConfigPoint base = ConfigPoint::base(n);
    base.z[2] = cplx{40.0, 0.0}; // third puncture far away

    // z_2 circles z_1 tightly
    ConfigPath loop;
    std::vector<cplx> fixed = base.z;
    fixed[1] = base.z[0] + cplx{0.0, -0.1};
    loop.segments.push_back({2, PlanarCurve::arc(base.z[0], 0.1, -0.25 * kTau, 0.75 * kTau), fixed});
    CMat t = transport(loop, lam, {1e-11, 0.05});

    auto ev = bendkz::xalg::eigenvalues(t);
    cplx expect = std::exp(cplx{0, kTau} * (lam.values[0] + lam.values[1]));
    CHECK(bendkz::xalg::multiset_distance(ev, {cplx{1, 0}, cplx{1, 0}, expect}) < 1e-6);
}

TEST_CASE("transport multiplicativity and reversal") {
    std::mt19937_64 rng(55);
    const int n = 3;
    LambdaVector lam = zero_sum_lambda(rng, n);
    ConfigPoint base = ConfigPoint::base(n);
    ConfigPath p1 = pure_braid_loop(1, 2, base);
    ConfigPath p2 = pure_braid_loop(2, 3, base);

    ConfigPath cat;
    cat.segments = p1.segments;
    cat.segments.insert(cat.segments.end(), p2.segments.begin(), p2.segments.end());
    CMat t1 = transport(p1, lam);
    CMat t2 = transport(p2, lam);
    CMat tcat = transport(cat, lam);
    double scale = std::max(1.0, bendkz::xalg::max_abs(tcat));
    CHECK(bendkz::xalg::max_abs(tcat - t1 * t2) < 1e-8 * scale);

    CMat trev = transport(p1.reversed(), lam);
    CHECK(bendkz::xalg::max_abs(t1 * trev - CMat::Identity(n, n)) <
          1e-8 * std::max(1.0, bendkz::xalg::max_abs(t1)));
}

TEST_CASE("filtration bases") {
    LambdaVector lam{{cplx{0, 1}, cplx{0, 1}, cplx{0, -2}}};
    Filtration f = filtration_basis(lam);
    CHECK(f.basis_quotient.rows() == 1);
    CHECK(f.basis_zero_sum.rows() == 2);
    // quotient rows: zero coordinate sum, orthogonal to lambda
    for (Eigen::Index r = 0; r < f.basis_quotient.rows(); ++r) {
        cplx s{0, 0};
        for (int k = 0; k < 3; ++k) s += f.basis_quotient(r, k);
        CHECK(std::abs(s) < 1e-12);
        CHECK(std::abs((f.basis_quotient.row(r) * f.basis_line.adjoint())(0, 0)) < 1e-12);
    }
    CHECK_THROWS_AS(filtration_basis(LambdaVector{{cplx{1, 0}, cplx{1, 0}, cplx{1, 0}}}),
                    std::invalid_argument);
}

TEST_CASE("monodromy representation: fixed row, filtration, centrality") {
    LambdaVector lam = LambdaVector::from_linkage({1, 1, -1}, {1.0, 1.0, 2.0});
    REQUIRE(lam.sum_zero());
    MonodromyRep rep = monodromy_rep(lam, 1e-10);
    CHECK(rep.max_defect < 1e-6);

    Eigen::RowVectorXcd lrow(3);
    for (int k = 0; k < 3; ++k) lrow(k) = lam.values[static_cast<std::size_t>(k)];

    for (const auto& [pair, g] : rep.generators) {
        CHECK((lrow * g.on_cn - lrow).norm() < 1e-7 * lrow.norm());
        // the representation runs the loop of A_ij backwards, so the quotient
        // value is the inverse local-monodromy eigenvalue
        cplx expect = std::exp(
            -cplx{0, kTau} * (lam.values[static_cast<std::size_t>(pair.first - 1)] +
                              lam.values[static_cast<std::size_t>(pair.second - 1)]));
        CHECK(std::abs(g.on_quotient(0, 0) - expect) < 1e-6 * std::max(1.0, std::abs(expect)));
    }

    // full twist A_12 A_13 A_23 is central in P_3
    const CMat& m12 = rep.generators.at({1, 2}).on_cn;
    const CMat& m13 = rep.generators.at({1, 3}).on_cn;
    const CMat& m23 = rep.generators.at({2, 3}).on_cn;
    CMat z = m12 * m13 * m23;
    for (const CMat* m : {&m12, &m13, &m23}) {
        double scale = std::max(1.0, bendkz::xalg::max_abs(z * (*m)));
        CHECK(bendkz::xalg::max_abs(z * (*m) - (*m) * z) < 1e-6 * scale);
    }
}

} // TEST_SUITE
