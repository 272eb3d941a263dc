#include <doctest.h>

#include "bendkz/cmatrix.hpp"
#include "bendkz/laurent.hpp"
#include "bendkz/rational.hpp"

#include <cmath>
#include <random>

using namespace bendkz::xalg;

namespace {

LaurentPoly t(int nvars, int var, int pow = 1) { return LaurentPoly::monomial(nvars, var, pow); }
LaurentPoly one(int nvars) { return LaurentPoly::constant(nvars, Rational(1)); }

LaurentPoly random_poly(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-6, 6), coef(-9, 9);
    LaurentPoly p(nvars);
    int m = nterms(rng);
    for (int k = 0; k < m; ++k) {
        LaurentPoly::Expo e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_SUITE("exactalg") {

TEST_CASE("rational arithmetic stays canonical") {
    Rational a(bigint(6), bigint(-4));
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((a + Rational(bigint(3), bigint(2))).is_zero());
    CHECK(Rational(2) * Rational(bigint(1), bigint(2)) == Rational(1));
    CHECK_THROWS_AS(Rational(bigint(1), bigint(0)), std::invalid_argument);
}

TEST_CASE("laurent ring examples") {
    const int n = 2;
    CHECK((t(n, 1) + (-t(n, 1))).is_zero());
    LaurentPoly prod = (one(n) - t(n, 1)) * (one(n) + t(n, 1));
    CHECK(prod == one(n) - t(n, 1, 2));
    CHECK(t(n, 1, -1) * t(n, 1, 2) == t(n, 1));
    CHECK_THROWS_AS(t(2, 1) + t(3, 1), std::invalid_argument);
}

TEST_CASE("laurent ring axioms on random inputs") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
        int nvars = 1 + static_cast<int>(rng() % 5);
        LaurentPoly a = random_poly(rng, nvars);
        LaurentPoly b = random_poly(rng, nvars);
        LaurentPoly c = random_poly(rng, nvars);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("specialization values") {
    const int n = 2;
    LaurentPoly p = one(1) - t(1, 1);
    CHECK(std::abs(p.specialize({cplx{1.0, 0.0}})) == 0.0);
    CHECK(t(n, 1) * t(n, 2) == LaurentPoly::monomial(2, 1, 1) * LaurentPoly::monomial(2, 2, 1));
    CHECK(std::abs((t(n, 1) * t(n, 2)).specialize({cplx{2, 0}, cplx{3, 0}}) - cplx{6, 0}) < 1e-14);

    // 1 - t1 + t1 t2 at (e^{-2pi}, e^{2pi}) -> 2 - e^{-2pi}
    LaurentPoly q = one(n) - t(n, 1) + t(n, 1) * t(n, 2);
    cplx val = q.specialize({cplx{std::exp(-2 * M_PI), 0}, cplx{std::exp(2 * M_PI), 0}});
    CHECK(std::abs(val - cplx{2.0 - std::exp(-2 * M_PI), 0.0}) < 1e-12);

    CHECK_THROWS_AS(q.specialize({cplx{0, 0}, cplx{1, 0}}), std::invalid_argument);
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int it = 0; it < 200; ++it) {
        int nvars = 1 + static_cast<int>(rng() % 4);
        LaurentPoly a = random_poly(rng, nvars);
        LaurentPoly b = random_poly(rng, nvars);
        std::vector<cplx> alpha;
        for (int k = 0; k < nvars; ++k) {
            cplx v{u(rng), u(rng)};
            if (std::abs(v) < 0.1) v += cplx{1.0, 0.0};
            alpha.push_back(v);
        }
        cplx lhs = (a * b).specialize(alpha);
        cplx rhs = a.specialize(alpha) * b.specialize(alpha);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("matrix basics and inverse") {
    CMat m(2, 2);
    m << cplx{2, 0}, cplx{0, 0}, cplx{0, 0}, cplx{4, 0};
    CMat mi = inverse(m);
    CHECK(std::abs(mi(0, 0) - cplx{0.5, 0}) < 1e-14);
    CHECK(std::abs(mi(1, 1) - cplx{0.25, 0}) < 1e-14);

    CMat id = CMat::Identity(3, 3);
    CMat r = CMat::Random(3, 3);
    CHECK(max_abs(id * r - r) == 0.0);

    CMat sing(2, 2);
    sing << cplx{1, 0}, cplx{1, 0}, cplx{1, 0}, cplx{1, 0};
    CHECK_THROWS_AS(inverse(sing), std::runtime_error);
}

TEST_CASE("row-convention solve") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int it = 0; it < 50; ++it) {
        int d = 2 + static_cast<int>(rng() % 4);
        CMat a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = cplx{u(rng), u(rng)};
        a += 3.0 * CMat::Identity(d, d); // keep well away from singular
        if (cond(a) > 1e6) continue;
        CRow b(d);
        for (int j = 0; j < d; ++j) b(j) = cplx{u(rng), u(rng)};
        CRow x = solve_row(a, b);
        CHECK((x * a - b).norm() < 1e-9 * std::max(1.0, b.norm()));
    }
}

TEST_CASE("eigenvalues: diagonal, nilpotent, dimension guard") {
    CMat d(2, 2);
    d << cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{5, 0};
    CHECK(multiset_distance(eigenvalues(d), {cplx{1, 0}, cplx{5, 0}}) < 1e-12);

    CMat nil(2, 2);
    nil << cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0};
    CHECK(multiset_distance(eigenvalues(nil), {cplx{0, 0}, cplx{0, 0}}) < 1e-12);

    CHECK_THROWS_AS(eigenvalues(CMat::Identity(17, 17)), std::invalid_argument);
}

TEST_CASE("intertwiner: self, permutation, obstruction") {
    CMat m(2, 2);
    m << cplx{1, 0}, cplx{2, 0}, cplx{0, 0}, cplx{3, 0};
    auto self = find_intertwiner({{m, m}});
    REQUIRE(self.has_value());
    CHECK(self->residual < 1e-12);

    CMat d12(2, 2), d21(2, 2);
    d12 << cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{2, 0};
    d21 << cplx{2, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0};
    auto perm = find_intertwiner({{d12, d21}});
    REQUIRE(perm.has_value());
    CHECK(perm->residual < 1e-10);
    // the kernel is spanned by antidiagonal matrices
    CHECK(std::abs(perm->x(0, 0)) < 1e-10);
    CHECK(std::abs(perm->x(1, 1)) < 1e-10);
    CHECK(std::abs(perm->x(0, 1)) + std::abs(perm->x(1, 0)) > 0.9);

    CMat d13(2, 2);
    d13 << cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{3, 0};
    auto bad = find_intertwiner({{d12, d13}});
    REQUIRE(bad.has_value());
    // the commutant forces X = E11 up to scale: zero residual but singular X
    CHECK((bad->residual > 1e-3 || bad->cond_x > 1e10));
}

TEST_CASE("intertwiner recovers conjugations") {
    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int it = 0; it < 25; ++it) {
        int d = 2 + static_cast<int>(rng() % 3);
        CMat p(d, d);
        do {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) p(i, j) = cplx{u(rng), u(rng)};
            p += 2.0 * CMat::Identity(d, d);
        } while (cond(p) > 1e4);
        std::vector<std::pair<CMat, CMat>> pairs;
        CMat pi = inverse(p);
        for (int k = 0; k < 3; ++k) {
            CMat b(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) b(i, j) = cplx{u(rng), u(rng)};
            pairs.emplace_back(p * b * pi, b);
        }
        auto iw = find_intertwiner(pairs);
        REQUIRE(iw.has_value());
        CHECK(iw->residual < 1e-8);
        CHECK(iw->cond_x < 1e6);
    }
}

} // TEST_SUITE
