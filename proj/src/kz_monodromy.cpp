#include "bendkz/kz.hpp"

#include <stdexcept>

namespace bendkz::kz {

namespace {

// Phase-fix a row so its first sizable coordinate is positive real.
void sign_fix(Eigen::RowVectorXcd& v) {
    for (Eigen::Index k = 0; k < v.cols(); ++k) {
        if (std::abs(v(k)) > 1e-12) {
            cplx ph = v(k) / std::abs(v(k));
            v /= ph;
            return;
        }
    }
}

} // namespace

Filtration filtration_basis(const LambdaVector& lambda) {
    const int n = lambda.n();
    if (!lambda.sum_zero()) throw std::invalid_argument("filtration_basis: lambda must sum to zero");
    double lnorm = 0.0;
    for (const cplx& v : lambda.values) lnorm += std::norm(v);
    if (lnorm == 0.0) throw std::invalid_argument("filtration_basis: lambda = 0");

    Filtration f;
    f.lambda = lambda;
    f.basis_full = CMat::Identity(n, n);

    Eigen::RowVectorXcd lam(n);
    for (int k = 0; k < n; ++k) lam(k) = lambda.values[static_cast<std::size_t>(k)];
    Eigen::RowVectorXcd lunit = lam / lam.norm();
    sign_fix(lunit);
    f.basis_line = lunit;

    // Gram-Schmidt of the difference seeds e_k - e_{k+1} inside C^n_0,
    // first for the full zero-sum basis, then against lambda for the quotient.
    auto gram = [n](const std::vector<Eigen::RowVectorXcd>& against, int want) {
        std::vector<Eigen::RowVectorXcd> rows = against;
        std::vector<Eigen::RowVectorXcd> out;
        for (int k = 0; k + 1 < n && static_cast<int>(out.size()) < want; ++k) {
            Eigen::RowVectorXcd v = Eigen::RowVectorXcd::Zero(n);
            v(k) = 1.0;
            v(k + 1) = -1.0;
            for (const auto& r : rows) v -= (v * r.adjoint())(0, 0) * r;
            double nr = v.norm();
            if (nr < 1e-9) continue;
            v /= nr;
            sign_fix(v);
            // re-normalize after the phase fix (phase fix preserves norm)
            rows.push_back(v);
            out.push_back(v);
        }
        if (static_cast<int>(out.size()) != want)
            throw std::runtime_error("filtration_basis: degenerate seed family");
        return out;
    };

    auto zs = gram({}, n - 1);
    f.basis_zero_sum = CMat(n - 1, n);
    for (int r = 0; r < n - 1; ++r) f.basis_zero_sum.row(r) = zs[static_cast<std::size_t>(r)];

    auto qt = gram({lunit}, n - 2);
    f.basis_quotient = CMat(n - 2, n);
    for (int r = 0; r < n - 2; ++r) f.basis_quotient.row(r) = qt[static_cast<std::size_t>(r)];
    return f;
}

MonodromyRep monodromy_rep(const LambdaVector& lambda, double tol, const LoopGeometry& geom) {
    if (!lambda.sum_zero()) throw std::invalid_argument("monodromy_rep: lambda must sum to zero");
    if (!(tol > 0)) throw std::invalid_argument("monodromy_rep: tol must be positive");
    const int n = lambda.n();
    MonodromyRep rep;
    rep.filtration = filtration_basis(lambda);
    const ConfigPoint base = ConfigPoint::base(n);
    const CMat& b0 = rep.filtration.basis_zero_sum;
    const CMat& q = rep.filtration.basis_quotient;
    Eigen::RowVectorXcd lam(n);
    for (int k = 0; k < n; ++k) lam(k) = lambda.values[static_cast<std::size_t>(k)];

    TransportOptions opt;
    opt.tol = tol;
    // Concatenating the shipped loops composes braid words in reverse order
    // (the full-twist centrality test pins this down), so the representation
    // assigns to A_ij the transport along the reversed loop; forward matrix
    // products then realize forward braid words.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            GeneratorMonodromy g;
            g.on_cn = transport(pure_braid_loop(i, j, base, geom).reversed(), lambda, opt);
            // restriction to the zero-sum rows and projection to the quotient rows
            CMat bm = b0 * g.on_cn;
            g.on_zero_sum = bm * b0.adjoint();
            double defect = (bm - g.on_zero_sum * b0).norm();
            CMat qm = q * g.on_cn;
            g.on_quotient = qm * q.adjoint();
            // quotient discards the lambda component; only leakage out of C^n_0 counts
            double qdefect = (qm - g.on_quotient * q -
                              (qm * lam.adjoint()) * (lam / lam.squaredNorm()))
                                 .norm();
            double ldefect = (lam * g.on_cn - lam).norm() / lam.norm();
            g.restriction_defect = std::max({defect, qdefect, ldefect});
            rep.max_defect = std::max(rep.max_defect, g.restriction_defect);
            rep.generators.emplace(std::make_pair(i, j), std::move(g));
        }
    return rep;
}

} // namespace bendkz::kz
