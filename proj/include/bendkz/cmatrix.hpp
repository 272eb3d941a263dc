#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bendkz::xalg {

using cplx = std::complex<double>;
using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVec = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;
using CRow = Eigen::Matrix<cplx, 1, Eigen::Dynamic>;

/// Condition-number cutoff above which a matrix is treated as singular.
inline constexpr double kSingularCondition = 1e12;
/// Hard cap on the eigenvalue routine; every use in this project has n <= 8.
inline constexpr int kEigenMaxDim = 16;

double max_abs(const CMat& m);
double cond(const CMat& m); // ratio of extreme singular values; inf if rank-deficient
std::vector<double> singular_values(const CMat& m);

/// Inverse with a singularity guard. Throws std::runtime_error when the
/// condition estimate exceeds kSingularCondition.
CMat inverse(const CMat& a);

/// Row-convention solve: x with x*a = b (a square). Same guard as inverse().
CRow solve_row(const CMat& a, const CRow& b);

/// Eigenvalues with multiplicity, dimension <= kEigenMaxDim.
std::vector<cplx> eigenvalues(const CMat& a);

struct Intertwiner {
    CMat x;          // Frobenius-normalized minimizer of max_k |A_k X - X B_k|
    double residual; // max_k Frobenius norm of A_k X - X B_k
    double cond_x;   // condition number of x
};

/// Least-squares intertwiner for the family of pairs (A_k, B_k): the smallest
/// singular direction of the stacked Sylvester operator X -> (A_k X - X B_k)_k.
/// Absence of an intertwiner shows up as a large residual or an
/// ill-conditioned X, never as an error.
std::optional<Intertwiner> find_intertwiner(const std::vector<std::pair<CMat, CMat>>& pairs);

/// Greedy multiset match; returns the max |a_i - b_perm(i)| over the pairing.
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b);

} // namespace bendkz::xalg
