#pragma once
// Linear symplectic algebra on R^{2n} = C^n with coordinates (x_1..x_n, y_1..y_n),
// standard form omega_0(u, v) = <J0 u, v> where J0 = [[0, -I], [I, 0]] is multiplication by i.

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace rfh::symp {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

inline constexpr double kTolSymp = 1e-9;
inline constexpr double kStepBound = 0.5;

Mat standard_j(int n);

// Throws std::invalid_argument for a non-square or odd-dimensional matrix.
bool check_symplectic(const Mat& m, double tol = kTolSymp);

// Real 2n x 2n form of a complex n x n matrix.
Mat realify(const CMat& a);
// Inverse of realify for matrices commuting with J0.
CMat complexify(const Mat& m);

// Orthogonal factor of the polar decomposition M = U P.
Mat unitary_part(const Mat& m);
std::complex<double> complex_det_of_unitary(const Mat& u);

// exp(t J0 S) for symmetric S.
Mat symplectic_exp(const Mat& s, double t);

// Random symplectic matrix from a product of exponentials; used by tests and the CLI demo.
template <class Rng>
Mat random_symplectic(int n, Rng& rng, double scale = 0.5);

}  // namespace rfh::symp

#include <random>

namespace rfh::symp {

template <class Rng>
Mat random_symplectic(int n, Rng& rng, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    Mat out = Mat::Identity(2 * n, 2 * n);
    for (int f = 0; f < 2; ++f) {
        Mat s(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j <= i; ++j) s(i, j) = s(j, i) = g(rng);
        out = symplectic_exp(s, 1.0) * out;
    }
    return out;
}

}  // namespace rfh::symp
