#include "rfhkit/symp/symplectic.hpp"

#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace rfh::symp {

Mat standard_j(int n) {
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = -Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = Mat::Identity(n, n);
    return j;
}

bool check_symplectic(const Mat& m, double tol) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("symplectic check needs a square matrix of even size");
    const Mat j = standard_j(static_cast<int>(m.rows() / 2));
    return (m.transpose() * j * m - j).cwiseAbs().maxCoeff() <= tol;
}

Mat realify(const CMat& a) {
    const Eigen::Index n = a.rows();
    Mat m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = a.real();
    m.topRightCorner(n, n) = -a.imag();
    m.bottomLeftCorner(n, n) = a.imag();
    m.bottomRightCorner(n, n) = a.real();
    return m;
}

CMat complexify(const Mat& m) {
    const Eigen::Index n = m.rows() / 2;
    CMat a(n, n);
    a.real() = m.topLeftCorner(n, n);
    a.imag() = m.bottomLeftCorner(n, n);
    return a;
}

Mat unitary_part(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

std::complex<double> complex_det_of_unitary(const Mat& u) { return complexify(u).determinant(); }

Mat symplectic_exp(const Mat& s, double t) {
    const Mat a = standard_j(static_cast<int>(s.rows() / 2)) * s * t;
    return a.exp();
}

}  // namespace rfh::symp
