#pragma once
// Hamiltonian systems on R^{2n} with phase points laid out as (q_1..q_n, p_1..p_n).
// On C^n the same layout reads (x, y) with z = x + i y, and omega = sum dy ^ dx, so
// i_{X_H} omega = -dH gives X_H = (dH/dp, -dH/dq) in both settings.

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace rfh::flow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Structure {
    enum class Kind { Standard, Magnetic };
    Kind kind = Kind::Standard;
    // Magnetic term sigma_ij(q); only consulted for Kind::Magnetic.
    std::function<Mat(const Vec&)> sigma;

    static Structure standard() { return {}; }
    static Structure magnetic(const Mat& j);
};

struct HamiltonianModel {
    std::string name;
    int dim = 2;  // 2n
    std::function<double(const Vec&)> H;
    std::function<Vec(const Vec&)> grad;  // empty: central finite differences
    Structure structure;

    int n() const { return dim / 2; }
    double energy(const Vec& x) const { return H(x); }
    Vec gradient(const Vec& x) const;
};

// Central differences with relative step 1e-6.
Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x, double rel_step = 1e-6);

Vec hamiltonian_vector_field(const HamiltonianModel& m, const Vec& x);

// lambda_x(v) = 1/2 sum (y_j dx_j - x_j dy_j)(v), the standard Liouville form on C^n.
double liouville_form(const Vec& x, const Vec& v);
// X = z/2, so i_X d(lambda) = lambda.
Vec liouville_vector_field(const Vec& x);

// H = |z|^2 - 1 on C^n; X_H is the Reeb field 2(y d/dx - x d/dy) on the unit sphere.
HamiltonianModel sphere_model(int n);
// H = 1/2 |p|^2 on T*T^n with constant magnetic term J (antisymmetric n x n).
HamiltonianModel magnetic_torus_model(const Mat& j);

}  // namespace rfh::flow
