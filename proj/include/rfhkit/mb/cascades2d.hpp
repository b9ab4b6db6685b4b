#pragma once
// Numeric count of negative-gradient flow lines between critical points of 2-D models.
//
// From an index-2 source, 720 directions on a small circle of the unstable manifold are
// flowed down. Each trajectory gets a key: the saddles it passes (with the unstable branch it
// leaves along) and where it ends. A flow line into a saddle separates directions whose keys
// differ in that saddle's branch; each key change is bisected and attributed to the saddle
// the limiting trajectory runs into. From an index-1 source the two unstable branches are
// followed directly.

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace rfh::mb {

struct CriticalPoint2D {
    std::string label;
    Eigen::Vector3d x = Eigen::Vector3d::Zero();  // planar models use x(2) = 0
    int index = 0;
    bool at_infinity = false;  // the planar chart's point at infinity, a sink
};

struct GradientModel2D {
    std::string name;
    bool on_sphere = false;  // points on the unit sphere in R^3, gradient projected
    std::function<double(const Eigen::Vector3d&)> f;
    double escape_radius = 0.0;  // planar: |x| beyond this means arrival at infinity
    std::vector<CriticalPoint2D> critical;

    const CriticalPoint2D& point(const std::string& label) const;
};

// Height z on the round sphere: north pole max, south pole min.
GradientModel2D round_sphere_height();
// Planar Morse model of the teapot after perturbing its ridge circle by the circle's own
// height function: inner min, ridge max and ridge saddle, top max, a saddle between ridge and
// top, and the outer min at infinity.
GradientModel2D teapot_profile();

struct CascadeOptions {
    int directions = 720;
    double dt = 0.01;
    double t_max = 400.0;
};

// Parity of the number of flow lines source -> target. Returns 0 for pairs whose indices do
// not drop by exactly one and for source == target. Throws std::runtime_error if the
// clustering cannot be resolved.
int count_cascades_2d(const GradientModel2D& model, const std::string& source, const std::string& target,
                      const CascadeOptions& opt = {});

}  // namespace rfh::mb
