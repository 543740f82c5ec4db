#pragma once

#include <Eigen/Dense>
#include <cmath>

namespace loopflow {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// Matrix of the linear map x -> a ^ x.
inline Mat3 hat(const Vec3& a) {
    Mat3 m;
    m << 0.0, -a.z(), a.y(),
         a.z(), 0.0, -a.x(),
         -a.y(), a.x(), 0.0;
    return m;
}

// Mixed product [a, b, c] = a . (b ^ c).
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.dot(b.cross(c));
}

// Rigid velocity mode i (1..6) evaluated at x: e_i for translations,
// e_{i-3} ^ x for rotations.
inline Vec3 rigid_mode(int i, const Vec3& x) {
    Vec3 e = Vec3::Zero();
    if (i <= 3) {
        e[i - 1] = 1.0;
        return e;
    }
    e[i - 4] = 1.0;
    return e.cross(x);
}

// Nearest rotation matrix (polar factor) of an almost-orthogonal matrix.
inline Mat3 polar_rotation(const Mat3& m) {
    Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 q = svd.matrixU() * svd.matrixV().transpose();
    if (q.determinant() < 0.0) {
        Mat3 flip = Mat3::Identity();
        flip(2, 2) = -1.0;
        q = svd.matrixU() * flip * svd.matrixV().transpose();
    }
    return q;
}

inline double sqr(double x) { return x * x; }

}  // namespace loopflow
