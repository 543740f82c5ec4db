#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "loopflow/errors.hpp"
#include "loopflow/linalg.hpp"

namespace loopflow {

// ---------------------------------------------------------------------------
// Periodic cubic spline through N points (the (N+1)-th point wraps to the
// first). Second derivatives solve the cyclic tridiagonal smoothness system.
// ---------------------------------------------------------------------------
class PeriodicSpline {
public:
    PeriodicSpline() = default;

    // knots: N strictly increasing parameters; period: knot[0] + period wraps.
    PeriodicSpline(std::vector<double> knots, std::vector<Vec3> values, double period)
        : u_(std::move(knots)), y_(std::move(values)), period_(period) {
        const std::size_t n = u_.size();
        if (n < 3 || y_.size() != n) throw Error("PeriodicSpline: need >= 3 knots");
        h_.resize(n);
        for (std::size_t i = 0; i + 1 < n; ++i) h_[i] = u_[i + 1] - u_[i];
        h_[n - 1] = u_[0] + period_ - u_[n - 1];
        for (double h : h_)
            if (h <= 0.0) throw Error("PeriodicSpline: knots not increasing");
        m_.assign(n, Vec3::Zero());
        solve_moments();
    }

    double period() const { return period_; }

    Vec3 value(double u) const { return eval<0>(u); }
    Vec3 derivative(double u) const { return eval<1>(u); }
    Vec3 second_derivative(double u) const { return eval<2>(u); }

private:
    // Cyclic tridiagonal solve (Sherman-Morrison around the Thomas algorithm),
    // one pass per coordinate.
    void solve_moments() {
        const std::size_t n = u_.size();
        std::vector<double> a(n), b(n), c(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double hm = h_[(i + n - 1) % n];
            a[i] = hm / 6.0;
            b[i] = (hm + h_[i]) / 3.0;
            c[i] = h_[i] / 6.0;
        }
        auto rhs = [&](std::size_t i, int k) {
            const std::size_t im = (i + n - 1) % n, ip = (i + 1) % n;
            return (y_[ip][k] - y_[i][k]) / h_[i] - (y_[i][k] - y_[im][k]) / h_[im];
        };
        for (int k = 0; k < 3; ++k) {
            std::vector<double> d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = rhs(i, k);
            std::vector<double> x = cyclic_thomas(a, b, c, d);
            for (std::size_t i = 0; i < n; ++i) m_[i][k] = x[i];
        }
    }

    static std::vector<double> thomas(std::vector<double> a, std::vector<double> b,
                                      std::vector<double> c, std::vector<double> d) {
        const std::size_t n = b.size();
        for (std::size_t i = 1; i < n; ++i) {
            const double w = a[i] / b[i - 1];
            b[i] -= w * c[i - 1];
            d[i] -= w * d[i - 1];
        }
        std::vector<double> x(n);
        x[n - 1] = d[n - 1] / b[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = (d[i] - c[i] * x[i + 1]) / b[i];
        return x;
    }

    std::vector<double> cyclic_thomas(const std::vector<double>& a, const std::vector<double>& b,
                                      const std::vector<double>& c, const std::vector<double>& d) const {
        const std::size_t n = b.size();
        const double alpha = a[0], beta = c[n - 1], gamma = -b[0];
        std::vector<double> bb = b;
        bb[0] -= gamma;
        bb[n - 1] -= alpha * beta / gamma;
        std::vector<double> u(n, 0.0);
        u[0] = gamma;
        u[n - 1] = beta;
        std::vector<double> x = thomas(a, bb, c, d);
        std::vector<double> z = thomas(a, bb, c, u);
        const double vx = x[0] + (alpha / gamma) * x[n - 1];
        const double vz = z[0] + (alpha / gamma) * z[n - 1];
        const double f = vx / (1.0 + vz);
        for (std::size_t i = 0; i < n; ++i) x[i] -= f * z[i];
        return x;
    }

    template <int Deriv>
    Vec3 eval(double u) const {
        const std::size_t n = u_.size();
        double s = std::fmod(u - u_[0], period_);
        if (s < 0.0) s += period_;
        s += u_[0];
        auto it = std::upper_bound(u_.begin(), u_.end(), s);
        std::size_t i = (it == u_.begin()) ? 0 : static_cast<std::size_t>(it - u_.begin() - 1);
        if (i >= n) i = n - 1;
        const std::size_t ip = (i + 1) % n;
        const double h = h_[i];
        const double t1 = s - u_[i], t0 = h - t1;
        if constexpr (Deriv == 0) {
            return (m_[i] * t0 * t0 * t0 + m_[ip] * t1 * t1 * t1) / (6.0 * h) +
                   (y_[i] / h - m_[i] * h / 6.0) * t0 + (y_[ip] / h - m_[ip] * h / 6.0) * t1;
        } else if constexpr (Deriv == 1) {
            return (-m_[i] * t0 * t0 + m_[ip] * t1 * t1) / (2.0 * h) +
                   (y_[ip] - y_[i]) / h - (m_[ip] - m_[i]) * h / 6.0;
        } else {
            return (m_[i] * t0 + m_[ip] * t1) / h;
        }
    }

    std::vector<double> u_;
    std::vector<Vec3> y_;
    std::vector<double> h_;
    std::vector<Vec3> m_;  // second derivatives at knots
    double period_ = 0.0;
};

// ---------------------------------------------------------------------------
// Curve: closed curve sampled uniformly in arc length, backed by a periodic
// cubic spline in the arc parameter.
// ---------------------------------------------------------------------------
struct Curve {
    std::vector<Vec3> samples;     // N uniform arc-length samples
    std::vector<double> arc_params;  // k * L / N
    double length = 0.0;
    bool closed = true;
    PeriodicSpline spline;  // parameterized by arc length in [0, L)

    std::size_t size() const { return samples.size(); }
    double spacing() const { return length / static_cast<double>(samples.size()); }

    Vec3 position(double t) const { return spline.value(t); }
    Vec3 derivative(double t) const { return spline.derivative(t); }
    Vec3 second_derivative(double t) const { return spline.second_derivative(t); }
    Vec3 tangent(double t) const { return spline.derivative(t).normalized(); }

    Vec3 centroid() const {
        Vec3 c = Vec3::Zero();
        for (const Vec3& p : samples) c += p;
        return c / static_cast<double>(samples.size());
    }

    Curve translated(const Vec3& shift) const;
    Curve reversed() const;

    double min_curvature_radius() const {
        double kmax = 0.0;
        for (double t : arc_params) {
            const Vec3 d1 = spline.derivative(t), d2 = spline.second_derivative(t);
            const double k = d1.cross(d2).norm() / std::pow(d1.norm(), 3);
            kmax = std::max(kmax, k);
        }
        if (kmax <= 0.0) throw Error("curve has no curvature");
        return 1.0 / kmax;
    }

    // Smallest chord between samples more than a few steps apart along the
    // loop; a tube of radius below half this cannot touch itself globally.
    double min_nonlocal_gap() const {
        const std::size_t n = samples.size();
        const std::size_t window = 5;
        double best = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + window; j < n && (n - (j - i)) >= window; ++j)
                best = std::min(best, (samples[i] - samples[j]).norm());
        return best;
    }
};

inline Curve make_curve_from_uniform_samples(std::vector<Vec3> pts, double total_length) {
    Curve c;
    const std::size_t n = pts.size();
    c.samples = std::move(pts);
    c.length = total_length;
    c.arc_params.resize(n);
    std::vector<double> knots(n);
    for (std::size_t k = 0; k < n; ++k) {
        c.arc_params[k] = total_length * static_cast<double>(k) / static_cast<double>(n);
        knots[k] = c.arc_params[k];
    }
    c.spline = PeriodicSpline(knots, c.samples, total_length);
    c.closed = true;
    return c;
}

inline Curve Curve::translated(const Vec3& shift) const {
    std::vector<Vec3> pts = samples;
    for (Vec3& p : pts) p += shift;
    return make_curve_from_uniform_samples(std::move(pts), length);
}

inline Curve Curve::reversed() const {
    std::vector<Vec3> pts(samples.size());
    pts[0] = samples[0];
    for (std::size_t k = 1; k < samples.size(); ++k) pts[k] = samples[samples.size() - k];
    return make_curve_from_uniform_samples(std::move(pts), length);
}

inline double segment_length(const PeriodicSpline& s, double a, double b);

// ---------------------------------------------------------------------------
// resample_arclength: periodic cubic spline through the input polygon,
// resampled at N uniform arc-length stations.
// ---------------------------------------------------------------------------
inline Curve resample_arclength(const std::vector<Vec3>& points_in, std::size_t n) {
    std::vector<Vec3> pts = points_in;
    if (pts.size() >= 2 && (pts.front() - pts.back()).norm() < 1e-12) pts.pop_back();
    if (pts.size() < 4) throw DegenerateCurve("resample_arclength: need >= 4 distinct points");
    if (n < 16) throw Error("resample_arclength: N >= 16 required");

    double scale = 0.0;
    for (const Vec3& p : pts) scale = std::max(scale, p.norm());
    scale = std::max(scale, 1e-30);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec3& a = pts[i];
        const Vec3& b = pts[(i + 1) % pts.size()];
        if ((a - b).norm() < 1e-12 * scale)
            throw DegenerateCurve("resample_arclength: duplicate consecutive points");
    }

    // Chord-length parameterization of the input polygon.
    const std::size_t m = pts.size();
    std::vector<double> u(m, 0.0);
    double per = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        u[i] = per;
        per += (pts[(i + 1) % m] - pts[i]).norm();
    }
    PeriodicSpline chord(u, pts, per);

    // Cumulative arc length on a fine uniform grid, then Newton inversion.
    const std::size_t fine = std::max<std::size_t>(8192, 64 * m);
    std::vector<double> cum(fine + 1, 0.0);
    const double du = per / static_cast<double>(fine);
    double prev_speed = chord.derivative(0.0).norm();
    for (std::size_t i = 1; i <= fine; ++i) {
        const double ui = du * static_cast<double>(i);
        const double mid_speed = chord.derivative(ui - 0.5 * du).norm();
        const double speed = chord.derivative(ui).norm();
        cum[i] = cum[i - 1] + du * (prev_speed + 4.0 * mid_speed + speed) / 6.0;
        prev_speed = speed;
    }
    const double total = cum[fine];

    std::vector<Vec3> resampled(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double target = total * static_cast<double>(k) / static_cast<double>(n);
        const auto it = std::lower_bound(cum.begin(), cum.end(), target);
        std::size_t i = (it == cum.begin()) ? 0 : static_cast<std::size_t>(it - cum.begin() - 1);
        double ui = du * (static_cast<double>(i) +
                          (target - cum[i]) / std::max(cum[i + 1] - cum[i], 1e-300));
        for (int iter = 0; iter < 8; ++iter) {
            // One more Simpson increment from the bracketing grid point keeps the
            // Newton residual consistent with the cumulative table.
            const double base = du * static_cast<double>(i);
            const double f = cum[i] + segment_length(chord, base, ui) - target;
            const double speed = chord.derivative(ui).norm();
            ui -= f / std::max(speed, 1e-300);
            ui = std::clamp(ui, base, base + du);
        }
        resampled[k] = chord.value(ui);
    }

    Curve c = make_curve_from_uniform_samples(std::move(resampled), total);

    const double h = c.spacing();
    if (c.min_nonlocal_gap() <= 2.0 * h)
        throw SelfIntersecting("resample_arclength: curve samples self-intersect");
    return c;
}

inline double segment_length(const PeriodicSpline& s, double a, double b) {
    // 5-point Gauss-Legendre on [a, b]
    static const double xg[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                 0.5384693101056831, 0.9061798459386640};
    static const double wg[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                 0.4786286704993665, 0.2369268850561891};
    const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 5; ++i) acc += wg[i] * s.derivative(c + hl * xg[i]).norm();
    return acc * hl;
}

// ---------------------------------------------------------------------------
// Frame: rotation-minimizing orthonormal frame (s1, s2, tau) at the curve
// samples, propagated by the double-reflection method. The holonomy mismatch
// at closure is spread as a uniform twist so the frame closes exactly.
// ---------------------------------------------------------------------------
struct Frame {
    std::vector<Vec3> s1, s2, tau;
    double holonomy = 0.0;    // mismatch angle before correction
    double twist_rate = 0.0;  // applied correction, radians per unit length
};

namespace detail {
inline Vec3 any_unit_normal(const Vec3& t) {
    Vec3 a = std::abs(t.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    return (a - a.dot(t) * t).normalized();
}
}  // namespace detail

inline Frame build_frame(const Curve& curve) {
    if (!curve.closed) throw NotClosed("build_frame: curve must be closed");
    const std::size_t n = curve.size();
    Frame f;
    f.tau.resize(n);
    f.s1.resize(n);
    f.s2.resize(n);
    for (std::size_t k = 0; k < n; ++k) f.tau[k] = curve.tangent(curve.arc_params[k]);
    f.s1[0] = detail::any_unit_normal(f.tau[0]);

    auto reflect = [](const Vec3& v, const Vec3& axis, double c) { return v - (2.0 / c) * axis.dot(v) * axis; };
    Vec3 r = f.s1[0];
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t kp = (k + 1) % n;
        const Vec3 v1 = curve.samples[kp] - curve.samples[k];
        const double c1 = v1.squaredNorm();
        const Vec3 rl = reflect(r, v1, c1);
        const Vec3 tl = reflect(f.tau[k], v1, c1);
        const Vec3 v2 = f.tau[kp] - tl;
        const double c2 = v2.squaredNorm();
        Vec3 next = (c2 > 1e-28) ? reflect(rl, v2, c2) : rl;
        next = (next - next.dot(f.tau[kp]) * f.tau[kp]).normalized();
        if (kp != 0) {
            f.s1[kp] = next;
        } else {
            // closure: signed angle from the transported vector back to s1[0]
            const Vec3& t0 = f.tau[0];
            f.holonomy = std::atan2(triple(t0, next, f.s1[0]), next.dot(f.s1[0]));
        }
        r = next;
    }
    f.twist_rate = f.holonomy / curve.length;
    for (std::size_t k = 0; k < n; ++k) {
        const double ang = f.twist_rate * curve.arc_params[k];
        const Vec3 a = f.s1[k];
        const Vec3 b = f.tau[k].cross(a);
        f.s1[k] = std::cos(ang) * a + std::sin(ang) * b;
        f.s2[k] = f.tau[k].cross(f.s1[k]);
    }
    return f;
}

// Frame with s1 rotated by a fixed angle about tau; downstream coefficients
// must not depend on this choice.
inline Frame rotated_frame(const Frame& f, double angle) {
    Frame g = f;
    for (std::size_t k = 0; k < f.s1.size(); ++k) {
        g.s1[k] = std::cos(angle) * f.s1[k] + std::sin(angle) * f.s2[k];
        g.s2[k] = f.tau[k].cross(g.s1[k]);
    }
    return g;
}

// Interpolates the sampled frame to arbitrary arc parameters, re-orthogonalized
// against the exact spline tangent.
class FrameField {
public:
    FrameField(const Curve& curve, const Frame& frame) : curve_(&curve) {
        s1_spline_ = PeriodicSpline(curve.arc_params, frame.s1, curve.length);
    }

    void at(double t, Vec3& tau, Vec3& s1, Vec3& s2) const {
        tau = curve_->tangent(t);
        Vec3 u = s1_spline_.value(t);
        u -= u.dot(tau) * tau;
        s1 = u.normalized();
        s2 = tau.cross(s1);
    }

    Vec3 s1_derivative(double t) const { return s1_spline_.derivative(t); }

private:
    const Curve* curve_;
    PeriodicSpline s1_spline_;
};

// ---------------------------------------------------------------------------
// TubeSurface: smooth evaluator of the tube of radius eps about the framed
// curve. All mesh quadrature runs through eval().
// ---------------------------------------------------------------------------
struct SurfacePoint {
    Vec3 x;        // point on the tube surface
    Vec3 normal;   // unit, points toward the centerline (out of the fluid)
    Vec3 e_theta;  // unit azimuthal tangent, n ^ tau
    Vec3 tau;      // unit curve tangent at the foot point
    double jac;    // |x_t ^ x_theta|, area element d(sigma) = jac dt dtheta
};

class TubeSurface {
public:
    TubeSurface(Curve curve, const Frame& frame, double eps)
        : curve_(std::move(curve)), frame_(curve_, frame), eps_(eps) {
        const double rho = curve_.min_curvature_radius();
        const double gap = curve_.min_nonlocal_gap();
        if (!(eps_ > 0.0) || eps_ >= 0.5 * rho || eps_ >= 0.5 * gap)
            throw TubeSelfOverlap("tube radius too large for this curve");
    }

    TubeSurface(const TubeSurface&) = delete;
    TubeSurface& operator=(const TubeSurface&) = delete;

    double eps() const { return eps_; }
    const Curve& curve() const { return curve_; }
    const FrameField& frame() const { return frame_; }

    SurfacePoint eval(double t, double theta) const {
        Vec3 tau, s1, s2;
        frame_.at(t, tau, s1, s2);
        const double c = std::cos(theta), s = std::sin(theta);
        const Vec3 rhat = c * s1 + s * s2;
        SurfacePoint p;
        p.x = curve_.position(t) + eps_ * rhat;
        p.normal = -rhat;
        p.tau = tau;
        p.e_theta = tau.cross(rhat);
        const Vec3 ds1 = frame_.s1_derivative(t);
        const Vec3 ds2 = tau.cross(ds1) + curve_.second_derivative(t).cross(s1);
        const Vec3 xt = curve_.derivative(t) + eps_ * (c * ds1 + s * ds2);
        const Vec3 xth = eps_ * (-s * s1 + c * s2);
        p.jac = xt.cross(xth).norm();
        return p;
    }

private:
    Curve curve_;
    FrameField frame_;
    double eps_ = 0.0;
};

// ---------------------------------------------------------------------------
// TubeMesh: structured quadrilateral panels covering the tube surface.
// Panel centroids sit on the surface at cell parameter midpoints, so sums of
// smooth fields weighted by panel areas are midpoint-rule surface integrals.
// ---------------------------------------------------------------------------
struct Panel {
    Vec3 centroid;
    Vec3 normal;
    Vec3 e_theta;
    Vec3 tau;
    double area = 0.0;
    double t = 0.0, theta = 0.0;  // cell midpoint parameters
    int t_index = 0, theta_index = 0;
};

struct TubeMesh {
    std::shared_ptr<const TubeSurface> surface;
    double eps = 0.0;
    int n_t = 0, n_theta = 0;
    double dt = 0.0, dtheta = 0.0;
    std::vector<Panel> panels;

    const Curve& curve() const { return surface->curve(); }
    std::size_t size() const { return panels.size(); }
    double total_area() const {
        double a = 0.0;
        for (const Panel& p : panels) a += p.area;
        return a;
    }
};

inline TubeMesh tube_mesh(const Curve& curve, const Frame& frame, double eps, int n_t, int n_theta) {
    if (n_t < 32 || n_theta < 8) throw Error("tube_mesh: need N_t >= 32, N_theta >= 8");
    TubeMesh mesh;
    mesh.surface = std::make_shared<TubeSurface>(curve, frame, eps);
    mesh.eps = eps;
    mesh.n_t = n_t;
    mesh.n_theta = n_theta;
    mesh.dt = curve.length / n_t;
    mesh.dtheta = 2.0 * M_PI / n_theta;
    mesh.panels.reserve(static_cast<std::size_t>(n_t) * n_theta);
    for (int i = 0; i < n_t; ++i) {
        for (int j = 0; j < n_theta; ++j) {
            const double t = (i + 0.5) * mesh.dt;
            const double th = (j + 0.5) * mesh.dtheta;
            const SurfacePoint sp = mesh.surface->eval(t, th);
            Panel p;
            p.centroid = sp.x;
            p.normal = sp.normal;
            p.e_theta = sp.e_theta;
            p.tau = sp.tau;
            p.area = sp.jac * mesh.dt * mesh.dtheta;
            p.t = t;
            p.theta = th;
            p.t_index = i;
            p.theta_index = j;
            mesh.panels.push_back(p);
        }
    }
    return mesh;
}

// ---------------------------------------------------------------------------
// Vector area and volume vector of the loop:
//   A0 = 1/2 \oint gamma ^ gamma' ds,   V0 = -1/2 \oint |gamma|^2 gamma' ds.
// ---------------------------------------------------------------------------
inline void area_volume_vectors(const Curve& curve, Vec3& a0, Vec3& v0) {
    a0.setZero();
    v0.setZero();
    const double ds = curve.spacing();
    for (double t : curve.arc_params) {
        const Vec3 g = curve.position(t);
        const Vec3 dg = curve.derivative(t);
        a0 += g.cross(dg);
        v0 -= g.squaredNorm() * dg;
    }
    a0 *= 0.5 * ds;
    v0 *= 0.5 * ds;
}

// ---------------------------------------------------------------------------
// Tube coordinates (t, a, b) of a point near the curve, with the Jacobian
// factor w = dt/d(tau) = 1 / (1 - a k1 - b k2).
// ---------------------------------------------------------------------------
struct TubeCoords {
    double t = 0.0;
    double a = 0.0, b = 0.0;
    double w = 1.0;
};

inline TubeCoords tube_coordinates(const Vec3& x, const Curve& curve, const Frame& frame,
                                   double neighborhood_radius = -1.0) {
    if (neighborhood_radius <= 0.0) neighborhood_radius = 0.5 * curve.min_curvature_radius();
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::max();
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const double d2 = (x - curve.samples[k]).squaredNorm();
        if (d2 < best_d2) {
            best_d2 = d2;
            best = k;
        }
    }
    double t = curve.arc_params[best];
    for (int iter = 0; iter < 12; ++iter) {
        const Vec3 g = curve.position(t), d1 = curve.derivative(t), d2 = curve.second_derivative(t);
        const Vec3 r = x - g;
        const double f = r.dot(d1);
        const double df = r.dot(d2) - d1.squaredNorm();
        if (std::abs(df) < 1e-300) break;
        const double step = f / df;
        t -= step;
        if (std::abs(step) < 1e-14 * curve.length) break;
    }
    t = std::fmod(t, curve.length);
    if (t < 0.0) t += curve.length;
    const Vec3 r = x - curve.position(t);
    if (r.norm() > neighborhood_radius)
        throw OutsideTubeNeighborhood("point outside the tube neighborhood");

    const FrameField field(curve, frame);
    Vec3 tau, s1, s2;
    field.at(t, tau, s1, s2);
    TubeCoords tc;
    tc.t = t;
    tc.a = r.dot(s1);
    tc.b = r.dot(s2);
    const Vec3 ddg = curve.second_derivative(t);
    const double k1 = ddg.dot(s1), k2 = ddg.dot(s2);
    tc.w = 1.0 / (1.0 - tc.a * k1 - tc.b * k2);
    return tc;
}

// ---------------------------------------------------------------------------
// Built-in curves and plain-text input.
// ---------------------------------------------------------------------------
inline Curve builtin_circle(double radius, std::size_t n = 256) {
    if (radius <= 0.0) throw InvalidRadius("circle radius must be positive");
    std::vector<Vec3> pts(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
        pts[k] = Vec3(radius * std::cos(a), radius * std::sin(a), 0.0);
    }
    return make_curve_from_uniform_samples(std::move(pts), 2.0 * M_PI * radius);
}

inline Curve builtin_trefoil(std::size_t n = 256) {
    // (2,3) torus knot on the torus of radii (2, 1)
    std::vector<Vec3> pts(512);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const double u = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(pts.size());
        const double w = 2.0 + std::cos(3.0 * u);
        pts[k] = Vec3(w * std::cos(2.0 * u), w * std::sin(2.0 * u), std::sin(3.0 * u));
    }
    return resample_arclength(pts, n);
}

// Accepts "circle", "circle R=2", "trefoil".
inline Curve builtin_curve(const std::string& name, std::size_t n = 256) {
    std::istringstream in(name);
    std::string kind;
    in >> kind;
    if (kind == "circle") {
        double radius = 1.0;
        std::string tok;
        if (in >> tok) {
            if (tok.rfind("R=", 0) != 0) throw ConfigError("circle: expected R=<radius>");
            radius = std::stod(tok.substr(2));
        }
        return builtin_circle(radius, n);
    }
    if (kind == "trefoil") return builtin_trefoil(n);
    throw ConfigError("unknown built-in curve: " + name);
}

inline Curve load_curve_text(const std::string& path, std::size_t n = 256) {
    std::ifstream in(path);
    if (!in) throw IOFailure("cannot open curve file: " + path);
    std::vector<Vec3> pts;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',' || c == ';') c = ' ';
        std::istringstream ls(line);
        double x, y, z;
        if (ls >> x >> y >> z) pts.emplace_back(x, y, z);
    }
    return resample_arclength(pts, n);
}

inline void export_mesh_obj(const TubeMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IOFailure("cannot write mesh file: " + path);
    out << "# loopflow tube mesh, " << mesh.n_t << " x " << mesh.n_theta << " panels\n";
    char buf[128];
    for (int i = 0; i < mesh.n_t; ++i)
        for (int j = 0; j < mesh.n_theta; ++j) {
            const SurfacePoint sp = mesh.surface->eval(i * mesh.dt, j * mesh.dtheta);
            std::snprintf(buf, sizeof(buf), "v %.12g %.12g %.12g\n", sp.x.x(), sp.x.y(), sp.x.z());
            out << buf;
        }
    auto vid = [&](int i, int j) { return (i % mesh.n_t) * mesh.n_theta + (j % mesh.n_theta) + 1; };
    for (int i = 0; i < mesh.n_t; ++i)
        for (int j = 0; j < mesh.n_theta; ++j)
            out << "f " << vid(i, j) << ' ' << vid(i + 1, j) << ' ' << vid(i + 1, j + 1) << ' '
                << vid(i, j + 1) << '\n';
}

}  // namespace loopflow
