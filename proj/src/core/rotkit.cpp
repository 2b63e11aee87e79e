#include "rotkit.hpp"

#include <cmath>

#include "util.hpp"

namespace shatir::rotkit {

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    if (n == 0.0) fail(Err::PreconditionViolated, "cannot normalize the zero vector");
    return v * (1.0 / n);
}

Vec3 direction(double longitude_deg) {
    double a = rad(longitude_deg);
    return {-std::sin(a), std::cos(a), 0.0};
}

double longitude_of(const Vec3& v) { return norm360(deg(std::atan2(-v.x, v.y))); }

double latitude_of(const Vec3& v) {
    double r = norm(v);
    if (r == 0.0) return 0.0;
    double s = v.z / r;
    s = std::fmin(1.0, std::fmax(-1.0, s));
    return deg(std::asin(s));
}

Vec3 Isometry::apply(const Vec3& p) const { return linear(p) + t; }

Vec3 Isometry::linear(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

Isometry Isometry::then_inside(const Isometry& inner) const {
    Isometry r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += m[3 * i + k] * inner.m[3 * k + j];
            r.m[3 * i + j] = s;
        }
    r.t = linear(inner.t) + t;
    return r;
}

Isometry rotation_about(const Point3& center, const Vec3& unit_axis, double angle_deg) {
    double n = norm(unit_axis);
    if (std::fabs(n - 1.0) > 1e-9) fail(Err::PreconditionViolated, "rotation axis must be unit");
    double a = rad(angle_deg);
    double c = std::cos(a), s = std::sin(a), k = 1.0 - c;
    const Vec3& u = unit_axis;
    Isometry r;
    r.m = {c + u.x * u.x * k,       u.x * u.y * k - u.z * s, u.x * u.z * k + u.y * s,
           u.y * u.x * k + u.z * s, c + u.y * u.y * k,       u.y * u.z * k - u.x * s,
           u.z * u.x * k - u.y * s, u.z * u.y * k + u.x * s, c + u.z * u.z * k};
    r.t = center - r.linear(center);
    return r;
}

double AffineAngle::eval(const ParamSet& p) const {
    double a = c0;
    for (const auto& [param, coeff] : terms) a += coeff * p[static_cast<size_t>(param)];
    return a;
}

RotationStep make_step(const std::map<std::string, Point3>& points, const std::string& center_label,
                       const Vec3& axis, AffineAngle angle) {
    auto it = points.find(center_label);
    if (it == points.end()) fail(Err::UnknownPointLabel, "unknown point label: " + center_label);
    return RotationStep{it->second, normalized(axis), std::move(angle)};
}

Isometry compose_chain(const std::vector<RotationStep>& steps, const ParamSet& params) {
    Isometry m;
    for (const auto& s : steps)
        m = m.then_inside(rotation_about(s.center, s.axis, s.angle.eval(params)));
    return m;
}

Point3 apply_chain(const std::vector<RotationStep>& steps, const ParamSet& params, const Point3& p) {
    return compose_chain(steps, params).apply(p);
}

namespace {

const Vec3 kAxisK{0, 0, 1};

std::vector<Point3> probe_points(double scale) {
    return {{0, 0, 0},      {scale, 0, 0},       {0, scale, 0},
            {0, 0, scale},  {scale, -scale, 0.5 * scale}, {-0.3 * scale, 0.7 * scale, -scale}};
}

double map_residual(const Isometry& a, const Isometry& b, double scale) {
    double r = 0.0;
    for (const auto& q : probe_points(scale)) r = std::fmax(r, norm(a.apply(q) - b.apply(q)));
    return r;
}

Isometry rot_k(const Point3& c, double angle_deg) { return rotation_about(c, kAxisK, angle_deg); }

void require_offset(const Vec3& a, const Vec3& b, const char* what) {
    if (norm(a - b) > 1e-9) fail(Err::PreconditionViolated, what);
}

double layout_scale(std::initializer_list<Point3> pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::fmax(s, norm(p));
    return s;
}

} // namespace

double check_prop1(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4,
                   double alpha_deg) {
    require_offset(p3 - p1, p4 - p2, "prop 1 requires P1P3 == P2P4");
    Isometry lhs = rot_k(p2, alpha_deg);
    Isometry rhs =
        rot_k(p1, alpha_deg).then_inside(rot_k(p3, -alpha_deg)).then_inside(rot_k(p4, alpha_deg));
    return map_residual(lhs, rhs, layout_scale({p1, p2, p3, p4}));
}

Prop2Result check_prop2(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4,
                        const Point3& p5, double alpha_deg) {
    require_offset(p4 - p3, (p2 - p1) * -1.0, "prop 2 requires P3P4 == -P1P2");
    require_offset(p5 - p3, p2 - p1, "prop 2 requires P3P5 == P1P2");
    double scale = layout_scale({p1, p2, p3, p4, p5});
    Isometry lhs =
        rot_k(p1, alpha_deg).then_inside(rot_k(p3, alpha_deg)).then_inside(rot_k(p4, -alpha_deg));
    Isometry couple = rot_k(p5, -alpha_deg)
                          .then_inside(rot_k(p3, 2.0 * alpha_deg))
                          .then_inside(rot_k(p4, -alpha_deg));
    Isometry rhs = rot_k(p2, alpha_deg).then_inside(couple);

    Prop2Result res;
    res.residual = map_residual(lhs, rhs, scale);

    // The couple composite is a translation parallel to the line (P1 P2).
    Isometry identity_linear;
    identity_linear.t = couple.t;
    double linear_dev = map_residual(couple, identity_linear, scale);
    double cross_dev = 0.0;
    double d12 = norm(p2 - p1);
    if (d12 > 0.0) cross_dev = norm(cross(couple.t, (p2 - p1) * (1.0 / d12)));
    res.translation_cross = std::fmax(linear_dev, cross_dev);
    return res;
}

double check_prop3(const Point3& p1, const Point3& p2, const Point3& p3, double alpha_deg) {
    require_offset(p3 - p1, (p2 - p1) * -1.0, "prop 3 requires P1P3 == -P1P2");
    Isometry lhs = rot_k(p3, -alpha_deg)
                       .then_inside(rot_k(p1, 2.0 * alpha_deg))
                       .then_inside(rot_k(p2, -alpha_deg));
    Isometry rhs = rot_k(p3, alpha_deg)
                       .then_inside(rot_k(p1, -2.0 * alpha_deg))
                       .then_inside(rot_k(p2, alpha_deg));
    return map_residual(lhs, rhs, layout_scale({p1, p2, p3}));
}

RotationStep commute(const RotationStep& front, const RotationStep& tilt, const ParamSet& params) {
    Isometry f = rotation_about(front.center, front.axis, front.angle.eval(params));
    RotationStep out;
    out.center = f.apply(tilt.center);
    out.axis = f.linear(tilt.axis);
    out.angle = tilt.angle;
    return out;
}

double isometry_residual(const std::vector<RotationStep>& steps, const ParamSet& params) {
    Isometry m = compose_chain(steps, params);
    double scale = 1.0;
    for (const auto& s : steps) scale = std::fmax(scale, norm(s.center));
    auto pts = probe_points(scale);
    double res = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            double before = norm(pts[i] - pts[j]);
            double after = norm(m.apply(pts[i]) - m.apply(pts[j]));
            res = std::fmax(res, std::fabs(after - before));
        }
    return res;
}

} // namespace shatir::rotkit
