#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace shatir::rotkit {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

using Point3 = Vec3;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);

// Direction of ecliptic longitude L (degrees): j at L=0, rotating with the
// signs; rotation by +theta about k advances longitude by theta.
Vec3 direction(double longitude_deg);
double longitude_of(const Vec3& v);  // [0, 360)
double latitude_of(const Vec3& v);   // [-90, 90]

// Rigid direct isometry p -> R p + t.
struct Isometry {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1}; // row major
    Vec3 t{};

    Vec3 apply(const Vec3& p) const;
    Vec3 linear(const Vec3& v) const;
    Isometry then_inside(const Isometry& inner) const; // this ∘ inner
};

Isometry rotation_about(const Point3& center, const Vec3& unit_axis, double angle_deg);

// Time-linear parameters a rotation angle may depend on.
enum class Param : int {
    LambdaA,    // apogee longitude
    KappaBar,   // mean centre
    AlphaBar,   // mean anomaly / proper motion argument
    LambdaBar,  // mean longitude
    LambdaSun,  // mean sun
    LambdaNode, // ascending node motion argument
    TwoEtaBar,  // twice the mean elongation
    Count
};

using ParamSet = std::array<double, static_cast<size_t>(Param::Count)>;

// angle = c0 + sum(coeff_i * param_i), degrees.
struct AffineAngle {
    double c0 = 0.0;
    std::vector<std::pair<Param, double>> terms;

    double eval(const ParamSet& p) const;
};

inline AffineAngle fixed(double deg) { return AffineAngle{deg, {}}; }
inline AffineAngle of(Param p, double coeff = 1.0, double c0 = 0.0) {
    return AffineAngle{c0, {{p, coeff}}};
}

// One uniform rotation of the initial figure: the center point and the axis
// are fixed vectors of the initial frame.
struct RotationStep {
    Point3 center;
    Vec3 axis; // unit
    AffineAngle angle;
};

RotationStep make_step(const std::map<std::string, Point3>& points, const std::string& center_label,
                       const Vec3& axis, AffineAngle angle);

// Composition R1 ∘ R2 ∘ ... ∘ Rn, the rightmost applied first.
Isometry compose_chain(const std::vector<RotationStep>& steps, const ParamSet& params);
Point3 apply_chain(const std::vector<RotationStep>& steps, const ParamSet& params, const Point3& p);

// Verified identities. Each returns the max probe-point residual of the
// two-sided evaluation; preconditions on the point layout are enforced.
double check_prop1(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4,
                   double alpha_deg);
struct Prop2Result {
    double residual;          // two-sided evaluation
    double translation_cross; // the couple composite must translate parallel to (P1 P2)
};
Prop2Result check_prop2(const Point3& p1, const Point3& p2, const Point3& p3, const Point3& p4,
                        const Point3& p5, double alpha_deg);
double check_prop3(const Point3& p1, const Point3& p2, const Point3& p3, double alpha_deg);

// Commutation R ∘ S = T ∘ R for a front rotation about k: T has the angle of
// S, its axis and center carried by the front rotation.
RotationStep commute(const RotationStep& front, const RotationStep& tilt, const ParamSet& params);

// Max pairwise-distance distortion of a chain over a probe set (isometry check).
double isometry_residual(const std::vector<RotationStep>& steps, const ParamSet& params);

} // namespace shatir::rotkit
