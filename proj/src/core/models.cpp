#include "models.hpp"

#include <cmath>

#include "sexagesimal.hpp"
#include "util.hpp"

namespace shatir::models {

using rotkit::AffineAngle;
using rotkit::Param;
using rotkit::ParamSet;
using rotkit::Point3;
using rotkit::RotationStep;
using rotkit::Vec3;
using timebase::MeanParameter;

namespace {

double sx(const char* text) { return sexagesimal::to_decimal(sexagesimal::parse(text)); }

constexpr Vec3 kI{1, 0, 0};
constexpr Vec3 kJ{0, 1, 0};
constexpr Vec3 kK{0, 0, 1};

struct Geometry {
    // Common planar constants derived from a body's offsets.
    double op3 = 60.0;
    double a = 0.0; // |P3 P4|
    double b = 0.0; // |P4 P5| (planets) or |P4 P| (Moon)
    double r = 0.0; // epicycle radius (planets)
};

Geometry geometry(Body body) {
    ModelConfig cfg = build_config(body);
    Geometry g;
    g.a = std::fabs(cfg.offsets[1]);
    g.b = std::fabs(cfg.offsets[2]);
    if (cfg.offsets.size() > 3) g.r = std::fabs(cfg.offsets[3]);
    return g;
}

const Geometry& geom(Body body) {
    static const Geometry tbl[] = {geometry(Body::Sun),     geometry(Body::Moon),
                                   geometry(Body::Saturn),  geometry(Body::Jupiter),
                                   geometry(Body::Mars),    geometry(Body::Venus),
                                   geometry(Body::Mercury)};
    return tbl[static_cast<int>(body)];
}

double asin_deg(double x) { return deg(std::asin(std::fmin(1.0, std::fmax(-1.0, x)))); }

} // namespace

const char* body_name(Body b) {
    switch (b) {
        case Body::Sun: return "sun";
        case Body::Moon: return "moon";
        case Body::Saturn: return "saturn";
        case Body::Jupiter: return "jupiter";
        case Body::Mars: return "mars";
        case Body::Venus: return "venus";
        case Body::Mercury: return "mercury";
    }
    return "?";
}

Body body_from_name(const std::string& name) {
    for (Body b : {Body::Sun, Body::Moon, Body::Saturn, Body::Jupiter, Body::Mars, Body::Venus,
                   Body::Mercury})
        if (name == body_name(b)) return b;
    fail(Err::UnknownBody, "unknown body: " + name);
}

ModelConfig build_config(Body body) {
    ModelConfig cfg;
    cfg.body = body;

    auto mean_sun = MeanParameter::per_year("lambda_sun", sx("280;9,0"), sx("359;45,40"));
    auto apogee = [](const char* v0) {
        return MeanParameter::per_year("lambda_A", sx(v0), sx("0;1"));
    };

    switch (body) {
        case Body::Sun:
            cfg.offsets = {60.0, sx("4;37"), sx("2;30")};
            cfg.mean_longitude = mean_sun;
            cfg.apogee = apogee("89;52,3,1");
            break;
        case Body::Moon:
            cfg.offsets = {60.0, sx("6;35"), -sx("1;25")};
            cfg.mean_longitude =
                MeanParameter::per_day("lambda_bar", sx("213;35,50"), sx("13;10,35,1,13,53"));
            cfg.anomaly = MeanParameter::per_day("alpha_bar", sx("138;32,27"), sx("13;3,53,56"));
            cfg.node = MeanParameter::per_day("lambda_node", sx("275;7,35"), sx("0;3,10,38,27"));
            cfg.anomaly_has_own_rate = true;
            cfg.incl_orb_deg = 5.0;
            break;
        case Body::Saturn:
            cfg.offsets = {60.0, sx("5;7,30"), -sx("1;42,30"), sx("6;30")};
            cfg.mean_longitude =
                MeanParameter::per_year("lambda_bar", sx("157;58,20"), sx("12;13,40"));
            cfg.apogee = apogee("254;52");
            cfg.incl_orb_deg = sx("2;30");
            cfg.incl_deferent_deg = -sx("3;30");
            cfg.incl_rotator_deg = -1.0;
            cfg.node_offset_deg = -140.0;
            break;
        case Body::Jupiter:
            cfg.offsets = {60.0, sx("4;7,30"), -sx("1;22,30"), sx("11;30")};
            cfg.mean_longitude =
                MeanParameter::per_year("lambda_bar", sx("272;6,10"), sx("30;20,33"));
            cfg.apogee = apogee("180;52");
            cfg.incl_orb_deg = sx("1;30");
            cfg.incl_deferent_deg = -2.0;
            cfg.incl_rotator_deg = -sx("0;30");
            cfg.node_offset_deg = -62.0;
            break;
        case Body::Mars:
            cfg.offsets = {60.0, 9.0, -3.0, sx("39;30")};
            cfg.mean_longitude =
                MeanParameter::per_year("lambda_bar", sx("292;0,0"), sx("191;17,11"));
            cfg.apogee = apogee("137;52");
            cfg.incl_orb_deg = 1.0;
            cfg.incl_deferent_deg = -sx("1;37,30");
            cfg.incl_rotator_deg = -sx("0;37,30");
            cfg.node_offset_deg = -90.0;
            break;
        case Body::Venus:
            cfg.offsets = {60.0, sx("1;41"), -sx("0;26"), sx("43;33")};
            cfg.mean_longitude = mean_sun;
            cfg.apogee = apogee("77;52");
            cfg.anomaly = MeanParameter::per_year("alpha_bar", sx("320;50,19"), sx("225;1,48,41"));
            cfg.anomaly_has_own_rate = true;
            cfg.incl_orb_deg = sx("0;10");
            cfg.incl_deferent_deg = 3.0;
            cfg.incl_rotator_deg = sx("0;30");
            cfg.incl_epicycle_deg = sx("0;5");
            cfg.node_offset_deg = -90.0;
            break;
        case Body::Mercury:
            // P4P5 = 0;55, not the copyists' 0;50; the solid-orb arithmetic
            // fixes the reading.
            cfg.offsets = {60.0, sx("4;5"), sx("0;55"), sx("22;46"), -sx("0;33"), -sx("0;33")};
            cfg.mean_longitude = mean_sun;
            cfg.apogee = apogee("212;52");
            cfg.anomaly = MeanParameter::per_year("alpha_bar", sx("154;2"), sx("1133;57,1"));
            cfg.anomaly_has_own_rate = true;
            cfg.incl_orb_deg = -sx("0;10");
            cfg.incl_deferent_deg = -sx("6;36,30");
            cfg.incl_rotator_deg = -sx("0;22,30");
            cfg.incl_epicycle_deg = -sx("0;5");
            cfg.node_offset_deg = -90.0;
            break;
    }
    if (body != Body::Moon) cfg.node = MeanParameter{"lambda_node", 0.0, 0.0};
    if (!cfg.anomaly_has_own_rate) cfg.anomaly = MeanParameter{"alpha_bar", 0.0, 0.0};

    cfg.points["O"] = Point3{0, 0, 0};
    cfg.points["P1"] = Point3{0, 0, 0};
    cfg.points["P2"] = Point3{0, 0, 0};
    double y = 0.0;
    for (size_t k = 0; k < cfg.offsets.size(); ++k) {
        y += cfg.offsets[k];
        cfg.points["P" + std::to_string(k + 3)] = Point3{0, y, 0};
    }
    cfg.star = Point3{0, y, 0};
    return cfg;
}

std::vector<RotationStep> ModelConfig::chain(TiltMode mode, LatitudeVariant variant) const {
    const bool tilts = mode != TiltMode::None;
    const bool small_tilts = mode == TiltMode::Full;
    auto step = [&](const char* center, const Vec3& axis, AffineAngle angle) {
        return rotkit::make_step(points, center, axis, std::move(angle));
    };
    std::vector<RotationStep> c;
    using rotkit::fixed;
    using rotkit::of;

    switch (body) {
        case Body::Sun:
            c.push_back(step("P1", kK, of(Param::LambdaA)));
            c.push_back(step("P2", kK, of(Param::AlphaBar)));
            c.push_back(step("P3", kK, of(Param::AlphaBar, -1.0)));
            c.push_back(step("P4", kK, of(Param::AlphaBar, 2.0)));
            break;
        case Body::Moon:
            c.push_back(step("P1", kK, of(Param::LambdaNode, -1.0)));
            if (tilts) c.push_back(step("P2", kJ, fixed(incl_orb_deg)));
            c.push_back(step("P2", kK,
                             AffineAngle{0.0, {{Param::LambdaBar, 1.0}, {Param::LambdaNode, 1.0}}}));
            c.push_back(step("P3", kK, of(Param::AlphaBar, -1.0)));
            c.push_back(step("P4", kK, of(Param::TwoEtaBar)));
            break;
        case Body::Saturn:
        case Body::Jupiter:
        case Body::Mars: {
            Vec3 u = rotkit::direction(node_offset_deg);
            Vec3 v = rotkit::rotation_about(Point3{}, kK, -2.0 * (node_offset_deg + 90.0)).linear(u);
            c.push_back(step("P1", kK, of(Param::LambdaA)));
            if (tilts) c.push_back(step("P2", u, fixed(incl_orb_deg)));
            c.push_back(step("P2", kK, of(Param::KappaBar)));
            c.push_back(step("P3", kK, of(Param::KappaBar, -1.0)));
            if (small_tilts) c.push_back(step("P3", u, fixed(incl_deferent_deg)));
            c.push_back(step("P4", kK, of(Param::KappaBar, 2.0)));
            if (small_tilts) c.push_back(step("P4", v, fixed(incl_rotator_deg)));
            c.push_back(step("P5", kK,
                             AffineAngle{0.0, {{Param::AlphaBar, 1.0}, {Param::KappaBar, -1.0}}}));
            break;
        }
        // The inferior planets follow the superior-planet convention: the
        // uniform rotation stands outermost at each center, the plane tilts
        // ride inside it (their axes are carried by the orb's own motion).
        case Body::Venus: {
            const bool second = variant == LatitudeVariant::Second;
            c.push_back(step("P1", kK, of(Param::LambdaA)));
            if (tilts) c.push_back(step("P2", kI, fixed(incl_orb_deg)));
            c.push_back(step("P2", kK, of(Param::KappaBar)));
            c.push_back(step("P3", kK, of(Param::KappaBar, -1.0)));
            c.push_back(step("P4", kK, of(Param::KappaBar, 2.0)));
            if (small_tilts) {
                c.push_back(step("P4", kI, fixed(-incl_epicycle_deg)));
                c.push_back(step("P4", kJ, fixed(second ? incl_deferent_deg + incl_rotator_deg
                                                        : incl_deferent_deg)));
            }
            c.push_back(step("P5", kK,
                             AffineAngle{0.0, {{Param::AlphaBar, 1.0}, {Param::KappaBar, -1.0}}}));
            if (small_tilts) {
                c.push_back(step("P5", kI, fixed(incl_epicycle_deg)));
                if (!second) c.push_back(step("P5", kJ, fixed(incl_rotator_deg)));
            }
            break;
        }
        case Body::Mercury: {
            const bool second = variant == LatitudeVariant::Second;
            c.push_back(step("P1", kK, of(Param::LambdaA)));
            if (tilts) c.push_back(step("P2", kI, fixed(incl_orb_deg)));
            c.push_back(step("P2", kK, of(Param::KappaBar)));
            c.push_back(step("P3", kK, of(Param::KappaBar, -1.0)));
            c.push_back(step("P4", kK, of(Param::KappaBar, 2.0)));
            if (small_tilts) {
                c.push_back(step("P4", kI, fixed(-incl_epicycle_deg)));
                c.push_back(step("P4", kJ, fixed(second ? incl_deferent_deg + incl_rotator_deg
                                                        : incl_deferent_deg)));
            }
            c.push_back(step("P5", kK,
                             AffineAngle{0.0, {{Param::AlphaBar, 1.0}, {Param::KappaBar, -1.0}}}));
            if (small_tilts) {
                c.push_back(step("P5", kI, fixed(incl_epicycle_deg)));
                if (!second) c.push_back(step("P5", kJ, fixed(incl_rotator_deg)));
            }
            c.push_back(step("P6", kK, of(Param::KappaBar, 2.0)));
            c.push_back(step("P7", kK, of(Param::KappaBar, -4.0)));
            break;
        }
    }
    return c;
}

ParamSet ModelConfig::params_at(double t) const {
    ParamSet p{};
    double lam_sun;
    if (body == Body::Sun || body == Body::Venus || body == Body::Mercury) {
        lam_sun = timebase::mean(mean_longitude, t);
    } else {
        static const MeanParameter sun_mean =
            MeanParameter::per_year("lambda_sun", sx("280;9,0"), sx("359;45,40"));
        lam_sun = timebase::mean(sun_mean, t);
    }
    p[static_cast<size_t>(Param::LambdaSun)] = lam_sun;

    switch (body) {
        case Body::Sun: {
            double lamA = timebase::mean(apogee, t);
            p[static_cast<size_t>(Param::LambdaA)] = lamA;
            p[static_cast<size_t>(Param::LambdaBar)] = lam_sun;
            p[static_cast<size_t>(Param::AlphaBar)] = norm360(lam_sun - lamA);
            break;
        }
        case Body::Moon: {
            double lam = timebase::mean(mean_longitude, t);
            p[static_cast<size_t>(Param::LambdaBar)] = lam;
            p[static_cast<size_t>(Param::AlphaBar)] = timebase::mean(anomaly, t);
            p[static_cast<size_t>(Param::LambdaNode)] = timebase::mean(node, t);
            p[static_cast<size_t>(Param::TwoEtaBar)] = norm360(2.0 * (lam - lam_sun));
            break;
        }
        default: {
            double lamA = timebase::mean(apogee, t);
            p[static_cast<size_t>(Param::LambdaA)] = lamA;
            double lam = (body == Body::Venus || body == Body::Mercury)
                             ? lam_sun
                             : timebase::mean(mean_longitude, t);
            p[static_cast<size_t>(Param::LambdaBar)] = lam;
            double kappa = norm360(lam - lamA);
            p[static_cast<size_t>(Param::KappaBar)] = kappa;
            double alpha = anomaly_has_own_rate ? timebase::mean(anomaly, t)
                                                : norm360(lam_sun - lam);
            p[static_cast<size_t>(Param::AlphaBar)] = alpha;
            break;
        }
    }
    return p;
}

EphemerisRecord position3d(const ModelConfig& cfg, double t, TiltMode mode,
                           LatitudeVariant variant) {
    ParamSet p = cfg.params_at(t);
    Point3 pt = rotkit::apply_chain(cfg.chain(mode, variant), p, cfg.star);
    EphemerisRecord rec;
    rec.t = t;
    rec.body = cfg.body;
    rec.model = "shatir3d";
    rec.longitude = rotkit::longitude_of(pt);
    rec.latitude = rotkit::latitude_of(pt);
    rec.distance = rotkit::norm(pt);
    return rec;
}

// --- planar equations ----------------------------------------------------------

double sun_equation(double alpha_deg) {
    const Geometry& g = geom(Body::Sun);
    double s = std::sin(rad(alpha_deg)), c = std::cos(rad(alpha_deg));
    double num = (g.a - g.b) * s;
    double den = g.op3 + (g.a + g.b) * c;
    return -deg(std::atan2(num, den));
}

double sun_distance(double alpha_deg) {
    const Geometry& g = geom(Body::Sun);
    double s = std::sin(rad(alpha_deg)), c = std::cos(rad(alpha_deg));
    return std::hypot((g.a - g.b) * s, g.op3 + (g.a + g.b) * c);
}

double moon_apparent_radius(double two_eta_deg) {
    const Geometry& g = geom(Body::Moon);
    double s = std::sin(rad(two_eta_deg)), c = std::cos(rad(two_eta_deg));
    return std::hypot(g.a - g.b * c, g.b * s);
}

double moon_c1(double two_eta_deg) {
    const Geometry& g = geom(Body::Moon);
    double r = moon_apparent_radius(two_eta_deg);
    return asin_deg(g.b * std::sin(rad(two_eta_deg)) / r);
}

double moon_c2(double alpha_deg, double two_eta_deg) {
    const Geometry& g = geom(Body::Moon);
    double r = moon_apparent_radius(two_eta_deg);
    double s = std::sin(rad(alpha_deg)), c = std::cos(rad(alpha_deg));
    double op = std::hypot(g.op3 + r * c, r * s);
    return asin_deg(-r * s / op);
}

double moon_distance(double alpha_deg, double two_eta_deg) {
    const Geometry& g = geom(Body::Moon);
    double r = moon_apparent_radius(two_eta_deg);
    return std::hypot(g.op3 + r * std::cos(rad(alpha_deg)), r * std::sin(rad(alpha_deg)));
}

double moon_max_c2(double two_eta_deg) {
    return asin_deg(moon_apparent_radius(two_eta_deg) / geom(Body::Moon).op3);
}

double moon_chi(double two_eta_deg) {
    double near = moon_max_c2(0.0), far = moon_max_c2(180.0);
    return (moon_max_c2(two_eta_deg) - near) / (far - near);
}

double displacement_en(double x_deg, double incl_deg) {
    double x = norm360(x_deg + 90.0) - 90.0; // into [-90, 270)
    if (x == 90.0 || x == -90.0) return 0.0;
    double base = deg(std::atan(std::cos(rad(incl_deg)) * std::tan(rad(x)))) - x;
    if (x > 90.0) base += 180.0;
    return base;
}

double mercury_apparent_radius(double kappa_deg) {
    const ModelConfig cfg = build_config(Body::Mercury);
    double arm = std::fabs(cfg.offsets[3]);                        // P5 P6
    double couple = std::fabs(cfg.offsets[4]) + std::fabs(cfg.offsets[5]); // P6 P
    return arm - couple * std::cos(rad(2.0 * kappa_deg));
}

double planet_op5(Body body, double kappa_deg) {
    const Geometry& g = geom(body);
    double s = std::sin(rad(kappa_deg)), c = std::cos(rad(kappa_deg));
    if (body == Body::Mercury) return std::hypot((g.a - g.b) * s, g.op3 + (g.a + g.b) * c);
    return std::hypot((g.a + g.b) * s, g.op3 + (g.a - g.b) * c);
}

double planet_c1(Body body, double kappa_deg) {
    if (body == Body::Sun || body == Body::Moon)
        fail(Err::UnknownBody, "planet_c1 is for the five planets");
    const Geometry& g = geom(body);
    double num = (body == Body::Mercury ? g.a - g.b : g.a + g.b) * std::sin(rad(kappa_deg));
    return -asin_deg(num / planet_op5(body, kappa_deg));
}

namespace {
double epicycle_radius(Body body, double kappa_deg) {
    return body == Body::Mercury ? mercury_apparent_radius(kappa_deg) : geom(body).r;
}
} // namespace

double planet_c2(Body body, double kappa_deg, double alpha_deg) {
    double r = epicycle_radius(body, kappa_deg);
    double op5 = planet_op5(body, kappa_deg);
    double s = std::sin(rad(alpha_deg)), c = std::cos(rad(alpha_deg));
    double op = std::hypot(r * s, op5 + r * c);
    return asin_deg(r * s / op);
}

double planet_distance(Body body, double kappa_deg, double alpha_deg) {
    double r = epicycle_radius(body, kappa_deg);
    double op5 = planet_op5(body, kappa_deg);
    return std::hypot(r * std::sin(rad(alpha_deg)), op5 + r * std::cos(rad(alpha_deg)));
}

double planet_max_c2(Body body, double kappa_deg) {
    return asin_deg(epicycle_radius(body, kappa_deg) / planet_op5(body, kappa_deg));
}

double planet_chi(Body body, double kappa_deg) {
    double near = planet_max_c2(body, 0.0), far = planet_max_c2(body, 180.0);
    return (planet_max_c2(body, kappa_deg) - near) / (far - near);
}

double moon_latitude_alt(double arg_deg) {
    double arg = arg_deg + displacement_en(arg_deg, 5.0);
    return deg(std::atan(std::tan(rad(5.0)) * std::sin(rad(arg))));
}

EphemerisRecord position_planar(const ModelConfig& cfg, double t, C2Mode mode) {
    ParamSet p = cfg.params_at(t);
    auto P = [&](Param q) { return p[static_cast<size_t>(q)]; };

    EphemerisRecord rec;
    rec.t = t;
    rec.body = cfg.body;
    rec.model = mode == C2Mode::Exact ? "shatir-planar" : "shatir-chi";

    if (cfg.body == Body::Sun) {
        double alpha = P(Param::AlphaBar);
        rec.longitude = norm360(P(Param::LambdaA) + alpha + sun_equation(alpha));
        rec.latitude = 0.0;
        rec.distance = sun_distance(alpha);
        return rec;
    }

    if (cfg.body == Body::Moon) {
        double two_eta = P(Param::TwoEtaBar);
        double c1 = moon_c1(two_eta);
        double alpha = P(Param::AlphaBar) + c1;
        double c2;
        if (mode == C2Mode::Exact) {
            c2 = moon_c2(alpha, two_eta);
        } else {
            c2 = moon_c2(alpha, 0.0) +
                 moon_chi(two_eta) * (moon_c2(alpha, 180.0) - moon_c2(alpha, 0.0));
        }
        double arg = P(Param::LambdaBar) + P(Param::LambdaNode) + c2;
        rec.longitude = norm360(P(Param::LambdaBar) + c2 + displacement_en(arg, cfg.incl_orb_deg));
        rec.latitude = asin_deg(std::sin(rad(cfg.incl_orb_deg)) * std::sin(rad(arg)));
        rec.distance = moon_distance(alpha, two_eta);
        return rec;
    }

    double kappa = P(Param::KappaBar);
    double c1 = planet_c1(cfg.body, kappa);
    double alpha = P(Param::AlphaBar) - c1;
    double c2;
    if (mode == C2Mode::Exact) {
        c2 = planet_c2(cfg.body, kappa, alpha);
    } else {
        c2 = planet_c2(cfg.body, 0.0, alpha) +
             planet_chi(cfg.body, kappa) *
                 (planet_c2(cfg.body, 180.0, alpha) - planet_c2(cfg.body, 0.0, alpha));
    }
    double lam = P(Param::LambdaBar) + c1 + c2;
    double node = P(Param::LambdaA) + cfg.node_offset_deg;
    double arg = lam - node;
    rec.longitude = norm360(lam + displacement_en(arg, cfg.incl_orb_deg));
    rec.latitude = asin_deg(std::sin(rad(cfg.incl_orb_deg)) * std::sin(rad(arg)));
    rec.distance = planet_distance(cfg.body, kappa, alpha);
    return rec;
}

std::vector<TableRow> generate_table(Body body, int step_deg) {
    if (step_deg <= 0 || 360 % step_deg != 0)
        fail(Err::PreconditionViolated, "table step must divide 360");
    if (body == Body::Sun) fail(Err::UnknownBody, "the sun has a single equation, no jadwal block");
    std::vector<TableRow> rows;
    for (int arg = step_deg; arg <= 180; arg += step_deg) {
        TableRow row;
        row.arg = arg;
        if (body == Body::Moon) {
            row.c1 = moon_c1(arg);
            row.c2_near = moon_c2(arg, 0.0);
            row.delta = moon_c2(arg, 180.0) - row.c2_near;
            row.chi = moon_chi(arg);
        } else {
            row.c1 = planet_c1(body, arg);
            row.c2_near = planet_c2(body, 0.0, arg);
            row.delta = planet_c2(body, 180.0, arg) - row.c2_near;
            row.chi = planet_chi(body, arg);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace shatir::models
