#include <doctest.h>

#include <cmath>
#include <random>

#include "core/models.hpp"
#include "core/rotkit.hpp"
#include "core/sexagesimal.hpp"
#include "core/util.hpp"

using namespace shatir;
using namespace shatir::rotkit;

namespace {
double sx(const char* s) { return sexagesimal::to_decimal(sexagesimal::parse(s)); }
const Vec3 kJ{0, 1, 0};
const Vec3 kK{0, 0, 1};
} // namespace

TEST_CASE("rotation basics") {
    auto r = rotation_about(Point3{0, 1, 0}, kK, 90.0);
    auto p = r.apply(Point3{0, 2, 0});
    CHECK(norm(p - Point3{-1, 1, 0}) < 1e-12);
    CHECK_THROWS_AS(rotation_about(Point3{}, Vec3{0, 2, 0}, 10.0), Error);

    CHECK(longitude_of(kJ) == doctest::Approx(0.0));
    CHECK(longitude_of(Vec3{-1, 0, 0}) == doctest::Approx(90.0));
    CHECK(latitude_of(Vec3{0, 1, 1}) == doctest::Approx(45.0));
    CHECK(norm(direction(137.0) - rotation_about(Point3{}, kK, 137.0).linear(kJ)) < 1e-12);
}

TEST_CASE("apply_chain identity and label resolution") {
    auto cfg = models::build_config(models::Body::Sun);
    ParamSet zero{};
    Point3 p = apply_chain(cfg.chain(models::TiltMode::Full), zero, cfg.star);
    CHECK(norm(p - cfg.star) < 1e-12); // all angles zero -> unchanged
    CHECK_THROWS_AS(make_step(cfg.points, "P9", kK, fixed(1.0)), Error);
}

TEST_CASE("sun chain at the apsides") {
    auto cfg = models::build_config(models::Body::Sun);
    ParamSet p{};
    // apogee alignment: distance 67;7
    Point3 apo = apply_chain(cfg.chain(models::TiltMode::Full), p, cfg.star);
    CHECK(norm(apo) == doctest::Approx(sx("67;7")).epsilon(1e-12));
    // alpha_bar = 180: perigee, distance 52;53, longitude 180
    p[static_cast<size_t>(Param::AlphaBar)] = 180.0;
    Point3 peri = apply_chain(cfg.chain(models::TiltMode::Full), p, cfg.star);
    CHECK(norm(peri) == doctest::Approx(sx("52;53")).epsilon(1e-12));
    CHECK(longitude_of(peri) == doctest::Approx(180.0).epsilon(1e-12));
}

TEST_CASE("proposition 1") {
    CHECK(check_prop1(Point3{}, Point3{0, 2.5, 0}, Point3{0, 5, 0}, Point3{0, 7.5, 0}, 0.0) == 0.0);
    // offsets as in the Apollonius remark (solar eccentricity scale)
    CHECK(check_prop1(Point3{}, Point3{0, 2.5, 0}, Point3{0, 5, 0}, Point3{0, 7.5, 0}, 37.0) <
          1e-9);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> d(-30.0, 30.0);
    for (int k = 0; k < 1000; ++k) {
        double base = d(rng), off = d(rng), gap = d(rng);
        Point3 p1{0, base, 0}, p2{0, base + off, 0};
        Point3 p3{0, base + gap, 0}, p4{0, base + off + gap, 0};
        CHECK(check_prop1(p1, p2, p3, p4, 123.4) < 1e-9);
    }
    CHECK_THROWS_AS(check_prop1(Point3{}, Point3{0, 1, 0}, Point3{0, 2, 0}, Point3{0, 4, 0}, 10.0),
                    Error);
}

TEST_CASE("proposition 2 and the couple translation") {
    Point3 p1{0, 0, 0}, p2{0, 1, 0}, p3{0, 5, 0}, p4{0, 4, 0}, p5{0, 6, 0};
    CHECK(check_prop2(p1, p2, p3, p4, p5, 0.0).residual == 0.0);
    std::mt19937 rng(6);
    std::uniform_real_distribution<double> d(-30.0, 30.0);
    std::uniform_real_distribution<double> ang(0.0, 360.0);
    for (int k = 0; k < 1000; ++k) {
        double base = d(rng), off = d(rng), c = d(rng);
        Point3 q1{0, base, 0}, q2{0, base + off, 0};
        Point3 q3{0, c, 0}, q4{0, c - off, 0}, q5{0, c + off, 0};
        auto res = check_prop2(q1, q2, q3, q4, q5, ang(rng));
        CHECK(res.residual < 1e-9);
        CHECK(res.translation_cross < 1e-9);
    }
    CHECK_THROWS_AS(check_prop2(p1, p2, p3, Point3{0, 3.5, 0}, p5, 10.0), Error);
}

TEST_CASE("tusi couple displacement along the base line") {
    // Mercury's enclosing/protector pair: |arms| = 0;33, rotations 2k and -4k
    double arm = sx("0;33");
    Point3 p6{0, 60, 0}, p7{0, 60 - arm, 0}, star{0, 60 - 2 * arm, 0};
    for (double kappa : {10.0, 50.0, 90.0, 140.0}) {
        std::vector<RotationStep> steps = {
            RotationStep{p6, kK, fixed(2.0 * kappa)},
            RotationStep{p7, kK, fixed(-4.0 * kappa)},
        };
        Point3 out = apply_chain(steps, ParamSet{}, star);
        Vec3 disp = out - star;
        CHECK(std::fabs(disp.x) < 1e-12); // pure translation along j
        CHECK(disp.y ==
              doctest::Approx(2.0 * arm * (1.0 - std::cos(rad(2.0 * kappa)))).epsilon(1e-12));
    }
}

TEST_CASE("proposition 3: rotation sense of a couple does not matter") {
    CHECK(check_prop3(Point3{0, 1, 0}, Point3{0, 3, 0}, Point3{0, -1, 0}, 0.0) == 0.0);
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> d(-30.0, 30.0);
    std::uniform_real_distribution<double> ang(0.0, 360.0);
    for (int k = 0; k < 1000; ++k) {
        double base = d(rng), off = d(rng);
        CHECK(check_prop3(Point3{0, base, 0}, Point3{0, base + off, 0}, Point3{0, base - off, 0},
                          ang(rng)) < 1e-9);
    }
}

TEST_CASE("commutation carries the tilt axis") {
    ParamSet p{};
    p[static_cast<size_t>(Param::LambdaNode)] = 77.0;
    RotationStep front{Point3{}, kK, of(Param::LambdaNode, -1.0)};
    RotationStep tilt{Point3{}, kJ, fixed(5.0)};
    RotationStep carried = commute(front, tilt, p);
    Vec3 expected = rotation_about(Point3{}, kK, -77.0).linear(kJ);
    CHECK(norm(carried.axis - expected) < 1e-12);

    // front angle zero: T == tilt
    ParamSet zero{};
    RotationStep same = commute(front, tilt, zero);
    CHECK(norm(same.axis - kJ) < 1e-12);

    // probe residual of R∘S vs T∘R on arbitrary pairs
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    std::uniform_real_distribution<double> ang(0.0, 360.0);
    for (int k = 0; k < 200; ++k) {
        RotationStep f{Point3{0, d(rng), 0}, kK, fixed(ang(rng))};
        Vec3 axis = normalized(Vec3{d(rng), d(rng), d(rng) + 0.1});
        RotationStep s{Point3{d(rng), d(rng), 0}, axis, fixed(ang(rng))};
        RotationStep t = commute(f, s, ParamSet{});
        auto lhs = compose_chain({f, s}, ParamSet{});
        auto rhs = compose_chain({t, f}, ParamSet{});
        double res = 0.0;
        for (const Vec3& q : {Vec3{1, 2, 3}, Vec3{-7, 0.5, 2}, Vec3{0, -12, 1}})
            res = std::fmax(res, norm(lhs.apply(q) - rhs.apply(q)));
        CHECK(res < 1e-9);
    }
}

TEST_CASE("composition applies the rightmost step first") {
    std::mt19937 rng(10);
    std::uniform_real_distribution<double> d(-15.0, 15.0);
    std::uniform_real_distribution<double> ang(0.0, 360.0);
    for (int k = 0; k < 300; ++k) {
        std::vector<RotationStep> steps;
        for (int i = 0; i < 5; ++i) {
            Vec3 axis = normalized(Vec3{d(rng), d(rng), d(rng) + 0.2});
            steps.push_back(RotationStep{Point3{d(rng), d(rng), d(rng)}, axis, fixed(ang(rng))});
        }
        Point3 p{d(rng), d(rng), d(rng)};
        // oracle: walk the list from the right, one rotation at a time
        Point3 q = p;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it)
            q = rotation_about(it->center, it->axis, it->angle.eval(ParamSet{})).apply(q);
        CHECK(norm(apply_chain(steps, ParamSet{}, p) - q) < 1e-9);
    }
}

TEST_CASE("every chain application is an isometry") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ang(0.0, 360.0);
    for (auto body : {models::Body::Sun, models::Body::Moon, models::Body::Saturn,
                      models::Body::Venus, models::Body::Mercury}) {
        auto cfg = models::build_config(body);
        for (int k = 0; k < 50; ++k) {
            ParamSet p{};
            for (size_t i = 0; i < p.size(); ++i) p[i] = ang(rng);
            CHECK(isometry_residual(cfg.chain(models::TiltMode::Full), p) < 1e-9);
        }
    }
}
