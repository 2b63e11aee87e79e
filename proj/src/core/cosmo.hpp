#pragma once

#include <string>
#include <vector>

#include "models.hpp"
#include "rational.hpp"

namespace shatir::cosmo {

// One named radius of a body's solid-orb system, in model units (belt = 60).
struct SolidRadius {
    std::string label;
    Rational value;       // with the star radius already added or subtracted
    int star_coefficient; // +1, -1 or 0: how r_star enters the sum
};

std::vector<SolidRadius> solid_radii(models::Body body, const Rational& r_star);

struct LedgerRow {
    models::Body body;
    Rational inner; // Earth radii
    Rational outer; // Earth radii
    // Declared model-unit ratio driving the chain (0/0 when the body anchors
    // the chain by absolute distances instead).
    std::int64_t ratio_inner_num = 0, ratio_outer_num = 0;
};

struct NestingLedger {
    std::vector<LedgerRow> rows; // Moon ... Saturn, then the fixed stars' floor
    Rational fixed_stars_floor;  // == Saturn outer
};

NestingLedger nesting_chain(const Rational& moon_outer = Rational(67));

struct FirTreeResult {
    Rational distance_at_equal_diameter; // Earth radii, both luminaries 0;30,18 wide
    Rational mean_distance;              // Earth radii
    Rational sun_radius;                 // Earth radii, from the same triangle
};

// u: sine of the Moon's apparent radius at greatest distance; C: shadow
// coefficient; the result is rescaled by the ratio of the Sun's mean apparent
// diameter to the equal-diameter one.
FirTreeResult sun_distance_fir_tree(const Rational& u, const Rational& C,
                                    const Rational& moon_dist,
                                    const Rational& equal_diameter_ratio);

// Same triangle but with the shadow radius supplied directly (the treatise's own
// figure used a slightly different value than C times the Moon's radius).
FirTreeResult sun_distance_fir_tree_shadow(const Rational& u, const Rational& shadow_radius,
                                           const Rational& moon_dist,
                                           const Rational& equal_diameter_ratio);

Rational shadow_apex(const Rational& moon_dist, const Rational& shadow_radius);

Rational volume_ratio(const Rational& diameter_ratio);

struct NinthOrbSpeed {
    Rational circumference; // Earth radii
    Rational degree_length; // Earth radii moved per degree of the daily motion
    Rational minute_length;
};

NinthOrbSpeed ninth_orb_speed();

// Fixed-star diameters per magnitude (1..6), Earth-diameter units.
std::vector<Rational> star_diameters();

// Catalogue of the treatise's arithmetic slips: operations above compute the
// corrected values; this records what the manuscripts print.
struct Erratum {
    std::string id;
    std::string printed;
    std::string corrected;
    std::string note;
};

const std::vector<Erratum>& errata();

// Constants of the Conclusion, exact.
Rational moon_apparent_radius_sine();   // 0;0,15,51,54
Rational shadow_coefficient();          // 2;43
Rational shadow_radius_as_used();       // 0;45,30,19,41
Rational sun_diameter_mean();           // 0;32,32
Rational moon_diameter_at_max_dist();   // 0;30,18

} // namespace shatir::cosmo
