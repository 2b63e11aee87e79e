#include "cosmo.hpp"

#include "sexagesimal.hpp"

namespace shatir::cosmo {

using models::Body;

Rational rational_from_sexagesimal(const std::string& text) {
    auto coded = shatir::sexagesimal::parse(text);
    Rational r(coded.whole + 30 * coded.zodiac_signs);
    Rational scale(1);
    for (int d : coded.fracs) {
        scale = scale * Rational(60);
        r = r + Rational(d) / scale;
    }
    return coded.negative ? -r : r;
}

std::string rational_to_sexagesimal(const Rational& r, int places) {
    Rational x = r;
    std::string sign;
    if (x < Rational(0)) {
        sign = "-";
        x = -x;
    }
    std::int64_t whole = x.num() / x.den();
    Rational frac = x - Rational(whole);
    std::string out = sign + std::to_string(whole);
    for (int k = 0; k < places; ++k) {
        frac = frac * Rational(60);
        std::int64_t d = frac.num() / frac.den();
        frac = frac - Rational(d);
        out += (k == 0 ? ';' : ',');
        out += std::to_string(d);
    }
    return out;
}

namespace {

Rational sx(const std::string& text) { return rational_from_sexagesimal(text); }

} // namespace

Rational moon_apparent_radius_sine() { return sx("0;0,15,51,54"); }
Rational shadow_coefficient() { return sx("2;43"); }
Rational shadow_radius_as_used() { return sx("0;45,30,19,41"); }
Rational sun_diameter_mean() { return sx("0;32,32"); }
Rational moon_diameter_at_max_dist() { return sx("0;30,18"); }

std::vector<SolidRadius> solid_radii(Body body, const Rational& r_star) {
    std::vector<SolidRadius> rows;
    auto add = [&](const char* label, const Rational& base, int coeff) {
        Rational v = base;
        if (coeff > 0) v = v + r_star;
        if (coeff < 0) v = v - r_star;
        rows.push_back({label, v, coeff});
    };
    switch (body) {
        case Body::Sun:
            add("rotator", sx("2;30"), +1);
            add("deferent", sx("7;7"), +1);
            add("parecliptic outer", sx("67;7"), +1);
            add("parecliptic inner", sx("52;53"), -1);
            add("total orb thickness", sx("0;43"), 0);
            break;
        case Body::Moon:
            add("rotator", sx("1;25"), +1);
            add("epicycle", sx("8;0"), +1);
            add("inclined outer", sx("68;0"), +1);
            add("inclined inner", sx("52;0"), -1);
            add("parecliptic outer", Rational(69), 0);
            break;
        case Body::Saturn:
            add("epicycle", sx("6;30"), +1);
            add("rotator", sx("8;12,30"), +1);
            add("deferent", sx("13;20"), +1);
            add("inclined outer", sx("73;20"), +1);
            add("inclined inner", sx("46;40"), -1);
            add("parecliptic thickness", sx("0;40"), 0);
            break;
        case Body::Jupiter:
            add("epicycle", sx("11;30"), +1);
            add("rotator", sx("12;52,30"), +1);
            add("deferent", Rational(17), +1);
            add("inclined outer", Rational(77), +1);
            add("inclined inner", Rational(43), -1);
            add("parecliptic thickness", Rational(1), 0);
            break;
        case Body::Mars:
            add("epicycle", sx("39;30"), +1);
            add("rotator", sx("42;30"), +1);
            add("deferent", sx("51;30"), +1);
            add("inclined outer", sx("111;30"), +1);
            add("inclined inner", sx("8;30"), -1);
            add("parecliptic thickness", sx("0;30"), 0);
            break;
        case Body::Venus:
            add("epicycle", sx("43;33"), +1);
            add("rotator", sx("43;59"), +1);
            add("deferent", sx("45;40"), +1);
            add("inclined outer", sx("105;40"), +1);
            add("inclined inner", sx("14;20"), -1);
            add("parecliptic thickness", sx("0;20"), 0);
            break;
        case Body::Mercury:
            add("protector", sx("0;33"), +1);
            add("enclosing", sx("1;6"), +1);
            add("epicycle", sx("23;52"), +1);
            add("rotator", sx("24;47"), +1);
            add("deferent", sx("28;52"), +1);
            add("inclined outer", sx("88;52"), +1);
            add("inclined inner", sx("31;8"), -1);
            add("parecliptic thickness", sx("0;8"), 0);
            break;
    }
    return rows;
}

NestingLedger nesting_chain(const Rational& moon_outer) {
    NestingLedger ledger;
    auto push = [&](Body body, const Rational& inner, const Rational& outer, std::int64_t rn,
                    std::int64_t ro) {
        LedgerRow row;
        row.body = body;
        row.inner = inner;
        row.outer = outer;
        row.ratio_inner_num = rn;
        row.ratio_outer_num = ro;
        ledger.rows.push_back(row);
    };

    // Moon: 58 is the restored parecliptic radius in Earth radii; quadrature
    // perigee less the lunar radius gives the floor near 50.
    Rational moon_inner = Rational(58) * sx("52;0") / Rational(60) - sx("0;16,39,30");
    push(Body::Moon, moon_inner, moon_outer, 0, 0);

    // Mercury ratio 31 : 89;30 per the Conclusion (chapter 21 prints 31 : 89).
    Rational mercury_outer = moon_outer * sx("89;30") / Rational(31);
    push(Body::Mercury, moon_outer, mercury_outer, 31, 179); // 89;30 = 179/2 halves

    Rational venus_outer = mercury_outer * Rational(106) / Rational(14);
    push(Body::Venus, mercury_outer, venus_outer, 14, 106);

    // The Sun anchors the chain by its own absolute distances: greatest orb
    // distance 1883;46 plus a 6;14 parecliptic thickness reaches 1890.
    Rational sun_outer = sx("1883;46") + sx("6;14");
    push(Body::Sun, venus_outer, sun_outer, 0, 0);

    Rational mars_outer = sun_outer * Rational(112) / Rational(8);
    push(Body::Mars, sun_outer, mars_outer, 8, 112);

    Rational jupiter_outer = mars_outer * Rational(78) / Rational(42);
    push(Body::Jupiter, mars_outer, jupiter_outer, 42, 78);

    Rational saturn_outer = jupiter_outer * Rational(74) / Rational(46);
    push(Body::Saturn, jupiter_outer, saturn_outer, 46, 74);

    ledger.fixed_stars_floor = saturn_outer;
    return ledger;
}

FirTreeResult sun_distance_fir_tree(const Rational& u, const Rational& C,
                                    const Rational& moon_dist,
                                    const Rational& equal_diameter_ratio) {
    Rational shadow = moon_dist * u * C;
    return sun_distance_fir_tree_shadow(u, shadow, moon_dist, equal_diameter_ratio);
}

FirTreeResult sun_distance_fir_tree_shadow(const Rational& u, const Rational& shadow_radius,
                                           const Rational& moon_dist,
                                           const Rational& equal_diameter_ratio) {
    Rational moon_radius = moon_dist * u;
    Rational denom = moon_radius + shadow_radius - Rational(1);
    if (!(Rational(0) < denom))
        fail(Err::DegenerateGeometry, "shadow and lunar radii must exceed one Earth radius");
    FirTreeResult out;
    out.distance_at_equal_diameter = moon_dist / denom;
    out.mean_distance = out.distance_at_equal_diameter / equal_diameter_ratio;
    out.sun_radius = out.distance_at_equal_diameter * u;
    return out;
}

Rational shadow_apex(const Rational& moon_dist, const Rational& shadow_radius) {
    Rational denom = Rational(1) - shadow_radius;
    if (!(Rational(0) < denom)) fail(Err::DegenerateGeometry, "shadow radius must be below 1");
    return moon_dist / denom;
}

Rational volume_ratio(const Rational& diameter_ratio) {
    return diameter_ratio * diameter_ratio * diameter_ratio;
}

NinthOrbSpeed ninth_orb_speed() {
    NinthOrbSpeed s;
    Rational pi(22, 7);
    s.circumference = Rational(2) * Rational(79088) * pi;
    s.degree_length = s.circumference / Rational(360);
    s.minute_length = s.degree_length / Rational(60);
    return s;
}

std::vector<Rational> star_diameters() {
    Rational base = Rational(79051) / (Rational(108) + Rational(1, 2) + Rational(1, 5));
    std::vector<Rational> out;
    for (int div : {20, 22, 24, 26, 28, 30}) out.push_back(base / Rational(div));
    return out;
}

const std::vector<Erratum>& errata() {
    static const std::vector<Erratum> list = {
        {"sun-equal-diameter-ratio", "0;62,30", "0;64,25,20",
         "0;32,32 divided by 0;30,18 was misdivided; the low value feeds the printed distances"},
        {"shadow-radius", "0;45,30,19,41", "0;45,15,17,41",
         "the shadow radius used downstream differs from 2;43 times the lunar radius"},
        {"sun-mean-distance", "1677;7,12", "1840",
         "corrected for the two slips above; the printed equal-diameter distance was 1747"},
        {"sun-radius", "7;42,53", "7;41,56", "slip of calculation or copy in the same triangle"},
        {"saturn-min-distance", "49968", "53502",
         "the least distance attained by Saturn per chapter 12 is 50;5 of its belt radius"},
        {"mercury-ratio", "31:89", "31:89;30",
         "chapter 21 prints 31:89; the Conclusion's 31:89;30 drives the nesting chain"},
        {"saturn-inclined-thickness", "26;30", "26;40",
         "garbled in the manuscript tradition; the recomputed ledger is used instead"},
    };
    return list;
}

} // namespace shatir::cosmo
