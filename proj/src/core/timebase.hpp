#pragma once

#include <string>

namespace shatir::timebase {

// Uniform angular parameter, affine in the model time t (mean solar days
// since the epoch). Rates quoted per Persian year are divided by exactly 365.
struct MeanParameter {
    std::string name;
    double value_at_epoch = 0.0; // degrees
    double rate = 0.0;           // degrees per day

    static MeanParameter per_day(std::string name, double v0, double rate_per_day);
    static MeanParameter per_year(std::string name, double v0, double rate_per_year);
};

// Affine evaluation reduced mod 360 into [0, 360).
double mean(const MeanParameter& p, double t_days);

struct EpochSpec {
    const char* label = "noon, 24 December 1331, Damascus (09:43 GMT)";
    int julian_year = 1331, julian_month = 12, julian_day = 24;
    int gmt_hour = 9, gmt_minute = 43;
    int yazdegerd_year = 701, yazdegerd_month = 1, yazdegerd_day = 1;
};

EpochSpec epoch();

// Whole days since the epoch for a Persian (Yazdegerd-era) date.
// Months are 30 days; the 5 epagomenal days close the year (month 12, day 30).
double t_from_yazdegerd(int year, int month, int day, int epagomenal = 0);

inline constexpr double kObliquityDefaultDeg = 23.0 + 31.0 / 60.0; // 23;31
inline constexpr double kMeanSunAtVernalEquinoxDeg = -(2.0 + 1.0 / 60.0 + 7.0 / 3600.0);

// Right ascension of an ecliptic longitude (latitude zero), same quadrant
// branch scheme as the displacement equation.
double right_ascension(double lambda_deg, double obliquity_deg = kObliquityDefaultDeg);

// Equation of time in hours: E = (-mean_sun - 2;1,7 + alpha(true sun)) / 15.
double equation_of_time(double t_days, double obliquity_deg = kObliquityDefaultDeg);

} // namespace shatir::timebase
