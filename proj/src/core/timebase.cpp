#include "timebase.hpp"

#include <cmath>

#include "models.hpp"
#include "util.hpp"

namespace shatir::timebase {

MeanParameter MeanParameter::per_day(std::string name, double v0, double rate_per_day) {
    return MeanParameter{std::move(name), v0, rate_per_day};
}

MeanParameter MeanParameter::per_year(std::string name, double v0, double rate_per_year) {
    return MeanParameter{std::move(name), v0, rate_per_year / 365.0};
}

double mean(const MeanParameter& p, double t_days) {
    return norm360(p.value_at_epoch + p.rate * t_days);
}

EpochSpec epoch() { return EpochSpec{}; }

double t_from_yazdegerd(int year, int month, int day, int epagomenal) {
    if (month < 1 || month > 12) fail(Err::FieldOutOfRange, "month must be 1..12");
    if (day < 1 || day > 30) fail(Err::FieldOutOfRange, "day must be 1..30");
    if (epagomenal < 0 || epagomenal > 5) fail(Err::FieldOutOfRange, "epagomenal must be 0..5");
    if (epagomenal > 0 && (month != 12 || day != 30))
        fail(Err::FieldOutOfRange, "epagomenal days follow 12/30");
    const EpochSpec e;
    double years = static_cast<double>(year - e.yazdegerd_year);
    return years * 365.0 + (month - 1) * 30.0 + (day - 1) + epagomenal;
}

double right_ascension(double lambda_deg, double obliquity_deg) {
    return norm360(lambda_deg + models::displacement_en(lambda_deg, obliquity_deg));
}

double equation_of_time(double t_days, double obliquity_deg) {
    static const models::ModelConfig sun = models::build_config(models::Body::Sun);
    double lam_true = models::position_planar(sun, t_days).longitude;
    double alpha = right_ascension(lam_true, obliquity_deg);
    double lam_mean = mean(sun.mean_longitude, t_days);
    return wrap180(alpha - lam_mean + kMeanSunAtVernalEquinoxDeg) / 15.0;
}

} // namespace shatir::timebase
