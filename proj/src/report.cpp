#include "plogp/report.hpp"

#include <cstdio>
#include <ctime>

namespace plogp::report {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

json cplx(std::complex<double> z) {
    return json{{"re", fmt17(z.real())}, {"im", fmt17(z.imag())}};
}

std::string iso_timestamp_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace plogp::report
