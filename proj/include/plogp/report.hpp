#ifndef PLOGP_REPORT_HPP
#define PLOGP_REPORT_HPP

#include <json.hpp>

#include <complex>
#include <string>

namespace plogp::report {

// Insertion-ordered JSON and reals-as-strings keep the output byte-identical
// across runs and locales.
using json = nlohmann::ordered_json;

// decimal string with 17 significant digits (round-trips any double)
std::string fmt17(double x);

// full-precision pair for a complex value
json cplx(std::complex<double> z);

std::string iso_timestamp_utc();

} // namespace plogp::report

#endif
