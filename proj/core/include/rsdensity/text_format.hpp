#pragma once

#include <complex>
#include <string>

namespace rsd {

// Shortest decimal that round-trips to the same double (std::to_chars).
std::string format_double(double x);

// CSV cell for a complex number: the quoted pair "re,im".
std::string csv_complex(std::complex<double> z);

}  // namespace rsd
