#include "rsdensity/text_format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace rsd {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  (void)ec;
  return std::string(buf.data(), end);
}

std::string csv_complex(std::complex<double> z) {
  return "\"" + format_double(z.real()) + "," + format_double(z.imag()) + "\"";
}

}  // namespace rsd
