#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace rsd {

bool is_prime(std::uint64_t n);

// Trial-division factorization, ascending primes with multiplicities.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

}  // namespace rsd
