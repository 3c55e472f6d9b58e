#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclemod {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& z) { return z.str(); }

/// Least non-negative residue of z modulo m (m > 0).
inline std::uint64_t mod_u64(const Integer& z, std::uint64_t m) {
  Integer r = z % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t mod_u64(std::int64_t z, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = z % mm;
  if (r < 0) r += mm;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Inverse of a modulo m; requires gcd(a, m) == 1. Returns 0 when m == 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace cyclemod
