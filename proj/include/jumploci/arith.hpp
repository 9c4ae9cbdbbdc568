#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jumploci {

using Int = mpz_class;
using Rat = mpq_class;

// Coefficient selector shared by homology and rank routines.
// Fp requires p prime, p < 2^31 so products fit in uint64.
struct Coeff {
  enum class Kind { Q, Fp, Z } kind = Kind::Q;
  std::uint64_t p = 0;

  static Coeff Q() { return {Kind::Q, 0}; }
  static Coeff Z() { return {Kind::Z, 0}; }
  static Coeff Fp(std::uint64_t p);

  bool is_field() const { return kind != Kind::Z; }
  bool operator==(const Coeff&) const = default;
  std::string name() const;
};

bool is_prime_u64(std::uint64_t n);

inline Coeff Coeff::Fp(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 31) || !is_prime_u64(p))
    throw std::invalid_argument("Fp modulus must be a prime < 2^31");
  return {Kind::Fp, p};
}

inline std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);

// Reduction of an exact rational into F_p; throws if the denominator
// vanishes mod p.
std::uint64_t fp_from_rat(const Rat& q, std::uint64_t p);
std::uint64_t fp_from_int(const Int& z, std::uint64_t p);

}  // namespace jumploci
