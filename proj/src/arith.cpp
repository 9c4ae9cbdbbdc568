#include "jumploci/arith.hpp"

namespace jumploci {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 29; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("division by zero in F_p");
  return fp_pow(a, p - 2, p);
}

std::uint64_t fp_from_int(const Int& z, std::uint64_t p) {
  Int r = z % Int(static_cast<unsigned long>(p));
  if (r < 0) r += Int(static_cast<unsigned long>(p));
  return r.get_ui();
}

std::uint64_t fp_from_rat(const Rat& q, std::uint64_t p) {
  std::uint64_t num = fp_from_int(q.get_num(), p);
  std::uint64_t den = fp_from_int(q.get_den(), p);
  return fp_mul(num, fp_inv(den, p), p);
}

std::string Coeff::name() const {
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Z: return "Z";
    case Kind::Fp: return "F" + std::to_string(p);
  }
  return "?";
}

}  // namespace jumploci
