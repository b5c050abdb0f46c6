#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace pgt {

// Dense element code of a finite group; 0 is always the identity.
using Elt = std::uint16_t;

enum class ErrKind {
  InvalidUnit,
  OrderCapExceeded,
  MalformedSpec,
  NotNilpotent,
  NotAPGroup,
  NotNormal,
  CenterNotCyclic,
  AbelianBase,
  ClassTooHigh,
  SearchExhausted,
  NotSurjective,
  WorkCapExceeded,
  EquivarianceFailure,
  ConfigError,
  Internal,
};

const char* err_kind_name(ErrKind k);

struct Error : std::runtime_error {
  ErrKind kind;
  Error(ErrKind k, const std::string& msg)
      : std::runtime_error(std::string(err_kind_name(k)) + ": " + msg), kind(k) {}
};

struct Caps {
  std::uint32_t order_cap = 4096;   // largest group order we materialize
  std::uint32_t enum_cap = 2048;    // largest order for normal-closure enumeration
  std::uint64_t work_cap = 20'000'000;  // bound on (|G|-1)^(q+1) in bar complexes
  std::uint64_t seed = 0x5eed;      // sample seed for non-exhaustive checks
};

using Rng = std::mt19937_64;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p such that n == p^k (k >= 1), or 0 if n is not a prime power (n=1 gives 0).
inline std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? p : 0;
  }
  return n;  // n itself prime
}

inline std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace pgt
