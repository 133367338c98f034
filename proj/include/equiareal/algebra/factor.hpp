#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "equiareal/algebra/rational.hpp"
#include "equiareal/algebra/upoly.hpp"

namespace equiareal::algebra {

struct FactorOptions {
  unsigned long trial_bound = 1'000'000;
  unsigned miller_rabin_rounds = 64;
  /// Pollard-Brent iterations per polynomial x^2 + c before switching c.
  std::uint64_t rho_iterations = 4'000'000;
  unsigned rho_attempts = 8;
  std::uint64_t seed = 0x5eed'0c71cULL;
};

/// sign * prod(prime^exponent), primes ascending.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;

  Integer product() const;
  std::vector<Integer> primes() const;
};

/// Miller-Rabin with `rounds` bases drawn from a seeded generator
/// (error probability below 4^-rounds for composite n).
bool is_probable_prime(const Integer& n, unsigned rounds = 64, std::uint64_t seed = 0x5eed'0c71cULL);

/// Trial division up to options.trial_bound, then Pollard rho with Brent
/// cycle detection. Throws FactorizationError when a composite cofactor
/// survives the configured effort; n must be nonzero.
Factorization factor_integer(const Integer& n, const FactorOptions& options = {});

/// Factors n using the primes of `hints` first (each hint is factored on its
/// own), then falls back to factor_integer on whatever cofactor remains.
Factorization factor_with_hints(const Integer& n, std::span<const Integer> hints,
                                const FactorOptions& options = {});

/// All positive divisors, ascending.
std::vector<Integer> divisors(const Factorization& f);

/// Content (carrying the sign) times irreducible primitive factors with
/// positive leading coefficients; repeated factors are listed repeatedly.
struct PolyFactorization {
  Integer content;
  std::vector<UPoly> factors;

  UPoly product() const;
};

/// Factorization over Q of an integer-coefficient polynomial of degree <= 4.
/// Linear factors come from rational-root enumeration; a root-free quartic is
/// tested exhaustively for a split into two integer quadratics.
PolyFactorization factor_quartic(const UPoly& f, const FactorOptions& options = {});

}  // namespace equiareal::algebra
