#ifndef EISENFOIL_MODP_HPP
#define EISENFOIL_MODP_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eisenfoil/eisrat.hpp"

namespace eisenfoil {

/// Prime field F_p for p < 2^32, with a distinguished cube root of
/// unity so Z[w] reduces via w -> omega.  Requires p == 1 (mod 3).
class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t omega() const { return omega_; }

    std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t s = x + y;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t x, std::uint64_t y) const {
        return x >= y ? x - y : x + p_ - y;
    }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const { return x * y % p_; }
    std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t x) const;
    std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : p_ - x; }

    /// Reduction of a big integer into [0, p).
    std::uint64_t reduce(const BigInt& v) const;

    /// Reduction of an Eisenstein integer: a + b*omega mod p.
    std::uint64_t reduce(const EisInt& v) const {
        return add(reduce(v.a), mul(reduce(v.b), omega_));
    }

    /// Reduction of a Q(w) element; throws BadPrime when p divides the
    /// denominator norm (caller is expected to pick another prime).
    struct BadPrime : std::runtime_error {
        using std::runtime_error::runtime_error;
    };
    std::uint64_t reduce(const EisRat& v) const;

  private:
    std::uint64_t p_;
    std::uint64_t omega_;
};

/// Primes == 1 (mod 3) just above 2^31, for the modular certifier.
std::vector<std::uint64_t> certifier_primes(int count);

}  // namespace eisenfoil

#endif
