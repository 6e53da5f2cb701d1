#include "eisenfoil/modp.hpp"

namespace eisenfoil {

namespace {
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for n < 3.2e18
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}
}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 32)) throw std::invalid_argument("modp: p must fit in 32 bits");
    if (p % 3 != 1) throw std::invalid_argument("modp: need p == 1 (mod 3)");
    // omega = g^((p-1)/3) for a generator g; accept any g whose power
    // is a nontrivial cube root of unity.
    omega_ = 0;
    for (std::uint64_t g = 2; g < p; ++g) {
        std::uint64_t w = pow(g, (p - 1) / 3);
        if (w != 1) {
            omega_ = w;
            break;
        }
    }
    if (omega_ == 0 || add(mul(omega_, omega_), add(omega_, 1)) != 0)
        throw std::logic_error("modp: failed to find cube root of unity");
}

std::uint64_t PrimeField::pow(std::uint64_t x, std::uint64_t e) const {
    std::uint64_t r = 1;
    x %= p_;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
    if (x % p_ == 0) throw std::domain_error("modp: inverse of zero");
    return pow(x, p_ - 2);
}

std::uint64_t PrimeField::reduce(const BigInt& v) const {
    BigInt r = v % BigInt(p_);
    if (r < 0) r += BigInt(p_);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::reduce(const EisRat& v) const {
    std::uint64_t den = reduce(v.den());
    if (den == 0) throw BadPrime("modp: prime divides denominator");
    return mul(reduce(v.num()), inv(den));
}

std::vector<std::uint64_t> certifier_primes(int count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = (1ull << 31) + 1; static_cast<int>(out.size()) < count; n += 2) {
        if (n % 3 == 1 && is_prime_u64(n)) out.push_back(n);
    }
    return out;
}

}  // namespace eisenfoil
