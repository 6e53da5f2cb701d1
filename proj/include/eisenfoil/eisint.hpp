#ifndef EISENFOIL_EISINT_HPP
#define EISENFOIL_EISINT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace eisenfoil {

using BigInt = boost::multiprecision::cpp_int;

/// Element a + b*w of Z[w], where w is the primitive cube root of unity
/// (w^2 = -1 - w).  Templated on the integer type so the enumeration
/// kernels can run on machine words while the public API stays
/// arbitrary-precision.
template <typename Int>
struct EisIntT {
    Int a{};
    Int b{};

    EisIntT() = default;
    EisIntT(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    static EisIntT zero() { return {Int(0), Int(0)}; }
    static EisIntT one() { return {Int(1), Int(0)}; }
    static EisIntT tau() { return {Int(0), Int(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }

    friend EisIntT operator+(const EisIntT& x, const EisIntT& y) {
        return {Int(x.a + y.a), Int(x.b + y.b)};
    }
    friend EisIntT operator-(const EisIntT& x, const EisIntT& y) {
        return {Int(x.a - y.a), Int(x.b - y.b)};
    }
    EisIntT operator-() const { return {Int(-a), Int(-b)}; }

    // (a+bw)(c+dw) = (ac - bd) + (ad + bc - bd) w, using w^2 = -1-w.
    friend EisIntT operator*(const EisIntT& x, const EisIntT& y) {
        Int bd = x.b * y.b;
        return {Int(x.a * y.a - bd), Int(x.a * y.b + x.b * y.a - bd)};
    }
    friend bool operator==(const EisIntT& x, const EisIntT& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const EisIntT& x, const EisIntT& y) { return !(x == y); }

    /// Complex conjugate: conj(a+bw) = (a-b) - b w.
    EisIntT conj() const { return {Int(a - b), Int(-b)}; }
};

/// N(a+bw) = a^2 + b^2 - ab.  Multiplicative, zero only at zero.
template <typename Int>
Int norm(const EisIntT<Int>& x) {
    return Int(x.a * x.a + x.b * x.b - x.a * x.b);
}

/// The six units of Z[w]: 1, -1, w, -w, w^2, -w^2.
template <typename Int>
std::array<EisIntT<Int>, 6> eis_units() {
    using E = EisIntT<Int>;
    return {E{Int(1), Int(0)},   E{Int(-1), Int(0)}, E{Int(0), Int(1)},
            E{Int(0), Int(-1)},  E{Int(-1), Int(-1)}, E{Int(1), Int(1)}};
}

template <typename Int>
bool is_unit(const EisIntT<Int>& x) {
    return norm(x) == 1;
}

/// Sector predicate for the canonical associate: zero, or the argument
/// lies in [0, 60) degrees, which in (a,b) coordinates is 0 <= b < a.
template <typename Int>
bool is_canonical(const EisIntT<Int>& x) {
    return x.is_zero() || (x.b >= 0 && x.b < x.a);
}

/// Unique associate u*x landing in the canonical sector, together with
/// the unit u that was applied.
template <typename Int>
std::pair<EisIntT<Int>, EisIntT<Int>> canonical_associate(const EisIntT<Int>& x) {
    if (x.is_zero()) return {x, EisIntT<Int>::one()};
    for (const auto& u : eis_units<Int>()) {
        EisIntT<Int> cand = u * x;
        if (is_canonical(cand)) return {cand, u};
    }
    throw std::logic_error("eisint: no canonical associate (unreachable)");
}

namespace detail {
// floor of n/d for d > 0
template <typename Int>
Int floor_div(const Int& n, const Int& d) {
    Int q = n / d;
    if (q * d != n && ((n < 0) != (d < 0))) q -= 1;
    return q;
}
// nearest integer to n/d (d > 0), ties rounded toward -infinity
template <typename Int>
Int round_nearest_half_down(const Int& n, const Int& d) {
    // ceil((2n - d) / (2d)) = -floor((d - 2n) / (2d))
    return Int(-floor_div(Int(d - 2 * n), Int(2 * d)));
}
}  // namespace detail

/// Euclidean division: x = q*y + r with N(r) < N(y).  q is x/y in Q(w)
/// with both coordinates rounded to the nearest integer (ties toward
/// -infinity).  Per-coordinate error <= 1/2 gives N(r) <= 3/4 N(y).
template <typename Int>
std::pair<EisIntT<Int>, EisIntT<Int>> divmod(const EisIntT<Int>& x, const EisIntT<Int>& y) {
    if (y.is_zero()) throw std::domain_error("eisint: division by zero");
    Int n = norm(y);
    EisIntT<Int> num = x * y.conj();  // x/y = num / n
    EisIntT<Int> q{detail::round_nearest_half_down(num.a, n),
                   detail::round_nearest_half_down(num.b, n)};
    EisIntT<Int> r = x - q * y;
    return {q, r};
}

/// Euclidean gcd, returned as a canonical associate.
template <typename Int>
EisIntT<Int> gcd(EisIntT<Int> x, EisIntT<Int> y) {
    if (x.is_zero() && y.is_zero())
        throw std::domain_error("eisint: gcd(0, 0) undefined");
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    return canonical_associate(x).first;
}

template <typename Int>
bool coprime(const EisIntT<Int>& x, const EisIntT<Int>& y) {
    return is_unit(gcd(x, y));
}

/// Exact quotient; throws if y does not divide x.
template <typename Int>
EisIntT<Int> divide_exact(const EisIntT<Int>& x, const EisIntT<Int>& y) {
    auto [q, r] = divmod(x, y);
    if (!r.is_zero()) throw std::domain_error("eisint: inexact division");
    return q;
}

using EisInt = EisIntT<BigInt>;
using EisInt64 = EisIntT<std::int64_t>;

inline EisInt to_big(const EisInt64& x) { return {BigInt(x.a), BigInt(x.b)}; }

template <typename Int>
std::string to_string(const EisIntT<Int>& x) {
    auto istr = [](const Int& v) {
        if constexpr (std::is_same_v<Int, BigInt>) return v.str();
        else return std::to_string(v);
    };
    if (x.b == 0) return istr(x.a);
    std::string s;
    if (x.a != 0) s += istr(x.a);
    if (x.b == 1) s += s.empty() ? "w" : "+w";
    else if (x.b == -1) s += "-w";
    else {
        if (x.b > 0 && !s.empty()) s += "+";
        s += istr(x.b) + "*w";
    }
    return s;
}

}  // namespace eisenfoil

#endif
