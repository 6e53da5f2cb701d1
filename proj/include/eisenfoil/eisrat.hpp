#ifndef EISENFOIL_EISRAT_HPP
#define EISENFOIL_EISRAT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "eisenfoil/eisint.hpp"

namespace eisenfoil {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t pos_)
        : std::runtime_error(what + " (at byte " + std::to_string(pos_) + ")"), pos(pos_) {}
};

/// Element of Q(w) stored as a reduced fraction num/den of Eisenstein
/// integers.  Invariants: den != 0, gcd(num, den) is a unit, den is the
/// canonical associate of its class (the absorbed unit lives in num).
class EisRat {
  public:
    EisRat() : num_(EisInt::zero()), den_(EisInt::one()) {}
    EisRat(EisInt num, EisInt den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit EisRat(EisInt n) : num_(std::move(n)), den_(EisInt::one()) {}
    static EisRat integer(long v) { return EisRat(EisInt{BigInt(v), BigInt(0)}); }
    static EisRat tau() { return EisRat(EisInt::tau()); }

    const EisInt& num() const { return num_; }
    const EisInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend EisRat operator+(const EisRat& x, const EisRat& y) {
        return EisRat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend EisRat operator-(const EisRat& x, const EisRat& y) {
        return EisRat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend EisRat operator*(const EisRat& x, const EisRat& y) {
        return EisRat(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend EisRat operator/(const EisRat& x, const EisRat& y) {
        if (y.is_zero()) throw std::domain_error("eisrat: division by zero");
        return EisRat(x.num_ * y.den_, x.den_ * y.num_);
    }
    EisRat operator-() const {
        EisRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend bool operator==(const EisRat& x, const EisRat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const EisRat& x, const EisRat& y) { return !(x == y); }

    /// Coordinates over Q: returns (p1, q1, p2, q2) with value p1/q1 + (p2/q2) w,
    /// both fractions reduced with positive denominator.
    struct QQ {
        BigInt rp, rq, wp, wq;
    };
    QQ rational_coords() const;

  private:
    void reduce();
    EisInt num_, den_;
};

/// Point of Q(w) union {infinity}; pencil parameters live here.
class ExtEisRat {
  public:
    ExtEisRat() : value_(EisRat()) {}
    ExtEisRat(EisRat v) : value_(std::move(v)) {}
    static ExtEisRat infinity() { return ExtEisRat(nullptr); }

    bool is_infinity() const { return !value_.has_value(); }
    const EisRat& value() const {
        if (!value_) throw std::domain_error("eisrat: value of infinity");
        return *value_;
    }
    friend bool operator==(const ExtEisRat& x, const ExtEisRat& y) {
        if (x.is_infinity() || y.is_infinity()) return x.is_infinity() == y.is_infinity();
        return *x.value_ == *y.value_;
    }
    friend bool operator!=(const ExtEisRat& x, const ExtEisRat& y) { return !(x == y); }

  private:
    explicit ExtEisRat(std::nullptr_t) {}
    std::optional<EisRat> value_;
};

/// Parses the Q(w) literal grammar:
///   element := "inf" | signed_term (("+"|"-") term)*
///   term    := rational ("*"? "w")? | "w"
///   rational:= integer ("/" nonzero-unsigned-integer)?
/// Whitespace is ignored.  Throws ParseError with a byte position.
ExtEisRat parse_eisrat(const std::string& text);

/// Canonical text form: reduced "p/q" and "p/q*w" parts, zero parts
/// omitted, "0" for zero, "inf" for infinity.  parse(format(x)) == x.
std::string format_eisrat(const ExtEisRat& x);
std::string format_eisrat(const EisRat& x);

}  // namespace eisenfoil

#endif
