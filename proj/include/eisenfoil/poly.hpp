#ifndef EISENFOIL_POLY_HPP
#define EISENFOIL_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "eisenfoil/eisrat.hpp"

namespace eisenfoil {

/// Sparse bivariate polynomial over Q(w).  Keys are (x-exp, y-exp);
/// zero coefficients are never stored.
class Poly {
  public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, EisRat>;

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(EisRat c) { return term(0, 0, std::move(c)); }
    static Poly term(int i, int j, EisRat c);
    static Poly x() { return term(1, 0, EisRat::integer(1)); }
    static Poly y() { return term(0, 1, EisRat::integer(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max total degree, -1 for zero
    EisRat coeff(int i, int j) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend bool operator==(const Poly& f, const Poly& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly scaled(const EisRat& c) const;
    Poly dx() const;
    Poly dy() const;
    EisRat eval(const EisRat& xv, const EisRat& yv) const;

    /// Exact quotient f/g, or nullopt when g does not divide f.
    /// Multivariate division with lex order on (x-exp, y-exp).
    static std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

    /// Substitutes x -> 1/u, y -> v/u and clears denominators by u^homdeg:
    /// the monomial x^i y^j maps to u^(homdeg-i-j) v^j.  Requires
    /// homdeg >= degree().  Used for the chart at [1:0:0].
    Poly chart_swap(int homdeg) const;

    /// Divides out the largest common power of the first variable.
    Poly strip_x_power(int* removed = nullptr) const;

    std::string to_string() const;  // for diagnostics

  private:
    void add_term(const Key& k, const EisRat& c);
    Terms terms_;
};

}  // namespace eisenfoil

#endif
