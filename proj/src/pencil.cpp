#include "eisenfoil/pencil.hpp"

#include <boost/integer/common_factor.hpp>

namespace eisenfoil {

namespace {
EisRat minus_two_minus_w() {
    return EisRat(EisInt{BigInt(-2), BigInt(-1)});
}
}  // namespace

ExtEisRat lambda_map(const ExtEisRat& alpha) {
    if (alpha.is_infinity()) return ExtEisRat::infinity();
    return ExtEisRat(minus_two_minus_w() * alpha.value() + EisRat::integer(1));
}

ExtEisRat alpha_of(const ExtEisRat& t) {
    if (t.is_infinity()) return ExtEisRat::infinity();
    return ExtEisRat((t.value() - EisRat::integer(1)) / minus_two_minus_w());
}

PencilParam PencilParam::from_alpha(const ExtEisRat& alpha) {
    PencilParam p;
    p.alpha = alpha;
    p.t = lambda_map(alpha);
    if (alpha.is_infinity()) {
        p.alpha1 = EisInt::one();
        p.beta1 = EisInt::zero();
        p.degenerate = true;
        return p;
    }
    p.alpha1 = alpha.value().num();
    p.beta1 = alpha.value().den();
    const EisRat& a = alpha.value();
    p.degenerate = a == EisRat::integer(0) || a == EisRat::integer(1) || a == -EisRat::tau();
    return p;
}

PencilParam PencilParam::from_t(const ExtEisRat& t) {
    PencilParam p = from_alpha(alpha_of(t));
    p.t = t;
    return p;
}

BigInt degree(const PencilParam& p, DegreeVariant variant) {
    const EisInt& a1 = p.alpha1;
    const EisInt& b1 = p.beta1;
    EisInt w = EisInt::tau();
    EisInt last = variant == DegreeVariant::Paper ? b1 + w * a1 : a1 + w * b1;
    return norm(b1) + norm(a1) + norm(b1 - a1) + norm(last);
}

BigInt quartic_form(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return 3 * (a * a - a * b + b * b - a * c + c * c + a * d - b * d - c * d + d * d);
}

BigInt degree_via_intersections(const PencilParam& p, LeafOrientation orientation) {
    EisInt la = p.alpha1, lb = p.beta1;
    if (orientation == LeafOrientation::LeafOfAlpha) std::swap(la, lb);
    Subtorus leaf = Subtorus::make(la, lb);
    const EisInt one = EisInt::one();
    const EisInt zero = EisInt::zero();
    const EisInt w = EisInt::tau();
    const Subtorus refs[4] = {Subtorus{one, zero}, Subtorus{zero, one}, Subtorus{one, one},
                              Subtorus{one, -w}};
    BigInt total = 0;
    for (const auto& f : refs) total += intersection_number(leaf, f);
    return total;
}

IntegrabilityResult is_integrable(const ExtEisRat& t) {
    ExtEisRat alpha = alpha_of(t);
    if (alpha.is_infinity() || alpha.value().is_zero()) return {true, BigInt(1)};
    // minimal positive integer divisible by the denominator q:
    // N(q) / gcd(q.a, q.b) over Z
    const EisInt& q = alpha.value().den();
    BigInt g = boost::integer::gcd(q.a < 0 ? BigInt(-q.a) : q.a, q.b < 0 ? BigInt(-q.b) : q.b);
    if (g == 0) g = 1;
    return {true, norm(q) / g};
}

DegreeRecord DegreeRecord::make(const PencilParam& p) {
    DegreeRecord r;
    r.param = p;
    r.d_paper = degree(p, DegreeVariant::Paper);
    r.d_corrected = degree(p, DegreeVariant::Corrected);
    r.d_intersection = degree_via_intersections(p, LeafOrientation::LeafOfAlpha);
    r.qa = p.alpha1.a;
    r.qb = p.alpha1.b;
    r.qc = p.beta1.a;
    r.qd = p.beta1.b;
    return r;
}

}  // namespace eisenfoil
