#include "eisenfoil/foliation.hpp"

#include <stdexcept>

namespace eisenfoil {

namespace {

EisRat zeta(int k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return EisRat::integer(1);
        case 1: return EisRat::tau();
        default: return EisRat(EisInt{BigInt(-1), BigInt(-1)});  // w^2 = -1 - w
    }
}

Poly x3_minus_1() {
    return Poly::term(3, 0, EisRat::integer(1)) - Poly::constant(EisRat::integer(1));
}
Poly y3_minus_1() {
    return Poly::term(0, 3, EisRat::integer(1)) - Poly::constant(EisRat::integer(1));
}

Poly swap_vars(const Poly& p) {
    Poly r;
    for (const auto& [k, c] : p.terms()) r = r + Poly::term(k.second, k.first, c);
    return r;
}

Poly shift_x_down(const Poly& p, int m) {
    Poly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.first < m) throw std::logic_error("foliation: bad common u power");
        r = r + Poly::term(k.first - m, k.second, c);
    }
    return r;
}

int min_x_power(const Poly& p) {
    int m = -1;
    for (const auto& [k, c] : p.terms()) m = (m < 0 || k.first < m) ? k.first : m;
    return m;
}

// field in the chart x = 1/u, y = v/u, after clearing poles and the
// common power of u; first variable is u, second is v
std::pair<Poly, Poly> chart_x_infinity(const Poly& a, const Poly& b) {
    int h = std::max(a.degree(), b.degree());
    Poly p1 = a.chart_swap(h), p2 = b.chart_swap(h);
    Poly au = -(Poly::x() * p1);
    Poly bv = p2 - Poly::y() * p1;
    int m1 = au.is_zero() ? 0 : min_x_power(au);
    int m2 = bv.is_zero() ? 0 : min_x_power(bv);
    int m = std::min(m1, m2);
    if (m > 0) {
        au = shift_x_down(au, m);
        bv = shift_x_down(bv, m);
    }
    return {au, bv};
}

SingularPoint classify_at(const Poly& a, const Poly& b, const EisRat& px, const EisRat& py,
                          std::string chart) {
    SingularPoint s;
    s.x = px;
    s.y = py;
    s.chart = std::move(chart);
    s.is_singular = a.eval(px, py).is_zero() && b.eval(px, py).is_zero();
    s.j11 = a.dx().eval(px, py);
    s.j12 = a.dy().eval(px, py);
    s.j21 = b.dx().eval(px, py);
    s.j22 = b.dy().eval(px, py);
    s.radial = s.j12.is_zero() && s.j21.is_zero() && s.j11 == s.j22 && !s.j11.is_zero();
    EisRat tr = s.j11 + s.j22;
    EisRat det = s.j11 * s.j22 - s.j12 * s.j21;
    s.ratio_minus3 = !tr.is_zero() && (EisRat::integer(3) * tr * tr +
                                       EisRat::integer(4) * det).is_zero();
    return s;
}

}  // namespace

Foliation Foliation::make(const ExtEisRat& t) {
    Foliation f;
    f.t_ = t;
    if (t.is_infinity()) {
        f.a_ = x3_minus_1() * Poly::term(0, 2, EisRat::integer(1));
        f.b_ = y3_minus_1() * Poly::term(2, 0, EisRat::integer(1));
        f.degenerate_ = true;
        return f;
    }
    const EisRat& tv = t.value();
    f.a_ = x3_minus_1() * (Poly::x() - Poly::term(0, 2, tv));
    f.b_ = y3_minus_1() * (Poly::y() - Poly::term(2, 0, tv));
    f.degenerate_ = tv == zeta(0) || tv == zeta(1) || tv == zeta(2);
    // annihilation by the defining 1-form P dx + Q dy
    Poly p = -(y3_minus_1() * (Poly::y() - Poly::term(2, 0, tv)));
    Poly q = x3_minus_1() * (Poly::x() - Poly::term(0, 2, tv));
    if (!(p * f.a_ + q * f.b_).is_zero())
        throw std::logic_error("foliation: field does not annihilate the pencil form");
    return f;
}

Poly Foliation::lie(const Poly& f) const { return a_ * f.dx() + b_ * f.dy(); }

VectorFieldSpec Foliation::field_spec() const {
    VectorFieldSpec spec;
    for (const auto& [k, c] : a_.terms()) spec.A.emplace_back(k.first, k.second, c);
    for (const auto& [k, c] : b_.terms()) spec.B.emplace_back(k.first, k.second, c);
    spec.max_degree = std::max(a_.degree(), b_.degree());
    return spec;
}

Poly Line::poly() const {
    return Poly::term(1, 0, xc) + Poly::term(0, 1, yc) + Poly::constant(cc);
}

Configuration::Configuration() {
    for (int a = 0; a < 3; ++a)
        lines_.push_back({EisRat::integer(1), EisRat(), -zeta(a),
                          "x=" + format_eisrat(zeta(a))});
    for (int b = 0; b < 3; ++b)
        lines_.push_back({EisRat(), EisRat::integer(1), -zeta(b),
                          "y=" + format_eisrat(zeta(b))});
    for (int c = 0; c < 3; ++c)
        lines_.push_back({EisRat::integer(1), -zeta(c), EisRat(),
                          "x=(" + format_eisrat(zeta(c)) + ")y"});
}

std::vector<EisRat> Configuration::torus_fixed_points() {
    EisInt three{BigInt(3), BigInt(0)};
    return {EisRat(), EisRat(EisInt{BigInt(2), BigInt(1)}, three),
            EisRat(EisInt{BigInt(1), BigInt(2)}, three)};
}

int Configuration::incidence_count() const {
    // 10 affine points and the two at infinity, as projective data
    std::vector<std::pair<EisRat, EisRat>> affine;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) affine.emplace_back(zeta(i), zeta(j));
    affine.emplace_back(EisRat(), EisRat());
    int total = 0;
    for (const auto& l : lines_) {
        for (const auto& [px, py] : affine)
            if ((l.xc * px + l.yc * py + l.cc).is_zero()) ++total;
        if (l.xc.is_zero()) ++total;  // [1:0:0]
        if (l.yc.is_zero()) ++total;  // [0:1:0]
    }
    return total;
}

bool Configuration::incidences_ok() const {
    std::vector<std::pair<EisRat, EisRat>> affine;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) affine.emplace_back(zeta(i), zeta(j));
    affine.emplace_back(EisRat(), EisRat());
    std::vector<int> per_point(affine.size() + 2, 0);
    for (const auto& l : lines_) {
        int on_line = 0;
        for (std::size_t k = 0; k < affine.size(); ++k)
            if ((l.xc * affine[k].first + l.yc * affine[k].second + l.cc).is_zero()) {
                ++on_line;
                ++per_point[k];
            }
        if (l.xc.is_zero()) {
            ++on_line;
            ++per_point[affine.size()];
        }
        if (l.yc.is_zero()) {
            ++on_line;
            ++per_point[affine.size() + 1];
        }
        if (on_line != 4) return false;
    }
    for (int c : per_point)
        if (c != 3) return false;
    return true;
}

std::vector<bool> check_line_invariance(const Foliation& f) {
    std::vector<bool> verdicts;
    for (const auto& l : Configuration().lines()) {
        Poly lp = l.poly();
        verdicts.push_back(Poly::divide_exact(f.lie(lp), lp).has_value());
    }
    return verdicts;
}

SingularityReport singular_points(const Foliation& f) {
    SingularityReport rep;
    rep.degenerate_parameter = f.degenerate();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            rep.config.push_back(classify_at(f.a(), f.b(), zeta(i), zeta(j), "affine"));
    rep.config.push_back(classify_at(f.a(), f.b(), EisRat(), EisRat(), "affine"));
    auto [au, bv] = chart_x_infinity(f.a(), f.b());
    rep.config.push_back(classify_at(au, bv, EisRat(), EisRat(), "x-infinity"));
    auto [au2, bv2] = chart_x_infinity(swap_vars(f.b()), swap_vars(f.a()));
    rep.config.push_back(classify_at(au2, bv2, EisRat(), EisRat(), "y-infinity"));
    if (rep.degenerate_parameter) return rep;

    const EisRat& tv = f.t().value();
    for (int a = 0; a < 3; ++a)  // on x = z^a
        rep.extra.push_back(classify_at(f.a(), f.b(), zeta(a), tv * zeta(2 * a), "affine"));
    for (int b = 0; b < 3; ++b)  // on y = z^b
        rep.extra.push_back(classify_at(f.a(), f.b(), tv * zeta(2 * b), zeta(b), "affine"));
    if (!tv.is_zero()) {
        for (int c = 0; c < 3; ++c)  // on x = z^c y
            rep.extra.push_back(
                classify_at(f.a(), f.b(), zeta(2 * c) / tv, zeta(c) / tv, "affine"));
    }
    return rep;
}

std::vector<std::pair<std::string, Poly>> invariant_cubic_candidates() {
    std::vector<std::pair<std::string, Poly>> out;
    out.emplace_back("x^3-1", x3_minus_1());
    out.emplace_back("y^3-1", y3_minus_1());
    out.emplace_back("x^3-y^3", Poly::term(3, 0, EisRat::integer(1)) -
                                    Poly::term(0, 3, EisRat::integer(1)));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            int c = ((a - b) % 3 + 3) % 3;
            Poly lx = Poly::x() - Poly::constant(zeta(a));
            Poly ly = Poly::y() - Poly::constant(zeta(b));
            Poly lm = Poly::x() - Poly::term(0, 1, zeta(c));
            std::string name = "(x-(" + format_eisrat(zeta(a)) + "))(y-(" + format_eisrat(zeta(b)) +
                               "))(x-(" + format_eisrat(zeta(c)) + ")y)";
            out.emplace_back(name, lx * ly * lm);
        }
    return out;
}

IntegralCertificate degenerate_first_integral(const Foliation& f) {
    auto cands = invariant_cubic_candidates();
    IntegralCertificate cert;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            Poly bracket = f.lie(cands[i].second) * cands[j].second -
                           cands[i].second * f.lie(cands[j].second);
            if (bracket.is_zero()) {
                cert.found = true;
                cert.i = (int)i;
                cert.j = (int)j;
                cert.name_i = cands[i].first;
                cert.name_j = cands[j].first;
                cert.ci = cands[i].second;
                cert.cj = cands[j].second;
                cert.bracket = bracket;
                return cert;
            }
        }
    return cert;
}

CertifierReport extactic_certifier(const Foliation& f, int d, int points, int nprimes,
                                   std::uint64_t seed) {
    return certify_degree(f.field_spec(), d, points, nprimes, seed);
}

int minimal_degree_scan(const Foliation& f, int d_max, int points, int nprimes,
                        std::uint64_t seed, std::vector<CertifierReport>* trace) {
    std::vector<int> candidates;
    for (int d = 3; d <= d_max; d += 3) candidates.push_back(d);
    return minimal_consistent_degree(f.field_spec(), candidates, points, nprimes, seed, trace);
}

VectorFieldSpec reference_field(std::int64_t p, std::int64_t q) {
    VectorFieldSpec spec;
    spec.A.emplace_back(1, 0, EisRat::integer((long)p));
    spec.B.emplace_back(0, 1, EisRat::integer((long)q));
    spec.max_degree = 1;
    return spec;
}

}  // namespace eisenfoil
