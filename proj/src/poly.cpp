#include "eisenfoil/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eisenfoil {

Poly Poly::term(int i, int j, EisRat c) {
    Poly p;
    if (!c.is_zero()) p.terms_[{i, j}] = std::move(c);
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

EisRat Poly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? EisRat() : it->second;
}

void Poly::add_term(const Key& k, const EisRat& c) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[k] = c;
        return;
    }
    EisRat s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    Poly r = f;
    for (const auto& [k, c] : g.terms_) r.add_term(k, c);
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    Poly r = f;
    for (const auto& [k, c] : g.terms_) r.add_term(k, -c);
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    Poly r;
    for (const auto& [k1, c1] : f.terms_)
        for (const auto& [k2, c2] : g.terms_)
            r.add_term({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

Poly Poly::scaled(const EisRat& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

Poly Poly::dx() const {
    Poly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.terms_[{k.first - 1, k.second}] = c * EisRat::integer(k.first);
    return r;
}

Poly Poly::dy() const {
    Poly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.terms_[{k.first, k.second - 1}] = c * EisRat::integer(k.second);
    return r;
}

EisRat Poly::eval(const EisRat& xv, const EisRat& yv) const {
    // powers cached up to the degree actually used
    std::map<int, EisRat> xp{{0, EisRat::integer(1)}}, yp{{0, EisRat::integer(1)}};
    auto power = [](std::map<int, EisRat>& cache, const EisRat& base, int e) {
        int have = cache.rbegin()->first;
        while (have < e) {
            cache[have + 1] = cache[have] * base;
            ++have;
        }
        return cache[e];
    };
    EisRat acc;
    for (const auto& [k, c] : terms_)
        acc = acc + c * power(xp, xv, k.first) * power(yp, yv, k.second);
    return acc;
}

std::optional<Poly> Poly::divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    Poly rem = f, quot;
    const auto& lead = *g.terms_.rbegin();  // lex-largest term of g
    while (!rem.is_zero()) {
        const auto& rt = *rem.terms_.rbegin();
        int di = rt.first.first - lead.first.first;
        int dj = rt.first.second - lead.first.second;
        if (di < 0 || dj < 0) return std::nullopt;
        EisRat c = rt.second / lead.second;
        Poly m = Poly::term(di, dj, c);
        quot = quot + m;
        rem = rem - m * g;
    }
    return quot;
}

Poly Poly::chart_swap(int homdeg) const {
    Poly r;
    for (const auto& [k, c] : terms_) {
        int e = homdeg - k.first - k.second;
        if (e < 0) throw std::domain_error("poly: chart_swap degree too small");
        r.add_term({e, k.second}, c);
    }
    return r;
}

Poly Poly::strip_x_power(int* removed) const {
    if (is_zero()) {
        if (removed) *removed = 0;
        return *this;
    }
    int m = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    if (removed) *removed = m;
    Poly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first - m, k.second}] = c;
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + format_eisrat(c) + ")";
        if (k.first) s += "*x^" + std::to_string(k.first);
        if (k.second) s += "*y^" + std::to_string(k.second);
    }
    return s;
}

}  // namespace eisenfoil
