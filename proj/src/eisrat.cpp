#include "eisenfoil/eisrat.hpp"

#include <cctype>

namespace eisenfoil {

void EisRat::reduce() {
    if (den_.is_zero()) throw std::domain_error("eisrat: zero denominator");
    if (num_.is_zero()) {
        den_ = EisInt::one();
        return;
    }
    EisInt g = gcd(num_, den_);
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
    auto [canon, unit] = canonical_associate(den_);
    den_ = canon;
    num_ = num_ * unit;
}

EisRat::QQ EisRat::rational_coords() const {
    // num/den = num * conj(den) / N(den)
    EisInt n = num_ * den_.conj();
    BigInt d = norm(den_);
    auto reduced = [](BigInt p, BigInt q) {
        BigInt g = boost::multiprecision::gcd(p < 0 ? BigInt(-p) : p, q);
        if (g == 0) return std::pair<BigInt, BigInt>(BigInt(0), BigInt(1));
        return std::pair<BigInt, BigInt>(p / g, q / g);
    };
    auto [rp, rq] = reduced(n.a, d);
    auto [wp, wq] = reduced(n.b, d);
    return {rp, rq, wp, wq};
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

BigInt parse_unsigned(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    std::string digits;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        digits += c.s[c.i++];
    if (digits.empty()) throw ParseError("expected integer", start);
    return BigInt(digits);
}

// One term: rational coefficient and whether it carries w.
struct Term {
    BigInt p{0}, q{1};
    bool has_w = false;
};

Term parse_term(Cursor& c, int sign) {
    Term t;
    if (c.eof()) throw ParseError("expected term", c.i);
    if (c.peek() == 'w') {
        ++c.i;
        t.p = sign;
        t.has_w = true;
        return t;
    }
    t.p = sign * parse_unsigned(c);
    if (!c.eof() && c.peek() == '/') {
        ++c.i;
        std::size_t at = c.i;
        t.q = parse_unsigned(c);
        if (t.q == 0) throw ParseError("zero denominator", at);
    }
    if (!c.eof() && (c.peek() == '*' || c.peek() == 'w')) {
        if (c.peek() == '*') {
            ++c.i;
            if (c.eof() || c.peek() != 'w') throw ParseError("expected 'w' after '*'", c.i);
        }
        ++c.i;
        t.has_w = true;
    }
    return t;
}

}  // namespace

ExtEisRat parse_eisrat(const std::string& text) {
    Cursor c{text};
    if (c.eof()) throw ParseError("empty input", 0);
    if (text.size() - c.i >= 3 && text.compare(c.i, 3, "inf") == 0) {
        c.i += 3;
        if (!c.eof()) throw ParseError("trailing input after 'inf'", c.i);
        return ExtEisRat::infinity();
    }

    // accumulate rp/rq + (wp/wq) w
    BigInt rp = 0, rq = 1, wp = 0, wq = 1;
    bool seen_const = false, seen_w = false;
    bool first = true;
    while (!c.eof()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.i;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", c.i);
        }
        std::size_t at = c.i;
        Term t = parse_term(c, sign);
        if (t.has_w) {
            if (seen_w) throw ParseError("more than one w-term", at);
            seen_w = true;
            wp = t.p;
            wq = t.q;
        } else {
            if (seen_const) throw ParseError("more than one constant term", at);
            seen_const = true;
            rp = t.p;
            rq = t.q;
        }
        first = false;
    }
    // (rp/rq) + (wp/wq) w = (rp*wq + wp*rq*w) / (rq*wq)
    EisInt num{rp * wq, wp * rq};
    EisInt den{rq * wq, BigInt(0)};
    return ExtEisRat(EisRat(std::move(num), std::move(den)));
}

namespace {
std::string frac_str(const BigInt& p, const BigInt& q) {
    std::string s = p.str();
    if (q != 1) s += "/" + q.str();
    return s;
}
}  // namespace

std::string format_eisrat(const EisRat& x) {
    auto [rp, rq, wp, wq] = x.rational_coords();
    if (rp == 0 && wp == 0) return "0";
    std::string s;
    if (rp != 0) s = frac_str(rp, rq);
    if (wp != 0) {
        if (wp == 1 && wq == 1) s += s.empty() ? "w" : "+w";
        else if (wp == -1 && wq == 1) s += "-w";
        else {
            if (!s.empty() && wp > 0) s += "+";
            s += frac_str(wp, wq) + "*w";
        }
    }
    return s;
}

std::string format_eisrat(const ExtEisRat& x) {
    if (x.is_infinity()) return "inf";
    return format_eisrat(x.value());
}

}  // namespace eisenfoil
