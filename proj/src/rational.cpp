#include "modcurv/rational.hpp"

#include <cmath>
#include <sstream>

namespace modcurv {

namespace {

std::int64_t checked_cast(__int128 v, const char* who) {
    if (v > INT64_MAX || v < INT64_MIN) fail(errc::domain_error, std::string(who) + ": overflow");
    return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(errc::domain_error, "Rational: zero denominator");
    *this = checked(n, d);
}

Rational Rational::checked(__int128 n, __int128 d) {
    if (d == 0) fail(errc::domain_error, "Rational: zero denominator");
    if (n == 0) return {};
    const __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Rational r;
    r.num = checked_cast(n, "Rational");
    r.den = checked_cast(d, "Rational");
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return checked(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                   static_cast<__int128>(den) * o.den);
}

Rational Rational::operator-(const Rational& o) const { return *this + Rational{-o.num, o.den}; }

Rational Rational::operator*(const Rational& o) const {
    return checked(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num == 0) fail(errc::domain_error, "Rational: division by zero");
    return checked(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

PolyM PolyM::constant(Rational r) {
    PolyM p;
    if (!r.is_zero()) p.coeff = {r};
    return p;
}

PolyM PolyM::variable() {
    PolyM p;
    p.coeff = {Rational{0}, Rational{1}};
    return p;
}

void PolyM::trim() {
    while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
}

PolyM PolyM::operator+(const PolyM& o) const {
    PolyM r;
    r.coeff.resize(std::max(coeff.size(), o.coeff.size()));
    for (std::size_t i = 0; i < r.coeff.size(); ++i) {
        Rational a = i < coeff.size() ? coeff[i] : Rational{0};
        Rational b = i < o.coeff.size() ? o.coeff[i] : Rational{0};
        r.coeff[i] = a + b;
    }
    r.trim();
    return r;
}

PolyM PolyM::operator-(const PolyM& o) const {
    PolyM neg = o;
    for (auto& c : neg.coeff) c = -c;
    return *this + neg;
}

PolyM PolyM::operator*(const PolyM& o) const {
    PolyM r;
    if (coeff.empty() || o.coeff.empty()) return r;
    r.coeff.assign(coeff.size() + o.coeff.size() - 1, Rational{0});
    for (std::size_t i = 0; i < coeff.size(); ++i)
        for (std::size_t j = 0; j < o.coeff.size(); ++j)
            r.coeff[i + j] = r.coeff[i + j] + coeff[i] * o.coeff[j];
    r.trim();
    return r;
}

double PolyM::eval(double m) const {
    double v = 0.0;
    for (std::size_t i = coeff.size(); i-- > 0;) v = v * m + coeff[i].to_double();
    return v;
}

std::string PolyM::str() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeff.size(); i-- > 0;) {
        if (coeff[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = coeff[i] == Rational{1} && i >= 1;
        const bool neg_unit = coeff[i] == Rational{-1} && i >= 1;
        if (neg_unit) os << "-";
        if (!unit && !neg_unit) {
            os << coeff[i].str();
            if (i >= 1) os << "*";
        }
        if (i >= 1) os << "m";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

namespace {

// polynomial GCD over Q (Euclid), result made primitive with positive lead
PolyM poly_gcd(PolyM a, PolyM b) {
    a.trim();
    b.trim();
    while (!b.is_zero()) {
        // remainder of a by b
        PolyM r = a;
        r.trim();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const Rational q = r.coeff.back() / b.coeff.back();
            const int shift = r.degree() - b.degree();
            for (int i = 0; i <= b.degree(); ++i)
                r.coeff[i + shift] = r.coeff[i + shift] - q * b.coeff[i];
            r.trim();
        }
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        const Rational lead = a.coeff.back();
        for (auto& c : a.coeff) c = c / lead;
    }
    return a;
}

// scale so all coefficients are integers with gcd 1 and positive lead
void make_primitive(PolyM& p, Rational& carried) {
    if (p.is_zero()) return;
    __int128 l = 1;
    for (const auto& c : p.coeff) l = l / gcd128(l, c.den) * c.den;
    __int128 g = 0;
    for (const auto& c : p.coeff) g = gcd128(g, static_cast<__int128>(c.num) * (l / c.den));
    if (g == 0) g = 1;
    const Rational scale = Rational::checked(l, g);
    // p * scale is integer/primitive; fold 1/scale into carried
    for (auto& c : p.coeff) c = c * scale;
    carried = carried / scale;
    if (p.coeff.back().num < 0) {
        for (auto& c : p.coeff) c = -c;
        carried = -carried;
    }
}

} // namespace

RatM::RatM(PolyM n, PolyM d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) fail(errc::domain_error, "RatM: zero denominator");
    reduce();
}

RatM RatM::one_over_m() { return RatM(PolyM::constant(Rational{1}), PolyM::variable()); }

void RatM::reduce() {
    num.trim();
    den.trim();
    if (num.is_zero()) {
        den = PolyM::constant(Rational{1});
        return;
    }
    const PolyM g = poly_gcd(num, den);
    if (g.degree() > 0) {
        auto divide = [&](const PolyM& p) {
            PolyM q, r = p;
            q.coeff.assign(std::max(0, r.degree() - g.degree()) + 1, Rational{0});
            while (!r.is_zero() && r.degree() >= g.degree()) {
                const Rational f = r.coeff.back() / g.coeff.back();
                const int shift = r.degree() - g.degree();
                q.coeff[shift] = f;
                for (int i = 0; i <= g.degree(); ++i)
                    r.coeff[i + shift] = r.coeff[i + shift] - f * g.coeff[i];
                r.trim();
            }
            q.trim();
            return q;
        };
        num = divide(num);
        den = divide(den);
    }
    // normal form: integer primitive denominator with positive lead; the
    // rational residue is pushed into the numerator
    Rational carried{1};
    make_primitive(den, carried);
    // carried now multiplies the numerator
    for (auto& c : num.coeff) c = c * Rational{carried.den, 1};
    // carried.den folded; fold carried.num as division
    if (carried.num != 1) {
        for (auto& c : num.coeff) c = c / Rational{carried.num, 1};
    }
    num.trim();
}

RatM RatM::operator+(const RatM& o) const { return RatM(num * o.den + o.num * den, den * o.den); }
RatM RatM::operator-(const RatM& o) const { return RatM(num * o.den - o.num * den, den * o.den); }
RatM RatM::operator*(const RatM& o) const { return RatM(num * o.num, den * o.den); }

double RatM::eval(double m) const { return num.eval(m) / den.eval(m); }

std::string RatM::str() const {
    if (num.is_zero()) return "0";
    if (den.degree() == 0 && den.at(0) == Rational{1}) return num.str();
    auto wrap = [](const std::string& s) {
        return s.find(" + ") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num.str()) + "/" + wrap(den.str());
}

} // namespace modcurv
