#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "modcurv/errors.hpp"

namespace modcurv {

// Exact rational with overflow-checked arithmetic (coefficients in the b2
// calculus stay tiny; the checks are tripwires, not a bignum substitute).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d);

    static Rational checked(__int128 n, __int128 d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return {-num, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

// Polynomial in the formal dimension variable m, exact rational coefficients,
// index = power of m.
struct PolyM {
    std::vector<Rational> coeff;

    static PolyM constant(Rational r);
    static PolyM variable(); // m
    void trim();
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    bool is_zero() const { return coeff.empty(); }
    Rational at(int k) const { return k < static_cast<int>(coeff.size()) ? coeff[k] : Rational{0}; }

    PolyM operator+(const PolyM& o) const;
    PolyM operator-(const PolyM& o) const;
    PolyM operator*(const PolyM& o) const;
    bool operator==(const PolyM& o) const { return coeff == o.coeff; }
    double eval(double m) const;
    std::string str() const;
};

// Ratio of polynomials in m, kept reduced (monic-free normal form: primitive
// integer contents, positive leading denominator coefficient).
struct RatM {
    PolyM num = PolyM::constant(Rational{0});
    PolyM den = PolyM::constant(Rational{1});

    RatM() = default;
    RatM(Rational r) : num(PolyM::constant(r)), den(PolyM::constant(Rational{1})) {}
    RatM(PolyM n, PolyM d);

    static RatM constant(std::int64_t n, std::int64_t d = 1) { return RatM(Rational{n, d}); }
    static RatM one_over_m();

    void reduce();
    bool is_zero() const { return num.is_zero(); }

    RatM operator+(const RatM& o) const;
    RatM operator-(const RatM& o) const;
    RatM operator*(const RatM& o) const;
    bool operator==(const RatM& o) const { return num == o.num && den == o.den; }
    double eval(double m) const;
    std::string str() const;
};

} // namespace modcurv
