#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reqho/rational.hpp"

namespace reqho::exact {

// Dense univariate polynomial over Rat, coefficients lowest degree first.
// Canonical form: no trailing zero coefficient; the zero polynomial has an
// empty coefficient vector, so operator== is mathematical equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& c) : c_{c} { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(rat(1)); }
    static Poly x() { return Poly({rat(0), rat(1)}); }
    // c * x^k
    static Poly monomial(const Rat& c, int k);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Poly pow(int e) const;
    // substitute x -> x + a
    Poly shift_arg(const Rat& a) const;
    Poly monic() const;

    Rat eval(const Rat& x) const;
    double eval(double x) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// quotient, remainder with a = q*b + r and deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// division that requires a zero remainder
Poly exact_div(const Poly& a, const Poly& b);
// monic gcd (primitive PRS over the integers underneath)
Poly poly_gcd(Poly a, Poly b);

// Scale by a positive rational so the coefficients become coprime integers.
// Returns the integer-primitive polynomial; *scale (if given) receives the
// positive factor s with p = s * primitive.
Poly integer_primitive(const Poly& p, Rat* scale = nullptr);

struct Bound {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rat value;
    static Bound neg_inf() { return {NegInf, Rat()}; }
    static Bound pos_inf() { return {PosInf, Rat()}; }
    static Bound at(const Rat& v) { return {Finite, v}; }
};

// Number of distinct real roots of p in the closed interval [lo, hi]
// (default all of R), by Sturm's theorem on the squarefree part.
// Exact; p must be nonzero.
int count_real_roots(const Poly& p,
                     const Bound& lo = Bound::neg_inf(),
                     const Bound& hi = Bound::pos_inf());

// Cauchy bound B such that every real root lies in [-B, B].
Rat root_bound(const Poly& p);

}  // namespace reqho::exact
