#pragma once

#include <string>

#include "reqho/poly.hpp"

namespace reqho::exact {

// Ratio of polynomials in canonical form: gcd(num, den) = 1 and den monic,
// so operator== is mathematical equality. den is never zero.
class RationalFn {
public:
    RationalFn() : num_(), den_(Poly::one()) {}
    explicit RationalFn(const Rat& c) : num_(Poly(c)), den_(Poly::one()) {}
    explicit RationalFn(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RationalFn(Poly num, Poly den);

    static RationalFn zero() { return RationalFn(); }
    static RationalFn one() { return RationalFn(rat(1)); }
    static RationalFn x() { return RationalFn(Poly::x()); }
    // construction bypass for callers that guarantee gcd(num, den) = 1
    static RationalFn reduced(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_ == Poly::one(); }
    Rat constant_value() const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const Rat& s, const RationalFn& f);
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFn derivative() const;

    bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }
    Rat eval(const Rat& x) const;
    double eval(double x) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace reqho::exact
