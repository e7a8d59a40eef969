#include "reqho/rational_fn.hpp"

#include <sstream>
#include <stdexcept>

namespace reqho::exact {

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = rat(1) / lead;
        num_ = inv * num_;
        den_ = den_.degree() == 0 ? Poly::one() : inv * den_;
    }
}

// Internal: num/den already coprime, only the monic-denominator scaling is
// pending.
RationalFn RationalFn::reduced(Poly num, Poly den) {
    RationalFn r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    Rat lead = r.den_.leading();
    if (lead != 1) {
        Rat inv = rat(1) / lead;
        r.num_ = inv * r.num_;
        r.den_ = r.den_.degree() == 0 ? Poly::one() : inv * r.den_;
    }
    return r;
}

Rat RationalFn::constant_value() const {
    if (!is_constant()) throw std::domain_error("constant_value: not a constant");
    if (num_.is_zero()) return rat(0);
    return num_.coeff(0) / den_.coeff(0);
}

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -r.num_;
    return r;
}

namespace {

// a + s*b for reduced inputs, with Henrici's trick: only gcd(t, g) with
// g = gcd(den_a, den_b) can survive in the result, so the expensive full
// reduction is never needed.
RationalFn add_scaled(const RationalFn& a, const RationalFn& b, int s) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return s < 0 ? -b : b;
    const Poly& d1 = a.den();
    const Poly& d2 = b.den();
    Poly nb = s < 0 ? -b.num() : b.num();
    if (d1.degree() == 0 && d2.degree() == 0)
        return RationalFn::reduced(a.num() + nb, Poly::one());
    if (d1 == d2) {
        Poly t = a.num() + nb;
        if (t.is_zero()) return RationalFn();
        Poly g = t.degree() > 0 ? poly_gcd(t, d1) : Poly::one();
        if (g.degree() > 0) return RationalFn::reduced(exact_div(t, g), exact_div(d1, g));
        return RationalFn::reduced(std::move(t), d1);
    }
    Poly g = (d1.degree() > 0 && d2.degree() > 0) ? poly_gcd(d1, d2) : Poly::one();
    if (g.degree() == 0) return RationalFn::reduced(a.num() * d2 + nb * d1, d1 * d2);
    Poly d1r = exact_div(d1, g);
    Poly d2r = exact_div(d2, g);
    Poly t = a.num() * d2r + nb * d1r;
    if (t.is_zero()) return RationalFn();
    Poly h = t.degree() > 0 ? poly_gcd(t, g) : Poly::one();
    if (h.degree() > 0)
        return RationalFn::reduced(exact_div(t, h), exact_div(d1, h) * d2r);
    return RationalFn::reduced(std::move(t), d1 * d2r);
}

}  // namespace

RationalFn operator+(const RationalFn& a, const RationalFn& b) { return add_scaled(a, b, +1); }

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return add_scaled(a, b, -1); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    // cross-reduce before multiplying to keep degrees low
    Poly g1 = (a.num_.degree() > 0 && b.den_.degree() > 0) ? poly_gcd(a.num_, b.den_)
                                                           : Poly::one();
    Poly g2 = (b.num_.degree() > 0 && a.den_.degree() > 0) ? poly_gcd(b.num_, a.den_)
                                                           : Poly::one();
    Poly n1 = g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_;
    Poly d2 = g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_;
    Poly n2 = g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_;
    Poly d1 = g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_;
    return RationalFn::reduced(n1 * n2, d1 * d2);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return a * RationalFn(b.den_, b.num_);
}

RationalFn operator*(const Rat& s, const RationalFn& f) {
    if (s == 0) return RationalFn();
    RationalFn r(f);
    r.num_ = s * r.num_;
    return r;
}

RationalFn RationalFn::derivative() const {
    if (is_polynomial()) return RationalFn(num_.derivative());
    // peel the repeated part of the denominator up front: with
    // e = gcd(d, d'), the numerator n'd - nd' always carries the factor e
    Poly e = poly_gcd(den_, den_.derivative());
    if (e.degree() == 0)
        return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    Poly u = exact_div(den_, e);
    Poly t = num_.derivative() * u - num_ * exact_div(den_.derivative(), e);
    return RationalFn(std::move(t), den_ * u);
}

Rat RationalFn::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw std::domain_error("RationalFn::eval: pole at evaluation point");
    return num_.eval(x) / d;
}

double RationalFn::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string RationalFn::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    // render with integer-primitive num/den and the residual scalar up front
    Rat sn, sd;
    Poly n = integer_primitive(num_, &sn);
    Poly d = integer_primitive(den_, &sd);
    Rat s = sn / sd;
    std::ostringstream os;
    if (s != 1) os << rat_str(s) << "*";
    os << "(" << n.str(var) << ")/(" << d.str(var) << ")";
    return os.str();
}

}  // namespace reqho::exact
