#pragma once

#include <optional>
#include <string>

#include "reqho/rational_fn.hpp"

namespace reqho::exact {

// poly(x) * e^{s*x^2/2} with integer s. This class is closed under
// differentiation and products, and houses every closed-form bound /
// non-normalizable oscillator eigenstate and every Wronskian built here.
// Canonical zero has s = 0.
class QuasiPoly {
public:
    QuasiPoly() : poly_(), gexp_(0) {}
    QuasiPoly(Poly p, int gexp) : poly_(std::move(p)), gexp_(gexp) {
        if (poly_.is_zero()) gexp_ = 0;
    }

    const Poly& poly() const { return poly_; }
    int gexp() const { return gexp_; }
    bool is_zero() const { return poly_.is_zero(); }

    // (p' + s*x*p) e^{s x^2/2}
    QuasiPoly derivative() const;
    QuasiPoly operator-() const { return {-poly_, gexp_}; }
    friend QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b);
    friend QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b);
    friend QuasiPoly operator*(const Rat& s, const QuasiPoly& q);
    friend bool operator==(const QuasiPoly& a, const QuasiPoly& b) {
        return a.gexp_ == b.gexp_ && a.poly_ == b.poly_;
    }

    double eval(double x) const;
    std::string str(const std::string& var = "x") const;

private:
    Poly poly_;
    int gexp_;
};

// rat(x) * e^{s*x^2/2}: the image class of quasi-polynomial eigenstates
// under the intertwining operators.
class QuasiRational {
public:
    QuasiRational() : rat_(), gexp_(0) {}
    QuasiRational(RationalFn r, int gexp) : rat_(std::move(r)), gexp_(gexp) {
        if (rat_.is_zero()) gexp_ = 0;
    }
    explicit QuasiRational(const QuasiPoly& q) : rat_(RationalFn(q.poly())), gexp_(q.gexp()) {}

    const RationalFn& rat() const { return rat_; }
    int gexp() const { return gexp_; }
    bool is_zero() const { return rat_.is_zero(); }

    QuasiRational derivative() const;
    QuasiRational operator-() const { return {-rat_, gexp_}; }
    friend QuasiRational operator+(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const QuasiRational& a, const QuasiRational& b);
    friend QuasiRational operator*(const Rat& s, const QuasiRational& q);
    friend bool operator==(const QuasiRational& a, const QuasiRational& b) {
        return a.gexp_ == b.gexp_ && a.rat_ == b.rat_;
    }

    double eval(double x) const;
    std::string str(const std::string& var = "x") const;

private:
    RationalFn rat_;
    int gexp_;
};

// If b = c*a for a nonzero constant c, returns c. Zero states are
// proportional to everything with factor 0 when a is zero-compatible.
std::optional<Rat> proportionality(const QuasiRational& a, const QuasiRational& b);
std::optional<Rat> proportionality(const QuasiPoly& a, const QuasiPoly& b);

}  // namespace reqho::exact
