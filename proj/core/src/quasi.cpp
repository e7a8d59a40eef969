#include "reqho/quasi.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace reqho::exact {

QuasiPoly QuasiPoly::derivative() const {
    if (is_zero()) return {};
    return {poly_.derivative() + rat(gexp_) * (Poly::x() * poly_), gexp_};
}

QuasiPoly operator+(const QuasiPoly& a, const QuasiPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.gexp_ != b.gexp_)
        throw std::domain_error("QuasiPoly: addition with mismatched gaussian exponents");
    return {a.poly_ + b.poly_, a.gexp_};
}

QuasiPoly operator*(const QuasiPoly& a, const QuasiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.poly_ * b.poly_, a.gexp_ + b.gexp_};
}

QuasiPoly operator*(const Rat& s, const QuasiPoly& q) {
    if (s == 0) return {};
    return {s * q.poly_, q.gexp_};
}

double QuasiPoly::eval(double x) const {
    return poly_.eval(x) * std::exp(0.5 * gexp_ * x * x);
}

std::string QuasiPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << poly_.str(var) << ")";
    if (gexp_ != 0) os << "*exp(" << gexp_ << "*" << var << "^2/2)";
    return os.str();
}

QuasiRational QuasiRational::derivative() const {
    if (is_zero()) return {};
    return {rat_.derivative() + Rat(gexp_) * (RationalFn::x() * rat_), gexp_};
}

QuasiRational operator+(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.gexp_ != b.gexp_)
        throw std::domain_error("QuasiRational: addition with mismatched gaussian exponents");
    return {a.rat_ + b.rat_, a.gexp_};
}

QuasiRational operator*(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.rat_ * b.rat_, a.gexp_ + b.gexp_};
}

QuasiRational operator*(const Rat& s, const QuasiRational& q) {
    if (s == 0) return {};
    return {s * q.rat_, q.gexp_};
}

double QuasiRational::eval(double x) const {
    return rat_.eval(x) * std::exp(0.5 * gexp_ * x * x);
}

std::string QuasiRational::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << rat_.str(var) << ")";
    if (gexp_ != 0) os << "*exp(" << gexp_ << "*" << var << "^2/2)";
    return os.str();
}

std::optional<Rat> proportionality(const QuasiRational& a, const QuasiRational& b) {
    if (a.is_zero()) return b.is_zero() ? std::optional<Rat>(rat(0)) : std::nullopt;
    if (b.is_zero()) return rat(0);
    if (a.gexp() != b.gexp()) return std::nullopt;
    // canonical denominators are monic, so b = c*a requires equal dens
    if (!(a.rat().den() == b.rat().den())) return std::nullopt;
    if (a.rat().num().degree() != b.rat().num().degree()) return std::nullopt;
    Rat c = b.rat().num().leading() / a.rat().num().leading();
    if (c * a.rat().num() == b.rat().num()) return c;
    return std::nullopt;
}

std::optional<Rat> proportionality(const QuasiPoly& a, const QuasiPoly& b) {
    return proportionality(QuasiRational(a), QuasiRational(b));
}

}  // namespace reqho::exact
