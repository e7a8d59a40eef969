#include "reqho/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reqho::exact {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Rat> v(static_cast<size_t>(k) + 1, rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return rat(0);
    return c_[static_cast<size_t>(k)];
}

Rat Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading: zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return Poly();
    Poly r(p);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = rat(static_cast<long>(i)) * c_[i];
    return Poly(std::move(r));
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    Poly r = Poly::one();
    Poly base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::shift_arg(const Rat& a) const {
    // Horner on x + a
    Poly shifted_x({a, rat(1)});
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * shifted_x + Poly(*it);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw std::domain_error("monic: zero polynomial");
    return rat(1) / Rat(leading()) * *this;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double Poly::eval(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        if (first) {
            if (sign(c) < 0) os << "-";
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        bool unit = (a == 1);
        if (k == 0 || !unit) os << rat_str(a);
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    Poly r = a;
    if (a.degree() < b.degree()) return {Poly(), r};
    std::vector<Rat> q(static_cast<size_t>(a.degree() - b.degree()) + 1, rat(0));
    Rat lead_inv = rat(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rat f = r.leading() * lead_inv;
        q[static_cast<size_t>(k)] = f;
        r -= Poly::monomial(f, k) * b;
    }
    return {Poly(std::move(q)), r};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

Poly integer_primitive(const Poly& p, Rat* scale) {
    if (p.is_zero()) {
        if (scale) *scale = rat(1);
        return p;
    }
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        BigInt d = c.get_den();
        den_lcm = lcm(den_lcm, d);
    }
    BigInt num_gcd = 0;
    for (const auto& c : p.coeffs()) {
        BigInt n = c.get_num() * (den_lcm / c.get_den());
        num_gcd = gcd(num_gcd, n);
    }
    Rat s = rat(num_gcd, den_lcm);  // positive since num_gcd > 0
    if (scale) *scale = s;
    return rat(1) / s * p;
}

namespace {

// Euclidean remainder renormalized to integer-primitive form at every
// step, which keeps coefficient growth polynomial instead of exponential.
Poly primitive_rem(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    (void)q;
    if (r.is_zero()) return r;
    return integer_primitive(r);
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = integer_primitive(a);
    b = integer_primitive(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = primitive_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

int sign_at(const Poly& p, const Bound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case Bound::Finite:
            return sign(Rat(p.eval(b.value)));
        case Bound::PosInf:
            return sign(p.leading());
        case Bound::NegInf:
            return (p.degree() % 2 == 0) ? sign(p.leading()) : -sign(p.leading());
    }
    return 0;
}

int sign_variations(const std::vector<Poly>& seq, const Bound& b) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, b);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

}  // namespace

int count_real_roots(const Poly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    // squarefree part so multiple roots count once
    Poly sf = exact_div(p, poly_gcd(p, p.derivative()));
    sf = integer_primitive(sf);
    std::vector<Poly> seq{sf, integer_primitive(sf.derivative())};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
        (void)q;
        if (r.is_zero()) break;
        seq.push_back(integer_primitive(-r));
    }
    // Sturm counts roots in the half-open interval (lo, hi];
    // add the left endpoint back for closed-interval semantics.
    int n = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (lo.kind == Bound::Finite && sf.eval(lo.value) == 0) ++n;
    return n;
}

Rat root_bound(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return rat(0);
    Rat lead = abs(Rat(p.leading()));
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(Rat(p.coeff(k))) / lead));
    return rat(1) + m;
}

}  // namespace reqho::exact
