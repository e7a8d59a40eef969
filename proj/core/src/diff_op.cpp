#include "reqho/diff_op.hpp"

#include <sstream>
#include <stdexcept>

namespace reqho::exact {

namespace {

std::vector<std::vector<long>> binomials(int n) {
    std::vector<std::vector<long>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(i)].resize(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return c;
}

}  // namespace

void DiffOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RationalFn DiffOp::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return RationalFn::zero();
    return c_[static_cast<size_t>(k)];
}

DiffOp DiffOp::operator-() const {
    DiffOp r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    std::vector<RationalFn> r(std::max(a.c_.size(), b.c_.size()), RationalFn::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return DiffOp(std::move(r));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    if (a.is_zero() || b.is_zero()) return DiffOp();
    // D^k . (g D^m) = sum_i C(k,i) g^{(i)} D^{k-i+m}  (Leibniz)
    auto C = binomials(a.order());
    std::vector<RationalFn> r(
        static_cast<size_t>(a.order() + b.order()) + 1, RationalFn::zero());
    for (int m = 0; m <= b.order(); ++m) {
        const RationalFn& g = b.c_[static_cast<size_t>(m)];
        if (g.is_zero()) continue;
        RationalFn gd = g;  // i-th derivative of g, built incrementally
        for (int i = 0; i <= a.order(); ++i) {
            if (i > 0) gd = gd.derivative();
            if (gd.is_zero()) break;
            for (int k = i; k <= a.order(); ++k) {
                const RationalFn& f = a.c_[static_cast<size_t>(k)];
                if (f.is_zero()) continue;
                Rat binom(C[static_cast<size_t>(k)][static_cast<size_t>(i)]);
                r[static_cast<size_t>(k - i + m)] += binom * (f * gd);
            }
        }
    }
    return DiffOp(std::move(r));
}

DiffOp operator*(const Rat& s, const DiffOp& L) {
    DiffOp r(L);
    for (auto& c : r.c_) c = s * c;
    return r;
}

DiffOp DiffOp::pow(int e) const {
    if (e < 0) throw std::invalid_argument("DiffOp::pow: negative exponent");
    DiffOp r = DiffOp::identity();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

DiffOp DiffOp::adjoint() const {
    DiffOp r;
    auto C = binomials(std::max(order(), 0));
    for (int k = 0; k <= order(); ++k) {
        const RationalFn& f = c_[static_cast<size_t>(k)];
        if (f.is_zero()) continue;
        // (-D)^k . f = (-1)^k sum_i C(k,i) f^{(i)} D^{k-i}
        RationalFn fd = f;
        std::vector<RationalFn> term(static_cast<size_t>(k) + 1, RationalFn::zero());
        for (int i = 0; i <= k; ++i) {
            if (i > 0) fd = fd.derivative();
            if (fd.is_zero()) break;
            Rat s((k % 2 == 0) ? 1 : -1);
            term[static_cast<size_t>(k - i)] =
                s * Rat(C[static_cast<size_t>(k)][static_cast<size_t>(i)]) * fd;
        }
        r = r + DiffOp(std::move(term));
    }
    return r;
}

QuasiRational DiffOp::apply(const QuasiRational& v) const {
    QuasiRational acc;
    QuasiRational dv = v;
    for (int k = 0; k <= order(); ++k) {
        if (k > 0) dv = dv.derivative();
        const RationalFn& f = c_[static_cast<size_t>(k)];
        if (f.is_zero()) continue;
        acc = acc + QuasiRational(f, 0) * dv;
    }
    return acc;
}

std::string DiffOp::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = order(); k >= 0; --k) {
        const RationalFn f = coeff(k);
        if (f.is_zero()) continue;
        if (!first) os << " + ";
        os << "[" << f.str(var) << "]";
        if (k > 0) os << "*D^" << k;
        first = false;
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp poly_in_op(const Poly& p, const DiffOp& H) {
    DiffOp r;
    for (int k = p.degree(); k >= 0; --k) r = r * H + DiffOp::mul(p.coeff(k));
    return r;
}

std::optional<DiffOp> divide_right_exact(const DiffOp& C, const DiffOp& H, const Rat& root) {
    const DiffOp D = H - DiffOp::mul(root);
    if (!D.coeff(D.order()).is_constant())
        throw std::invalid_argument("divide_right_exact: divisor needs constant leading coefficient");
    const Rat lead = D.coeff(D.order()).constant_value();
    const int dord = D.order();
    DiffOp rem = C;
    std::vector<RationalFn> q(
        rem.order() >= dord ? static_cast<size_t>(rem.order() - dord) + 1 : 0,
        RationalFn::zero());
    while (!rem.is_zero() && rem.order() >= dord) {
        int k = rem.order() - dord;
        RationalFn qk = rat(1) / lead * rem.coeff(rem.order());
        q[static_cast<size_t>(k)] = qk;
        std::vector<RationalFn> t(static_cast<size_t>(k) + 1, RationalFn::zero());
        t.back() = qk;
        rem = rem - DiffOp(std::move(t)) * D;
    }
    if (!rem.is_zero()) return std::nullopt;
    return DiffOp(std::move(q));
}

std::optional<Poly> as_poly_in_op(const DiffOp& C, const DiffOp& H) {
    if (C.is_zero()) return Poly();
    if (C.order() % H.order() != 0) return std::nullopt;
    int m = C.order() / H.order();
    // leading coefficients of the powers of H are constants
    std::vector<DiffOp> hp{DiffOp::identity()};
    for (int k = 1; k <= m; ++k) hp.push_back(hp.back() * H);
    DiffOp rem = C;
    std::vector<Rat> p(static_cast<size_t>(m) + 1, rat(0));
    for (int k = m; k >= 0; --k) {
        if (rem.is_zero()) break;
        if (rem.order() > k * H.order()) return std::nullopt;
        if (rem.order() < k * H.order()) continue;
        RationalFn top = rem.coeff(rem.order());
        RationalFn hl = hp[static_cast<size_t>(k)].coeff(k * H.order());
        RationalFn c = top / hl;
        if (!c.is_constant()) return std::nullopt;
        p[static_cast<size_t>(k)] = c.constant_value();
        rem = rem - p[static_cast<size_t>(k)] * hp[static_cast<size_t>(k)];
    }
    if (!rem.is_zero()) return std::nullopt;
    return Poly(std::move(p));
}

}  // namespace reqho::exact
