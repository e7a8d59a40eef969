#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reqho/quasi.hpp"

namespace reqho::exact {

// Finite-order linear differential operator sum_k c_k(x) d^k/dx^k with
// RationalFn coefficients, order-0 coefficient first. Canonical form strips
// trailing zero coefficients, so operator== is operator identity.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<RationalFn> coeffs) : c_(std::move(coeffs)) { trim(); }

    static DiffOp zero() { return DiffOp(); }
    static DiffOp identity() { return DiffOp({RationalFn::one()}); }
    static DiffOp d_dx() { return DiffOp({RationalFn::zero(), RationalFn::one()}); }
    // multiplication operator f(x)*
    static DiffOp mul(RationalFn f) { return DiffOp({std::move(f)}); }
    static DiffOp mul(const Rat& c) { return DiffOp({RationalFn(c)}); }

    bool is_zero() const { return c_.empty(); }
    // order of the zero operator is -1
    int order() const { return static_cast<int>(c_.size()) - 1; }
    RationalFn coeff(int k) const;
    const std::vector<RationalFn>& coeffs() const { return c_; }

    DiffOp operator-() const;
    friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
    // composition L1 after L2
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
    friend DiffOp operator*(const Rat& s, const DiffOp& L);
    friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

    DiffOp pow(int e) const;

    // formal adjoint: sum c_k D^k -> sum (-D)^k . c_k ; involutive
    DiffOp adjoint() const;

    QuasiRational apply(const QuasiRational& v) const;
    QuasiRational apply(const QuasiPoly& v) const { return apply(QuasiRational(v)); }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<RationalFn> c_;
};

// commutator [a, b] = a*b - b*a
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// p(H) for a plain polynomial p, by Horner composition.
DiffOp poly_in_op(const Poly& p, const DiffOp& H);

// Right-divide C by (H - root): C = Q*(H - root) + R. Returns Q when the
// remainder R vanishes identically, std::nullopt otherwise. H must have a
// nonzero constant leading coefficient.
std::optional<DiffOp> divide_right_exact(const DiffOp& C, const DiffOp& H, const Rat& root);

// Reconstruct p with C == p(H) by peeling leading powers of H. Returns
// std::nullopt when C is not a polynomial in H.
std::optional<Poly> as_poly_in_op(const DiffOp& C, const DiffOp& H);

}  // namespace reqho::exact
