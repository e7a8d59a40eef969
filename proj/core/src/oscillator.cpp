#include "reqho/oscillator.hpp"

#include <stdexcept>

namespace reqho::osc {

using exact::rat;
using exact::RationalFn;

namespace {

Poly hermite_poly(int n, bool nonphysical) {
    if (n < 0) throw std::invalid_argument("hermite: negative index");
    // H_{k+1} = 2x H_k - 2k H_{k-1}; the growing family flips the sign of
    // the second term and stays real with positive leading coefficient.
    Poly hm1;  // H_{-1} := 0
    Poly h = Poly::one();
    for (int k = 0; k < n; ++k) {
        Poly next = rat(2) * (Poly::x() * h);
        Poly corr = rat(2 * k) * hm1;
        next = nonphysical ? next + corr : next - corr;
        hm1 = h;
        h = next;
    }
    return h;
}

}  // namespace

SeedState hermite_physical(int n) {
    return {Kind::Physical, n, QuasiPoly(hermite_poly(n, false), -1), rat(2 * n + 1)};
}

SeedState hermite_nonphysical(int n) {
    return {Kind::NonPhysical, n, QuasiPoly(hermite_poly(n, true), +1), rat(-(2 * n + 1))};
}

SeedState seed(Kind kind, int index) {
    return kind == Kind::Physical ? hermite_physical(index) : hermite_nonphysical(index);
}

DiffOp qho_hamiltonian(const Rat& shift) {
    return DiffOp({RationalFn(Poly::x() * Poly::x() + Poly(shift)),
                   RationalFn::zero(),
                   RationalFn(rat(-1))});
}

DiffOp ladder_a(int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("ladder_a: sign must be +1 or -1");
    return DiffOp({RationalFn::x(), RationalFn(rat(-sign))});
}

}  // namespace reqho::osc
