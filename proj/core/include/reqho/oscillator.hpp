#pragma once

#include "reqho/diff_op.hpp"

namespace reqho::osc {

using exact::DiffOp;
using exact::Poly;
using exact::QuasiPoly;
using exact::Rat;

enum class Kind { Physical, NonPhysical };

// One oscillator eigenfunction usable as a transformation seed. Physical
// states decay (gaussian exponent -1), non-physical ones grow (+1); the
// polynomial part always has a positive leading coefficient, and the
// eigenvalue is quoted against the unshifted Hamiltonian -d^2/dx^2 + x^2.
struct SeedState {
    Kind kind;
    int index;
    QuasiPoly state;
    Rat eigenvalue;
};

// H_n(x) e^{-x^2/2} with eigenvalue 2n+1 (physicists' Hermite recurrence).
SeedState hermite_physical(int n);

// The growing family obtained by x -> ix, normalized to a real polynomial
// with positive leading coefficient, times e^{+x^2/2}; eigenvalue -(2n+1).
SeedState hermite_nonphysical(int n);

SeedState seed(Kind kind, int index);

// -d^2/dx^2 + x^2 + shift
DiffOp qho_hamiltonian(const Rat& shift);

// sign -1: a^- = d/dx + x ; sign +1: a^+ = -d/dx + x
DiffOp ladder_a(int sign);

}  // namespace reqho::osc
