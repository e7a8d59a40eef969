#pragma once

#include <optional>

#include "reqho/scheme.hpp"

namespace reqho::dckat {

using exact::DiffOp;
using exact::Poly;
using exact::QuasiPoly;
using exact::QuasiRational;
using exact::Rat;
using exact::RationalFn;

struct Wronskian {
    QuasiPoly value;  // polynomial part normalized to positive leading coefficient
    int sign;         // +1 or -1 factor pulled out by the normalization
};

// Exact Wronskian determinant of the given states. The gaussian exponent of
// the result is the sum of the member exponents.
Wronskian wronskian(const std::vector<QuasiPoly>& states);

struct Admissibility {
    bool admissible = false;    // ground truth: Wronskian polynomial part nodeless
    int witness_roots = 0;      // distinct real roots found when inadmissible
    bool screen_admissible = false;  // fast block/parity screen verdict
    bool screen_agrees = true;  // screen vs root count; a mismatch is a defect
};

Admissibility check_admissible(const Scheme& s);

// Monic intertwining operator of order |s| built by cofactor expansion of
// the bordered Wronskian along the derivative column; its kernel is the
// span of the seed states. Defined for any scheme with a nonzero Wronskian;
// the coefficients are singular when the scheme is inadmissible.
DiffOp build_intertwiner(const Scheme& s);

// Same operator assembled as the iterated product of first-order factors.
// Cross-check only: intermediate factors may be singular rational functions
// even for admissible schemes, but the product telescopes to the cofactor
// operator.
DiffOp intertwiner_via_chain(const Scheme& s);

// A fully assembled rational extension in the ground-zero gauge.
struct ExtendedSystem {
    Scheme scheme;
    LevelLayout layout;
    Wronskian wronskian;
    RationalFn potential;     // V(x) with the ground level at exactly 0
    Rat base_shift;           // source Hamiltonian is H = H_osc + base_shift
    Rat displacement;         // intertwiner_down * H = (H_ext + displacement) * intertwiner_down
    DiffOp intertwiner_down;  // order |s|, monic
    DiffOp intertwiner_up;    // formal adjoint of intertwiner_down

    DiffOp hamiltonian() const;         // -d^2/dx^2 + potential
    DiffOp source_hamiltonian() const;  // H_osc + base_shift
};

class inadmissible_error : public std::runtime_error {
public:
    inadmissible_error(const std::string& what, int witness)
        : std::runtime_error(what), witness_roots(witness) {}
    int witness_roots;
};

// Builds potential, intertwiners and bookkeeping; throws inadmissible_error
// when the scheme fails the nodelessness test, std::logic_error if any
// construction invariant breaks.
ExtendedSystem build_system(const Scheme& s);

// Verifies up*down == prod_k (H_src - E_k) with the seed eigenvalues taken
// in the working gauge, and returns those roots sorted ascending. Throws
// std::logic_error when the identity fails.
std::vector<Rat> product_polynomial_check(const ExtendedSystem& sys);

}  // namespace reqho::dckat
