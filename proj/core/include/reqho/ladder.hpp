#pragma once

#include "reqho/dckat.hpp"

namespace reqho::ladder {

using dckat::ExtendedSystem;
using exact::DiffOp;
using exact::Poly;
using exact::Rat;

enum class LadderKind { A, B, C };

// Ladder operator for an extended system: [H, op] = direction*step*op holds
// as an exact operator identity (checked at construction).
struct LadderOp {
    DiffOp op;
    LadderKind kind = LadderKind::A;
    int direction = -1;  // -1 lowering, +1 raising
    long step = 2;
    int order = 0;
    std::string name;
};

// Polynomial in the Hamiltonian kept in factored form.
struct HPolynomial {
    std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), ascending
    Rat lead = exact::rat(1);
    Poly expand() const;
    std::vector<Rat> root_multiset() const;  // ascending, with repeats
};

// Factor p into lead * prod (z - r_k)^{m_k} over integer roots. Throws if a
// nonconstant factor without integer roots remains.
HPolynomial factor_integer_roots(const Poly& p, long scan_bound);

// The three basic ladder pairs of one system, built from the intertwiners
// of its two complementary minimal schemes.
struct Trinity {
    ExtendedSystem alpha;  // minimal scheme of non-physical seeds
    ExtendedSystem beta;   // complementary minimal scheme of physical seeds
    DiffOp h;              // the extended Hamiltonian (ground level 0)
    long n_plus = 0;
    long n_minus = 0;
    long delta = 0;  // n_plus + 2 n_minus
    Poly p_A;        // A^- A^+ = p_A(h)
    Poly p_B;        // B^+ B^- = p_B(H_src)
    LadderOp a_minus, a_plus;  // dressed a^-/a^+, step 2, order 2 n_plus + 1
    LadderOp b_minus, b_plus;  // dressed via the beta scheme, step 2, order 4 n_minus + 1
    LadderOp c_minus, c_plus;  // glued intertwiners, step 2*delta, order delta

    const LadderOp& get(LadderKind kind, int direction) const;
};

// Requires the two systems to be complementary minimal schemes of the same
// extension (equal potentials); verifies all commutation relations and the
// defining product polynomials exactly.
Trinity build_trinity(const ExtendedSystem& alpha, const ExtendedSystem& beta);

enum class SecondaryKind { A_n, B_n, C_n, C_minus_n };

// Higher-order ladder operators obtained by inserting powers of a^-/a^+
// between the intertwiners. For C_minus_n, 1 <= n <= delta - 1; past that
// the operator collapses to a polynomial in the Hamiltonian.
LadderOp secondary_ladder(const Trinity& t, SecondaryKind kind, int direction, int n);

// Expands op1*op2 and matches it against a polynomial in the Hamiltonian;
// throws std::runtime_error when the composition is not central.
HPolynomial product_to_hpoly(const Trinity& t, const LadderOp& op1, const LadderOp& op2);

struct IdentityRecord {
    std::string name;
    DiffOp lhs, rhs;
    enum class Status { Pending, Verified, Failed } status = Status::Pending;
    std::string note;  // first differing coefficient when Failed
};

IdentityRecord& verify_identity(IdentityRecord& rec);

// Every operator identity applicable to the system's (n_plus, n_minus),
// verified coefficient-by-coefficient; example-specific relations are
// included only when the scheme matches their stated scope. The generation
// identity composes (A-)^delta, order delta*(2 n_plus + 1); it is included
// automatically up to order 36 and on request via deep_generation.
std::vector<IdentityRecord> identity_catalog(const Trinity& t, bool deep_generation = false);

}  // namespace reqho::ladder
