#include "reqho/ladder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace reqho::ladder {

using dckat::Kind;
using exact::poly_in_op;
using exact::rat;
using exact::RationalFn;

Poly HPolynomial::expand() const {
    Poly p(lead);
    for (const auto& [r, m] : roots)
        for (int i = 0; i < m; ++i) p = p * Poly({-r, rat(1)});
    return p;
}

std::vector<Rat> HPolynomial::root_multiset() const {
    std::vector<Rat> out;
    for (const auto& [r, m] : roots)
        for (int i = 0; i < m; ++i) out.push_back(r);
    return out;
}

HPolynomial factor_integer_roots(const Poly& p, long scan_bound) {
    if (p.is_zero()) throw std::invalid_argument("factor_integer_roots: zero polynomial");
    HPolynomial out;
    Poly rem = p;
    out.lead = rem.leading();
    long bound = scan_bound;
    Rat cauchy = exact::root_bound(p);
    exact::BigInt rounded;
    mpz_cdiv_q(rounded.get_mpz_t(), cauchy.get_num().get_mpz_t(), cauchy.get_den().get_mpz_t());
    if (rounded.fits_slong_p() && rounded.get_si() < bound) bound = rounded.get_si();
    for (long r = -bound; r <= bound && rem.degree() > 0; ++r) {
        Rat root = rat(r);
        int mult = 0;
        while (rem.degree() > 0 && rem.eval(root) == 0) {
            rem = exact::exact_div(rem, Poly({-root, rat(1)}));
            ++mult;
        }
        if (mult > 0) out.roots.push_back({root, mult});
    }
    if (rem.degree() > 0)
        throw std::runtime_error("factor_integer_roots: residual factor without integer roots: " +
                                 rem.str());
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

const LadderOp& Trinity::get(LadderKind kind, int direction) const {
    switch (kind) {
        case LadderKind::A: return direction < 0 ? a_minus : a_plus;
        case LadderKind::B: return direction < 0 ? b_minus : b_plus;
        case LadderKind::C: return direction < 0 ? c_minus : c_plus;
    }
    throw std::logic_error("Trinity::get: bad kind");
}

namespace {

LadderOp make_checked(const DiffOp& h, DiffOp op, LadderKind kind, int direction, long step,
                      std::string name) {
    DiffOp defect = commutator(h, op) - rat(direction) * rat(step) * op;
    if (!defect.is_zero())
        throw std::logic_error("ladder commutation failed for " + name);
    LadderOp l;
    l.order = op.order();
    l.op = std::move(op);
    l.kind = kind;
    l.direction = direction;
    l.step = step;
    l.name = std::move(name);
    return l;
}

Poly poly_from_roots(const std::vector<Rat>& roots) {
    Poly p = Poly::one();
    for (const auto& r : roots) p = p * Poly({-r, rat(1)});
    return p;
}

}  // namespace

Trinity build_trinity(const ExtendedSystem& alpha, const ExtendedSystem& beta) {
    if (!alpha.scheme.is_minimal(Kind::NonPhysical))
        throw std::invalid_argument("build_trinity: first system is not a minimal alpha scheme");
    if (!beta.scheme.is_minimal(Kind::Physical))
        throw std::invalid_argument("build_trinity: second system is not a minimal beta scheme");
    if (!(alpha.potential == beta.potential))
        throw std::invalid_argument("build_trinity: schemes are not complementary (potentials differ)");

    Trinity t;
    t.alpha = alpha;
    t.beta = beta;
    t.h = alpha.hamiltonian();
    t.n_plus = alpha.scheme.size();
    t.n_minus = beta.scheme.size() / 2;
    t.delta = t.n_plus + 2 * t.n_minus;

    const DiffOp am = osc::ladder_a(-1);
    const DiffOp ap = osc::ladder_a(+1);
    const DiffOp &A = alpha.intertwiner_down, &At = alpha.intertwiner_up;
    const DiffOp &B = beta.intertwiner_down, &Bt = beta.intertwiner_up;

    t.a_minus = make_checked(t.h, A * am * At, LadderKind::A, -1, 2, "A-");
    t.a_plus = make_checked(t.h, A * ap * At, LadderKind::A, +1, 2, "A+");
    t.b_minus = make_checked(t.h, B * am * Bt, LadderKind::B, -1, 2, "B-");
    t.b_plus = make_checked(t.h, B * ap * Bt, LadderKind::B, +1, 2, "B+");
    t.c_minus = make_checked(t.h, B * At, LadderKind::C, -1, 2 * t.delta, "C-");
    t.c_plus = make_checked(t.h, A * Bt, LadderKind::C, +1, 2 * t.delta, "C+");

    if (t.a_minus.order != 2 * t.n_plus + 1 || t.b_minus.order != 4 * t.n_minus + 1 ||
        t.c_minus.order != t.delta)
        throw std::logic_error("build_trinity: unexpected ladder operator orders");

    // defining polynomials: p_A over the separated energies, p_B over the
    // deleted source levels
    std::vector<Rat> a_roots;
    for (long e : alpha.layout.separated) a_roots.push_back(rat(e));
    t.p_A = poly_from_roots(a_roots);
    std::vector<Rat> b_roots;
    for (int i : beta.scheme.indices(Kind::Physical)) b_roots.push_back(rat(2L * i + 2 * t.delta));
    t.p_B = poly_from_roots(b_roots);

    if (!(A * At == poly_in_op(t.p_A, t.h)))
        throw std::logic_error("build_trinity: A- A+ != p_A(H)");
    if (!(Bt * B == poly_in_op(t.p_B, alpha.source_hamiltonian())))
        throw std::logic_error("build_trinity: B+ B- != p_B(H_src)");
    return t;
}

LadderOp secondary_ladder(const Trinity& t, SecondaryKind kind, int direction, int n) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("secondary_ladder: direction must be +1 or -1");
    const DiffOp a = osc::ladder_a(direction);
    const DiffOp &A = t.alpha.intertwiner_down, &At = t.alpha.intertwiner_up;
    const DiffOp &B = t.beta.intertwiner_down, &Bt = t.beta.intertwiner_up;
    std::ostringstream name;
    switch (kind) {
        case SecondaryKind::A_n: {
            if (n < 1) throw std::invalid_argument("secondary_ladder: A_n needs n >= 1");
            name << (direction < 0 ? "A-_" : "A+_") << n;
            return make_checked(t.h, A * a.pow(n) * At, LadderKind::A, direction, 2L * n,
                                name.str());
        }
        case SecondaryKind::B_n: {
            if (n < 1) throw std::invalid_argument("secondary_ladder: B_n needs n >= 1");
            name << (direction < 0 ? "B-_" : "B+_") << n;
            return make_checked(t.h, B * a.pow(n) * Bt, LadderKind::B, direction, 2L * n,
                                name.str());
        }
        case SecondaryKind::C_n: {
            if (n < 1) throw std::invalid_argument("secondary_ladder: C_n needs n >= 1");
            name << (direction < 0 ? "C-_" : "C+_") << n;
            DiffOp op = direction < 0 ? B * osc::ladder_a(-1).pow(n - 1) * At
                                      : A * osc::ladder_a(+1).pow(n - 1) * Bt;
            return make_checked(t.h, std::move(op), LadderKind::C, direction,
                                2 * t.delta + 2L * (n - 1), name.str());
        }
        case SecondaryKind::C_minus_n: {
            if (n < 1 || n > t.delta - 1)
                throw std::invalid_argument(
                    "secondary_ladder: C_{-n} needs 1 <= n <= n+ + 2n- - 1");
            name << (direction < 0 ? "C-_{-" : "C+_{-") << n << "}";
            DiffOp op = direction < 0 ? B * osc::ladder_a(+1).pow(n) * At
                                      : A * osc::ladder_a(-1).pow(n) * Bt;
            return make_checked(t.h, std::move(op), LadderKind::C, direction,
                                2 * t.delta - 2L * n, name.str());
        }
    }
    throw std::logic_error("secondary_ladder: bad kind");
}

HPolynomial product_to_hpoly(const Trinity& t, const LadderOp& op1, const LadderOp& op2) {
    DiffOp composed = op1.op * op2.op;
    auto p = exact::as_poly_in_op(composed, t.h);
    if (!p)
        throw std::runtime_error("product_to_hpoly: " + op1.name + "*" + op2.name +
                                 " is not a polynomial in the Hamiltonian");
    return factor_integer_roots(*p, 2 * t.delta + 2L * p->degree() + 64);
}

IdentityRecord& verify_identity(IdentityRecord& rec) {
    if (rec.lhs == rec.rhs) {
        rec.status = IdentityRecord::Status::Verified;
        rec.note.clear();
        return rec;
    }
    rec.status = IdentityRecord::Status::Failed;
    int top = std::max(rec.lhs.order(), rec.rhs.order());
    for (int k = 0; k <= top; ++k) {
        if (!(rec.lhs.coeff(k) == rec.rhs.coeff(k))) {
            std::ostringstream os;
            os << "first differing coefficient at derivative order " << k << ": lhs="
               << rec.lhs.coeff(k).str() << " rhs=" << rec.rhs.coeff(k).str();
            rec.note = os.str();
            break;
        }
    }
    return rec;
}

namespace {

void push(std::vector<IdentityRecord>& out, std::string name, DiffOp lhs, DiffOp rhs) {
    IdentityRecord rec{std::move(name), std::move(lhs), std::move(rhs)};
    verify_identity(rec);
    out.push_back(std::move(rec));
}

Poly shifted(const Poly& p, long a) { return p.shift_arg(rat(a)); }

}  // namespace

std::vector<IdentityRecord> identity_catalog(const Trinity& t) {
    std::vector<IdentityRecord> out;
    const DiffOp& h = t.h;
    const DiffOp hsrc = t.alpha.source_hamiltonian();
    const long d2 = 2 * t.delta;
    const DiffOp &A = t.alpha.intertwiner_down, &At = t.alpha.intertwiner_up;
    const DiffOp &B = t.beta.intertwiner_down, &Bt = t.beta.intertwiner_up;
    const Rat sgn = rat(t.n_plus % 2 == 0 ? 1 : -1);

    // commutation relations of the trinity
    for (const LadderOp* L : {&t.a_minus, &t.a_plus, &t.b_minus, &t.b_plus, &t.c_minus, &t.c_plus})
        push(out, "[H," + L->name + "] = " + (L->direction < 0 ? "-" : "+") +
                      std::to_string(L->step) + " " + L->name,
             commutator(h, L->op), rat(L->direction) * rat(L->step) * L->op);

    // intertwiner products as polynomials in the Hamiltonians
    push(out, "A- A+ = P_A(H)", A * At, poly_in_op(t.p_A, h));
    push(out, "A+ A- = P_A(H_src)", At * A, poly_in_op(t.p_A, hsrc));
    push(out, "B+ B- = P_B(H_src)", Bt * B, poly_in_op(t.p_B, hsrc));
    push(out, "B- B+ = P_B(H + 2D)", B * Bt, poly_in_op(shifted(t.p_B, d2), h));

    // products of the basic ladder operators
    Poly pA_cal = shifted(t.p_A, -2) * t.p_A * Poly({rat(-d2), rat(1)});
    Poly pB_cal = shifted(t.p_B, d2 - 2) * shifted(t.p_B, d2) * Poly::x();
    Poly pC_cal = t.p_B * t.p_A;
    push(out, "A+ A- = (H-2D) P_A(H-2) P_A(H)", t.a_plus.op * t.a_minus.op, poly_in_op(pA_cal, h));
    push(out, "A- A+ = P_calA(H+2)", t.a_minus.op * t.a_plus.op, poly_in_op(shifted(pA_cal, 2), h));
    push(out, "B+ B- = H P_B(H+2D-2) P_B(H+2D)", t.b_plus.op * t.b_minus.op, poly_in_op(pB_cal, h));
    push(out, "B- B+ = P_calB(H+2)", t.b_minus.op * t.b_plus.op, poly_in_op(shifted(pB_cal, 2), h));
    push(out, "C+ C- = P_B(H) P_A(H)", t.c_plus.op * t.c_minus.op, poly_in_op(pC_cal, h));
    push(out, "C- C+ = P_calC(H+2D)", t.c_minus.op * t.c_plus.op, poly_in_op(shifted(pC_cal, d2), h));

    // complementarity of the minimal schemes
    push(out, "A+ B- = (-1)^{n+} (a-)^D", At * B, sgn * osc::ladder_a(-1).pow(t.delta));
    push(out, "B+ A- = (-1)^{n+} (a+)^D", Bt * A, sgn * osc::ladder_a(+1).pow(t.delta));
    Poly ladder_prod = Poly::one();
    for (long j = 0; j < t.delta; ++j) ladder_prod = ladder_prod * Poly({rat(-2 * j), rat(1)});
    push(out, "P_A(H) P_B(H+2D) = prod_{j<D} (H-2j)",
         poly_in_op(t.p_A * shifted(t.p_B, d2), h), poly_in_op(ladder_prod, h));

    // two-term bridge between A- and B-
    push(out, "(H-2D+2) P_A(H+2) B- = (H+2) P_B(H+2D) A-",
         poly_in_op(shifted(t.p_A, 2) * Poly({rat(-d2 + 2), rat(1)}), h) * t.b_minus.op,
         poly_in_op(shifted(t.p_B, d2) * Poly({rat(2), rat(1)}), h) * t.a_minus.op);

    // generation of C- from powers of A-
    Poly gen = Poly::one();
    for (long l = 0; l < t.delta; ++l) gen = gen * shifted(t.p_A, 2 * l);
    push(out, "(A-)^D = (-1)^{n+} prod_l P_A(H+2l) C-", t.a_minus.op.pow(static_cast<int>(t.delta)),
         sgn * (poly_in_op(gen, h) * t.c_minus.op));

    // quadratic compositions with secondary operators
    LadderOp A2p = secondary_ladder(t, SecondaryKind::A_n, +1, 2);
    push(out, "(A+)^2 = P_A(H-2) A+_2", t.a_plus.op.pow(2),
         poly_in_op(shifted(t.p_A, -2), h) * A2p.op);
    LadderOp Cdp = secondary_ladder(t, SecondaryKind::C_n, +1, static_cast<int>(t.delta) + 1);
    push(out, "(C+)^2 = (-1)^{n+} C+_{D+1}", t.c_plus.op.pow(2), sgn * Cdp.op);
    if (t.delta >= 2) {
        LadderOp Adm1 = secondary_ladder(t, SecondaryKind::A_n, -1, static_cast<int>(t.delta) - 1);
        push(out, "A+ C- = (-1)^{n+} (H-2D) A-_{D-1}", t.a_plus.op * t.c_minus.op,
             sgn * (poly_in_op(Poly({rat(-d2), rat(1)}), h) * Adm1.op));
    }
    LadderOp C2p = secondary_ladder(t, SecondaryKind::C_n, +1, 2);
    push(out, "A+ C+ = P_A(H-2) C+_2", t.a_plus.op * t.c_plus.op,
         poly_in_op(shifted(t.p_A, -2), h) * C2p.op);
    LadderOp Adp1 = secondary_ladder(t, SecondaryKind::A_n, -1, static_cast<int>(t.delta) + 1);
    push(out, "A- C- = (-1)^{n+} A-_{D+1}", t.a_minus.op * t.c_minus.op, sgn * Adp1.op);
    if (t.delta >= 2) {
        LadderOp Cm1p = secondary_ladder(t, SecondaryKind::C_minus_n, +1, 1);
        push(out, "A- C+ = P_A(H+2) C+_{-1}", t.a_minus.op * t.c_plus.op,
             poly_in_op(shifted(t.p_A, 2), h) * Cm1p.op);
    }

    const auto alpha_idx = t.alpha.scheme.indices(Kind::NonPhysical);

    // simplest extension built on the n = 2 non-physical state
    if (alpha_idx == std::vector<int>{2}) {
        push(out, "B- = A- (H-4)", t.b_minus.op,
             t.a_minus.op * poly_in_op(Poly({rat(-4), rat(1)}), h));
        LadderOp B2m = secondary_ladder(t, SecondaryKind::B_n, -1, 2);
        push(out, "B-_2 = (A-)^2", B2m.op, t.a_minus.op.pow(2));
        LadderOp B3m = secondary_ladder(t, SecondaryKind::B_n, -1, 3);
        push(out, "B-_3 = -C- (H-2)(H-4)", B3m.op,
             -(t.c_minus.op * poly_in_op(Poly({rat(-2), rat(1)}) * Poly({rat(-4), rat(1)}), h)));
        push(out, "(A-)^3 = -H(H+2)(H+4) C-", t.a_minus.op.pow(3),
             -(poly_in_op(Poly::x() * Poly({rat(2), rat(1)}) * Poly({rat(4), rat(1)}), h) *
               t.c_minus.op));
        push(out, "(A-)^3 = -C- (H-6)(H-4)(H-2)", t.a_minus.op.pow(3),
             -(t.c_minus.op *
               poly_in_op(Poly({rat(-6), rat(1)}) * Poly({rat(-4), rat(1)}) * Poly({rat(-2), rat(1)}),
                          h)));
        // operators inserted with reversed QHO ladder factors
        LadderOp A2m = secondary_ladder(t, SecondaryKind::A_n, -1, 2);
        push(out, "C-_{-1} = -A-_2", secondary_ladder(t, SecondaryKind::C_minus_n, -1, 1).op,
             -A2m.op);
        push(out, "C+_{-1} = -A+_2", secondary_ladder(t, SecondaryKind::C_minus_n, +1, 1).op,
             -A2p.op);
        push(out, "C-_{-2} = -(H-2) A-", secondary_ladder(t, SecondaryKind::C_minus_n, -1, 2).op,
             -(poly_in_op(Poly({rat(-2), rat(1)}), h) * t.a_minus.op));
        push(out, "C+_{-2} = -(H-4) A+", secondary_ladder(t, SecondaryKind::C_minus_n, +1, 2).op,
             -(poly_in_op(Poly({rat(-4), rat(1)}), h) * t.a_plus.op));
        // powers of A- against the stretched operators
        LadderOp A3m = secondary_ladder(t, SecondaryKind::A_n, -1, 3);
        push(out, "(A-)^2 = (H+2) A-_2", t.a_minus.op.pow(2),
             poly_in_op(Poly({rat(2), rat(1)}), h) * A2m.op);
        push(out, "(A-)^2 = A-_2 (H-2)", t.a_minus.op.pow(2),
             A2m.op * poly_in_op(Poly({rat(-2), rat(1)}), h));
        push(out, "(A-)^3 = (H+2)(H+4) A-_3", t.a_minus.op.pow(3),
             poly_in_op(Poly({rat(2), rat(1)}) * Poly({rat(4), rat(1)}), h) * A3m.op);
        push(out, "(A-)^3 = A-_3 (H-2)(H-4)", t.a_minus.op.pow(3),
             A3m.op * poly_in_op(Poly({rat(-2), rat(1)}) * Poly({rat(-4), rat(1)}), h));
    }

    // one separated state over the n = 4 non-physical seed
    if (alpha_idx == std::vector<int>{4}) {
        push(out, "B- = (H-2)(H-4)(H-6) A-",
             t.b_minus.op,
             poly_in_op(Poly({rat(-2), rat(1)}) * Poly({rat(-4), rat(1)}) * Poly({rat(-6), rat(1)}),
                        h) *
                 t.a_minus.op);
        // (A-)^5 generation; order counting requires the (H-2) factor on
        // top of the four factors quoted with the system's introduction
        Poly f = Poly::one();
        for (long r : {10L, 8L, 6L, 4L, 2L}) f = f * Poly({rat(-r), rat(1)});
        push(out, "(A-)^5 = -C- (H-10)(H-8)(H-6)(H-4)(H-2)", t.a_minus.op.pow(5),
             -(t.c_minus.op * poly_in_op(f, h)));
    }

    // two separated states from the {2,3} non-physical pair
    if (alpha_idx == std::vector<int>{2, 3}) {
        push(out, "H B- = (H-4) A-", h * t.b_minus.op,
             poly_in_op(Poly({rat(-4), rat(1)}), h) * t.a_minus.op);
        Poly f = Poly::one();
        for (long r : {8L, 8L, 6L, 6L, 4L, 4L, 2L, 10L}) f = f * Poly({rat(-r), rat(1)});
        push(out, "(A-)^4 = C- (H-8)^2 (H-6)^2 (H-4)^2 (H-2)(H-10)", t.a_minus.op.pow(4),
             t.c_minus.op * poly_in_op(f, h));
    }

    return out;
}

}  // namespace reqho::ladder
