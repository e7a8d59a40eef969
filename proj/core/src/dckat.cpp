#include "reqho/dckat.hpp"

#include <algorithm>
#include <stdexcept>

namespace reqho::dckat {

using exact::count_real_roots;
using exact::exact_div;
using exact::rat;

namespace {

// Fraction-free Bareiss elimination; exact over Q[x].
Poly poly_det(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    if (n == 0) return Poly::one();
    int sign = 1;
    Poly prev = Poly::one();
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return sign == 1 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// rows x cols matrix of quasi-derivatives of the states' polynomial parts:
// entry (r, c) is the polynomial part of d^r/dx^r applied to state c.
std::vector<std::vector<Poly>> derivative_matrix(const std::vector<QuasiPoly>& states,
                                                 int rows) {
    std::vector<std::vector<Poly>> m(static_cast<size_t>(rows),
                                     std::vector<Poly>(states.size()));
    for (size_t c = 0; c < states.size(); ++c) {
        QuasiPoly d = states[c];
        for (int r = 0; r < rows; ++r) {
            m[static_cast<size_t>(r)][c] = d.poly();
            d = d.derivative();
        }
    }
    return m;
}

std::vector<std::vector<Poly>> drop_row(const std::vector<std::vector<Poly>>& m, int row) {
    std::vector<std::vector<Poly>> r;
    r.reserve(m.size() - 1);
    for (size_t i = 0; i < m.size(); ++i)
        if (static_cast<int>(i) != row) r.push_back(m[i]);
    return r;
}

int total_gexp(const std::vector<QuasiPoly>& states) {
    int s = 0;
    for (const auto& st : states) s += st.gexp();
    return s;
}

}  // namespace

Wronskian wronskian(const std::vector<QuasiPoly>& states) {
    if (states.empty()) throw std::invalid_argument("wronskian: needs at least one state");
    auto m = derivative_matrix(states, static_cast<int>(states.size()));
    Poly det = poly_det(std::move(m));
    if (det.is_zero()) return {QuasiPoly(), +1};
    int sgn = exact::sign(det.leading());
    if (sgn < 0) det = -det;
    return {QuasiPoly(det, total_gexp(states)), sgn};
}

Admissibility check_admissible(const Scheme& s) {
    if (s.empty()) throw std::invalid_argument("check_admissible: empty scheme");
    Admissibility out;
    out.screen_admissible = predict_levels(s).parity_ok;
    auto w = wronskian([&] {
        std::vector<QuasiPoly> st;
        for (const auto& seed : s.materialize()) st.push_back(seed.state);
        return st;
    }());
    if (w.value.is_zero()) throw std::logic_error("check_admissible: vanishing Wronskian");
    out.witness_roots = count_real_roots(w.value.poly());
    out.admissible = (out.witness_roots == 0);
    out.screen_agrees = (out.screen_admissible == out.admissible);
    return out;
}

DiffOp build_intertwiner(const Scheme& s) {
    if (s.empty()) return DiffOp::identity();
    std::vector<QuasiPoly> states;
    for (const auto& seed : s.materialize()) states.push_back(seed.state);
    const int n = static_cast<int>(states.size());
    auto m = derivative_matrix(states, n + 1);
    Poly w = poly_det(drop_row(m, n));
    if (w.is_zero()) throw std::logic_error("build_intertwiner: vanishing Wronskian");
    std::vector<RationalFn> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Poly minor = poly_det(drop_row(m, i));
        if ((n - i) % 2 != 0) minor = -minor;
        coeffs[static_cast<size_t>(i)] = RationalFn(minor, w);
    }
    return DiffOp(std::move(coeffs));
}

DiffOp intertwiner_via_chain(const Scheme& s) {
    DiffOp acc = DiffOp::identity();
    for (const auto& seed : s.materialize()) {
        QuasiRational phi = acc.apply(seed.state);
        if (phi.is_zero())
            throw std::logic_error("intertwiner_via_chain: dependent seed state");
        // log-derivative of r(x) e^{s x^2/2}
        RationalFn logd = phi.rat().derivative() / phi.rat() +
                          rat(phi.gexp()) * RationalFn::x();
        acc = DiffOp({-logd, RationalFn::one()}) * acc;
    }
    return acc;
}

DiffOp ExtendedSystem::hamiltonian() const {
    return DiffOp({potential, RationalFn::zero(), RationalFn(rat(-1))});
}

DiffOp ExtendedSystem::source_hamiltonian() const { return osc::qho_hamiltonian(base_shift); }

ExtendedSystem build_system(const Scheme& s) {
    ExtendedSystem sys;
    sys.scheme = s;
    sys.layout = predict_levels(s);

    if (s.empty()) {
        sys.wronskian = {QuasiPoly(Poly::one(), 0), +1};
        sys.intertwiner_down = DiffOp::identity();
    } else {
        auto adm = check_admissible(s);
        if (!adm.admissible)
            throw inadmissible_error(
                "build_system: inadmissible scheme " + s.str() + " (Wronskian has " +
                    std::to_string(adm.witness_roots) + " real root(s))",
                adm.witness_roots);
        std::vector<QuasiPoly> states;
        for (const auto& seed : s.materialize()) states.push_back(seed.state);
        sys.wronskian = wronskian(states);
        sys.intertwiner_down = build_intertwiner(s);
    }
    sys.intertwiner_up = sys.intertwiner_down.adjoint();

    // V = x^2 - 2 (ln W)'' + const, with the constant fixing the ground
    // level at zero; the gaussian factor of W contributes -2*sigma.
    const Poly& w = sys.wronskian.value.poly();
    const int sigma = sys.wronskian.value.gexp();
    RationalFn log_second = RationalFn(w.derivative(), w).derivative();
    sys.potential = RationalFn(Poly::x() * Poly::x()) - rat(2) * log_second -
                    RationalFn(rat(2L * sigma + sys.layout.raw_ground));

    sys.base_shift = rat(2 * sys.layout.delta - 1);
    sys.displacement = rat(sys.layout.raw_ground) + sys.base_shift;

    // construction invariants
    DiffOp lhs = sys.intertwiner_down * sys.source_hamiltonian();
    DiffOp rhs = (sys.hamiltonian() + DiffOp::mul(sys.displacement)) * sys.intertwiner_down;
    if (!(lhs == rhs))
        throw std::logic_error("build_system: intertwining relation failed for " + s.str());
    for (const auto& seed : s.materialize())
        if (!sys.intertwiner_down.apply(seed.state).is_zero())
            throw std::logic_error("build_system: seed state not annihilated for " + s.str());
    return sys;
}

std::vector<Rat> product_polynomial_check(const ExtendedSystem& sys) {
    std::vector<Rat> roots;
    Poly p = Poly::one();
    for (const auto& seed : sys.scheme.materialize()) {
        Rat e = seed.eigenvalue + sys.base_shift;
        roots.push_back(e);
        p = p * Poly({-e, rat(1)});
    }
    DiffOp composed = sys.intertwiner_up * sys.intertwiner_down;
    if (!(composed == poly_in_op(p, sys.source_hamiltonian())))
        throw std::logic_error("product_polynomial_check: A^+ A^- is not the expected polynomial in H");
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace reqho::dckat
