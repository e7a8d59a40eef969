#pragma once

#include <string>
#include <vector>

#include "reqho/diff_op.hpp"

namespace reqho::numeric {

using exact::DiffOp;
using exact::QuasiRational;
using exact::RationalFn;

// Uniform grid on [-L, L] with Dirichlet boundaries; interior nodes are
// x_i = -L + (i+1) h (+ offset), i = 0..N-2.
struct Grid {
    double half_width = 10.0;
    int points = 4000;  // number of spacings; N-1 interior nodes
    double offset = 0.0;

    double h() const { return 2.0 * half_width / points; }
    int interior() const { return points - 1; }
    double node(int i) const { return -half_width + (i + 1) * h() + offset; }
    std::vector<double> nodes() const;
};

struct NumericSpectrum {
    std::vector<double> eigenvalues;               // ascending
    std::vector<std::vector<double>> eigenvectors; // grid-normalized, per level
    int points = 0;
    double half_width = 0.0;
    int stencil_order = 2;
};

// Lowest k eigenvalues/vectors of -d^2/dx^2 + V on the grid via the
// second-order central-difference tridiagonal discretization (bisection
// plus inverse iteration underneath). Requires k <= N/4 and V nonsingular
// on the nodes.
NumericSpectrum eigensolve(const RationalFn& potential, const Grid& grid, int k);

struct RichardsonSpectrum {
    std::vector<double> coarse;        // grid with N/2 spacings
    std::vector<double> fine;          // grid with N spacings
    std::vector<double> extrapolated;  // (4*fine - coarse)/3
    bool converged = true;             // false when a level moved the wrong way
};

// h^2 -> 0 extrapolation over the N/2 and N grids; both raw spectra are
// always reported alongside the extrapolated values.
RichardsonSpectrum eigensolve_richardson(const RationalFn& potential, const Grid& grid, int k);

struct TildeState {
    std::vector<double> values;  // psi(x_i) * int_{x0}^{x_i} dxi / psi^2
    int first = 0, last = -1;    // inclusive usable window (quadrature stayed finite)
    double base_point = 0.0;     // snapped to the nearest grid node
};

// Second linearly independent solution at the same eigenvalue, built by
// composite Simpson-type quadrature of 1/psi^2. psi must not vanish on the
// usable window.
TildeState tilde_state(const QuasiRational& psi, double x0, const Grid& grid);

class pole_error : public std::runtime_error {
public:
    pole_error(const std::string& what, int node) : std::runtime_error(what), node_index(node) {}
    int node_index;
};

// Applies an exact-coefficient operator on sampled values: coefficients
// evaluated at the nodes, derivatives via centered stencils of fourth-order
// accuracy. Returns values on the same grid; the first/last `margin()`
// nodes are zeroed. Throws pole_error when a coefficient has a pole on a
// node (caller retries on a grid shifted by h/2).
std::vector<double> apply_numeric(const DiffOp& op, const std::vector<double>& values,
                                  const Grid& grid);
int stencil_margin(const DiffOp& op);

// Centered finite-difference weights for the m-th derivative on the nodes
// offsets*h around 0 (Fornberg's recursion).
std::vector<double> fd_weights(int m, const std::vector<double>& offsets);

void write_potential_csv(const std::string& path, const RationalFn& potential, const Grid& grid);

struct SpectrumRow {
    int level;
    double predicted;
    double computed;
    double error;
};
void write_spectrum_csv(const std::string& path, const std::vector<SpectrumRow>& rows);

}  // namespace reqho::numeric
