#include "reqho/numeric.hpp"

#include <lapacke.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace reqho::numeric {

std::vector<double> Grid::nodes() const {
    std::vector<double> x(static_cast<size_t>(interior()));
    for (int i = 0; i < interior(); ++i) x[static_cast<size_t>(i)] = node(i);
    return x;
}

NumericSpectrum eigensolve(const RationalFn& potential, const Grid& grid, int k) {
    const int m = grid.interior();
    if (k < 1 || k > grid.points / 4)
        throw std::invalid_argument("eigensolve: need 1 <= k <= N/4");
    const double h = grid.h();
    std::vector<double> diag(static_cast<size_t>(m));
    std::vector<double> off(static_cast<size_t>(m - 1), -1.0 / (h * h));
    for (int i = 0; i < m; ++i) {
        double v = potential.eval(grid.node(i));
        if (!std::isfinite(v))
            throw std::domain_error("eigensolve: potential not finite on a grid node");
        diag[static_cast<size_t>(i)] = 2.0 / (h * h) + v;
    }

    lapack_int found = 0, nsplit = 0;
    std::vector<double> w(static_cast<size_t>(m));
    std::vector<lapack_int> iblock(static_cast<size_t>(m)), isplit(static_cast<size_t>(m));
    lapack_int info = LAPACKE_dstebz('I', 'B', m, 0.0, 0.0, 1, k, 2.0 * LAPACKE_dlamch('S'),
                                     diag.data(), off.data(), &found, &nsplit, w.data(),
                                     iblock.data(), isplit.data());
    if (info != 0 || found != k)
        throw std::runtime_error("eigensolve: dstebz failed, info=" + std::to_string(info));

    std::vector<double> z(static_cast<size_t>(m) * k);
    std::vector<lapack_int> ifail(static_cast<size_t>(k));
    info = LAPACKE_dstein(LAPACK_COL_MAJOR, m, diag.data(), off.data(), k, w.data(),
                          iblock.data(), isplit.data(), z.data(), m, ifail.data());
    if (info != 0)
        throw std::runtime_error("eigensolve: dstein failed, info=" + std::to_string(info));

    NumericSpectrum out;
    out.points = grid.points;
    out.half_width = grid.half_width;
    out.eigenvalues.assign(w.begin(), w.begin() + k);
    out.eigenvectors.resize(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        auto& v = out.eigenvectors[static_cast<size_t>(j)];
        v.assign(z.begin() + static_cast<size_t>(j) * m, z.begin() + static_cast<size_t>(j + 1) * m);
        double norm2 = 0.0;
        for (double a : v) norm2 += a * a * h;
        double scale = 1.0 / std::sqrt(norm2);
        for (double& a : v) a *= scale;
    }
    return out;
}

RichardsonSpectrum eigensolve_richardson(const RationalFn& potential, const Grid& grid, int k) {
    if (grid.points % 2 != 0)
        throw std::invalid_argument("eigensolve_richardson: N must be even");
    Grid coarse = grid;
    coarse.points = grid.points / 2;
    RichardsonSpectrum out;
    out.coarse = eigensolve(potential, coarse, k).eigenvalues;
    out.fine = eigensolve(potential, grid, k).eigenvalues;
    out.extrapolated.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        double c = out.coarse[static_cast<size_t>(i)], f = out.fine[static_cast<size_t>(i)];
        out.extrapolated[static_cast<size_t>(i)] = (4.0 * f - c) / 3.0;
        // the fine grid should sit between coarse and the limit
        if (std::abs(f - out.extrapolated[static_cast<size_t>(i)]) >
            std::abs(c - out.extrapolated[static_cast<size_t>(i)]) + 1e-12)
            out.converged = false;
    }
    return out;
}

TildeState tilde_state(const QuasiRational& psi, double x0, const Grid& grid) {
    const int m = grid.interior();
    const double h = grid.h();
    const double huge = 1e290;

    std::vector<double> p(static_cast<size_t>(m)), f(static_cast<size_t>(m));
    int base = 0;
    for (int i = 0; i < m; ++i) {
        p[static_cast<size_t>(i)] = psi.eval(grid.node(i));
        if (std::abs(grid.node(i) - x0) < std::abs(grid.node(base) - x0)) base = i;
    }
    if (p[static_cast<size_t>(base)] == 0.0)
        throw std::domain_error("tilde_state: psi vanishes at the base point");
    for (int i = 0; i < m; ++i) {
        double d = p[static_cast<size_t>(i)];
        f[static_cast<size_t>(i)] = (d == 0.0) ? std::numeric_limits<double>::infinity()
                                               : 1.0 / (d * d);
    }

    TildeState out;
    out.base_point = grid.node(base);
    out.values.assign(static_cast<size_t>(m), 0.0);
    std::vector<double> integral(static_cast<size_t>(m), 0.0);
    auto usable = [&](double v) { return std::isfinite(v) && std::abs(v) < huge; };

    // cumulative quadratic rule: int_{x_i}^{x_{i+1}} f = h/12 (-f_a + 8 f_i + 5 f_{i+1})
    // where f_a is the neighbor on the far side of x_i
    int lo = base, hi = base;
    for (int i = base; i + 1 < m; ++i) {
        int a = (i > 0) ? i - 1 : i + 2;
        double seg = h / 12.0 *
                     (-f[static_cast<size_t>(a)] + 8.0 * f[static_cast<size_t>(i)] +
                      5.0 * f[static_cast<size_t>(i + 1)]);
        double acc = integral[static_cast<size_t>(i)] + seg;
        if (!usable(acc) || !usable(acc * p[static_cast<size_t>(i + 1)])) break;
        integral[static_cast<size_t>(i + 1)] = acc;
        hi = i + 1;
    }
    for (int i = base; i - 1 >= 0; --i) {
        int a = (i + 1 < m) ? i + 1 : i - 2;
        double seg = h / 12.0 *
                     (-f[static_cast<size_t>(a)] + 8.0 * f[static_cast<size_t>(i)] +
                      5.0 * f[static_cast<size_t>(i - 1)]);
        double acc = integral[static_cast<size_t>(i)] - seg;
        if (!usable(acc) || !usable(acc * p[static_cast<size_t>(i - 1)])) break;
        integral[static_cast<size_t>(i - 1)] = acc;
        lo = i - 1;
    }
    out.first = lo;
    out.last = hi;
    for (int i = lo; i <= hi; ++i)
        out.values[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] * integral[static_cast<size_t>(i)];
    return out;
}

std::vector<double> fd_weights(int m, const std::vector<double>& offsets) {
    // Fornberg's recursion on arbitrary nodes, specialized to x0 = 0;
    // the new row i is filled at j == i-1, before row i-1 is rewritten
    const int n = static_cast<int>(offsets.size());
    if (m >= n) throw std::invalid_argument("fd_weights: need more nodes than derivative order");
    auto at = [&](int i) -> double { return offsets[static_cast<size_t>(i)]; };
    std::vector<std::vector<double>> c(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(m) + 1, 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            const double c3 = at(i) - at(j);
            c2 *= c3;
            if (j == i - 1) {
                auto& row = c[static_cast<size_t>(i)];
                const auto& prev = c[static_cast<size_t>(i - 1)];
                for (int k = mn; k >= 1; --k)
                    row[static_cast<size_t>(k)] =
                        c1 * (k * prev[static_cast<size_t>(k - 1)] - at(i - 1) * prev[static_cast<size_t>(k)]) / c2;
                row[0] = -c1 * at(i - 1) * prev[0] / c2;
            }
            auto& rj = c[static_cast<size_t>(j)];
            for (int k = mn; k >= 1; --k)
                rj[static_cast<size_t>(k)] = (at(i) * rj[static_cast<size_t>(k)] - k * rj[static_cast<size_t>(k - 1)]) / c3;
            rj[0] = at(i) * rj[0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = c[static_cast<size_t>(i)].back();
    return w;
}

namespace {

int reach_for_order(int k) {
    if (k == 0) return 0;
    // centered stencil wide enough for fourth-order accuracy
    return (k + 1) / 2 + 2;
}

}  // namespace

int stencil_margin(const DiffOp& op) {
    int m = 0;
    for (int k = 1; k <= op.order(); ++k)
        if (!op.coeff(k).is_zero()) m = std::max(m, reach_for_order(k));
    return m;
}

std::vector<double> apply_numeric(const DiffOp& op, const std::vector<double>& values,
                                  const Grid& grid) {
    const int m = grid.interior();
    if (static_cast<int>(values.size()) != m)
        throw std::invalid_argument("apply_numeric: values/grid size mismatch");
    const int margin = stencil_margin(op);
    if (2 * margin >= m)
        throw std::invalid_argument("apply_numeric: stencil does not fit inside grid");
    const double h = grid.h();
    std::vector<double> out(static_cast<size_t>(m), 0.0);

    for (int k = 0; k <= op.order(); ++k) {
        const RationalFn c = op.coeff(k);
        if (c.is_zero()) continue;
        const int r = reach_for_order(k);
        std::vector<double> offs;
        for (int j = -r; j <= r; ++j) offs.push_back(j);
        std::vector<double> w = k == 0 ? std::vector<double>{1.0} : fd_weights(k, offs);
        const double hk = std::pow(h, k);
        for (int i = margin; i < m - margin; ++i) {
            double x = grid.node(i);
            double den = c.den().eval(x);
            if (den == 0.0 || !std::isfinite(1.0 / den))
                throw pole_error("apply_numeric: coefficient pole on a grid node", i);
            double cv = c.num().eval(x) / den;
            if (cv == 0.0) continue;
            double acc = 0.0;
            if (k == 0) {
                acc = values[static_cast<size_t>(i)];
            } else {
                for (int j = -r; j <= r; ++j)
                    acc += w[static_cast<size_t>(j + r)] * values[static_cast<size_t>(i + j)];
                acc /= hk;
            }
            out[static_cast<size_t>(i)] += cv * acc;
        }
    }
    for (int i = 0; i < margin; ++i) {
        out[static_cast<size_t>(i)] = 0.0;
        out[static_cast<size_t>(m - 1 - i)] = 0.0;
    }
    return out;
}

void write_potential_csv(const std::string& path, const RationalFn& potential, const Grid& grid) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "x,V\n";
    os.precision(17);
    for (int i = 0; i < grid.interior(); ++i) {
        double x = grid.node(i);
        os << x << "," << potential.eval(x) << "\n";
    }
}

void write_spectrum_csv(const std::string& path, const std::vector<SpectrumRow>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "level,predicted,computed,error\n";
    os.precision(17);
    for (const auto& r : rows)
        os << r.level << "," << r.predicted << "," << r.computed << "," << r.error << "\n";
}

}  // namespace reqho::numeric
