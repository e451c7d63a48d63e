#pragma once

// Test-only reference routines. Nothing here calls into the library's
// spectral or canonical-form code, so they can serve as independent checks.

#include <fiedler/tree.hh>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle
{
    using Matrix = std::vector<std::vector<double>>;

    inline auto laplacian(const fiedler::Tree & t) -> Matrix
    {
        int n = t.order();
        Matrix l(n, std::vector<double>(n, 0.0));
        for (int v = 0; v < n; ++v)
            for (auto & nb : t.neighbors(v)) {
                l[v][v] += nb.weight;
                l[v][nb.vertex] -= nb.weight;
            }
        return l;
    }

    /// Laplacian with the root row and column deleted; interior in id order.
    inline auto dirichlet(const fiedler::Tree & t, int root) -> Matrix
    {
        auto l = laplacian(t);
        Matrix d;
        for (int i = 0; i < t.order(); ++i) {
            if (i == root)
                continue;
            std::vector<double> row;
            for (int j = 0; j < t.order(); ++j)
                if (j != root)
                    row.push_back(l[i][j]);
            d.push_back(row);
        }
        return d;
    }

    /// Cyclic Jacobi rotations; returns eigenvalues ascending.
    inline auto jacobi_eigenvalues(Matrix a) -> std::vector<double>
    {
        int n = static_cast<int>(a.size());
        for (int sweep = 0; sweep < 100; ++sweep) {
            double off = 0.0;
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q)
                    off += a[p][q] * a[p][q];
            if (off < 1e-30)
                break;
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q) {
                    if (std::abs(a[p][q]) < 1e-300)
                        continue;
                    double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                    for (int k = 0; k < n; ++k) {
                        double akp = a[k][p], akq = a[k][q];
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for (int k = 0; k < n; ++k) {
                        double apk = a[p][k], aqk = a[q][k];
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
        }
        std::vector<double> values(n);
        for (int i = 0; i < n; ++i)
            values[i] = a[i][i];
        std::sort(values.begin(), values.end());
        return values;
    }

    inline auto alpha(const fiedler::Tree & t) -> double
    {
        return jacobi_eigenvalues(laplacian(t))[1];
    }

    inline auto nu(const fiedler::Tree & t, int root) -> double
    {
        return jacobi_eigenvalues(dirichlet(t, root))[0];
    }

    inline auto factorial(int k) -> double
    {
        double f = 1.0;
        for (int i = 2; i <= k; ++i)
            f *= i;
        return f;
    }

    /// (n-2)! / prod (d_i - 1)!
    inline auto pruefer_count(const std::vector<int> & degrees) -> double
    {
        double c = factorial(static_cast<int>(degrees.size()) - 2);
        for (auto d : degrees)
            c /= factorial(d - 1);
        return c;
    }

    /// Tries every vertex permutation.
    inline auto isomorphic(const fiedler::Tree & a, const fiedler::Tree & b) -> bool
    {
        if (a.order() != b.order())
            return false;
        int n = a.order();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        auto edges_a = a.edges();
        do {
            bool ok = true;
            for (auto & e : edges_a)
                if (b.weight(perm[e.u], perm[e.v]) == 0.0) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    /// Rooted variant: the permutation must map root to root.
    inline auto rooted_isomorphic(const fiedler::Tree & a, int ra, const fiedler::Tree & b, int rb) -> bool
    {
        if (a.order() != b.order())
            return false;
        int n = a.order();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        auto edges_a = a.edges();
        do {
            if (perm[ra] != rb)
                continue;
            bool ok = true;
            for (auto & e : edges_a)
                if (b.weight(perm[e.u], perm[e.v]) != e.weight) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    /// Closed form 2(1 - cos(pi/n)).
    inline auto path_alpha(int n) -> double
    {
        return 2.0 * (1.0 - std::cos(M_PI / n));
    }

    /// Root at one end of a path with m interior vertices: 2(1 - cos(pi/(2m+1))).
    inline auto rooted_path_nu(int m) -> double
    {
        return 2.0 * (1.0 - std::cos(M_PI / (2 * m + 1)));
    }
}
