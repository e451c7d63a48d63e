#pragma once

#include <fiedler/rooted.hh>
#include <fiedler/tree.hh>

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <vector>

namespace fiedler
{
    class ConvergenceFailure : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Dense symmetric matrix. set() writes both triangles.
    class SymMatrix
    {
    public:
        explicit SymMatrix(int order) : entries_(Eigen::MatrixXd::Zero(order, order)) {}

        auto order() const -> int { return static_cast<int>(entries_.rows()); }
        auto operator()(int i, int j) const -> double { return entries_(i, j); }
        auto set(int i, int j, double value) -> void
        {
            entries_(i, j) = value;
            entries_(j, i) = value;
        }
        auto add_diagonal(int i, double value) -> void { entries_(i, i) += value; }

        auto inf_norm() const -> double;
        auto dense() const -> const Eigen::MatrixXd & { return entries_; }

    private:
        Eigen::MatrixXd entries_;
    };

    struct EigenPair
    {
        double value;
        std::vector<double> vector;
        double residual;
    };

    /// Residual bound every returned eigenpair satisfies.
    auto residual_bound(const SymMatrix & m) -> double;

    /// L = D - A with weighted degrees on the diagonal.
    auto laplacian(const Tree & t) -> SymMatrix;

    /// Laplacian restricted to the interior (root row and column deleted).
    /// Row/column i corresponds to rbt.interior()[i].
    auto dirichlet_matrix(const RootedBoundaryTree & rbt) -> SymMatrix;

    /// The k algebraically smallest eigenpairs, ascending, with orthonormal
    /// vectors. Each vector is oriented so that its largest-magnitude entry
    /// is positive (ties resolved towards the smallest index).
    auto eig_smallest(const SymMatrix & m, int k) -> std::vector<EigenPair>;

    /// <f, Mf> / <f, f>.
    auto rayleigh(const SymMatrix & m, std::span<const double> f) -> double;

    /// The edge-sum form sum w(uv)(f(u)-f(v))^2 / sum f(v)^2.
    auto rayleigh_edges(const Tree & t, std::span<const double> f) -> double;

    struct Connectivity
    {
        double alpha;
        std::vector<double> fiedler;
    };

    auto algebraic_connectivity(const Tree & t) -> Connectivity;

    struct DirichletEigen
    {
        double nu;
        /// Indexed like RootedBoundaryTree::interior(); non-negative and
        /// supported on a single branch at the root.
        std::vector<double> vector;
        std::vector<Vertex> interior;

        /// The eigenvector over all tree vertices, 0 at the root.
        auto on_tree(int order) const -> std::vector<double>;
    };

    /// First Dirichlet eigenvalue. The Dirichlet matrix is block diagonal
    /// over the branches at the root; nu is the smallest block eigenvalue and
    /// the vector lives on the first minimising block.
    auto dirichlet_nu(const RootedBoundaryTree & rbt) -> DirichletEigen;
}
