#include <fiedler/spectral.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

using std::span;
using std::vector;

namespace fiedler
{
    namespace
    {
        auto check_finite_symmetric(const SymMatrix & m) -> void
        {
            if (! m.dense().allFinite())
                throw std::invalid_argument{"matrix has non-finite entries"};
        }

        auto orient(Eigen::Ref<Eigen::VectorXd> x) -> void
        {
            double largest = x.cwiseAbs().maxCoeff();
            for (Eigen::Index i = 0; i < x.size(); ++i)
                if (std::abs(x(i)) >= largest * (1.0 - 1e-9)) {
                    if (x(i) < 0)
                        x = -x;
                    return;
                }
        }

        auto residual_of(const Eigen::MatrixXd & m, double value, const Eigen::VectorXd & x) -> double
        {
            return (m * x - value * x).norm();
        }
    }

    auto SymMatrix::inf_norm() const -> double
    {
        if (order() == 0)
            return 0.0;
        return entries_.cwiseAbs().rowwise().sum().maxCoeff();
    }

    auto residual_bound(const SymMatrix & m) -> double
    {
        return 1e-10 * (1.0 + m.inf_norm());
    }

    auto laplacian(const Tree & t) -> SymMatrix
    {
        SymMatrix l{t.order()};
        for (auto & e : t.edges()) {
            l.set(e.u, e.v, -e.weight);
            l.add_diagonal(e.u, e.weight);
            l.add_diagonal(e.v, e.weight);
        }
        return l;
    }

    auto dirichlet_matrix(const RootedBoundaryTree & rbt) -> SymMatrix
    {
        auto interior = rbt.interior();
        vector<int> index(rbt.order(), -1);
        for (std::size_t i = 0; i < interior.size(); ++i)
            index[interior[i]] = static_cast<int>(i);

        SymMatrix l0{static_cast<int>(interior.size())};
        for (auto & e : rbt.tree().edges()) {
            auto iu = index[e.u], iv = index[e.v];
            if (iu >= 0)
                l0.add_diagonal(iu, e.weight);
            if (iv >= 0)
                l0.add_diagonal(iv, e.weight);
            if (iu >= 0 && iv >= 0)
                l0.set(iu, iv, -e.weight);
        }
        return l0;
    }

    auto eig_smallest(const SymMatrix & m, int k) -> vector<EigenPair>
    {
        if (k < 0 || k > m.order())
            throw std::invalid_argument{"requested " + std::to_string(k) + " eigenpairs of an order "
                + std::to_string(m.order()) + " matrix"};
        check_finite_symmetric(m);

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver{m.dense()};
        if (solver.info() != Eigen::Success)
            throw ConvergenceFailure{"symmetric eigensolver did not converge"};

        auto bound = residual_bound(m);
        vector<EigenPair> pairs;
        pairs.reserve(k);
        for (int i = 0; i < k; ++i) {
            Eigen::VectorXd x = solver.eigenvectors().col(i);
            x.normalize();
            orient(x);
            double value = solver.eigenvalues()(i);
            double residual = residual_of(m.dense(), value, x);
            if (residual > bound)
                throw ConvergenceFailure{"eigenpair residual " + std::to_string(residual) + " exceeds bound"};
            pairs.push_back({value, vector<double>(x.data(), x.data() + x.size()), residual});
        }
        return pairs;
    }

    auto rayleigh(const SymMatrix & m, span<const double> f) -> double
    {
        if (static_cast<int>(f.size()) != m.order())
            throw std::invalid_argument{"vector dimension does not match matrix order"};
        Eigen::Map<const Eigen::VectorXd> x(f.data(), static_cast<Eigen::Index>(f.size()));
        double norm2 = x.squaredNorm();
        if (norm2 == 0.0)
            throw std::invalid_argument{"Rayleigh quotient of the zero vector"};
        return x.dot(m.dense() * x) / norm2;
    }

    auto rayleigh_edges(const Tree & t, span<const double> f) -> double
    {
        if (static_cast<int>(f.size()) != t.order())
            throw std::invalid_argument{"vector dimension does not match tree order"};
        double num = 0.0;
        for (auto & e : t.edges()) {
            double d = f[e.u] - f[e.v];
            num += e.weight * d * d;
        }
        double den = std::inner_product(f.begin(), f.end(), f.begin(), 0.0);
        if (den == 0.0)
            throw std::invalid_argument{"Rayleigh quotient of the zero vector"};
        return num / den;
    }

    auto algebraic_connectivity(const Tree & t) -> Connectivity
    {
        auto pairs = eig_smallest(laplacian(t), 2);
        return {pairs[1].value, std::move(pairs[1].vector)};
    }

    auto DirichletEigen::on_tree(int order) const -> std::vector<double>
    {
        std::vector<double> full(order, 0.0);
        for (std::size_t i = 0; i < interior.size(); ++i)
            full.at(interior[i]) = vector[i];
        return full;
    }

    auto dirichlet_nu(const RootedBoundaryTree & rbt) -> DirichletEigen
    {
        auto interior = rbt.interior();
        vector<int> index(rbt.order(), -1);
        for (std::size_t i = 0; i < interior.size(); ++i)
            index[interior[i]] = static_cast<int>(i);

        auto l0 = dirichlet_matrix(rbt);
        auto bound = residual_bound(l0);

        double best_value = std::numeric_limits<double>::infinity();
        vector<double> best_vector;
        for (auto & branch : branches_at(rbt.tree(), rbt.root(), rbt.root())) {
            vector<int> rows;
            for (auto v : branch)
                rows.push_back(index[v]);
            auto size = static_cast<Eigen::Index>(rows.size());
            Eigen::MatrixXd block(size, size);
            for (Eigen::Index i = 0; i < size; ++i)
                for (Eigen::Index j = 0; j < size; ++j)
                    block(i, j) = l0(rows[i], rows[j]);

            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver{block};
            if (solver.info() != Eigen::Success)
                throw ConvergenceFailure{"Dirichlet block eigensolver did not converge"};
            double value = solver.eigenvalues()(0);
            if (value < best_value) {
                Eigen::VectorXd x = solver.eigenvectors().col(0);
                x.normalize();
                if (x.sum() < 0)
                    x = -x;
                best_value = value;
                best_vector.assign(interior.size(), 0.0);
                for (Eigen::Index i = 0; i < size; ++i)
                    best_vector[rows[i]] = x(i);
            }
        }

        Eigen::Map<const Eigen::VectorXd> x(best_vector.data(), static_cast<Eigen::Index>(best_vector.size()));
        double residual = residual_of(l0.dense(), best_value, x);
        if (residual > bound)
            throw ConvergenceFailure{"Dirichlet eigenpair residual " + std::to_string(residual) + " exceeds bound"};
        if (! (best_value > 0.0))
            throw ConvergenceFailure{"first Dirichlet eigenvalue is not positive"};

        return {best_value, std::move(best_vector), std::move(interior)};
    }
}
