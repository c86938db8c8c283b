#pragma once

#include "liftgirth/graph.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <optional>
#include <vector>

namespace liftgirth {

/// Non-backtracking operator over directed edges, row-major sparse:
/// B(f, e) = 1 iff tail(f) == head(e) and e != inverse(f), i.e. the walk may
/// continue from e into f.
template <typename Scalar>
using SparseNB = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;
using NBMatrix = SparseNB<int>;

template <typename Scalar = int>
SparseNB<Scalar> build_nb_matrix(const MultiGraph& h)
{
    std::vector<Eigen::Triplet<Scalar>> entries;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const EdgeId back = h.inverse(e);
        for (const EdgeId f : h.out_edges(h.head(e)))
            if (f != back)
                entries.emplace_back(f, e, Scalar(1));
    }
    SparseNB<Scalar> b(h.edge_count(), h.edge_count());
    b.setFromTriplets(entries.begin(), entries.end());
    return b;
}

/// Indicator of the edges leaving v.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out_edge_indicator(const MultiGraph& h, VertexId v)
{
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> delta = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(h.edge_count());
    for (const EdgeId e : h.out_edges(v))
        delta(e) = Scalar(1);
    return delta;
}

/// Delta_i = 1^T B^(i-1) delta_v for i = 1..rmax: the number of
/// non-backtracking walks of length i leaving v, through matrix powers.
template <typename Scalar>
std::vector<Scalar> matrix_layer_counts(const MultiGraph& h, VertexId v, int rmax)
{
    const SparseNB<Scalar> b = build_nb_matrix<Scalar>(h);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x = out_edge_indicator<Scalar>(h, v);
    std::vector<Scalar> out;
    for (int i = 1; i <= rmax; ++i) {
        out.push_back(x.sum());
        x = b * x;
    }
    return out;
}

/// 1^T B^r 1, the number of non-backtracking walks of length r + 1.
template <typename Scalar>
Scalar walk_total(const MultiGraph& h, int r)
{
    const SparseNB<Scalar> b = build_nb_matrix<Scalar>(h);
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Ones(h.edge_count());
    for (int i = 0; i < r; ++i)
        x = b * x;
    return x.sum();
}

/// Connected with min degree >= 2 and max degree > 2.
bool is_irreducible(const MultiGraph& h);

/// Strong connectivity of the directed graph whose adjacency is b.
bool is_strongly_connected(const NBMatrix& b);

struct SpectralRadius {
    double rho = 0.0;
    long iterations = 0;
    /// ||(B+I)x - (rho+1)x||_inf / ||x||_inf at the returned iterate.
    double residual = 0.0;
};

/// Perron root of an irreducible B by power iteration on B + I, which is
/// primitive even when B has several eigenvalues of maximal modulus.
/// Stops once residual <= tol * (rho + 1). Throws PreconditionError for a
/// reducible matrix and BudgetError when max_iterations is reached.
SpectralRadius spectral_radius(const NBMatrix& b, double tol = 1e-10, long max_iterations = 1'000'000);

/// prod_v (d_v - 1)^(d_v / |E-bar|), evaluated in log space.
double lambda_ahl(const MultiGraph& h);

double avg_degree(const MultiGraph& h);

/// Maximal non-backtracking path whose internal vertices have degree two and
/// whose end vertices have degree above two.
struct DegreeChain {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices; ///< edges.size() + 1 entries, ends included
    double geometric_mean = 0.0;    ///< (prod (deg - 1))^(1 / (2 |edges|))
};

struct RhoLambdaEquality {
    bool equal = false;
    std::optional<DegreeChain> witness; ///< first chain off Lambda
    std::vector<DegreeChain> chains;
};

/// Decides rho == Lambda through the chain criterion: every maximal chain
/// between branch vertices must have geometric mean Lambda (within 1e-9).
RhoLambdaEquality rho_lambda_equality(const MultiGraph& h);

struct SpectralSummary {
    double rho = 0.0;
    double lambda = 0.0;
    double avg_degree_minus_one = 0.0;
    bool equality_rho_lambda = false;
    long iterations = 0;
    double residual = 0.0;
};

/// Throws PreconditionError for inadmissible graphs.
SpectralSummary spectral_summary(const MultiGraph& h, double tol = 1e-10);

} // namespace liftgirth
