#include "liftgirth/nb_spectral.hpp"

#include "liftgirth/error.hpp"

#include <algorithm>
#include <cmath>

namespace liftgirth {

bool is_irreducible(const MultiGraph& h)
{
    return validate(h).admissible;
}

namespace {

std::vector<char> reachable(const NBMatrix& m, bool transpose)
{
    const auto n = m.rows();
    std::vector<std::vector<int>> next(static_cast<std::size_t>(n));
    for (int row = 0; row < m.outerSize(); ++row)
        for (NBMatrix::InnerIterator it(m, row); it; ++it) {
            // entry (row, col): col may step to row
            if (transpose)
                next[static_cast<std::size_t>(row)].push_back(static_cast<int>(it.col()));
            else
                next[static_cast<std::size_t>(it.col())].push_back(row);
        }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const int y : next[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const NBMatrix& b)
{
    if (b.rows() == 0)
        return false;
    for (const bool transpose : {false, true}) {
        const auto seen = reachable(b, transpose);
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            return false;
    }
    return true;
}

SpectralRadius spectral_radius(const NBMatrix& b, double tol, long max_iterations)
{
    if (!is_strongly_connected(b))
        throw PreconditionError("non-backtracking matrix is reducible");
    const SparseNB<double> shifted = b.cast<double>();
    const auto m = shifted.rows();
    Eigen::VectorXd x = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    SpectralRadius out;
    for (long it = 1; it <= max_iterations; ++it) {
        const Eigen::VectorXd y = shifted * x + x;
        // x sums to one, so the sum of y estimates the Perron root of B + I.
        const double mu = y.sum();
        out.iterations = it;
        out.rho = mu - 1.0;
        out.residual = (y - mu * x).lpNorm<Eigen::Infinity>() / x.lpNorm<Eigen::Infinity>();
        if (out.residual <= tol * mu)
            return out;
        x = y / mu;
    }
    throw BudgetError("power iteration did not converge; residual " + std::to_string(out.residual));
}

double lambda_ahl(const MultiGraph& h)
{
    double log_sum = 0.0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const int d = h.degree(v);
        if (d < 2)
            throw PreconditionError("Lambda needs minimum degree 2 (vertex " + std::to_string(v) + ")");
        log_sum += d * std::log(static_cast<double>(d - 1));
    }
    return std::exp(log_sum / h.edge_count());
}

double avg_degree(const MultiGraph& h)
{
    return static_cast<double>(h.edge_count()) / h.vertex_count();
}

RhoLambdaEquality rho_lambda_equality(const MultiGraph& h)
{
    if (!validate(h).admissible)
        throw PreconditionError("rho/Lambda equality test needs an admissible graph");
    const double lambda = lambda_ahl(h);
    RhoLambdaEquality out;
    out.equal = true;
    for (EdgeId first = 0; first < h.edge_count(); ++first) {
        if (h.degree(h.tail(first)) <= 2)
            continue;
        DegreeChain chain;
        chain.vertices.push_back(h.tail(first));
        EdgeId e = first;
        for (;;) {
            chain.edges.push_back(e);
            const VertexId x = h.head(e);
            chain.vertices.push_back(x);
            if (h.degree(x) != 2)
                break;
            const auto out_edges = h.out_edges(x);
            e = out_edges[0] == h.inverse(e) ? out_edges[1] : out_edges[0];
        }
        // The reversed chain starts with inverse(last); keep one orientation.
        if (first > h.inverse(chain.edges.back()))
            continue;
        double log_sum = 0.0;
        for (const VertexId v : chain.vertices)
            log_sum += std::log(static_cast<double>(h.degree(v) - 1));
        chain.geometric_mean = std::exp(log_sum / (2.0 * static_cast<double>(chain.edges.size())));
        if (out.equal && std::abs(chain.geometric_mean - lambda) > 1e-9) {
            out.equal = false;
            out.witness = chain;
        }
        out.chains.push_back(std::move(chain));
    }
    return out;
}

SpectralSummary spectral_summary(const MultiGraph& h, double tol)
{
    if (!validate(h).admissible)
        throw PreconditionError("graph is not admissible (needs connected, min degree >= 2, max degree > 2)");
    const auto radius = spectral_radius(build_nb_matrix(h), tol);
    SpectralSummary s;
    s.rho = radius.rho;
    s.iterations = radius.iterations;
    s.residual = radius.residual;
    s.lambda = lambda_ahl(h);
    s.avg_degree_minus_one = avg_degree(h) - 1.0;
    s.equality_rho_lambda = rho_lambda_equality(h).equal;
    return s;
}

} // namespace liftgirth
