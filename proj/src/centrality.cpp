#include "cointerest/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cointerest/errors.hpp"

namespace cointerest {

namespace {

// y = A x, with A_vv = 2 * self-loop weight.
void multiply(const WeightedGraph& g, const std::vector<double>& x, std::vector<double>& y)
{
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
        double acc = 2.0 * g.self_loop(v) * x[v];
        for (const auto& [u, w] : g.neighbors(v))
            acc += w * x[u];
        y[v] = acc;
    }
}

double norm2(const std::vector<double>& x)
{
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

bool is_connected(const WeightedGraph& g)
{
    const std::size_t n = g.node_count();
    if (n <= 1)
        return true;
    std::vector<bool> seen(n, false);
    std::vector<NodeIndex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const NodeIndex v = stack.back();
        stack.pop_back();
        for (const auto& [u, w] : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

} // namespace

double CentralityScores::score(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw LookupError("no centrality score for '" + label + "'");
    return scores[static_cast<std::size_t>(it - labels.begin())];
}

CentralityScores eigenvector_centrality(const WeightedGraph& graph, double tol, std::size_t max_iter)
{
    if (!(tol > 0.0))
        throw ValidationError("tolerance must be positive");
    if (max_iter == 0)
        throw ValidationError("max_iter must be positive");
    if (graph.edge_count() == 0 && graph.self_loop_count() == 0)
        throw DomainError("eigenvector centrality needs at least one edge");

    const std::size_t n = graph.node_count();
    const auto strength = graph.strengths();

    // Iterate on A + shift*I restricted to non-isolated nodes. Plain A
    // oscillates on bipartite graphs (its spectrum is symmetric there); the
    // shift, the mean strength, is at most the dominant eigenvalue and keeps
    // the Perron vector while making its eigenvalue strictly dominant.
    // Isolated nodes are pinned to 0, their exact eigenvector entry.
    const double shift = 2.0 * graph.total_weight() / static_cast<double>(n);

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    std::vector<double> next(n);

    CentralityScores out;
    out.labels = graph.labels();
    out.disconnected = !is_connected(graph);

    auto rayleigh = [&](const std::vector<double>& v) {
        multiply(graph, v, ax);
        return std::inner_product(v.begin(), v.end(), ax.begin(), 0.0)
            / std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    };
    auto residual = [&](const std::vector<double>& v, double lambda) {
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            r = std::max(r, std::abs(ax[i] - lambda * v[i]));
        return r;
    };

    for (std::size_t it = 1; it <= max_iter; ++it) {
        multiply(graph, x, ax);
        for (std::size_t i = 0; i < n; ++i)
            next[i] = strength[i] > 0.0 ? ax[i] + shift * x[i] : 0.0;
        const double nrm = norm2(next);
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] /= nrm;
            change = std::max(change, std::abs(next[i] - x[i]));
        }
        x.swap(next);
        if (change <= tol) {
            out.iterations = it;
            out.eigenvalue = rayleigh(x);
            out.residual = residual(x, out.eigenvalue);
            out.scores = std::move(x);
            return out;
        }
    }

    const double lambda = rayleigh(x);
    const double r = residual(x, lambda);
    throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter)
                               + " iterations (residual " + std::to_string(r) + ")",
                           std::move(x), r);
}

std::vector<std::pair<std::string, double>> top_k(const CentralityScores& scores, std::size_t k)
{
    if (k < 1)
        throw ValidationError("k must be at least 1");
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(scores.labels.size());
    for (std::size_t i = 0; i < scores.labels.size(); ++i)
        ranked.emplace_back(scores.labels[i], scores.scores[i]);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    ranked.resize(std::min(k, ranked.size()));
    return ranked;
}

} // namespace cointerest
