#include "gridplans/trees.hpp"

#include "gridplans/errors.hpp"

#include <string>
#include <vector>

namespace gridplans {

std::vector<std::pair<int, int>> SpanningTree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * n - 1);
    for (int cell = 0; cell < n * n; ++cell) {
        if (parent[cell] < 0) continue;
        out.emplace_back(std::min(cell, parent[cell]), std::max(cell, parent[cell]));
    }
    return out;
}

namespace {

constexpr int kMaxTreeSide = 14; // keeps the dense exact elimination at desk scale

} // namespace

BigCount spanning_tree_count(int n, int deleted_index) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    if (n > kMaxTreeSide)
        throw BudgetExceeded("spanning tree count supports n <= " + std::to_string(kMaxTreeSide));
    const int cells = n * n;
    if (deleted_index < 0 || deleted_index >= cells)
        throw MalformedInput("deleted index out of range");
    if (cells == 1) return 1;

    // Reduced Laplacian with row/column `deleted_index` removed.
    const GridGraph g(n);
    const int m = cells - 1;
    auto idx = [&](int cell) { return cell < deleted_index ? cell : cell - 1; };
    std::vector<std::vector<BigCount>> a(m, std::vector<BigCount>(m, 0));
    for (int cell = 0; cell < cells; ++cell) {
        if (cell == deleted_index) continue;
        a[idx(cell)][idx(cell)] = g.degree(cell);
        int nb[4];
        const int k = g.neighbors(cell, nb);
        for (int i = 0; i < k; ++i)
            if (nb[i] != deleted_index) a[idx(cell)][idx(nb[i])] = -1;
    }

    // Fraction-free elimination: every pivot is a leading principal minor of a
    // positive definite matrix, hence nonzero, and each division is exact.
    BigCount prev = 1;
    BigCount num;
    for (int k = 0; k + 1 < m; ++k) {
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return a[m - 1][m - 1];
}

double tree_growth_ratio(int n) {
    return natural_log(spanning_tree_count(n)) / (static_cast<double>(n) * n);
}

SpanningTree random_spanning_tree(const GridGraph& g, Rng& rng) {
    const int n = g.side();
    const int cells = n * n;
    SpanningTree tree;
    tree.n = n;
    tree.root = 0;
    tree.parent.assign(cells, -1);

    std::vector<char> in_tree(cells, 0);
    in_tree[0] = 1;
    for (int start = 1; start < cells; ++start) {
        if (in_tree[start]) continue;
        // Random walk from `start`; overwriting parent pointers erases loops.
        int u = start;
        while (!in_tree[u]) {
            int nb[4];
            const int k = g.neighbors(u, nb);
            tree.parent[u] = nb[rng.bounded(static_cast<std::uint64_t>(k))];
            u = tree.parent[u];
        }
        for (u = start; !in_tree[u]; u = tree.parent[u]) in_tree[u] = 1;
    }
    return tree;
}

SpanningTree random_spanning_tree(const GridGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    return random_spanning_tree(g, rng);
}

} // namespace gridplans
