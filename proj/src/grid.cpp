#include "gridplans/grid.hpp"

#include "gridplans/errors.hpp"

#include <algorithm>
#include <sstream>

namespace gridplans {

GridGraph::GridGraph(int n) : n_(n) {
    if (n < 1 || n > 255)
        throw MalformedInput("grid side must be in 1..255, got " + std::to_string(n));
    edges_.reserve(static_cast<std::size_t>(2 * n * (n - 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const int v = cell(r, c);
            if (c + 1 < n) edges_.emplace_back(v, v + 1);
            if (r + 1 < n) edges_.emplace_back(v, v + n);
        }
    }
}

int GridGraph::degree(int v) const {
    const int r = row_of(v), c = col_of(v);
    return (r > 0) + (c > 0) + (c + 1 < n_) + (r + 1 < n_);
}

int GridGraph::neighbors(int v, int out[4]) const {
    const int r = row_of(v), c = col_of(v);
    int k = 0;
    if (r > 0) out[k++] = v - n_;
    if (c > 0) out[k++] = v - 1;
    if (c + 1 < n_) out[k++] = v + 1;
    if (r + 1 < n_) out[k++] = v + n_;
    return k;
}

GridGraph build_grid_graph(int n) { return GridGraph(n); }

Partition::Partition(int n, std::vector<std::uint8_t> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > 255)
        throw MalformedInput("partition side must be in 1..255, got " + std::to_string(n));
    if (labels_.size() != static_cast<std::size_t>(n) * n)
        throw MalformedInput("label array has " + std::to_string(labels_.size()) +
                             " entries, expected " + std::to_string(n * n));
    for (std::uint8_t l : labels_)
        if (l >= n)
            throw MalformedInput("district label " + std::to_string(int(l)) +
                                 " out of range 0.." + std::to_string(n - 1));
}

Partition Partition::canonicalized() const {
    std::vector<int> remap(n_, -1);
    int next_id = 0;
    std::vector<std::uint8_t> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        int& m = remap[labels_[i]];
        if (m < 0) m = next_id++;
        out[i] = static_cast<std::uint8_t>(m);
    }
    return Partition(n_, std::move(out));
}

bool Partition::same_plan(const Partition& other) const {
    if (n_ != other.n_) return false;
    return canonicalized().labels() == other.canonicalized().labels();
}

int cut_score(const Partition& p) {
    const int n = p.side();
    int cut = 0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const std::uint8_t l = p.label(r, c);
            if (c + 1 < n && l != p.label(r, c + 1)) ++cut;
            if (r + 1 < n && l != p.label(r + 1, c)) ++cut;
        }
    }
    return cut;
}

ValidationReport validate_partition(const GridGraph& g, const Partition& p) {
    const int n = g.side();
    if (p.side() != n)
        throw MalformedInput("partition side " + std::to_string(p.side()) +
                             " does not match grid side " + std::to_string(n));

    ValidationReport report;
    report.district_sizes.assign(n, 0);
    for (std::uint8_t l : p.labels()) ++report.district_sizes[l];

    report.balanced = std::all_of(report.district_sizes.begin(), report.district_sizes.end(),
                                  [n](int s) { return s == n; });

    // Flood-fill from one seed per district; every cell of the district must
    // be reached for the district to count as connected.
    std::vector<int> seed(n, -1);
    for (int v = n * n - 1; v >= 0; --v) seed[p.labels()[v]] = v;

    report.connected = true;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    std::vector<int> stack;
    int nb[4];
    for (int d = 0; d < n; ++d) {
        if (seed[d] < 0) {
            if (report.district_sizes[d] == 0) continue; // absent district, unbalanced
            seed[d] = 0;
        }
        int reached = 0;
        stack.clear();
        stack.push_back(seed[d]);
        seen[seed[d]] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            const int deg = g.neighbors(v, nb);
            for (int i = 0; i < deg; ++i) {
                const int w = nb[i];
                if (!seen[w] && p.labels()[w] == d) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (reached != report.district_sizes[d]) {
            report.connected = false;
            if (!report.offending_district) report.offending_district = d;
        }
    }
    if (!report.balanced && !report.offending_district) {
        for (int d = 0; d < n; ++d)
            if (report.district_sizes[d] != n) { report.offending_district = d; break; }
    }
    return report;
}

std::string serialize_partition(const Partition& p) {
    const int n = p.side();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * n * 4);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (c) out += ' ';
            out += std::to_string(int(p.label(r, c)));
        }
        out += '\n';
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && !line.empty() && line[0] == '#') { first = false; continue; }
        first = false;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            if (!rows.empty()) break; // trailing blank ends the block
            continue;
        }
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw MalformedInput("non-numeric label token '" + tok + "'");
            }
            if (pos != tok.size())
                throw MalformedInput("non-numeric label token '" + tok + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw MalformedInput("empty partition text");
    const std::size_t n = rows[0].size();
    if (rows.size() != n)
        throw MalformedInput("expected " + std::to_string(n) + " rows of " +
                             std::to_string(n) + " labels, got " + std::to_string(rows.size()) +
                             " rows");
    std::vector<std::uint8_t> labels;
    labels.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n)
            throw MalformedInput("row has " + std::to_string(row.size()) +
                                 " labels, expected " + std::to_string(n));
        for (int v : row) {
            if (v < 0 || v >= static_cast<int>(n))
                throw MalformedInput("district label " + std::to_string(v) +
                                     " out of range 0.." + std::to_string(n - 1));
            labels.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return Partition(static_cast<int>(n), std::move(labels));
}

} // namespace gridplans
