#include "gridplans/enumerate.hpp"

#include "gridplans/errors.hpp"
#include "gridplans/rng.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

namespace gridplans {

namespace {

// ---------------------------------------------------------------------------
// Frontier transition system, shared by exact counting and enumeration.
//
// Cells are processed column by column, top to bottom. The frontier holds, for
// each row, the connectivity class of the most recently processed cell in that
// row. A class is a connected component of the already-processed part of a
// district; it carries its accumulated size. Each plan corresponds to exactly
// one transition path: a cell's choice is which of its processed neighbours
// (left, top) lie in the same district, which the plan itself dictates.
//
// Two classes may merge later only if no grid edge between them has already
// been declared a boundary; otherwise the path would not match the plan's own
// edge set and the plan would be counted twice. The state therefore records,
// per class pair, whether such a boundary edge exists.
// ---------------------------------------------------------------------------

using Key = unsigned __int128;

constexpr int kMaxDpSide = 10;    // 4n + 4n + n(n-1)/2 state bits must fit in 128
constexpr std::uint8_t kEmpty = 0xF;

struct KeyHash {
    std::size_t operator()(Key k) const {
        const std::uint64_t lo = static_cast<std::uint64_t>(k);
        const std::uint64_t hi = static_cast<std::uint64_t>(k >> 64);
        return mix64(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
    }
};

using DpMap = std::unordered_map<Key, std::uint64_t, KeyHash>;

struct Work {
    std::uint8_t slot[kMaxDpSide];        // class id per frontier row, kEmpty if none
    std::uint8_t csize[kMaxDpSide + 2];   // cells accumulated per class id
    std::uint16_t adj[kMaxDpSide + 2];    // per class: bitmask of boundary-adjacent classes
};

inline void add_checked(std::uint64_t& a, std::uint64_t b) {
    if (__builtin_add_overflow(a, b, &a))
        throw BudgetExceeded("count accumulator overflow");
}

inline void set_adjacent(Work& w, int a, int b) {
    w.adj[a] = static_cast<std::uint16_t>(w.adj[a] | (1u << b));
    w.adj[b] = static_cast<std::uint16_t>(w.adj[b] | (1u << a));
}

inline bool adjacent(const Work& w, int a, int b) { return (w.adj[a] >> b) & 1u; }

void decode(Key k, int n, Work& w) {
    int nclasses = 0;
    for (int r = 0; r < n; ++r) {
        w.slot[r] = static_cast<std::uint8_t>((k >> (4 * r)) & 0xF);
        if (w.slot[r] != kEmpty) nclasses = std::max(nclasses, w.slot[r] + 1);
    }
    for (int i = 0; i < nclasses; ++i)
        w.csize[i] = static_cast<std::uint8_t>(((k >> (4 * n + 4 * i)) & 0xF) + 1);
    const int adj_base = 8 * n;
    for (int i = 0; i <= kMaxDpSide + 1; ++i) w.adj[i] = 0;
    for (int j = 1; j < nclasses; ++j)
        for (int i = 0; i < j; ++i)
            if ((k >> (adj_base + j * (j - 1) / 2 + i)) & 1) set_adjacent(w, i, j);
}

// Renumbers classes in first-occurrence order over the frontier and packs the
// state. Every live class is on the frontier, so the scan finds them all.
Key encode(const Work& w, int n) {
    int remap[kMaxDpSide + 2];
    int inv[kMaxDpSide + 2] = {};
    std::fill(remap, remap + kMaxDpSide + 2, -1);
    int next = 0;
    Key k = 0;
    for (int r = 0; r < n; ++r) {
        std::uint8_t nib = kEmpty;
        if (w.slot[r] != kEmpty) {
            int& m = remap[w.slot[r]];
            if (m < 0) { m = next; inv[next] = w.slot[r]; ++next; }
            nib = static_cast<std::uint8_t>(m);
        }
        k |= static_cast<Key>(nib) << (4 * r);
    }
    for (int j = 0; j < next; ++j)
        k |= static_cast<Key>(w.csize[inv[j]] - 1) << (4 * n + 4 * j);
    const int adj_base = 8 * n;
    for (int j = 1; j < next; ++j)
        for (int i = 0; i < j; ++i)
            if (adjacent(w, inv[i], inv[j]))
                k |= static_cast<Key>(1) << (adj_base + j * (j - 1) / 2 + i);
    return k;
}

// Applies every legal transition for the cell at (row r, column c) to `base`
// and hands the successor to `fn(w, joined, absorbed, fresh)`. A class that
// leaves the frontier mid-sweep must have exactly n cells; short closures are
// pruned here. `absorbed` is the class id merged away (or -1); ids of dead
// classes are reused by later fresh classes.
template <class Fn>
void for_each_transition(int n, int r, int c, const Work& base, Fn&& fn) {
    const int left = (c > 0) ? base.slot[r] : -1;
    const int top = (r > 0) ? base.slot[r - 1] : -1;
    const int old = left; // the cell this one replaces on the frontier

    std::uint16_t live = 0;
    for (int i = 0; i < n; ++i)
        if (base.slot[i] != kEmpty) live = static_cast<std::uint16_t>(live | (1u << base.slot[i]));

    auto emit = [&](Work& w, int joined, int absorbed, bool fresh) {
        w.slot[r] = static_cast<std::uint8_t>(joined);
        if (old >= 0 && old != joined && old != absorbed) {
            bool present = false;
            for (int i = 0; i < n; ++i)
                if (w.slot[i] == old) { present = true; break; }
            if (!present && w.csize[old] != n) return; // closed short of a full district
        }
        fn(w, joined, absorbed, fresh);
    };

    { // start a new class, reusing the lowest free id
        int fresh = 0;
        while ((live >> fresh) & 1u) ++fresh;
        Work w = base;
        w.csize[fresh] = 1;
        w.adj[fresh] = 0;
        for (int i = 0; i <= kMaxDpSide + 1; ++i) // drop bits left by a dead incarnation
            w.adj[i] = static_cast<std::uint16_t>(w.adj[i] & ~(1u << fresh));
        if (left >= 0) set_adjacent(w, fresh, left);
        if (top >= 0) set_adjacent(w, fresh, top);
        emit(w, fresh, -1, true);
    }
    if (left >= 0 && base.csize[left] < n && top != left) { // join left only
        Work w = base;
        w.csize[left] += 1;
        if (top >= 0) set_adjacent(w, left, top);
        emit(w, left, -1, false);
    }
    if (top >= 0 && base.csize[top] < n && left != top) { // join top only
        Work w = base;
        w.csize[top] += 1;
        if (left >= 0) set_adjacent(w, top, left);
        emit(w, top, -1, false);
    }
    if (top >= 0 && top == left) { // join the single class on both sides
        if (base.csize[top] < n) {
            Work w = base;
            w.csize[top] += 1;
            emit(w, top, -1, false);
        }
    } else if (left >= 0 && top >= 0 && !adjacent(base, left, top)) { // join both: merge
        if (base.csize[left] + base.csize[top] + 1 <= n) {
            Work w = base;
            w.csize[left] = static_cast<std::uint8_t>(w.csize[left] + w.csize[top] + 1);
            for (int i = 0; i <= kMaxDpSide + 1; ++i)
                if (i != static_cast<int>(top) && adjacent(w, i, top))
                    set_adjacent(w, i, left);
            w.adj[left] = static_cast<std::uint16_t>(w.adj[left] & ~(1u << top));
            for (int i = 0; i < n; ++i)
                if (w.slot[i] == top) w.slot[i] = static_cast<std::uint8_t>(left);
            emit(w, left, top, false);
        }
    }
}

// Runs the counting sweep from cell index `first` (column-major, cell
// t = (t % n, t / n)) to the end and returns the number of completed plans.
std::uint64_t sweep(int n, DpMap states, int first, const BudgetGuard& guard) {
    DpMap next_states;
    Work w;
    for (int t = first; t < n * n; ++t) {
        const int r = t % n, c = t / n;
        next_states.clear();
        next_states.reserve(states.size() * 2 + 16);
        for (const auto& [key, count] : states) {
            decode(key, n, w);
            for_each_transition(n, r, c, w, [&](const Work& nw, int, int, bool) {
                add_checked(next_states[encode(nw, n)], count);
            });
        }
        states.swap(next_states);
        guard.check((states.size() + next_states.size()) * 64);
    }
    std::uint64_t total = 0;
    for (const auto& [key, count] : states) {
        decode(key, n, w);
        bool all_full = true;
        for (int i = 0; i < n && all_full; ++i)
            if (w.slot[i] != kEmpty && w.csize[w.slot[i]] != n) all_full = false;
        if (all_full) add_checked(total, count);
    }
    return total;
}

Key empty_key(int n) {
    Key k = 0;
    for (int r = 0; r < n; ++r) k |= static_cast<Key>(kEmpty) << (4 * r);
    return k;
}

} // namespace

BigCount count_plans(int n, const CountOptions& options) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    if (n > kMaxDpSide)
        throw BudgetExceeded("exact counting supports n <= " + std::to_string(kMaxDpSide));

    const BudgetGuard guard(options.budget);
    DpMap init;
    init.emplace(empty_key(n), 1);

    const int threads = std::max(1, options.threads);
    if (threads == 1 || n < 3)
        return BigCount(static_cast<unsigned long>(sweep(n, std::move(init), 0, guard)));

    // Deterministic work split: finish column 0 serially, partition the state
    // set, let each worker run the remaining sweep on its share. Totals are
    // exact integers, so the chunking cannot affect the result.
    DpMap after_col0 = std::move(init);
    {
        DpMap next_states;
        Work w;
        for (int t = 0; t < n; ++t) {
            next_states.clear();
            for (const auto& [key, count] : after_col0) {
                decode(key, n, w);
                for_each_transition(n, t % n, 0, w, [&](const Work& nw, int, int, bool) {
                    add_checked(next_states[encode(nw, n)], count);
                });
            }
            after_col0.swap(next_states);
        }
    }
    std::vector<std::pair<Key, std::uint64_t>> flat(after_col0.begin(), after_col0.end());
    const int workers = std::min(threads, std::max(static_cast<int>(flat.size()), 1));
    std::vector<std::uint64_t> subtotal(workers, 0);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                DpMap part;
                for (std::size_t i = w; i < flat.size(); i += workers) part.insert(flat[i]);
                subtotal[w] = sweep(n, std::move(part), n, guard);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::uint64_t total = 0;
    for (std::uint64_t s : subtotal) add_checked(total, s);
    return BigCount(static_cast<unsigned long>(total));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration: depth-first walk of the same transition tree, with
// no state merging; each root-to-leaf path is one plan. District identity is
// tracked through class merges by a union-find over "class instances" (one
// instance per fresh class, unioned when classes merge).
// ---------------------------------------------------------------------------

namespace {

class Enumerator {
public:
    Enumerator(int n, const PlanVisitor& visitor, const BudgetGuard& guard)
        : n_(n), visitor_(visitor), guard_(guard),
          cell_instance_(static_cast<std::size_t>(n) * n, 0),
          dsu_parent_(static_cast<std::size_t>(n) * n + 2, 0) {}

    std::uint64_t visited() const { return visited_; }
    bool completed() const { return !aborted_; }

    void run() {
        Work w;
        std::fill(w.slot, w.slot + n_, kEmpty);
        std::array<std::uint8_t, kMaxDpSide + 2> instance_of{};
        descend(0, w, instance_of);
    }

private:
    int find(int x) const {
        while (dsu_parent_[x] != x) x = dsu_parent_[x];
        return x;
    }

    void visit_leaf(const Work& w) {
        for (int i = 0; i < n_; ++i)
            if (w.slot[i] != kEmpty && w.csize[w.slot[i]] != n_) return;
        ++visited_;
        std::vector<std::uint8_t> labels(static_cast<std::size_t>(n_) * n_);
        std::vector<int> relabel(next_instance_, -1);
        int next = 0;
        for (int cell = 0; cell < n_ * n_; ++cell) {
            int& m = relabel[find(cell_instance_[cell])];
            if (m < 0) m = next++;
            labels[cell] = static_cast<std::uint8_t>(m);
        }
        if (!visitor_(Partition(n_, std::move(labels)))) aborted_ = true;
    }

    void descend(int t, const Work& w, const std::array<std::uint8_t, kMaxDpSide + 2>& instance_of) {
        if (aborted_) return;
        if (t == n_ * n_) {
            visit_leaf(w);
            return;
        }
        if ((++nodes_ & 0x3FFF) == 0) guard_.check();
        const int r = t % n_, c = t / n_;
        const int cell = r * n_ + c;
        for_each_transition(n_, r, c, w, [&](const Work& nw, int joined, int absorbed, bool fresh) {
            auto inst = instance_of;
            const std::size_t undo_mark = undo_.size();
            const int instance_mark = next_instance_;
            if (fresh) {
                inst[joined] = static_cast<std::uint8_t>(next_instance_);
                dsu_parent_[next_instance_] = next_instance_;
                ++next_instance_;
            } else if (absorbed >= 0) {
                const int keep = find(inst[joined]);
                const int gone = find(inst[absorbed]);
                undo_.emplace_back(gone, dsu_parent_[gone]);
                dsu_parent_[gone] = keep;
            }
            cell_instance_[cell] = inst[joined];
            descend(t + 1, nw, inst);
            while (undo_.size() > undo_mark) {
                dsu_parent_[undo_.back().first] = undo_.back().second;
                undo_.pop_back();
            }
            next_instance_ = instance_mark;
        });
    }

    int n_;
    const PlanVisitor& visitor_;
    const BudgetGuard& guard_;
    std::vector<int> cell_instance_;
    std::vector<int> dsu_parent_;
    std::vector<std::pair<int, int>> undo_;
    int next_instance_ = 0;
    std::uint64_t visited_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

EnumerateResult enumerate_plans(int n, const PlanVisitor& visitor, const Budget& budget) {
    if (n < 1) throw MalformedInput("grid side must be positive");
    if (n > kMaxDpSide)
        throw BudgetExceeded("enumeration supports n <= " + std::to_string(kMaxDpSide));
    const BudgetGuard guard(budget);
    Enumerator en(n, visitor, guard);
    en.run();
    EnumerateResult result;
    result.visited = en.visited();
    result.completed = en.completed();
    return result;
}

BigCount CutHistogram::total() const {
    BigCount t = 0;
    for (const auto& [cut, count] : bins) t += count;
    return t;
}

int CutHistogram::min_cut() const { return bins.empty() ? -1 : bins.begin()->first; }
int CutHistogram::max_cut() const { return bins.empty() ? -1 : bins.rbegin()->first; }

std::string CutHistogram::to_csv() const {
    std::ostringstream out;
    out << "cut,count\n";
    for (const auto& [cut, count] : bins) out << cut << ',' << count.get_str() << '\n';
    return out.str();
}

CutHistogram cut_histogram(int n, const Budget& budget) {
    CutHistogram h;
    h.n = n;
    enumerate_plans(
        n,
        [&h](const Partition& p) {
            h.bins[cut_score(p)] += 1;
            return true;
        },
        budget);
    return h;
}

BigCount count_compact_plans(const CutHistogram& histogram, double eps) {
    const double threshold = eps * histogram.n * histogram.n;
    BigCount total = 0;
    for (const auto& [cut, count] : histogram.bins) {
        if (static_cast<double>(cut) <= threshold) total += count;
        else break;
    }
    return total;
}

BigCount count_compact_plans(int n, double eps, const Budget& budget) {
    return count_compact_plans(cut_histogram(n, budget), eps);
}

} // namespace gridplans
