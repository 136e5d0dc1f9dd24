#include "convextri/triangulate.hpp"

#include <algorithm>

namespace convextri {

namespace {

// Chords produced by the interval DP are (a,b) with 0 <= a < b <= n-1; such a
// chord is a boundary edge iff b-a == 1 (the wrap edge (0,n-1) never appears
// as a split chord). decide/count short-circuit boundary-edges-in-F before
// the DP runs, so a plain membership test suffices here.
inline bool allowed(const ConvexInstance& inst, int a, int b) {
    return !inst.contains(a, b);
}

// reach for n <= 64 packed into per-vertex bitmasks: rowA[i] bit k means
// reach(i,k) && allowed(i,k), colB[j] bit k the mirror image. Cell (i,j) is
// reachable iff the two masks share a split vertex strictly between i and j.
bool decide_fast(const ConvexInstance& inst) {
    const int n = inst.n();
    std::uint64_t rowA[64] = {};
    std::uint64_t colB[64] = {};
    for (int i = 0; i + 1 < n; ++i) {
        rowA[i] |= std::uint64_t{1} << (i + 1);
        colB[i + 1] |= std::uint64_t{1} << i;
    }
    for (int len = 2; len < n; ++len) {
        for (int i = 0; i + len < n; ++i) {
            int j = i + len;
            std::uint64_t between = ((~std::uint64_t{0}) >> (63 - j)) >> 1; // bits 0..j-1
            between &= ~((std::uint64_t{1} << (i + 1)) - 1);                // bits i+1..j-1
            bool reach = (rowA[i] & colB[j] & between) != 0;
            if (i == 0 && j == n - 1) return reach;
            if (reach && allowed(inst, i, j)) {
                rowA[i] |= std::uint64_t{1} << j;
                colB[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return false; // not reached: the (0,n-1) cell returns above
}

} // namespace

DPTable::DPTable(const ConvexInstance& inst, bool with_counts) : n_(inst.n()) {
    reach_.assign(static_cast<std::size_t>(n_) * n_, 0);
    if (with_counts) counts_.assign(static_cast<std::size_t>(n_) * n_, BigInt(0));
    for (int i = 0; i + 1 < n_; ++i) {
        reach_[idx(i, i + 1)] = 1;
        if (with_counts) counts_[idx(i, i + 1)] = 1;
    }
    for (int len = 2; len < n_; ++len) {
        for (int i = 0; i + len < n_; ++i) {
            int j = i + len;
            if (with_counts) {
                BigInt total = 0;
                for (int k = i + 1; k < j; ++k) {
                    if (allowed(inst, i, k) && allowed(inst, k, j) && reach_[idx(i, k)] &&
                        reach_[idx(k, j)])
                        total += counts_[idx(i, k)] * counts_[idx(k, j)];
                }
                counts_[idx(i, j)] = total;
                reach_[idx(i, j)] = total != 0;
            } else {
                for (int k = i + 1; k < j; ++k) {
                    if (allowed(inst, i, k) && allowed(inst, k, j) && reach_[idx(i, k)] &&
                        reach_[idx(k, j)]) {
                        reach_[idx(i, j)] = 1;
                        break;
                    }
                }
            }
        }
    }
}

bool decide(const ConvexInstance& inst) {
    if (inst.has_boundary_in_forbidden()) return false;
    const int n = inst.n();
    if (n == 3) return true;
    if (n <= 64) return decide_fast(inst);
    DPTable dp(inst, false);
    return dp.reachable(0, n - 1);
}

std::optional<Triangulation> extract(const ConvexInstance& inst) {
    if (inst.has_boundary_in_forbidden()) return std::nullopt;
    const int n = inst.n();
    if (n == 3) return Triangulation{};
    DPTable dp(inst, false);
    if (!dp.reachable(0, n - 1)) return std::nullopt;
    Triangulation t;
    std::vector<std::pair<int, int>> stack{{0, n - 1}};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        if (j - i < 2) continue;
        // smallest split vertex keeps the output deterministic
        for (int k = i + 1; k < j; ++k) {
            if (allowed(inst, i, k) && allowed(inst, k, j) && dp.reachable(i, k) &&
                dp.reachable(k, j)) {
                if (k - i >= 2) t.diagonals.emplace_back(i, k);
                if (j - k >= 2) t.diagonals.emplace_back(k, j);
                stack.emplace_back(i, k);
                stack.emplace_back(k, j);
                break;
            }
        }
    }
    std::sort(t.diagonals.begin(), t.diagonals.end());
    return t;
}

BigInt count_triangulations(const ConvexInstance& inst) {
    if (inst.has_boundary_in_forbidden()) return 0;
    if (inst.n() == 3) return 1;
    DPTable dp(inst, true);
    return dp.count(0, inst.n() - 1);
}

namespace {

struct Enumerator {
    const ConvexInstance& inst;
    const DPTable& dp;
    std::optional<std::uint64_t> limit;
    const std::function<bool(const Triangulation&)>& yield;
    std::uint64_t emitted = 0;
    bool stopped = false;
    std::vector<Chord> current;

    void emit() {
        if (limit && emitted >= *limit) {
            stopped = true;
            return;
        }
        Triangulation t;
        t.diagonals = current;
        std::sort(t.diagonals.begin(), t.diagonals.end());
        ++emitted;
        if (!yield(t)) stopped = true;
    }

    // Depth-first product over the split choices of every pending cell. The
    // triangle on a cell's base edge determines the split vertex, so distinct
    // branches yield distinct triangulations.
    void go(std::vector<std::pair<int, int>> pending) {
        if (stopped) return;
        while (!pending.empty() && pending.back().second - pending.back().first < 2)
            pending.pop_back();
        if (pending.empty()) {
            emit();
            return;
        }
        auto [i, j] = pending.back();
        pending.pop_back();
        for (int k = i + 1; k < j && !stopped; ++k) {
            if (!(allowed(inst, i, k) && allowed(inst, k, j) && dp.reachable(i, k) &&
                  dp.reachable(k, j)))
                continue;
            std::size_t mark = current.size();
            if (k - i >= 2) current.emplace_back(i, k);
            if (j - k >= 2) current.emplace_back(k, j);
            std::vector<std::pair<int, int>> next = pending;
            next.emplace_back(i, k);
            next.emplace_back(k, j);
            go(std::move(next));
            current.resize(mark);
        }
    }
};

} // namespace

void enumerate_all(const ConvexInstance& inst, std::optional<std::uint64_t> limit,
                   const std::function<bool(const Triangulation&)>& yield) {
    if (inst.has_boundary_in_forbidden()) return;
    if (limit && *limit == 0) return;
    const int n = inst.n();
    if (n == 3) {
        yield(Triangulation{});
        return;
    }
    DPTable dp(inst, false);
    if (!dp.reachable(0, n - 1)) return;
    Enumerator e{inst, dp, limit, yield};
    e.go({{0, n - 1}});
}

std::vector<Triangulation> all_triangulations(const ConvexInstance& inst,
                                              std::optional<std::uint64_t> limit) {
    std::vector<Triangulation> out;
    enumerate_all(inst, limit, [&](const Triangulation& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

bool verify_triangulation(const ConvexInstance& inst, const std::vector<Chord>& t) {
    const int n = inst.n();
    if (static_cast<int>(t.size()) != n - 3) return false;
    std::vector<Chord> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return false;
    for (const Chord& c : sorted) {
        if (c.a < 0 || c.b >= n) return false;
        if (is_boundary(n, c)) return false;
        if (inst.contains(c)) return false;
    }
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (crosses(n, sorted[i], sorted[j])) return false;
    return true;
}

} // namespace convextri
