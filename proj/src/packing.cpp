#include "convextri/packing.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace convextri {

namespace {

std::vector<Chord> induced_chords(const AbstractGraph& g, const std::vector<int>& pos) {
    std::vector<Chord> out;
    out.reserve(g.edges.size());
    for (auto [u, v] : g.edges) out.emplace_back(pos[u], pos[v]);
    std::sort(out.begin(), out.end());
    return out;
}

void validate_lengths(const std::vector<int>& lengths) {
    if (lengths.empty()) throw InvalidParams("cycle length list is empty");
    for (int L : lengths)
        if (L < 3) throw InvalidParams("cycle length must be at least 3, got " + std::to_string(L));
}

} // namespace

AbstractGraph AbstractGraph::cycle(int len) {
    if (len < 3) throw InvalidParams("cycle length must be at least 3");
    AbstractGraph g;
    g.vertex_count = len;
    for (int i = 0; i < len; ++i) g.edges.emplace_back(i, (i + 1) % len);
    return g;
}

AbstractGraph AbstractGraph::cycle_union(const std::vector<int>& lengths) {
    validate_lengths(lengths);
    AbstractGraph g;
    for (int L : lengths) {
        int base = g.vertex_count;
        for (int i = 0; i < L; ++i) g.edges.emplace_back(base + i, base + (i + 1) % L);
        g.vertex_count += L;
    }
    return g;
}

AbstractGraph AbstractGraph::petersen(int n, int k) {
    return PetersenSpec(n, k).graph();
}

PetersenSpec::PetersenSpec(int n_, int k_) : n(n_), k(k_) {
    if (n < 5 || k < 1 || 2 * k >= n)
        throw InvalidParams("generalized Petersen graph needs n >= 5 and 1 <= k < n/2");
}

std::vector<std::pair<int, int>> PetersenSpec::outer_edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return e;
}

std::vector<std::pair<int, int>> PetersenSpec::inner_edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, n + (i + k) % n);
    return e;
}

std::vector<std::pair<int, int>> PetersenSpec::spokes() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
    return e;
}

AbstractGraph PetersenSpec::graph() const {
    AbstractGraph g;
    g.vertex_count = 2 * n;
    for (auto fam : {outer_edges(), inner_edges(), spokes()})
        for (auto e : fam) g.edges.push_back(e);
    // normalize + dedupe (k < n/2 keeps the inner family simple already)
    for (auto& [u, v] : g.edges)
        if (u > v) std::swap(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

Placement::Placement(int n_, std::vector<int> positions_, const AbstractGraph& g,
                     std::optional<std::vector<Chord>> certificate_, bool used_fallback_)
    : n(n_),
      positions(std::move(positions_)),
      induced(n_, induced_chords(g, positions)),
      certificate(std::move(certificate_)),
      used_fallback(used_fallback_) {
    if (static_cast<int>(positions.size()) != g.vertex_count)
        throw ConstructionFault("placement size does not match the abstract graph");
    std::set<int> seen;
    for (int p : positions) {
        if (p < 0 || p >= n || !seen.insert(p).second)
            throw ConstructionFault("placement is not an injection into polygon positions");
    }
    if (static_cast<int>(induced.forbidden().size()) != static_cast<int>(g.edges.size()))
        throw ConstructionFault("placement collapses abstract edges");
    if (induced.has_boundary_in_forbidden())
        throw ConstructionFault("placement induces a boundary chord");
    if (!decide(induced))
        throw ConstructionFault("placed instance admits no triangulation");
    if (certificate && !verify_triangulation(induced, *certificate))
        throw ConstructionFault("certificate fails verification");
}

// ---------------------------------------------------------------------------
// pack_cycle
// ---------------------------------------------------------------------------

namespace {

// Literal constructions are DP-verified by the Placement constructor; if one
// ever fails, fall back to the placement search and flag the result.
Placement place_or_search(int n, std::vector<int> positions, const AbstractGraph& g,
                          std::optional<std::vector<Chord>> certificate) {
    try {
        return Placement(n, std::move(positions), g, std::move(certificate));
    } catch (const ConstructionFault&) {
        auto found = search_packing(g, n, std::uint64_t{200000000});
        if (!found) throw;
        found->used_fallback = true;
        return *found;
    }
}

// Step width of the cycle placement: for even n = 2^s t (t odd) the step is
// t+2; for odd n >= 9 it is floor(n/2). Both are coprime to n, so the image
// is a single n-cycle.
int cycle_step(int n) {
    if (n % 2 == 0) {
        int t = n;
        while (t % 2 == 0) t /= 2;
        return t + 2;
    }
    return n / 2;
}

std::vector<Chord> cycle_certificate(int n) {
    if (n == 7) return {Chord(1, 6), Chord(1, 5), Chord(2, 5), Chord(2, 4)};
    std::vector<Chord> cert;
    if (n % 2 == 0) {
        // triangulate the even sub-polygon (fan) and ear off every odd vertex
        for (int i = 0; i < n / 2; ++i) cert.emplace_back(2 * i, (2 * i + 2) % n);
        for (int j = 2; j <= n / 2 - 2; ++j) cert.emplace_back(0, 2 * j);
    } else {
        // three consecutive arcs plus the central triangle
        int beta = (n + 2) / 3;
        cert.emplace_back(0, beta);
        cert.emplace_back(beta, 2 * beta);
        cert.emplace_back(0, 2 * beta);
        for (int x = 2; x < beta; ++x) cert.emplace_back(0, x);
        for (int x = beta + 2; x < 2 * beta; ++x) cert.emplace_back(beta, x);
        for (int x = 2 * beta + 2; x < n; ++x) cert.emplace_back(2 * beta, x);
    }
    return cert;
}

std::vector<int> cycle_positions(int n) {
    if (n == 7) return {0, 2, 6, 4, 1, 3, 5};
    int alpha = cycle_step(n);
    if (std::gcd(alpha, n) != 1)
        throw ConstructionFault("cycle step is not coprime to n"); // cannot happen
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[i] = static_cast<int>((static_cast<long long>(i) * alpha) % n);
    return pos;
}

} // namespace

Placement pack_cycle(int n) {
    if (n < 3) throw InvalidParams("cycle needs at least 3 vertices");
    if (n <= 6) throw NotPackable("the " + std::to_string(n) + "-cycle is not potentially triangulable");
    return place_or_search(n, cycle_positions(n), AbstractGraph::cycle(n), cycle_certificate(n));
}

// ---------------------------------------------------------------------------
// remark1_layout
// ---------------------------------------------------------------------------

namespace {

int top_slots(const std::vector<int>& lengths) {
    int t = 0;
    for (int L : lengths) t += (L + 1) / 2;
    return t;
}

// Per-cycle position sequences (in cycle order) of the two-arc zig-zag
// layout. Arc A is positions [0, Ta), z = Ta, arc B is (Ta, n-3], x = n-2,
// y = n-1. Even cycles alternate the arcs exactly; odd cycles of length >= 5
// close with a top chord spanning (L-1)/2 >= 2 slots. Triangles cannot close
// on adjacent same-arc slots, so they are paired into an interleaved motif;
// a lone triangle takes the first and last top slots instead.
std::vector<std::vector<int>> remark1_sequences(int n, const std::vector<int>& lengths) {
    validate_lengths(lengths);
    const int total = std::accumulate(lengths.begin(), lengths.end(), 0);
    if (total != n - 3 || total < 4)
        throw InvalidParams("cycle lengths must sum to n-3 >= 4");
    const int ta_count = top_slots(lengths);

    std::vector<int> tri, other;
    for (int i = 0; i < static_cast<int>(lengths.size()); ++i)
        (lengths[i] == 3 ? tri : other).push_back(i);
    int lone = -1;
    if (tri.size() % 2 == 1) {
        lone = tri.front();
        tri.erase(tri.begin());
    }

    std::vector<std::vector<int>> seq(lengths.size());
    int ta = 0, tb = ta_count + 1;
    int top_limit = ta_count;
    if (lone >= 0) {
        seq[lone] = {0, tb, ta_count - 1};
        ta = 1;
        ++tb;
        top_limit = ta_count - 1;
    }
    std::vector<int> order = other;
    order.insert(order.end(), tri.begin(), tri.end());
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        int ci = order[oi];
        int L = lengths[ci];
        if (L == 3) {
            int cj = order[++oi]; // triangles arrive in pairs
            seq[ci] = {ta, ta + 2, tb};
            seq[cj] = {ta + 1, ta + 3, tb + 1};
            ta += 4;
            tb += 2;
            continue;
        }
        int m = L / 2;
        std::vector<int>& s = seq[ci];
        for (int k = 0; k < m; ++k) {
            s.push_back(ta + k);
            s.push_back(tb + k);
        }
        if (L % 2 == 1) s.push_back(ta + m);
        ta += (L + 1) / 2;
        tb += m;
    }
    assert(ta == top_limit && tb == n - 2);
    (void)top_limit;
    return seq;
}

std::vector<int> flatten_sequences(const std::vector<std::vector<int>>& seq) {
    std::vector<int> pos;
    for (const auto& s : seq) pos.insert(pos.end(), s.begin(), s.end());
    return pos;
}

} // namespace

Remark1Frame remark1_frame(int n, const std::vector<int>& lengths) {
    validate_lengths(lengths);
    if (std::accumulate(lengths.begin(), lengths.end(), 0) != n - 3)
        throw InvalidParams("cycle lengths must sum to n-3");
    return Remark1Frame{n - 2, n - 1, top_slots(lengths)};
}

Placement remark1_layout(int n, std::vector<int> lengths) {
    auto seq = remark1_sequences(n, lengths);
    return Placement(n, flatten_sequences(seq), AbstractGraph::cycle_union(lengths), std::nullopt);
}

// ---------------------------------------------------------------------------
// pack_two_regular
// ---------------------------------------------------------------------------

namespace {

// Insert gap_counts[g] fresh positions into each boundary gap (g, g+1) of a
// p-gon. Returns the expanded polygon size, the old->new index map and the
// new indices per gap (in boundary order).
struct Splice {
    int n;
    std::vector<int> old2new;
    std::map<int, std::vector<int>> gap_positions;
};

Splice splice(int p, const std::map<int, int>& gap_counts) {
    Splice s;
    s.old2new.resize(p);
    int cur = 0;
    for (int old = 0; old < p; ++old) {
        s.old2new[old] = cur++;
        auto it = gap_counts.find(old);
        if (it != gap_counts.end())
            for (int c = 0; c < it->second; ++c) s.gap_positions[old].push_back(cur++);
    }
    s.n = cur;
    return s;
}

// Positions for lengths[0] placed as `base_walk` on a p-gon and the rest
// spliced into the two gaps, laid out per remark1 with z between the runs.
std::vector<int> insert_rest(int p, const std::vector<int>& base_walk,
                             const std::vector<int>& rest, int gap_a, int gap_b) {
    const int r = std::accumulate(rest.begin(), rest.end(), 0);
    const int m = r + 3;
    auto sub = remark1_sequences(m, rest);
    Remark1Frame frame = remark1_frame(m, rest);
    std::map<int, int> counts{{gap_a, frame.z}, {gap_b, r - frame.z}};
    Splice sp = splice(p, counts);
    auto local_to_global = [&](int q) {
        if (q < frame.z) return sp.gap_positions[gap_a][q];
        assert(q > frame.z && q <= m - 3);
        return sp.gap_positions[gap_b][q - frame.z - 1];
    };
    std::vector<int> pos;
    for (int v : base_walk) pos.push_back(sp.old2new[v]);
    for (const auto& s : sub)
        for (int q : s) pos.push_back(local_to_global(q));
    return pos;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace

Placement pack_two_regular(std::vector<int> lengths) {
    validate_lengths(lengths);
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    const int n = std::accumulate(lengths.begin(), lengths.end(), 0);

    static const std::set<std::vector<int>> kExceptional = {
        {3}, {4}, {5}, {6}, {3, 3}, {4, 3}};
    if (kExceptional.count(lengths))
        throw NotPackable("this cycle union is not potentially triangulable");

    if (lengths.size() == 1) return pack_cycle(n);

    const AbstractGraph g = AbstractGraph::cycle_union(lengths);
    const int p = lengths[0];
    const std::vector<int> rest(lengths.begin() + 1, lengths.end());

    if (p == 3) {
        // every cycle a triangle, n = 3*alpha >= 9
        const int alpha = n / 3;
        std::vector<int> pos;
        for (int i = 0; i < alpha; ++i) {
            pos.push_back(i);
            pos.push_back(i + alpha);
            pos.push_back(i + 2 * alpha);
        }
        std::vector<Chord> cert;
        if (n == 9) {
            cert = {Chord(0, 2), Chord(2, 4), Chord(0, 4),
                    Chord(4, 6), Chord(6, 8), Chord(4, 8)};
        } else {
            int a1 = alpha - 1, a2 = 2 * (alpha - 1), a3 = 3 * (alpha - 1);
            cert = {Chord(0, a1), Chord(a1, a2), Chord(a2, a3), Chord(0, a3), Chord(0, a2)};
            for (auto [lo, hi] : {std::pair{0, a1}, {a1, a2}, {a2, a3}})
                for (int x = lo + 2; x < hi; ++x) cert.emplace_back(lo, x);
            for (int x = a3 + 2; x < n; ++x) cert.emplace_back(a3, x);
        }
        return place_or_search(n, pos, g, cert);
    }

    if (p == 4 && rest == std::vector<int>{4}) {
        std::vector<int> pos = concat({0, 2, 5, 3}, {1, 6, 4, 7});
        return place_or_search(8, pos, g,
                               std::vector<Chord>{Chord(1, 3), Chord(1, 4), Chord(1, 5),
                                                  Chord(0, 5), Chord(5, 7)});
    }

    if (rest == std::vector<int>{3}) {
        if (p == 6) {
            std::vector<int> pos = concat({0, 3, 8, 5, 2, 6}, {1, 4, 7});
            return place_or_search(9, pos, g,
                                   std::vector<Chord>{Chord(0, 5), Chord(0, 7), Chord(5, 7),
                                                      Chord(1, 5), Chord(1, 3), Chord(3, 5)});
        }
        if (p == 5) {
            std::vector<int> pos = concat({0, 3, 6, 2, 5}, {1, 4, 7});
            return place_or_search(8, pos, g,
                                   std::vector<Chord>{Chord(0, 2), Chord(2, 4), Chord(0, 4),
                                                      Chord(0, 6), Chord(4, 6)});
        }
        // p >= 7: base cycle on the p-gon, lone triangle on one new vertex in
        // each of the gaps (0,1), (1,2), (2,3)
        std::vector<int> base = cycle_positions(p);
        Splice sp = splice(p, {{0, 1}, {1, 1}, {2, 1}});
        std::vector<int> pos;
        for (int v : base) pos.push_back(sp.old2new[v]);
        pos.push_back(sp.gap_positions[0][0]);
        pos.push_back(sp.gap_positions[1][0]);
        pos.push_back(sp.gap_positions[2][0]);
        Placement placed = place_or_search(n, pos, g, std::nullopt);
        placed.certificate = extract(placed.induced)->diagonals;
        return placed;
    }

    if (p == 4) {
        // all cycles of length <= 4, |V(rest)| >= 6: lay the rest out on an
        // (n-1)-gon, insert one vertex w next to z and route the leading
        // 4-cycle through x, z, y, w.
        const int m = n - 1;
        auto sub = remark1_sequences(m, rest);
        Remark1Frame frame = remark1_frame(m, rest);
        auto shift = [&](int q) { return q > frame.z ? q + 1 : q; };
        int w = frame.z + 1;
        std::vector<int> pos = {shift(frame.x), frame.z, shift(frame.y), w};
        for (const auto& s : sub)
            for (int q : s) pos.push_back(shift(q));
        Placement placed = place_or_search(n, pos, g, std::nullopt);
        placed.certificate = extract(placed.induced)->diagonals;
        return placed;
    }

    // p in {5, 6, 7} or p >= 8, with |V(rest)| >= 4
    std::vector<int> base_walk;
    int gap_a, gap_b;
    if (p == 5) {
        base_walk = {0, 2, 4, 1, 3};
        gap_a = 0, gap_b = 1;
    } else if (p == 6) {
        base_walk = {0, 2, 5, 3, 1, 4};
        gap_a = 5, gap_b = 0;
    } else if (p == 7) {
        base_walk = {0, 3, 1, 6, 4, 2, 5};
        gap_a = 0, gap_b = 1;
    } else {
        base_walk = cycle_positions(p);
        gap_a = 0, gap_b = 1;
    }
    std::vector<int> pos = insert_rest(p, base_walk, rest, gap_a, gap_b);
    Placement placed = place_or_search(n, pos, g, std::nullopt);
    placed.certificate = extract(placed.induced)->diagonals;
    return placed;
}

// ---------------------------------------------------------------------------
// pack_petersen
// ---------------------------------------------------------------------------

namespace {

// 1-based interleaved sequences for the two n-cycles of P(n,1); outer[i] and
// inner[i] are spoke partners.
void petersen_k1_sequences(int n, std::vector<int>& outer, std::vector<int>& inner) {
    outer.clear();
    inner.clear();
    if (n % 2 == 0) {
        for (int i = 1; i <= n / 2; ++i) {
            outer.push_back(i);
            outer.push_back((3 * n - 2 * i + 2) / 2);
        }
        for (int i = 0; i < n / 2; ++i) {
            inner.push_back((3 * n + 2 + 2 * i) / 2);
            inner.push_back(n - i);
        }
    } else {
        for (int i = 1; i <= (n - 1) / 2; ++i) {
            outer.push_back(i);
            outer.push_back((3 * n + 1 - 2 * i) / 2);
        }
        outer.push_back((n + 1) / 2);
        for (int i = 0; i <= (n - 3) / 2; ++i) {
            inner.push_back((3 * n + 1 + 2 * i) / 2);
            inner.push_back(n - i);
        }
        inner.push_back(2 * n);
    }
}

} // namespace

Placement pack_petersen(int n, int k) {
    PetersenSpec spec(n, k); // validates parameters
    const int N = 2 * n;
    std::vector<int> pos(2 * n);
    if (k == 1) {
        std::vector<int> outer, inner;
        petersen_k1_sequences(n, outer, inner);
        for (int i = 0; i < n; ++i) {
            pos[i] = outer[i] - 1;     // a_i
            pos[n + i] = inner[i] - 1; // b_i
        }
    } else {
        for (int i = 0; i < n; ++i) {
            pos[i] = 2 * i;                 // outer cycle on the even positions
            pos[n + i] = (2 * i + 3) % N;   // inner vertices offset by a 3-step spoke
        }
    }
    AbstractGraph g = spec.graph();
    Placement placed = place_or_search(N, pos, g, std::nullopt);
    placed.certificate = extract(placed.induced)->diagonals;
    return placed;
}

// ---------------------------------------------------------------------------
// search_packing
// ---------------------------------------------------------------------------

namespace {

struct Searcher {
    const AbstractGraph& g;
    int n;
    std::optional<std::uint64_t> budget;
    std::uint64_t tried = 0;
    std::vector<int> pos;
    std::vector<bool> used;
    std::vector<std::vector<int>> placed_neighbors; // neighbors of v with id < v

    bool leaf_ok() {
        // quotient by the reflection fixing position 0
        const int m = g.vertex_count;
        for (int v = 1; v < m; ++v) {
            int r = (n - pos[v]) % n;
            if (pos[v] < r) break;
            if (pos[v] > r) return false;
        }
        if (budget && tried >= *budget) return false;
        ++tried;
        std::vector<Chord> chords;
        chords.reserve(g.edges.size());
        for (auto [u, v] : g.edges) chords.emplace_back(pos[u], pos[v]);
        std::sort(chords.begin(), chords.end());
        ConvexInstance inst(n, std::move(chords));
        return decide(inst);
    }

    bool dfs(int v) {
        if (budget && tried >= *budget) return false;
        const int m = g.vertex_count;
        if (v == m) return leaf_ok();
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool ok = true;
            for (int u : placed_neighbors[v]) {
                if (is_boundary(n, Chord(p, pos[u]))) { // hull edges never triangulate away
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[p] = true;
            pos[v] = p;
            if (dfs(v + 1)) return true;
            used[p] = false;
        }
        return false;
    }
};

} // namespace

std::optional<Placement> search_packing(const AbstractGraph& g, int n,
                                        std::optional<std::uint64_t> budget, int ceiling) {
    if (g.vertex_count < 1 || g.vertex_count > n)
        throw InvalidParams("abstract graph does not fit the polygon");
    if (!budget && n > ceiling)
        throw SearchRefused("n=" + std::to_string(n) + " exceeds the search ceiling " +
                            std::to_string(ceiling) + "; pass a budget to override");
    Searcher s{g, n, budget};
    s.pos.assign(g.vertex_count, -1);
    s.used.assign(n, false);
    s.placed_neighbors.assign(g.vertex_count, {});
    for (auto [u, v] : g.edges) {
        if (u > v) std::swap(u, v);
        s.placed_neighbors[v].push_back(u);
    }
    s.pos[0] = 0;
    s.used[0] = true;
    if (!s.dfs(1)) return std::nullopt;
    return Placement(n, s.pos, g, std::nullopt);
}

} // namespace convextri
