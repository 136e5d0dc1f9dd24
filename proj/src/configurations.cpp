#include "convextri/configurations.hpp"

#include <algorithm>
#include <cassert>

#include "convextri/triangulate.hpp"

namespace convextri {

namespace {

bool any_isolated(const ConvexInstance& inst) {
    const auto& deg = inst.degrees();
    return std::find(deg.begin(), deg.end(), 0) != deg.end();
}

// Star form on n vertices: {(0,i) : i = 2..n-2} plus (1, n-1).
bool is_star_form(const ConvexInstance& inst) {
    const int n = inst.n();
    if (!inst.contains(1, n - 1)) return false;
    for (int i = 2; i <= n - 2; ++i)
        if (!inst.contains(0, i)) return false;
    return true; // |F| == n-2 rules out extra edges
}

// Unique neighbor of a degree-1 vertex.
int pendant_neighbor(const ConvexInstance& inst, int v) {
    for (const Chord& c : inst.forbidden()) {
        if (c.a == v) return c.b;
        if (c.b == v) return c.a;
    }
    assert(false);
    return -1;
}

// Arc-form conditions on an already-mapped instance. The non-pendant run
// must be exactly the prefix 0..k-1 with every ear chord of the run present,
// every pendant hangs off a non-pendant vertex, and pendant edges that cross
// have anchors at index distance one. The anchors live in 0..k-1 with
// k <= n-4, so linear and circular distance-1 coincide there.
std::optional<int> arc_form_length(const ConvexInstance& inst) {
    const int n = inst.n();
    const auto& deg = inst.degrees();
    int k = 0;
    while (k < n && deg[k] >= 2) ++k;
    if (k < 2 || k > n - 4) return std::nullopt;
    for (int i = k; i < n; ++i)
        if (deg[i] != 1) return std::nullopt;
    for (int i = 0; i < k; ++i)
        if (!inst.contains(Chord((i + n - 1) % n, (i + 1) % n))) return std::nullopt;
    std::vector<int> anchor(n, -1);
    for (int i = k; i < n; ++i) {
        int j = pendant_neighbor(inst, i);
        if (deg[j] == 1) return std::nullopt;
        anchor[i] = j;
    }
    for (int u = k; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            Chord eu(u, anchor[u]), ev(v, anchor[v]);
            if (crosses(n, eu, ev)) {
                int d = anchor[u] - anchor[v];
                if (d != 1 && d != -1) return std::nullopt;
            }
        }
    }
    return k;
}

} // namespace

std::optional<FStarWitness> detect_fstar(const ConvexInstance& inst) {
    const int n = inst.n();
    if (inst.forbidden_size() != n - 2) return std::nullopt;
    if (inst.has_boundary_in_forbidden()) return std::nullopt;
    if (any_isolated(inst)) return std::nullopt;
    for (const DihedralMap& m : all_maps(n)) {
        ConvexInstance img = apply_map(inst, m);
        if (is_star_form(img)) return FStarWitness{m, true, 0};
        if (auto k = arc_form_length(img)) return FStarWitness{m, false, *k};
    }
    return std::nullopt;
}

namespace {

struct JSets {
    std::vector<int> j1, j2;
    bool config_ok = true; // Definition conditions (i)+(ii) hold at every vertex
};

// Scan all vertices with an open ear chord. Degree > 2 there breaks the
// configuration; degree 2 additionally requires the vertex-deleted instance
// to be in the (n-2)-edge blocking family.
JSets jstar_scan(const ConvexInstance& inst) {
    const int n = inst.n();
    JSets out;
    for (int i = 0; i < n; ++i) {
        if (inst.contains(Chord((i + n - 1) % n, (i + 1) % n))) continue;
        int d = inst.degree(i);
        if (d > 2) {
            out.config_ok = false;
            continue;
        }
        if (d == 1) {
            out.j1.push_back(i);
        } else if (d == 2) {
            if (detect_fstar(delete_vertex(inst, i)))
                out.j2.push_back(i);
            else
                out.config_ok = false;
        }
    }
    return out;
}

bool jstar_preconditions(const ConvexInstance& inst) {
    return inst.n() >= 5 && inst.forbidden_size() == inst.n() - 1 &&
           !inst.has_boundary_in_forbidden() && !any_isolated(inst);
}

} // namespace

std::optional<JStarWitness> detect_jstar(const ConvexInstance& inst) {
    if (!jstar_preconditions(inst)) return std::nullopt;
    const int n = inst.n();
    JSets sets = jstar_scan(inst);
    if (!sets.config_ok) return std::nullopt;

    if (sets.j2.empty()) {
        // Type-1: some edge removal lands in the (n-2)-edge family. Edges are
        // tried in sorted order, so the witness edge is deterministic.
        for (const Chord& e : inst.forbidden()) {
            std::vector<Chord> rest;
            rest.reserve(inst.forbidden().size() - 1);
            for (const Chord& c : inst.forbidden())
                if (!(c == e)) rest.push_back(c);
            if (detect_fstar(ConvexInstance(n, std::move(rest))))
                return JStarWitness{DihedralMap{}, true, e, sets.j1, sets.j2};
        }
        return std::nullopt;
    }

    // Type-2: a pendant edge crossing both edges of a j2 vertex must have its
    // anchor next to one of that vertex's neighbors (polygon-adjacent).
    for (int i : sets.j2) {
        int nb[2], cnt = 0;
        for (const Chord& c : inst.forbidden()) {
            if (c.a == i) nb[cnt++] = c.b;
            else if (c.b == i) nb[cnt++] = c.a;
        }
        assert(cnt == 2);
        Chord e1(i, nb[0]), e2(i, nb[1]);
        for (int t = 0; t < n; ++t) {
            if (inst.degree(t) != 1) continue;
            int s = pendant_neighbor(inst, t);
            Chord et(t, s);
            if (crosses(n, et, e1) && crosses(n, et, e2)) {
                bool near1 = s != nb[0] && circular_length(n, Chord(s, nb[0])) == 1;
                bool near2 = s != nb[1] && circular_length(n, Chord(s, nb[1])) == 1;
                if (!near1 && !near2) return std::nullopt;
            }
        }
    }
    // A blocked instance stays blocked when an open-ear vertex is deleted
    // (its ear chord is a hull edge of the smaller polygon, so a smaller
    // triangulation would lift back). Deleting a j1 pendant keeps n-2 edges
    // on the (n-1)-gon, so the result must itself be a blocking
    // configuration; without this closure the pointwise conditions above
    // admit triangulable instances from n = 9 up.
    for (int v : sets.j1)
        if (!detect_jstar(delete_vertex(inst, v))) return std::nullopt;
    return JStarWitness{DihedralMap{}, false, std::nullopt, sets.j1, sets.j2};
}

std::pair<std::vector<int>, std::vector<int>> jstar_vertex_sets(const ConvexInstance& inst) {
    if (!jstar_preconditions(inst))
        throw NotApplicable("jstar_vertex_sets needs n >= 5, |F| = n-1, no boundary chord and "
                            "no isolated vertex");
    JSets sets = jstar_scan(inst);
    return {sets.j1, sets.j2};
}

ConfigClass classify(const ConvexInstance& inst) {
    const int n = inst.n();
    ConfigClass out;
    if (inst.has_boundary_in_forbidden()) {
        out.kind = ConfigClass::Kind::BoundaryEdgeInF;
        return out;
    }
    const int f = inst.forbidden_size();
    if (f <= n - 3) {
        out.kind = ConfigClass::Kind::Triangulable;
        out.reason = ConfigClass::Reason::BelowBound;
        return out;
    }
    if (f == n - 2) {
        if (auto w = detect_fstar(inst)) {
            out.kind = ConfigClass::Kind::BlockedFStar;
            out.fstar = *w;
        } else {
            out.kind = ConfigClass::Kind::Triangulable;
            out.reason = ConfigClass::Reason::NotFStar;
        }
        return out;
    }
    if (f == n - 1) {
        if (auto w = detect_jstar(inst)) {
            out.kind = ConfigClass::Kind::BlockedJStar;
            out.jstar = *w;
        } else {
            out.kind = ConfigClass::Kind::Triangulable;
            out.reason = ConfigClass::Reason::NotJStar;
        }
        return out;
    }
    out.kind = ConfigClass::Kind::OutOfCharacterization;
    out.dp_triangulable = decide(inst);
    return out;
}

} // namespace convextri
