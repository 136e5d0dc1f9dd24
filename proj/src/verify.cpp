#include "convextri/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <thread>

#include "convextri/configurations.hpp"
#include "convextri/dihedral.hpp"
#include "convextri/packing.hpp"
#include "convextri/triangulate.hpp"

namespace convextri {

namespace {

using Mask = std::uint64_t;

// The diagonal universe of an n-gon in lex order, with the dihedral action
// precomputed as index permutations. Subsets are uint64 masks, which caps
// enumeration at n = 12 (54 diagonals).
struct DiagUniverse {
    int n = 0;
    std::vector<Chord> diags;
    std::vector<std::vector<int>> perms; // 2n maps x D

    explicit DiagUniverse(int n_) : n(n_) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 2; b < n; ++b)
                if (!(a == 0 && b == n - 1)) diags.emplace_back(a, b);
        std::sort(diags.begin(), diags.end());
        for (const DihedralMap& m : all_maps(n)) {
            std::vector<int> p(diags.size());
            for (std::size_t d = 0; d < diags.size(); ++d) {
                Chord img = m.apply(diags[d], n);
                p[d] = static_cast<int>(
                    std::lower_bound(diags.begin(), diags.end(), img) - diags.begin());
            }
            perms.push_back(std::move(p));
        }
    }

    int size() const { return static_cast<int>(diags.size()); }

    Mask permute(Mask m, const std::vector<int>& p) const {
        Mask out = 0;
        while (m) {
            int d = std::countr_zero(m);
            m &= m - 1;
            out |= Mask{1} << p[d];
        }
        return out;
    }

    ConvexInstance instance(Mask m) const {
        std::vector<Chord> F;
        Mask t = m;
        while (t) {
            int d = std::countr_zero(t);
            t &= t - 1;
            F.push_back(diags[d]);
        }
        return ConvexInstance(n, std::move(F));
    }
};

// Lex order on the ascending chord lists of two equal-size subsets: the set
// owning the smallest element of the symmetric difference is the smaller.
inline bool mask_less(Mask a, Mask b) {
    if (a == b) return false;
    Mask diff = a ^ b;
    Mask low = diff & (~diff + 1);
    return (a & low) != 0;
}

// Canonical iff no dihedral image is smaller; orbit size as a byproduct.
struct CanonScan {
    bool canonical = true;
    int orbit = 1;
};

CanonScan canon_scan(const DiagUniverse& u, Mask m) {
    CanonScan out;
    Mask images[64];
    int cnt = 0;
    for (const auto& p : u.perms) {
        Mask im = u.permute(m, p);
        if (mask_less(im, m)) {
            out.canonical = false;
            return out;
        }
        images[cnt++] = im;
    }
    std::sort(images, images + cnt);
    out.orbit = static_cast<int>(std::unique(images, images + cnt) - images);
    return out;
}

template <typename Fn>
void for_each_subset(int universe, int min_sz, int max_sz, Fn&& fn) {
    for (int s = min_sz; s <= max_sz; ++s) {
        if (s == 0) {
            if (!fn(Mask{0})) return;
            continue;
        }
        if (s > universe) continue;
        std::vector<int> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            Mask m = 0;
            for (int i : idx) m |= Mask{1} << i;
            if (!fn(m)) return;
            int i = s - 1;
            while (i >= 0 && idx[i] == universe - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection sampling; stdlib distributions are not specified bit-exactly
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

std::string canonical_item(const ConvexInstance& inst) {
    return to_string(canonical_key(inst));
}

// Ordered parallel map: preserves item order in the merged result.
template <typename Item, typename Check>
std::vector<VerifyMismatch> run_checks(const std::vector<Item>& items, int jobs,
                                       const Check& check) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || items.size() < 2) {
        std::vector<VerifyMismatch> out;
        for (const Item& it : items) check(it, out);
        return out;
    }
    std::vector<std::vector<VerifyMismatch>> parts(jobs);
    std::vector<std::thread> threads;
    const std::size_t chunk = (items.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        threads.emplace_back([&, w] {
            std::size_t lo = w * chunk;
            std::size_t hi = std::min(items.size(), lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) check(items[i], parts[w]);
        });
    }
    for (auto& t : threads) t.join();
    std::vector<VerifyMismatch> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void band_for(const std::string& id, int n, int& lo, int& hi) {
    if (id == "t1") {
        lo = 0;
        hi = n - 3;
    } else if (id == "t2") {
        lo = hi = n - 2;
    } else if (id == "t3") {
        lo = hi = n - 1;
    } else {
        throw InvalidParams("unknown theorem id: " + id);
    }
}

} // namespace

void enumerate_forbidden_sets(int n, int min_edges, int max_edges, bool canonical_only,
                              const std::function<bool(const ConvexInstance&)>& yield,
                              int ceiling) {
    if (n < 3) throw InvalidParams("enumeration needs n >= 3");
    if (n > ceiling || n > kDefaultEnumCeiling)
        throw SearchRefused("enumeration supports 3 <= n <= " +
                            std::to_string(std::min(ceiling, kDefaultEnumCeiling)));
    DiagUniverse u(n);
    if (min_edges < 0 || max_edges < min_edges || max_edges > u.size())
        throw InvalidParams("edge-count band out of range");
    for_each_subset(u.size(), min_edges, max_edges, [&](Mask m) {
        if (canonical_only && !canon_scan(u, m).canonical) return true;
        return yield(u.instance(m));
    });
}

VerifyReport verify_theorem(const std::string& id, int n, std::uint64_t samples,
                            std::uint64_t seed, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();
    int lo = 0, hi = 0;
    band_for(id, n, lo, hi);
    if (n < 4 || (id == "t3" && n < 5)) throw InvalidParams("n too small for " + id);

    VerifyReport rep;
    rep.theorem = id;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;

    DiagUniverse u(n);
    if (hi > u.size()) hi = u.size();

    auto check_mask = [&](Mask m, std::vector<VerifyMismatch>& out) {
        ConvexInstance inst = u.instance(m);
        bool dp = decide(inst);
        bool cls = classify(inst).triangulable();
        if (dp != cls) out.push_back({canonical_item(inst), dp, cls});
    };

    if (samples == 0) {
        if (n > 9)
            throw SearchRefused("exhaustive verification is limited to n <= 9; pass a sample "
                                "count for larger n");
        std::vector<Mask> reps;
        for_each_subset(u.size(), lo, hi, [&](Mask m) {
            CanonScan cs = canon_scan(u, m);
            if (cs.canonical) {
                reps.push_back(m);
                rep.instances_checked += cs.orbit;
            }
            return true;
        });
        rep.canonical_classes_checked = reps.size();
        rep.mismatches = run_checks(reps, jobs, check_mask);
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> idx(u.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Mask> draws;
        draws.reserve(samples);
        for (std::uint64_t s = 0; s < samples; ++s) {
            int sz = lo + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(hi - lo + 1)));
            Mask m = 0;
            for (int i = 0; i < sz; ++i) {
                int j = i + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(u.size() - i)));
                std::swap(idx[i], idx[j]);
                m |= Mask{1} << idx[i];
            }
            draws.push_back(m);
        }
        rep.instances_checked = samples;
        rep.mismatches = run_checks(draws, jobs, check_mask);
    }

    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

void multisets_rec(int remaining, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 3; --p) {
        if (remaining - p != 0 && remaining - p < 3) continue;
        cur.push_back(p);
        multisets_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::string multiset_name(const std::vector<int>& ms) {
    std::string s;
    for (int L : ms) {
        if (!s.empty()) s += "+";
        s += "C" + std::to_string(L);
    }
    return s;
}

bool exceptional_multiset(const std::vector<int>& ms) {
    static const std::vector<std::vector<int>> ex = {{3}, {4}, {5}, {6}, {3, 3}, {4, 3}};
    return std::find(ex.begin(), ex.end(), ms) != ex.end();
}

} // namespace

VerifyReport verify_potential(const std::string& id, int n_max) {
    const auto t0 = std::chrono::steady_clock::now();
    if (id != "t4" && id != "t5") throw InvalidParams("unknown theorem id: " + id);
    VerifyReport rep;
    rep.theorem = id;
    rep.n = n_max;

    auto check = [&](const std::vector<int>& ms, int n) {
        ++rep.instances_checked;
        bool predicted = !exceptional_multiset(ms);
        bool exists = search_packing(AbstractGraph::cycle_union(ms), n).has_value();
        if (exists != predicted)
            rep.mismatches.push_back({multiset_name(ms), exists, predicted});
        // the constructive side must agree as well
        bool constructed;
        try {
            Placement placed =
                ms.size() == 1 ? pack_cycle(n) : pack_two_regular(ms);
            constructed = true;
            (void)placed;
        } catch (const NotPackable&) {
            constructed = false;
        } catch (const ConstructionFault&) {
            rep.mismatches.push_back({"pack:" + multiset_name(ms), false, predicted});
            return;
        }
        if (constructed != predicted)
            rep.mismatches.push_back({"pack:" + multiset_name(ms), constructed, predicted});
    };

    if (id == "t4") {
        for (int n = 3; n <= n_max; ++n) check({n}, n);
    } else {
        for (int total = 3; total <= n_max; ++total) {
            std::vector<std::vector<int>> all;
            std::vector<int> cur;
            multisets_rec(total, total, cur, all);
            for (const auto& ms : all) check(ms, total);
        }
    }

    rep.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace convextri
