#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "convextri/dihedral.hpp"
#include "convextri/instance.hpp"
#include "convextri/verify.hpp"

using namespace convextri;

namespace {

// Independent oracle: proper segment intersection on unit-circle coordinates.
// Points on a circle are never collinear, so strict orientation tests suffice.
bool crosses_geometric(int n, Chord c1, Chord c2) {
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
    auto px = [&](int i) { return std::cos(M_PI / 2 - 2 * M_PI * i / n); };
    auto py = [&](int i) { return std::sin(M_PI / 2 - 2 * M_PI * i / n); };
    auto orient = [](double ax, double ay, double bx, double by, double cx, double cy) {
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    };
    double ax = px(c1.a), ay = py(c1.a), bx = px(c1.b), by = py(c1.b);
    double cx = px(c2.a), cy = py(c2.a), dx = px(c2.b), dy = py(c2.b);
    double d1 = orient(ax, ay, bx, by, cx, cy);
    double d2 = orient(ax, ay, bx, by, dx, dy);
    double d3 = orient(cx, cy, dx, dy, ax, ay);
    double d4 = orient(cx, cy, dx, dy, bx, by);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

std::vector<Chord> all_chords(int n) {
    std::vector<Chord> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
    return out;
}

std::vector<Chord> diagonals_of(int n) {
    std::vector<Chord> out;
    for (const Chord& c : all_chords(n))
        if (!is_boundary(n, c)) out.push_back(c);
    return out;
}

} // namespace

TEST_CASE("chord normalization and validation") {
    Chord c(5, 2);
    CHECK(c.a == 2);
    CHECK(c.b == 5);
    CHECK_THROWS_AS(Chord(3, 3), InvalidChord);
    CHECK_THROWS_AS(Chord(-1, 2), InvalidChord);
    CHECK(circular_length(7, Chord(0, 6)) == 1);
    CHECK(is_boundary(7, Chord(0, 6)));
    CHECK(!is_boundary(7, Chord(0, 5)));
    CHECK(circular_length(8, Chord(0, 4)) == 4);
    CHECK_THROWS_AS(circular_length(5, Chord(0, 5)), InvalidChord);
}

TEST_CASE("crossing predicate on labeled examples") {
    CHECK(crosses(7, Chord(0, 4), Chord(1, 5)));
    CHECK(!crosses(7, Chord(0, 4), Chord(1, 3))); // nested
    CHECK(crosses(6, Chord(0, 4), Chord(1, 5)));
    CHECK(!crosses(7, Chord(0, 4), Chord(0, 5))); // shared endpoint
    CHECK(!crosses(7, Chord(0, 4), Chord(0, 4)));
    CHECK_THROWS_AS(crosses(5, Chord(0, 7), Chord(1, 3)), InvalidChord);
}

TEST_CASE("crossing matches the geometric oracle for all chord pairs, n=4..9") {
    for (int n = 4; n <= 9; ++n) {
        auto cs = all_chords(n);
        for (const Chord& c1 : cs)
            for (const Chord& c2 : cs) {
                CAPTURE(n);
                CAPTURE(c1.a);
                CAPTURE(c1.b);
                CAPTURE(c2.a);
                CAPTURE(c2.b);
                REQUIRE(crosses(n, c1, c2) == crosses_geometric(n, c1, c2));
            }
    }
}

TEST_CASE("crossing is symmetric and dihedral-invariant") {
    const int n = 9;
    auto cs = all_chords(n);
    auto maps = all_maps(n);
    for (const Chord& c1 : cs)
        for (const Chord& c2 : cs) {
            bool x = crosses(n, c1, c2);
            CHECK(x == crosses(n, c2, c1));
            for (const DihedralMap& m : maps)
                CHECK(x == crosses(n, m.apply(c1, n), m.apply(c2, n)));
        }
}

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(ConvexInstance(2, {}), InvalidInstance);
    CHECK_THROWS_AS(ConvexInstance(5, {Chord(0, 5)}), InvalidChord);
    CHECK_THROWS_AS(ConvexInstance(6, {Chord(0, 2), Chord(2, 0)}), InvalidChord); // duplicate
    ConvexInstance inst(6, {Chord(0, 2), Chord(1, 5)});
    CHECK(inst.contains(0, 2));
    CHECK(inst.contains(2, 0));
    CHECK(!inst.contains(0, 3));
    CHECK(!inst.has_boundary_in_forbidden());
    CHECK(ConvexInstance(6, {Chord(2, 3)}).has_boundary_in_forbidden());
    CHECK(inst.degree(0) == 1);
    CHECK(inst.degree(5) == 1);
    CHECK(inst.degree(3) == 0);
}

TEST_CASE("ear vertices") {
    // all distance-2 chords of the 7-gon: every ear is closed
    std::vector<Chord> d2;
    for (int i = 0; i < 7; ++i) d2.emplace_back(i, (i + 2) % 7);
    CHECK(ear_vertices(ConvexInstance(7, d2)).empty());

    ConvexInstance empty(7, {});
    CHECK(ear_vertices(empty).size() == 7);

    // |F| <= n-1 without boundary chords always leaves an open ear
    for (int n = 5; n <= 8; ++n) {
        enumerate_forbidden_sets(n, 0, n - 1, true, [&](const ConvexInstance& inst) {
            REQUIRE(!ear_vertices(inst).empty());
            return true;
        });
    }
    std::mt19937 rng(123);
    for (int n = 9; n <= 12; ++n) {
        auto diags = diagonals_of(n);
        for (int trial = 0; trial < 300; ++trial) {
            std::shuffle(diags.begin(), diags.end(), rng);
            int sz = static_cast<int>(rng() % n); // 0..n-1
            ConvexInstance inst(n, {diags.begin(), diags.begin() + sz});
            CHECK(!ear_vertices(inst).empty());
        }
    }
}

TEST_CASE("dihedral maps compose and invert") {
    const int n = 9;
    auto maps = all_maps(n);
    CHECK(maps.size() == 2 * 9);
    for (const DihedralMap& m1 : maps)
        for (const DihedralMap& m2 : maps) {
            DihedralMap c = compose(m2, m1, n);
            for (int i = 0; i < n; ++i) CHECK(c.apply(i, n) == m2.apply(m1.apply(i, n), n));
        }
    for (const DihedralMap& m : maps) {
        DihedralMap inv = inverse(m, n);
        for (int i = 0; i < n; ++i) CHECK(inv.apply(m.apply(i, n), n) == i);
    }
}

TEST_CASE("apply_map basics") {
    ConvexInstance inst(5, {Chord(0, 2)});
    ConvexInstance same = apply_map(inst, DihedralMap{0, false});
    CHECK(same.forbidden() == inst.forbidden());
    ConvexInstance rot = apply_map(inst, DihedralMap{1, false});
    CHECK(rot.forbidden() == std::vector<Chord>{Chord(1, 3)});
    CHECK(canonical_key(inst) == canonical_key(rot));
}

TEST_CASE("apply_map preserves structure") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        auto cs = all_chords(n);
        std::shuffle(cs.begin(), cs.end(), rng);
        int sz = static_cast<int>(rng() % (n + 1));
        ConvexInstance inst(n, {cs.begin(), cs.begin() + sz});
        for (const DihedralMap& m : all_maps(n)) {
            ConvexInstance img = apply_map(inst, m);
            CHECK(img.n() == inst.n());
            CHECK(img.forbidden().size() == inst.forbidden().size());
            CHECK(img.has_boundary_in_forbidden() == inst.has_boundary_in_forbidden());
            CHECK(canonical_key(img) == canonical_key(inst));
        }
    }
}

TEST_CASE("canonical key partitioning equals explicit orbit equality, n<=7") {
    std::mt19937 rng(99);
    for (int n = 4; n <= 7; ++n) {
        auto diags = diagonals_of(n);
        auto maps = all_maps(n);
        for (int trial = 0; trial < 250; ++trial) {
            auto draw = [&] {
                auto d = diags;
                std::shuffle(d.begin(), d.end(), rng);
                int sz = static_cast<int>(rng() % std::min<std::size_t>(d.size() + 1, 5));
                std::vector<Chord> f(d.begin(), d.begin() + sz);
                return ConvexInstance(n, std::move(f));
            };
            ConvexInstance f1 = draw(), f2 = draw();
            bool same_orbit = false;
            auto sorted2 = f2.forbidden();
            for (const DihedralMap& m : maps) {
                auto img = apply_map(f1, m).forbidden();
                if (img == sorted2) {
                    same_orbit = true;
                    break;
                }
            }
            CHECK(same_orbit == (canonical_key(f1) == canonical_key(f2)));
        }
    }
}

TEST_CASE("delete_vertex relabels the remaining polygon") {
    ConvexInstance inst(6, {Chord(1, 4), Chord(2, 4), Chord(2, 5), Chord(1, 5), Chord(0, 3)});
    ConvexInstance del = delete_vertex(inst, 1);
    CHECK(del.n() == 5);
    CHECK(del.forbidden() == std::vector<Chord>{Chord(0, 2), Chord(1, 3), Chord(1, 4)});
}
