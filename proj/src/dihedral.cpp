#include "convextri/dihedral.hpp"

#include <algorithm>

namespace convextri {

DihedralMap compose(DihedralMap outer, DihedralMap inner, int n) {
    // outer(inner(i)) = outer.rot +/- (inner.rot +/- i)
    int rot = outer.reflected ? outer.rotation - inner.rotation : outer.rotation + inner.rotation;
    rot %= n;
    if (rot < 0) rot += n;
    return DihedralMap{rot, outer.reflected != inner.reflected};
}

DihedralMap inverse(DihedralMap m, int n) {
    if (m.reflected) return m; // reflections are involutions
    int rot = (n - m.rotation) % n;
    return DihedralMap{rot, false};
}

std::vector<DihedralMap> all_maps(int n) {
    std::vector<DihedralMap> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int refl = 0; refl < 2; ++refl)
        for (int rot = 0; rot < n; ++rot)
            out.push_back(DihedralMap{rot, refl != 0});
    return out;
}

ConvexInstance apply_map(const ConvexInstance& inst, DihedralMap m) {
    const int n = inst.n();
    std::vector<Chord> out;
    out.reserve(inst.forbidden().size());
    for (const Chord& c : inst.forbidden()) out.push_back(m.apply(c, n));
    return ConvexInstance(n, std::move(out));
}

CanonicalKey canonical_key(const ConvexInstance& inst) {
    const int n = inst.n();
    CanonicalKey best;
    bool have = false;
    std::vector<Chord> img(inst.forbidden().size());
    for (const DihedralMap& m : all_maps(n)) {
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = m.apply(inst.forbidden()[i], n);
        std::sort(img.begin(), img.end());
        if (!have || img < best) {
            best = img;
            have = true;
        }
    }
    return best;
}

} // namespace convextri
