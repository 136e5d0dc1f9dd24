#include "convextri/instance.hpp"

#include <algorithm>

namespace convextri {

ConvexInstance::ConvexInstance(int n, std::vector<Chord> forbidden)
    : n_(n), stride_((n + 63) / 64), forbidden_(std::move(forbidden)) {
    if (n_ < 3)
        throw InvalidInstance("polygon size must be at least 3, got " + std::to_string(n_));
    std::sort(forbidden_.begin(), forbidden_.end());
    for (std::size_t i = 0; i + 1 < forbidden_.size(); ++i)
        if (forbidden_[i] == forbidden_[i + 1])
            throw InvalidChord("duplicate chord " + to_string(forbidden_[i]));
    bits_.assign(static_cast<std::size_t>(n_) * stride_, 0);
    degree_.assign(n_, 0);
    for (const Chord& c : forbidden_) {
        if (c.b >= n_)
            throw InvalidChord("chord " + to_string(c) + " out of range for n=" + std::to_string(n_));
        bits_[static_cast<std::size_t>(c.a) * stride_ + (c.b >> 6)] |= std::uint64_t{1} << (c.b & 63);
        bits_[static_cast<std::size_t>(c.b) * stride_ + (c.a >> 6)] |= std::uint64_t{1} << (c.a & 63);
        ++degree_[c.a];
        ++degree_[c.b];
        if (is_boundary(n_, c)) has_boundary_ = true;
    }
}

std::vector<int> ear_vertices(const ConvexInstance& inst) {
    const int n = inst.n();
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        int next = (i + 1) % n;
        if (!inst.contains(Chord(prev, next))) out.push_back(i);
    }
    return out;
}

ConvexInstance delete_vertex(const ConvexInstance& inst, int v) {
    if (v < 0 || v >= inst.n())
        throw InvalidParams("delete_vertex: position out of range");
    std::vector<Chord> out;
    out.reserve(inst.forbidden().size());
    for (const Chord& c : inst.forbidden()) {
        if (c.a == v || c.b == v) continue;
        int a = c.a > v ? c.a - 1 : c.a;
        int b = c.b > v ? c.b - 1 : c.b;
        out.emplace_back(a, b);
    }
    return ConvexInstance(inst.n() - 1, std::move(out));
}

} // namespace convextri
