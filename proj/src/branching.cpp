#include "epp/branching.hpp"

#include <algorithm>

namespace epp {

std::vector<std::pair<IntegerPartition, int>> KingmanGraph::successors(const Vertex& v) const {
    std::vector<std::pair<Vertex, int>> out;
    std::vector<int> parts(v.parts().begin(), v.parts().end());
    // grow the first row of each run of equal parts; the list stays sorted
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && parts[i] == parts[i - 1]) continue;
        std::vector<int> grown = parts;
        grown[i] += 1;
        IntegerPartition lam(std::move(grown));
        out.emplace_back(lam, lam.frequency(parts[i] + 1));
    }
    parts.push_back(1);
    IntegerPartition appended(std::move(parts));
    out.emplace_back(appended, appended.frequency(1));
    return out;
}

std::vector<std::pair<IntegerPartition, int>> KingmanGraph::predecessors(const Vertex& v) const {
    std::vector<std::pair<Vertex, int>> out;
    const auto parts = v.parts();
    // shrink the last row of each run of equal parts
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
        std::vector<int> shrunk(parts.begin(), parts.end());
        if (shrunk[i] == 1)
            shrunk.erase(shrunk.begin() + static_cast<long>(i));
        else
            shrunk[i] -= 1;
        out.emplace_back(IntegerPartition(std::move(shrunk)), v.frequency(parts[i]));
    }
    return out;
}

std::vector<PascalVertex> PascalGraph::level_vertices(int n) const {
    std::vector<PascalVertex> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int h = 0; h <= n; ++h) out.push_back({h, n - h});
    return out;
}

std::vector<std::pair<PascalVertex, int>> PascalGraph::successors(const Vertex& v) const {
    return {{{v.heads + 1, v.tails}, 1}, {{v.heads, v.tails + 1}, 1}};
}

std::vector<std::pair<PascalVertex, int>> PascalGraph::predecessors(const Vertex& v) const {
    std::vector<std::pair<Vertex, int>> out;
    if (v.heads > 0) out.push_back({{v.heads - 1, v.tails}, 1});
    if (v.tails > 0) out.push_back({{v.heads, v.tails - 1}, 1});
    return out;
}

Integer pascal_dim(const PascalVertex& from, const PascalVertex& to) {
    const long n = to.heads + to.tails - from.heads - from.tails;
    const long k = to.tails - from.tails;
    if (to.heads < from.heads) return Integer(0);
    return binomial_int(n, k);
}

Rational pascal_boundary_ratio(const PascalVertex& fixed, const Rational& p, long n) {
    if (p.sign() < 0 || p > Rational(1)) throw ParamRange("path fraction must be in [0, 1]");
    if (n < fixed.level()) throw ParamRange("n below the level of the fixed vertex");
    Integer h;
    {
        Integer scaled = p.num() * n;
        mpz_fdiv_q(h.get_mpz_t(), scaled.get_mpz_t(), p.den().get_mpz_t());
    }
    const long hl = h.get_si();
    const PascalVertex tip{static_cast<int>(hl), static_cast<int>(n - hl)};
    return Rational(pascal_dim(fixed, tip)) / Rational(pascal_dim({0, 0}, tip));
}

} // namespace epp
