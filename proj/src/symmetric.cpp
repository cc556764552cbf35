#include "epp/symmetric.hpp"

#include <algorithm>

namespace epp {

namespace {

// Sums prod term(x_{pos_i}, part_i) over all distinct placements of the parts
// of lam into distinct positions of the alphabet: choose an l-subset of
// positions, then run the distinct permutations of the part multiset.
template <class Term>
Rational placement_sum(const IntegerPartition& lam, std::span<const Rational> point, Term term) {
    const int l = lam.length();
    const int k = static_cast<int>(point.size());
    if (l > k) return Rational(0);
    if (l == 0) return Rational(1);

    std::vector<int> positions(static_cast<size_t>(l));
    Rational total(0);

    const auto run_permutations = [&]() {
        std::vector<int> arrangement(lam.parts().begin(), lam.parts().end());
        std::sort(arrangement.begin(), arrangement.end());
        do {
            Rational prod(1);
            for (int i = 0; i < l && !prod.is_zero(); ++i)
                prod *= term(point[static_cast<size_t>(positions[static_cast<size_t>(i)])],
                             arrangement[static_cast<size_t>(i)]);
            total += prod;
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    };

    // enumerate l-subsets of {0..k-1}
    const auto choose = [&](auto&& self, int idx, int from) -> void {
        if (idx == l) {
            run_permutations();
            return;
        }
        for (int p = from; p <= k - (l - idx); ++p) {
            positions[static_cast<size_t>(idx)] = p;
            self(self, idx + 1, p + 1);
        }
    };
    choose(choose, 0, 0);
    return total;
}

} // namespace

Rational monomial_sym(const IntegerPartition& lam, std::span<const Rational> point) {
    return placement_sum(lam, point,
                         [](const Rational& x, int e) { return pow(x, static_cast<unsigned long>(e)); });
}

Rational factorial_monomial_sym(const IntegerPartition& lam, std::span<const Rational> point) {
    return placement_sum(lam, point,
                         [](const Rational& x, int e) { return falling_factorial(x, e); });
}

Rational mstar_repeated_alpha(const IntegerPartition& lam, int k, const Rational& alpha) {
    if (k < 0) throw Error("mstar_repeated_alpha: negative alphabet size");
    Rational out = falling_factorial(Rational(k), lam.length()) /
                   Rational(lam.frequency_factorial());
    for (int p : lam.parts()) out *= falling_factorial(alpha, p);
    return out;
}

FLambda closed_f_lambda(const IntegerPartition& lam, const Rational& alpha) {
    const int n = lam.size();
    const int l = lam.length();
    Rational scale = (n % 2 == 0) ? Rational(1) : Rational(-1);
    scale /= Rational(lam.frequency_factorial());
    for (int p : lam.parts()) scale *= rising_factorial(Rational(1) - alpha, p - 1);
    return {lam, alpha, ThetaPoly::rising(Rational(0), l, alpha) * scale};
}

std::vector<std::vector<Rational>> divided_difference_table(const IntegerPartition& lam,
                                                            const Rational& alpha) {
    if (alpha.is_zero()) throw AlphaZero("interpolation nodes collapse at alpha = 0");
    const int l = lam.length();
    std::vector<std::vector<Rational>> table;
    table.reserve(static_cast<size_t>(l) + 1);
    std::vector<Rational> col;
    for (int i = 0; i <= l; ++i) col.push_back(mstar_repeated_alpha(lam, l + i, alpha));
    table.push_back(col);
    // node x_i = -(l+i) alpha; x_{j+i} - x_j = -i alpha
    for (int i = 1; i <= l; ++i) {
        std::vector<Rational> next;
        next.reserve(static_cast<size_t>(l - i) + 1);
        const Rational denom = Rational(-i) * alpha;
        for (int j = 0; j + i <= l; ++j)
            next.push_back((table.back()[static_cast<size_t>(j) + 1] -
                            table.back()[static_cast<size_t>(j)]) /
                           denom);
        table.push_back(std::move(next));
    }
    return table;
}

FLambda newton_f_lambda(const IntegerPartition& lam, const Rational& alpha) {
    if (alpha.is_zero()) throw AlphaZero("Newton construction needs alpha != 0");
    const int l = lam.length();
    const auto table = divided_difference_table(lam, alpha);
    ThetaPoly poly;
    ThetaPoly basis = ThetaPoly::constant(Rational(1));
    for (int i = 0; i <= l; ++i) {
        poly += basis * table[static_cast<size_t>(i)][0];
        basis = basis * ThetaPoly(std::vector<Rational>{Rational(l + i) * alpha, Rational(1)});
    }
    return {lam, alpha, std::move(poly)};
}

FLambda altrep_f_lambda(const IntegerPartition& lam, const Rational& alpha) {
    if (alpha.is_zero()) throw AlphaZero("alternating-sum construction needs alpha != 0");
    const int l = lam.length();
    // (theta + l alpha)^{l+1 rising alpha}; dividing out (theta + (l+j) alpha)
    // is exact for each j = 0..l
    const ThetaPoly full = ThetaPoly::rising(Rational(l) * alpha, l + 1, alpha);
    const Rational alpha_l = pow(alpha, static_cast<unsigned long>(l));
    ThetaPoly poly;
    for (int j = 0; j <= l; ++j) {
        auto [quotient, remainder] = full.divide_linear(Rational(l + j) * alpha);
        if (!remainder.is_zero())
            throw IdentityViolation("rising factorial not divisible by its own node factor");
        Rational w = mstar_repeated_alpha(lam, l + j, alpha);
        if (j % 2 != 0) w = -w;
        w /= alpha_l * Rational(factorial(static_cast<unsigned long>(l - j))) *
             Rational(factorial(static_cast<unsigned long>(j)));
        poly += quotient * w;
    }
    return {lam, alpha, std::move(poly)};
}

} // namespace epp
