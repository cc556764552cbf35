#pragma once

#include <span>
#include <vector>

#include "epp/partition.hpp"
#include "epp/rational.hpp"
#include "epp/theta_poly.hpp"

namespace epp {

/// Monomial symmetric function m_lambda evaluated at a finite alphabet:
/// the sum over all distinct sequences whose nonzero entries rearrange the
/// parts of lambda of prod x_i^{alpha_i}. Zero when the alphabet is shorter
/// than l(lambda).
Rational monomial_sym(const IntegerPartition& lam, std::span<const Rational> point);

/// Factorial monomial symmetric function m*_lambda: m_lambda with each power
/// x^a replaced by the falling factorial x(x-1)...(x-a+1). Satisfies the
/// interpolation property m*_lambda(mu) = 0 for mu != lambda, |mu| <= |lambda|.
Rational factorial_monomial_sym(const IntegerPartition& lam, std::span<const Rational> point);

/// Closed form of m*_lambda at k copies of alpha:
/// k^{l falling} / prod r_j! * prod alpha^{lambda_j falling}.
Rational mstar_repeated_alpha(const IntegerPartition& lam, int k, const Rational& alpha);

/// The polynomial f_lambda(theta; alpha) = pi_{theta,alpha}(m*_lambda): the
/// linear multiplicative image of m*_lambda, as a polynomial of degree
/// l(lambda) in theta with alpha held fixed.
struct FLambda {
    IntegerPartition lam;
    Rational alpha;
    ThetaPoly poly;
};

/// Direct closed form:
/// (-1)^{|lambda|} theta^{l rising alpha} / prod r_j! * prod (1-alpha)^{lambda_j - 1 rising}.
/// Works for every alpha, including alpha = 0.
FLambda closed_f_lambda(const IntegerPartition& lam, const Rational& alpha);

/// Newton interpolation through the nodes theta = -l alpha, ..., -2l alpha
/// with values m*_lambda(alpha,...,alpha). Requires alpha != 0 (the nodes
/// collapse otherwise); throws AlphaZero.
FLambda newton_f_lambda(const IntegerPartition& lam, const Rational& alpha);

/// Alternating-sum representation
///   f_lambda = sum_j m*_lambda(alpha x (l+j)) (-1)^j
///              (theta+l alpha)^{l+1 rising alpha}
///              / ((theta+(l+j) alpha) alpha^l (l-j)! j!).
/// Each apparent pole cancels because (theta+(l+j)alpha) divides the rising
/// factorial; implemented by exact polynomial division. Requires alpha != 0.
FLambda altrep_f_lambda(const IntegerPartition& lam, const Rational& alpha);

/// Full divided-difference triangle over the interpolation nodes. Column 0
/// holds the values m*_lambda(alpha x k) for k = l..2l; the top entry of
/// column i is the i-th Newton coefficient, equal to the i-fold backward
/// difference of f_lambda at theta = -l alpha divided by i! alpha^i.
/// Returned column-major: table[i][j] = f[x_j, ..., x_{j+i}].
std::vector<std::vector<Rational>> divided_difference_table(const IntegerPartition& lam,
                                                            const Rational& alpha);

} // namespace epp
