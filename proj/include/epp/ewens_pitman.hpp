#pragma once

#include <functional>
#include <span>
#include <vector>

#include "epp/partition.hpp"
#include "epp/rational.hpp"
#include "epp/symmetric.hpp"

namespace epp {

/// Parameters of the Ewens-Pitman partition structure: 0 <= alpha < 1 and
/// theta > -alpha. Construction validates the range (throws ParamRange).
struct EPParams {
    Rational alpha;
    Rational theta;
    EPParams(Rational alpha_, Rational theta_);
};

/// Which construction of f_lambda backs a probability evaluation. All three
/// agree exactly; Newton and AltRep require alpha != 0.
enum class PmfRoute { Closed, Newton, AltRep };

/// Which evaluation backs a summary statistic: the generating-function /
/// closed form derived through the FTRA, or the brute-force enumeration
/// oracle.
enum class StatRoute { ClosedForm, BruteForce };

inline constexpr int kDefaultOracleBound = 12;

FLambda f_lambda(const IntegerPartition& lam, const Rational& alpha, PmfRoute route);

/// The harmonic function phi_{theta,alpha}(lambda) = (-1)^n f_lambda(theta) /
/// theta^{n rising}, evaluated exactly (the shared theta factor is cancelled
/// symbolically, so theta = 0 is fine).
Rational phi_harmonic(const EPParams& p, const IntegerPartition& lam,
                      PmfRoute route = PmfRoute::Closed);

/// M_n(lambda) = dim(lambda) phi_{theta,alpha}(lambda). With verify = true,
/// all admissible routes are computed and compared coefficientwise before
/// returning (IdentityViolation on mismatch).
Rational pmf(const EPParams& p, const IntegerPartition& lam,
             PmfRoute route = PmfRoute::Closed, bool verify = false);

/// Pitman's exchangeable partition probability function; equals
/// phi_harmonic times prod r_j(lambda)!.
Rational eppf(const EPParams& p, const IntegerPartition& lam);

/// Sum of M_n over all partitions of n, computed through the FTRA pipeline
/// (compose the rising-factorial generating function with the Kingman h
/// series, extract coefficient n, divide by theta^{n rising}). Exactly 1.
Rational normalization(const EPParams& p, int n);

/// P(l(lambda) = l) under M_n. The ClosedForm route multiplies the
/// generalized Stirling number S_{n,l}(-1,-alpha,0) by theta^{l rising alpha}
/// where the rising factorial is itself extracted from its Laguerre-type
/// generating function; BruteForce sums pmf over the level.
Rational marginal_length(const EPParams& p, int n, int l,
                         StatRoute route = StatRoute::ClosedForm, bool verify = false,
                         int oracle_bound = kDefaultOracleBound);

/// Falling-factorial length moment E_n[l^{k falling}], 1 <= k <= n:
/// k! theta^{k rising alpha} S_{n,k}(-1,-alpha,theta+k alpha) / theta^{n rising}.
Rational moment_length(const EPParams& p, int n, int k,
                       StatRoute route = StatRoute::ClosedForm, bool verify = false,
                       int oracle_bound = kDefaultOracleBound);

/// The alternating binomial expansion of the length moment,
/// (theta/alpha)^{k rising} sum_j (-1)^{k-j} binom(k,j)
/// (theta+j alpha)^{n rising step} / theta^{n rising}. With step_alpha =
/// false the inner rising factorial uses step 1, which matches the Stirling
/// closed form; with step_alpha = true it uses step alpha, a published
/// variant that does not (kept evaluable so the discrepancy can be reported).
Rational moment_length_expansion(const EPParams& p, int n, int k, bool step_alpha);

/// Joint falling-factorial moment of the part-size counts:
/// E_n[prod_j r_j(lambda)^{k_j falling}] for orders k_1..k_n (trailing zeros
/// may be omitted). Requires s = sum j k_j <= n (OrderTooLarge).
Rational joint_moment_sizes(const EPParams& p, int n, std::span<const int> orders,
                            StatRoute route = StatRoute::ClosedForm, bool verify = false,
                            int oracle_bound = kDefaultOracleBound);

/// A conditional query: a partition mu of n already observed, m additional
/// observations, and falling-factorial orders k_1..k_m on the counts of
/// newly created part sizes.
struct ConditionalQuery {
    IntegerPartition mu;
    int extra = 0;           // m
    std::vector<int> orders; // k_1..k_m; trailing zeros may be omitted

    int order_total() const;  // s = sum j k_j
    int order_count() const;  // k = sum k_j
};

/// E[prod_j r_j^{new}(lambda minus mu)^{k_j falling} | mu] over partitions of
/// n+m reachable from mu. ClosedForm:
///   m! theta^{n r} (theta+l(mu) alpha)^{k r alpha} (theta+n+k alpha)^{m-s r}
///   / ((m-s)! theta^{n+m r}) prod xi_j^{k_j}.
/// BruteForce enumerates every (new-part multiset, old-part increment)
/// decomposition of the m added boxes with its exact path weight.
Rational conditional_moment(const EPParams& p, const ConditionalQuery& q,
                            StatRoute route = StatRoute::ClosedForm, bool verify = false,
                            int oracle_bound = kDefaultOracleBound);

/// The universal enumeration oracle: sum_lambda g(lambda) M_n(lambda).
/// Refuses n above oracle_bound.
Rational bruteforce_expectation(const EPParams& p, int n,
                                const std::function<Rational(const IntegerPartition&)>& g,
                                int oracle_bound = kDefaultOracleBound);

} // namespace epp
