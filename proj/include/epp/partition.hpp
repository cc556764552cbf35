#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epp/rational.hpp"

namespace epp {

/// Integer partition, stored as the weakly decreasing list of positive parts.
/// The frequency view r_j (number of parts equal to j) and the padded-infinite
/// view are derived on demand, never stored. The empty partition is the unique
/// partition of 0.
class IntegerPartition {
public:
    IntegerPartition() = default;
    /// Validates: all parts positive, weakly decreasing.
    explicit IntegerPartition(std::vector<int> parts);

    /// Parses "4,2,1". Rejects non-descending input instead of sorting it.
    static IntegerPartition parse(std::string_view text);

    int size() const { return n_; }           // |lambda|
    int length() const { return static_cast<int>(parts_.size()); } // l(lambda)
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    std::span<const int> parts() const { return parts_; }

    /// r_j for j = 1..size(), as a vector indexed by j (index 0 unused).
    std::vector<int> frequencies() const;
    int frequency(int j) const;

    /// Product of r_j! over all part sizes j.
    Integer frequency_factorial() const;

    std::string str() const; // "4,2,1" ; empty partition prints "0"

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;
    friend std::strong_ordering operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts_ <=> b.parts_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntegerPartition& p);

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n in reverse-lexicographic order on the parts list:
/// (n), (n-1,1), ..., (1,...,1). Deterministic, used as fixture order.
std::vector<IntegerPartition> enumerate_partitions(int n);

/// True iff lam covers mu: |lam| = |mu|+1 and lam is mu with one part grown
/// by one box (or a new part of size 1 appended).
bool covers(const IntegerPartition& mu, const IntegerPartition& lam);

/// Edge multiplicity of the Kingman graph: r_k(lam) where k is the size of
/// the grown row. Throws NotCovering when (mu, lam) is not a covering pair.
int kingman_multiplicity(const IntegerPartition& mu, const IntegerPartition& lam);

/// Weighted count of growth paths from the empty partition; equals the
/// multinomial n!/(lambda_1! ... lambda_l!).
Integer kingman_dim(const IntegerPartition& lam);

} // namespace epp
