#include "epp/partition.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace epp {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw ParseError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ParseError("partition parts must be non-increasing");
        n_ += parts_[i];
    }
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string buf(text);
    std::stringstream ss(buf);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("invalid partition part: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw ParseError("invalid partition part: '" + tok + "'");
        parts.push_back(v);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw ParseError("partition parts must be listed in non-increasing order "
                             "(got '" + std::string(text) + "'; did you mean them sorted?)");
    return IntegerPartition(std::move(parts));
}

std::vector<int> IntegerPartition::frequencies() const {
    std::vector<int> r(static_cast<size_t>(n_) + 1, 0);
    for (int p : parts_) r[static_cast<size_t>(p)] += 1;
    return r;
}

int IntegerPartition::frequency(int j) const {
    int c = 0;
    for (int p : parts_) c += (p == j);
    return c;
}

Integer IntegerPartition::frequency_factorial() const {
    Integer out(1);
    int run = 1;
    for (size_t i = 1; i <= parts_.size(); ++i) {
        if (i < parts_.size() && parts_[i] == parts_[i - 1]) {
            ++run;
        } else {
            out *= factorial(static_cast<unsigned long>(run));
            run = 1;
        }
    }
    return out;
}

std::string IntegerPartition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntegerPartition& p) {
    return os << p.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix,
                   std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<IntegerPartition> enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions: negative n");
    std::vector<IntegerPartition> out;
    std::vector<int> prefix;
    enumerate_rec(n, n, prefix, out);
    return out;
}

namespace {

// Size of the grown row of lam relative to mu, or 0 if lam does not cover mu.
// As multisets lam = mu - {k-1} + {k}, so the frequency difference is exactly
// +1 at k and -1 at k-1 (the latter absent when k = 1).
int grown_row_size(const IntegerPartition& mu, const IntegerPartition& lam) {
    if (lam.size() != mu.size() + 1) return 0;
    const int top = lam.size();
    std::vector<int> diff(static_cast<size_t>(top) + 1, 0);
    for (int p : lam.parts()) diff[static_cast<size_t>(p)] += 1;
    for (int p : mu.parts()) diff[static_cast<size_t>(p)] -= 1;
    int plus = 0, minus = 0;
    for (int j = 1; j <= top; ++j) {
        const int d = diff[static_cast<size_t>(j)];
        if (d == 0) continue;
        if (d == 1 && plus == 0) plus = j;
        else if (d == -1 && minus == 0) minus = j;
        else return 0;
    }
    if (plus == 0) return 0;
    if (minus == 0) return plus == 1 ? 1 : 0;
    return minus == plus - 1 ? plus : 0;
}

} // namespace

bool covers(const IntegerPartition& mu, const IntegerPartition& lam) {
    return grown_row_size(mu, lam) != 0;
}

int kingman_multiplicity(const IntegerPartition& mu, const IntegerPartition& lam) {
    const int k = grown_row_size(mu, lam);
    if (k == 0)
        throw NotCovering("(" + lam.str() + ") does not cover (" + mu.str() + ")");
    return lam.frequency(k);
}

Integer kingman_dim(const IntegerPartition& lam) {
    Integer out = factorial(static_cast<unsigned long>(lam.size()));
    for (int p : lam.parts()) {
        Integer f = factorial(static_cast<unsigned long>(p));
        mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), f.get_mpz_t());
    }
    return out;
}

} // namespace epp
