#pragma once

// Classical Hermite polynomials (physicists' normalization) and the
// partition-indexed Wronskians built from them.

#include "xherm/exact_poly.hpp"
#include "xherm/partition.hpp"
#include "xherm/report.hpp"

#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

namespace xherm {

/// Memoized H_0..H_N, extended on demand. Safe for concurrent use.
class HermiteCache {
public:
    static HermiteCache& instance();

    /// H_n; the returned reference stays valid for the cache lifetime.
    const ExactPoly& get(int n);

private:
    HermiteCache();
    std::mutex mutex_;
    std::deque<ExactPoly> polys_;
};

/// Physicists' Hermite polynomial H_n; throws std::out_of_range for n < 0.
const ExactPoly& hermite(int n);

/// Wr[H_{k_1}, ..., H_{k_l}] for an arbitrary index list.
ExactPoly hermite_wronskian(std::span<const int> indices);

/// H_lambda = Wr[H_{k_1}, ..., H_{k_l}].
ExactPoly h_lambda(const Partition& lambda);

enum class WronskianTag {
    Regular,
    DependentIndex,  // j is already a gap; the Wronskian has a repeated column
    NegativeIndex,   // j < 0, zero by convention in the recurrence
};

struct TaggedWronskian {
    ExactPoly value;
    WronskianTag tag = WronskianTag::Regular;
};

/// H_{lambda,j} = Wr[H_{k_1}, ..., H_{k_l}, H_j]. Dependent or negative j
/// gives a tagged zero instead of an error.
TaggedWronskian h_lambda_j(const Partition& lambda, int j);

/// Wronskian of the gap-sequence Hermites with the i-th (1-based) removed.
ExactPoly h_hat(const Partition& lambda, std::size_t i);

class ExcludedDegree : public std::domain_error {
public:
    ExcludedDegree(int j, int pair_start);
    int index() const { return j_; }
    /// First element k of the excluded pair {k, k+1} containing j.
    int pair_start() const { return pair_start_; }

private:
    int j_;
    int pair_start_;
};

/// The exceptional Hermite family attached to a partition lambda: its
/// polynomials are the Wronskians indexed by the doubled partition.
class XHermiteFamily {
public:
    /// Throws InvalidPartition if H_{lambda^2} has a real root (it never
    /// does; the check guards the weight's positivity).
    explicit XHermiteFamily(Partition lambda);

    const Partition& lambda() const { return lambda_; }
    const Partition& doubled() const { return dbl_; }
    /// Gap set of the doubled partition: pairs {k, k+1}.
    const std::set<int>& excluded() const { return excluded_; }
    bool admissible(int j) const { return j >= 0 && !excluded_.contains(j); }
    const ExactPoly& h_lambda2() const { return h_lambda2_; }

private:
    Partition lambda_;
    Partition dbl_;
    std::set<int> excluded_;
    ExactPoly h_lambda2_;
};

/// Throws ExcludedDegree (or out_of_range for j < 0) unless j is admissible.
void require_admissible(const XHermiteFamily& fam, int j);

/// H^{(lambda)}_j = H_{lambda^2, j}; throws ExcludedDegree for j in the
/// excluded set.
ExactPoly x_hermite(const XHermiteFamily& fam, int j);

/// Degrees of H_{lambda,j} for admissible 0 <= j <= horizon, computed from
/// the actual Wronskians.
std::set<std::size_t> degree_sequence(const Partition& lambda, int horizon);

/// Number of degrees below |lambda| + lambda_l missing from the degree
/// sequence.
std::size_t missing_degree_count(const Partition& lambda);

/// Degree and parity laws: deg H_lambda = |lambda| with parity (-1)^|lambda|;
/// deg H_{lambda,j} = |lambda| + j - l for j <= jmax off the gaps; and, when
/// xhermite is set, deg H^{(lambda)}_j = 2|lambda| - 2l + j with parity (-1)^j.
Report verify_degree_parity(const Partition& lambda, int jmax, bool xhermite);

}  // namespace xherm
