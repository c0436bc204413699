#pragma once

// Partitions index every Hermite Wronskian in the library. Unlike the usual
// combinatorial convention a partition may start with a run of zeros, which
// is what lets a gap sequence begin at 0.

#include "xherm/exact_poly.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace xherm {

class InvalidPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly increasing tuple of non-negative integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }
    /// Largest part, 0 for the empty partition.
    int last() const { return parts_.empty() ? 0 : parts_.back(); }

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    /// "(1,3)"; "()" for the empty partition.
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Strictly increasing non-negative integers k_1 < ... < k_l.
class GapSequence {
public:
    GapSequence() = default;
    explicit GapSequence(std::vector<int> ks);
    GapSequence(std::initializer_list<int> ks) : GapSequence(std::vector<int>(ks)) {}

    std::span<const int> values() const { return ks_; }
    std::size_t size() const { return ks_.size(); }
    bool contains(int k) const;
    bool operator==(const GapSequence& o) const = default;

private:
    std::vector<int> ks_;
};

/// k_i = lambda_i + i - 1.
GapSequence gap_sequence(const Partition& lambda);
/// lambda_i = k_i - i + 1.
Partition partition_from_gaps(const GapSequence& ks);

/// (l1,l1,l2,l2,...,ll,ll).
Partition double_partition(const Partition& lambda);

/// Gap sequence is a run 0,1,..,z-1 followed by runs of even length.
bool is_adler_structural(const Partition& lambda);
/// p_lambda(n) >= 0 for n = 0..k_l+1.
bool is_adler_by_sign(const Partition& lambda);
/// Both characterizations; throws std::logic_error if they disagree.
bool is_adler(const Partition& lambda);

/// Drops the initial run of gaps 0..z-1 and shifts the remaining gaps down
/// by z. Throws InvalidPartition if lambda is not Adler.
Partition normalize_adler(const Partition& lambda);

/// (x - k_1)(x - k_2)...(x - k_l).
ExactPoly p_lambda(const Partition& lambda);

/// Parses "1,3" (whitespace tolerated, empty string = empty partition).
Partition parse_partition(const std::string& text);

/// Partitions with positive parts and weight <= max_weight, each optionally
/// prefixed by up to max_leading_zeros zeros. Deterministic order.
std::vector<Partition> enumerate_partitions(int max_weight, int max_leading_zeros = 0);

/// Weakly increasing tuples of the given length with entries in [0, max_part].
std::vector<Partition> enumerate_bounded(std::size_t length, int max_part);

}  // namespace xherm
