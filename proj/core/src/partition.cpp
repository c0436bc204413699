#include "xherm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace xherm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidPartition("partition parts must be non-negative");
        if (i > 0 && parts_[i - 1] > parts_[i]) throw InvalidPartition("partition parts must be weakly increasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

GapSequence::GapSequence(std::vector<int> ks) : ks_(std::move(ks)) {
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (ks_[i] < 0) throw InvalidPartition("gap sequence entries must be non-negative");
        if (i > 0 && ks_[i - 1] >= ks_[i]) throw InvalidPartition("gap sequence must be strictly increasing");
    }
}

bool GapSequence::contains(int k) const { return std::binary_search(ks_.begin(), ks_.end(), k); }

GapSequence gap_sequence(const Partition& lambda) {
    std::vector<int> ks;
    ks.reserve(lambda.length());
    int i = 0;
    for (int part : lambda.parts()) ks.push_back(part + i++);
    return GapSequence(std::move(ks));
}

Partition partition_from_gaps(const GapSequence& ks) {
    std::vector<int> parts;
    parts.reserve(ks.size());
    int i = 0;
    for (int k : ks.values()) parts.push_back(k - i++);
    return Partition(std::move(parts));
}

Partition double_partition(const Partition& lambda) {
    std::vector<int> parts;
    parts.reserve(2 * lambda.length());
    for (int part : lambda.parts()) {
        parts.push_back(part);
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

namespace {

// Length of the leading run 0,1,...,z-1 in the gap sequence.
std::size_t initial_block(std::span<const int> ks) {
    std::size_t z = 0;
    while (z < ks.size() && ks[z] == static_cast<int>(z)) ++z;
    return z;
}

}  // namespace

bool is_adler_structural(const Partition& lambda) {
    const auto gaps = gap_sequence(lambda);
    const auto ks = gaps.values();
    std::size_t i = initial_block(ks);
    while (i < ks.size()) {
        std::size_t run = 1;
        while (i + run < ks.size() && ks[i + run] == ks[i + run - 1] + 1) ++run;
        if (run % 2 != 0) return false;
        i += run;
    }
    return true;
}

bool is_adler_by_sign(const Partition& lambda) {
    const ExactPoly p = p_lambda(lambda);
    const int top = lambda.empty() ? 0 : gap_sequence(lambda).values().back() + 1;
    for (int n = 0; n <= top; ++n)
        if (p.eval(Rational(n)) < 0) return false;
    return true;
}

bool is_adler(const Partition& lambda) {
    const bool structural = is_adler_structural(lambda);
    if (structural != is_adler_by_sign(lambda))
        throw std::logic_error("Adler characterizations disagree for " + lambda.to_string());
    return structural;
}

Partition normalize_adler(const Partition& lambda) {
    if (!is_adler(lambda)) throw InvalidPartition(lambda.to_string() + " is not an Adler partition");
    const auto gaps = gap_sequence(lambda);
    const auto ks = gaps.values();
    const std::size_t z = initial_block(ks);
    std::vector<int> rest;
    for (std::size_t i = z; i < ks.size(); ++i) rest.push_back(ks[i] - static_cast<int>(z));
    return partition_from_gaps(GapSequence(std::move(rest)));
}

ExactPoly p_lambda(const Partition& lambda) {
    ExactPoly p = ExactPoly::constant(1);
    const auto gaps = gap_sequence(lambda);
    for (int k : gaps.values()) p *= ExactPoly{Rational(-k), Rational(1)};
    return p;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&](bool final) {
        std::string t;
        for (char ch : token)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        token.clear();
        if (t.empty()) {
            if (final && parts.empty()) return;
            throw InvalidPartition("empty part in partition \"" + text + "\"");
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size())
            throw InvalidPartition("invalid part \"" + t + "\" in partition \"" + text + "\"");
        parts.push_back(v);
    };
    for (char ch : text) {
        if (ch == ',') {
            flush(false);
        } else {
            token += ch;
        }
    }
    flush(true);
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int max_weight, int max_leading_zeros) {
    std::vector<std::vector<int>> positive;
    std::vector<int> cur;
    // Parts generated in increasing order; min_part keeps them weakly increasing.
    std::function<void(int, int)> rec = [&](int remaining, int min_part) {
        positive.push_back(cur);
        for (int part = min_part; part <= remaining; ++part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(max_weight, 1);
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
        int wa = std::accumulate(a.begin(), a.end(), 0), wb = std::accumulate(b.begin(), b.end(), 0);
        if (wa != wb) return wa < wb;
        return a < b;
    });

    std::vector<Partition> out;
    for (int z = 0; z <= max_leading_zeros; ++z) {
        for (const auto& p : positive) {
            std::vector<int> parts(static_cast<std::size_t>(z), 0);
            parts.insert(parts.end(), p.begin(), p.end());
            out.emplace_back(std::move(parts));
        }
    }
    return out;
}

std::vector<Partition> enumerate_bounded(std::size_t length, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int min_part) {
        if (cur.size() == length) {
            out.emplace_back(cur);
            return;
        }
        for (int part = min_part; part <= max_part; ++part) {
            cur.push_back(part);
            rec(part);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace xherm
