#include "xherm/hermite.hpp"

#include <algorithm>
#include <map>

namespace xherm {

HermiteCache::HermiteCache() {
    polys_.push_back(ExactPoly::constant(1));
    polys_.push_back(ExactPoly{0, 2});
}

HermiteCache& HermiteCache::instance() {
    static HermiteCache cache;
    return cache;
}

const ExactPoly& HermiteCache::get(int n) {
    if (n < 0) throw std::out_of_range("Hermite index must be non-negative");
    std::lock_guard lock(mutex_);
    const ExactPoly two_x{0, 2};
    while (polys_.size() <= static_cast<std::size_t>(n)) {
        const std::size_t m = polys_.size() - 1;
        // H_{m+1} = 2x H_m - 2m H_{m-1}
        polys_.push_back(two_x * polys_[m] - Rational(2 * static_cast<long>(m)) * polys_[m - 1]);
    }
    return polys_[static_cast<std::size_t>(n)];
}

const ExactPoly& hermite(int n) { return HermiteCache::instance().get(n); }

namespace {

// Wronskians are requested many times with the same index lists by the
// verifiers; keep them.
class WronskianCache {
public:
    static WronskianCache& instance() {
        static WronskianCache cache;
        return cache;
    }

    ExactPoly get(const std::vector<int>& idx) {
        {
            std::lock_guard lock(mutex_);
            if (auto it = map_.find(idx); it != map_.end()) return it->second;
        }
        std::vector<ExactPoly> fs;
        fs.reserve(idx.size());
        for (int k : idx) fs.push_back(hermite(k));
        ExactPoly w = wronskian(fs);
        std::lock_guard lock(mutex_);
        if (map_.size() > 200000) map_.clear();
        return map_.emplace(idx, std::move(w)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<std::vector<int>, ExactPoly> map_;
};

}  // namespace

ExactPoly hermite_wronskian(std::span<const int> indices) {
    return WronskianCache::instance().get(std::vector<int>(indices.begin(), indices.end()));
}

ExactPoly h_lambda(const Partition& lambda) { return hermite_wronskian(gap_sequence(lambda).values()); }

TaggedWronskian h_lambda_j(const Partition& lambda, int j) {
    if (j < 0) return {ExactPoly(), WronskianTag::NegativeIndex};
    const auto gaps = gap_sequence(lambda);
    if (gaps.contains(j)) return {ExactPoly(), WronskianTag::DependentIndex};
    std::vector<int> idx(gaps.values().begin(), gaps.values().end());
    idx.push_back(j);
    return {hermite_wronskian(idx), WronskianTag::Regular};
}

ExactPoly h_hat(const Partition& lambda, std::size_t i) {
    if (i < 1 || i > lambda.length())
        throw std::out_of_range("h_hat index " + std::to_string(i) + " outside 1.." + std::to_string(lambda.length()));
    const auto gaps = gap_sequence(lambda);
    std::vector<int> idx;
    for (std::size_t t = 0; t < gaps.size(); ++t)
        if (t + 1 != i) idx.push_back(gaps.values()[t]);
    return hermite_wronskian(idx);
}

ExcludedDegree::ExcludedDegree(int j, int pair_start)
    : std::domain_error("index " + std::to_string(j) + " is excluded (gap pair {" + std::to_string(pair_start) + "," +
                        std::to_string(pair_start + 1) + "})"),
      j_(j),
      pair_start_(pair_start) {}

XHermiteFamily::XHermiteFamily(Partition lambda) : lambda_(std::move(lambda)), dbl_(double_partition(lambda_)) {
    // Gaps of the doubled partition come in adjacent pairs (k, k+1).
    const auto gaps = gap_sequence(dbl_);
    for (int k : gaps.values()) excluded_.insert(k);
    h_lambda2_ = h_lambda(dbl_);
    if (sturm_real_root_count(h_lambda2_) != 0)
        throw InvalidPartition("H_{lambda^2} has real roots for lambda = " + lambda_.to_string());
}

void require_admissible(const XHermiteFamily& fam, int j) {
    if (j < 0) throw std::out_of_range("X-Hermite index must be non-negative");
    if (fam.excluded().contains(j)) {
        const auto seq = gap_sequence(fam.doubled());
        const auto gaps = seq.values();
        const auto pos = static_cast<std::size_t>(std::lower_bound(gaps.begin(), gaps.end(), j) - gaps.begin());
        throw ExcludedDegree(j, gaps[pos - pos % 2]);
    }
}

ExactPoly x_hermite(const XHermiteFamily& fam, int j) {
    require_admissible(fam, j);
    return h_lambda_j(fam.doubled(), j).value;
}

std::set<std::size_t> degree_sequence(const Partition& lambda, int horizon) {
    std::set<std::size_t> degrees;
    for (int j = 0; j <= horizon; ++j) {
        auto w = h_lambda_j(lambda, j);
        if (w.tag != WronskianTag::Regular) continue;
        degrees.insert(w.value.degree().value());
    }
    return degrees;
}

std::size_t missing_degree_count(const Partition& lambda) {
    const int stable = lambda.weight() + lambda.last();
    // deg H_{lambda,j} reaches `stable` at j = k_l + 1 = lambda_l + l.
    const int horizon = lambda.last() + static_cast<int>(lambda.length());
    const auto degrees = degree_sequence(lambda, horizon);
    std::size_t missing = 0;
    for (int n = 0; n < stable; ++n)
        if (!degrees.contains(static_cast<std::size_t>(n))) ++missing;
    return missing;
}

namespace {

// +1 even, -1 odd, 0 neither.
int parity_of(const ExactPoly& p) {
    const ExactPoly r = p.reflect();
    if (r == p) return 1;
    if (r == -p) return -1;
    return 0;
}

void check_law(Report& rep, const ExactPoly& p, long degree, const std::string& what, const std::string& where) {
    const int sign = degree % 2 == 0 ? 1 : -1;
    rep.check(!p.is_zero() && p.degree() == static_cast<std::size_t>(degree), "deg " + what, where,
              [&] { return "degree " + p.degree().to_string() + ", expected " + std::to_string(degree); });
    rep.check(parity_of(p) == sign, "parity " + what, where,
              [&] { return "parity " + std::to_string(parity_of(p)) + ", expected " + std::to_string(sign); });
}

}  // namespace

Report verify_degree_parity(const Partition& lambda, int jmax, bool xhermite) {
    Report rep("degree-parity " + lambda.to_string());
    const long w = lambda.weight();
    const long l = static_cast<long>(lambda.length());
    check_law(rep, h_lambda(lambda), w, "H_lambda", "lambda");
    for (int j = 0; j <= jmax; ++j) {
        auto t = h_lambda_j(lambda, j);
        if (t.tag != WronskianTag::Regular) {
            rep.record(t.value.is_zero(), "H_{lambda,j} vanishes on gaps", "j=" + std::to_string(j));
            continue;
        }
        check_law(rep, t.value, w + j - l, "H_{lambda,j}", "j=" + std::to_string(j));
    }
    if (xhermite) {
        const XHermiteFamily fam(lambda);
        for (int j = 0; j <= jmax; ++j) {
            if (!fam.admissible(j)) continue;
            check_law(rep, x_hermite(fam, j), 2 * w - 2 * l + j, "H^{(lambda)}_j", "xj=" + std::to_string(j));
        }
    }
    return rep;
}

}  // namespace xherm
