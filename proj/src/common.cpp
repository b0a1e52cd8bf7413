#include "maniplex/common.hpp"

#include <algorithm>

namespace maniplex {

std::string ColorSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Color c : members()) {
        if (!first) s += ",";
        s += std::to_string(c);
        first = false;
    }
    return s + "}";
}

Partition Partition::from_labels(const std::vector<std::uint32_t>& labels) {
    Partition p;
    p.block_of_.resize(labels.size());
    std::vector<std::uint32_t> renum;
    std::uint32_t max_label = 0;
    for (auto l : labels) max_label = std::max(max_label, l);
    renum.assign(labels.empty() ? 0 : max_label + 1, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        auto& r = renum[labels[x]];
        if (r == UINT32_MAX) r = next++;
        p.block_of_[x] = r;
    }
    p.num_blocks_ = next;
    return p;
}

Partition Partition::from_sets(DisjointSets& sets, std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t x = 0; x < n; ++x) labels[x] = sets.find(x);
    return from_labels(labels);
}

Partition Partition::discrete(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0u);
    return from_labels(labels);
}

std::vector<std::vector<std::uint32_t>> Partition::blocks() const {
    std::vector<std::vector<std::uint32_t>> out(num_blocks_);
    for (std::uint32_t x = 0; x < block_of_.size(); ++x) out[block_of_[x]].push_back(x);
    return out;
}

std::vector<std::uint32_t> Partition::block_minima() const {
    std::vector<std::uint32_t> out(num_blocks_, UINT32_MAX);
    for (std::uint32_t x = 0; x < block_of_.size(); ++x)
        if (out[block_of_[x]] == UINT32_MAX) out[block_of_[x]] = x;
    return out;
}

Partition meet(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw InvalidArgument("meet: partitions of different sets");
    std::vector<std::uint32_t> labels(a.size());
    const auto nb = static_cast<std::uint64_t>(b.num_blocks());
    // Pair labels are dense enough to sort-compress.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> keyed(a.size());
    for (std::uint32_t x = 0; x < a.size(); ++x) keyed[x] = {a.block_of(x) * nb + b.block_of(x), x};
    std::sort(keyed.begin(), keyed.end());
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i > 0 && keyed[i].first != keyed[i - 1].first) ++id;
        labels[keyed[i].second] = id;
    }
    return Partition::from_labels(labels);
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.size() != coarse.size()) return false;
    std::vector<std::uint32_t> image(fine.num_blocks(), UINT32_MAX);
    for (std::uint32_t x = 0; x < fine.size(); ++x) {
        auto& im = image[fine.block_of(x)];
        if (im == UINT32_MAX)
            im = coarse.block_of(x);
        else if (im != coarse.block_of(x))
            return false;
    }
    return true;
}

}  // namespace maniplex
