#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace maniplex {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;
using Color = int;

inline constexpr int kMaxRank = 31;
inline constexpr std::uint32_t kNone = UINT32_MAX;

// Error kinds map one-to-one onto CLI exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class InvalidArgument : public Error {
public:
    using Error::Error;
};
class PreconditionError : public Error {
public:
    using Error::Error;
};
class SizeLimitError : public Error {
public:
    using Error::Error;
};
class PipelineError : public Error {
public:
    using Error::Error;
};

enum class Execution { Serial, Parallel };

// Outcome of a structural check. `witness` is empty on success.
struct Verdict {
    bool ok = true;
    std::string witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

    static ColorSet of(std::initializer_list<Color> colors) {
        ColorSet s;
        for (Color c : colors) s = s.with(c);
        return s;
    }
    static ColorSet of(const std::vector<Color>& colors) {
        ColorSet s;
        for (Color c : colors) s = s.with(c);
        return s;
    }
    static constexpr ColorSet all(int rank) {
        return ColorSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
    }
    // Colors lo..hi inclusive; empty when lo > hi.
    static constexpr ColorSet interval(int lo, int hi) {
        ColorSet s;
        for (int c = lo; c <= hi; ++c) s.bits_ |= 1u << c;
        return s;
    }

    constexpr bool contains(Color c) const { return c >= 0 && c < 32 && ((bits_ >> c) & 1u); }
    constexpr ColorSet with(Color c) const { return ColorSet(bits_ | (1u << c)); }
    constexpr ColorSet without(Color c) const { return ColorSet(bits_ & ~(1u << c)); }
    constexpr ColorSet complement(int rank) const { return ColorSet(~bits_ & all(rank).bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
    constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
    constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool fits(int rank) const { return subset_of(all(rank)); }
    int size() const { return __builtin_popcount(bits_); }
    std::vector<Color> members() const {
        std::vector<Color> out;
        for (int c = 0; c < 32; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }
    std::string to_string() const;

    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    std::uint32_t bits_ = 0;
};

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Keeps the smaller id as root so roots are block minima.
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

// Partition of 0..n-1 with blocks numbered by increasing minimum element.
class Partition {
public:
    Partition() = default;
    static Partition from_labels(const std::vector<std::uint32_t>& labels);
    static Partition from_sets(DisjointSets& sets, std::size_t n);
    static Partition discrete(std::size_t n);

    std::size_t size() const { return block_of_.size(); }
    std::size_t num_blocks() const { return num_blocks_; }
    std::uint32_t block_of(std::uint32_t x) const { return block_of_[x]; }
    const std::vector<std::uint32_t>& labels() const { return block_of_; }
    std::vector<std::vector<std::uint32_t>> blocks() const;
    std::vector<std::uint32_t> block_minima() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint32_t> block_of_;
    std::size_t num_blocks_ = 0;
};

// Coarsest common refinement.
Partition meet(const Partition& a, const Partition& b);
bool refines(const Partition& fine, const Partition& coarse);

}  // namespace maniplex
