#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "maniplex/common.hpp"

namespace maniplex {

// Element handle. Boolean groups store the bit vector; table groups store the row index.
struct GroupElement {
    std::uint64_t value = 0;
    friend auto operator<=>(GroupElement, GroupElement) = default;
};

// (Z_2)^dim with XOR. Bit k is generator e_{k+1}.
struct BooleanGroup {
    int dim = 0;
};

// Finite group given by its Cayley table; identity is computed, not assumed to be 0.
class TableGroup {
public:
    TableGroup() = default;
    explicit TableGroup(std::vector<std::vector<std::uint32_t>> table);

    // Closure of permutations of 0..m-1. Product a*b applies a first, then b.
    // Element 0 is the identity; the rest appear in BFS order over the generators.
    static TableGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                        std::vector<std::vector<std::uint32_t>>* elements_out = nullptr,
                                        std::size_t limit = 100000);

    std::size_t order() const { return table_.size(); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t identity() const { return identity_; }
    const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
};

class Group {
public:
    Group() : impl_(BooleanGroup{0}) {}
    explicit Group(BooleanGroup b);
    explicit Group(TableGroup t) : impl_(std::move(t)) {}

    bool is_boolean() const { return std::holds_alternative<BooleanGroup>(impl_); }
    int boolean_dim() const { return std::get<BooleanGroup>(impl_).dim; }
    const TableGroup& table() const { return std::get<TableGroup>(impl_); }

    std::uint64_t order() const;
    GroupElement identity() const;
    GroupElement mul(GroupElement a, GroupElement b) const;
    GroupElement inv(GroupElement a) const;
    GroupElement pow(GroupElement a, std::uint64_t k) const;
    std::uint64_t element_order(GroupElement a) const;
    bool is_element(GroupElement a) const { return a.value < order(); }
    // Elements are the integers 0..order()-1 in both backends.
    GroupElement element(std::uint64_t index) const { return {index}; }

    std::string to_string(GroupElement a) const;
    GroupElement parse(const std::string& s) const;

private:
    std::variant<BooleanGroup, TableGroup> impl_;
};

// Value-type subgroup handle. Boolean: reduced row echelon basis. Table: sorted elements.
class Subgroup {
public:
    Subgroup() = default;

    bool is_boolean() const { return boolean_; }
    const std::vector<std::uint64_t>& basis() const { return basis_; }
    const std::vector<std::uint32_t>& elements() const { return elements_; }
    std::uint64_t size() const;

    static Subgroup boolean_span(std::vector<std::uint64_t> vectors);
    static Subgroup from_elements(std::vector<std::uint32_t> elements);

    friend bool operator==(const Subgroup&, const Subgroup&) = default;

private:
    bool boolean_ = true;
    std::vector<std::uint64_t> basis_;
    std::vector<std::uint32_t> elements_;
};

enum class Side { Left, Right };

// rep * H (Left) or H * rep (Right).
struct Coset {
    GroupElement rep;
    Subgroup subgroup;
    Side side = Side::Left;
};

Subgroup closure(const Group& g, const std::vector<GroupElement>& gens);
Subgroup trivial_subgroup(const Group& g);
bool contains(const Group& g, const Subgroup& h, GroupElement x);
bool subgroup_equal(const Subgroup& a, const Subgroup& b);
bool is_subgroup_of(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b);
// x H x^-1
Subgroup conjugate(const Group& g, const Subgroup& h, GroupElement x);
std::vector<GroupElement> enumerate(const Group& g, const Subgroup& h);

bool coset_contains(const Group& g, const Coset& c, GroupElement x);
bool coset_equal(const Group& g, const Coset& a, const Coset& b);
// Canonical representative: the least element of the coset.
GroupElement canonical_rep(const Group& g, const Coset& c);
std::string describe(const Group& g, const Coset& c);
std::string describe(const Group& g, const Subgroup& h);

// aH ∩ bK for same-side cosets; nullopt when empty, otherwise c(H∩K) or (H∩K)c.
std::optional<Coset> coset_intersect(const Group& g, const Coset& a, const Coset& b);

// Involutions, far commutation, generation of the whole group and the intersection property.
Verdict check_string_c_group(const Group& g, const std::vector<GroupElement>& gens);

}  // namespace maniplex
