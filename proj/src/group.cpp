#include "maniplex/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace maniplex {

namespace {

std::uint64_t highest_bit(std::uint64_t x) { return 63u - static_cast<unsigned>(__builtin_clzll(x)); }

// Reduced row echelon form over GF(2), pivots at highest bits, rows sorted by descending pivot.
std::vector<std::uint64_t> rref(std::vector<std::uint64_t> rows) {
    std::vector<std::uint64_t> basis;
    for (std::uint64_t r : rows) {
        for (std::uint64_t b : basis)
            if (r & (1ull << highest_bit(b))) r ^= b;
        if (r == 0) continue;
        const std::uint64_t p = 1ull << highest_bit(r);
        for (auto& b : basis)
            if (b & p) b ^= r;
        basis.push_back(r);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

std::uint64_t reduce(const std::vector<std::uint64_t>& basis, std::uint64_t x) {
    for (std::uint64_t b : basis)
        if (x & (1ull << highest_bit(b))) x ^= b;
    return x;
}

// Zassenhaus rows (h+k | h) in echelon form on the first half.
struct Zassenhaus {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pivots;
    std::vector<std::uint64_t> intersection;
};

Zassenhaus zassenhaus(const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& k) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    for (auto x : h) rows.emplace_back(x, x);
    for (auto x : k) rows.emplace_back(x, 0);
    Zassenhaus z;
    std::vector<std::uint64_t> zero_rows;
    for (auto [a, b] : rows) {
        for (auto [pa, pb] : z.pivots)
            if (a & (1ull << highest_bit(pa))) {
                a ^= pa;
                b ^= pb;
            }
        if (a == 0) {
            if (b != 0) zero_rows.push_back(b);
            continue;
        }
        z.pivots.emplace_back(a, b);
        std::sort(z.pivots.begin(), z.pivots.end(), std::greater<>());
    }
    z.intersection = rref(zero_rows);
    return z;
}

bool table_member(const Subgroup& h, std::uint32_t x) {
    return std::binary_search(h.elements().begin(), h.elements().end(), x);
}

}  // namespace

TableGroup::TableGroup(std::vector<std::vector<std::uint32_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InvalidArgument("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n) throw InvalidArgument("group table is not square");
        std::vector<bool> seen(n, false);
        for (auto x : row) {
            if (x >= n) throw InvalidArgument("group table entry out of range");
            if (seen[x]) throw InvalidArgument("group table row is not a permutation");
            seen[x] = true;
        }
    }
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw InvalidArgument("group table has no identity");
    inverse_.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        const auto it = std::find(table_[x].begin(), table_[x].end(), identity_);
        inverse_[x] = static_cast<std::uint32_t>(it - table_[x].begin());
        if (table_[inverse_[x]][x] != identity_) throw InvalidArgument("group table lacks two-sided inverses");
    }
    // Light's test over a greedy generating set.
    std::vector<std::uint32_t> gens;
    std::vector<bool> reached(n, false);
    reached[identity_] = true;
    std::vector<std::uint32_t> span{identity_};
    for (std::uint32_t s = 0; s < n; ++s) {
        if (reached[s]) continue;
        gens.push_back(s);
        for (std::size_t head = 0; head < span.size(); ++head)
            for (auto g : gens) {
                const auto y = table_[span[head]][g];
                if (!reached[y]) {
                    reached[y] = true;
                    span.push_back(y);
                }
            }
    }
    for (auto g : gens)
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y)
                if (table_[table_[x][g]][y] != table_[x][table_[g][y]])
                    throw InvalidArgument("group table is not associative");
}

TableGroup TableGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens,
                                         std::vector<std::vector<std::uint32_t>>* elements_out,
                                         std::size_t limit) {
    if (gens.empty()) throw InvalidArgument("from_permutations: no generators");
    const std::size_t m = gens.front().size();
    for (const auto& p : gens) {
        if (p.size() != m) throw InvalidArgument("from_permutations: generators act on different sets");
        std::vector<bool> seen(m, false);
        for (auto x : p) {
            if (x >= m || seen[x]) throw InvalidArgument("from_permutations: not a permutation");
            seen[x] = true;
        }
    }
    auto compose = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> c(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
        return c;
    };
    std::vector<std::vector<std::uint32_t>> elems;
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    std::vector<std::uint32_t> id(m);
    std::iota(id.begin(), id.end(), 0u);
    elems.push_back(id);
    index[id] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const auto& g : gens) {
            auto c = compose(elems[head], g);
            if (index.count(c)) continue;
            if (elems.size() >= limit) throw SizeLimitError("permutation group exceeds the table-group ceiling");
            index[c] = static_cast<std::uint32_t>(elems.size());
            elems.push_back(std::move(c));
        }
    const std::size_t n = elems.size();
    std::vector<std::vector<std::uint32_t>> table(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
    if (elements_out) *elements_out = elems;
    return TableGroup(std::move(table));
}

Group::Group(BooleanGroup b) : impl_(b) {
    if (b.dim < 0 || b.dim > 62) throw InvalidArgument("Boolean dimension out of range");
}

std::uint64_t Group::order() const {
    if (is_boolean()) return 1ull << boolean_dim();
    return table().order();
}

GroupElement Group::identity() const {
    if (is_boolean()) return {0};
    return {table().identity()};
}

GroupElement Group::mul(GroupElement a, GroupElement b) const {
    if (is_boolean()) return {a.value ^ b.value};
    return {table().mul(static_cast<std::uint32_t>(a.value), static_cast<std::uint32_t>(b.value))};
}

GroupElement Group::inv(GroupElement a) const {
    if (is_boolean()) return a;
    return {table().inv(static_cast<std::uint32_t>(a.value))};
}

GroupElement Group::pow(GroupElement a, std::uint64_t k) const {
    GroupElement r = identity();
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::uint64_t Group::element_order(GroupElement a) const {
    std::uint64_t k = 1;
    for (GroupElement x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
}

std::string Group::to_string(GroupElement a) const {
    if (!is_boolean()) return std::to_string(a.value);
    std::string s(static_cast<std::size_t>(boolean_dim()), '0');
    for (int k = 0; k < boolean_dim(); ++k)
        if ((a.value >> k) & 1u) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

GroupElement Group::parse(const std::string& s) const {
    if (is_boolean()) {
        if (s.size() != static_cast<std::size_t>(boolean_dim()))
            throw InvalidArgument("bit string '" + s + "' does not have length " + std::to_string(boolean_dim()));
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == '1')
                v |= 1ull << k;
            else if (s[k] != '0')
                throw InvalidArgument("bit string '" + s + "' has a character other than 0/1");
        }
        return {v};
    }
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || v >= order())
        throw InvalidArgument("'" + s + "' is not an element index of the table group");
    return {v};
}

std::uint64_t Subgroup::size() const { return boolean_ ? (1ull << basis_.size()) : elements_.size(); }

Subgroup Subgroup::boolean_span(std::vector<std::uint64_t> vectors) {
    Subgroup h;
    h.boolean_ = true;
    h.basis_ = rref(std::move(vectors));
    return h;
}

Subgroup Subgroup::from_elements(std::vector<std::uint32_t> elements) {
    Subgroup h;
    h.boolean_ = false;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    h.elements_ = std::move(elements);
    return h;
}

Subgroup closure(const Group& g, const std::vector<GroupElement>& gens) {
    for (auto x : gens)
        if (!g.is_element(x)) throw InvalidArgument("closure: element out of range");
    if (g.is_boolean()) {
        std::vector<std::uint64_t> v;
        for (auto x : gens) v.push_back(x.value);
        return Subgroup::boolean_span(std::move(v));
    }
    const auto& t = g.table();
    std::vector<bool> seen(t.order(), false);
    std::vector<std::uint32_t> elems{t.identity()};
    seen[t.identity()] = true;
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (auto x : gens) {
            const auto y = t.mul(elems[head], static_cast<std::uint32_t>(x.value));
            if (!seen[y]) {
                seen[y] = true;
                elems.push_back(y);
            }
        }
    return Subgroup::from_elements(std::move(elems));
}

Subgroup trivial_subgroup(const Group& g) { return closure(g, {}); }

bool contains(const Group& g, const Subgroup& h, GroupElement x) {
    if (g.is_boolean()) return reduce(h.basis(), x.value) == 0;
    return table_member(h, static_cast<std::uint32_t>(x.value));
}

bool subgroup_equal(const Subgroup& a, const Subgroup& b) { return a == b; }

bool is_subgroup_of(const Group& g, const Subgroup& a, const Subgroup& b) {
    if (g.is_boolean()) {
        for (auto v : a.basis())
            if (reduce(b.basis(), v) != 0) return false;
        return true;
    }
    return std::includes(b.elements().begin(), b.elements().end(), a.elements().begin(), a.elements().end());
}

Subgroup intersect(const Group& g, const Subgroup& a, const Subgroup& b) {
    if (g.is_boolean()) return Subgroup::boolean_span(zassenhaus(a.basis(), b.basis()).intersection);
    std::vector<std::uint32_t> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(), b.elements().end(),
                          std::back_inserter(out));
    return Subgroup::from_elements(std::move(out));
}

Subgroup conjugate(const Group& g, const Subgroup& h, GroupElement x) {
    if (g.is_boolean()) return h;
    const GroupElement xi = g.inv(x);
    std::vector<std::uint32_t> out;
    out.reserve(h.elements().size());
    for (auto e : h.elements())
        out.push_back(static_cast<std::uint32_t>(g.mul(g.mul(x, GroupElement{e}), xi).value));
    return Subgroup::from_elements(std::move(out));
}

std::vector<GroupElement> enumerate(const Group& g, const Subgroup& h) {
    std::vector<GroupElement> out;
    if (g.is_boolean()) {
        const auto& b = h.basis();
        if (b.size() > 24) throw SizeLimitError("subgroup too large to enumerate");
        for (std::uint64_t mask = 0; mask < (1ull << b.size()); ++mask) {
            std::uint64_t v = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                if ((mask >> i) & 1u) v ^= b[i];
            out.push_back({v});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    for (auto e : h.elements()) out.push_back({e});
    return out;
}

bool coset_contains(const Group& g, const Coset& c, GroupElement x) {
    const GroupElement ri = g.inv(c.rep);
    const GroupElement y = c.side == Side::Left ? g.mul(ri, x) : g.mul(x, ri);
    return contains(g, c.subgroup, y);
}

bool coset_equal(const Group& g, const Coset& a, const Coset& b) {
    if (!(a.subgroup == b.subgroup)) return false;
    if (a.side != b.side && !g.is_boolean()) {
        // Compare as sets.
        for (auto h : enumerate(g, a.subgroup)) {
            const GroupElement x = a.side == Side::Left ? g.mul(a.rep, h) : g.mul(h, a.rep);
            if (!coset_contains(g, b, x)) return false;
        }
        return true;
    }
    return coset_contains(g, a, b.rep);
}

GroupElement canonical_rep(const Group& g, const Coset& c) {
    if (g.is_boolean()) return {reduce(c.subgroup.basis(), c.rep.value)};
    GroupElement best = c.rep;
    for (auto h : c.subgroup.elements()) {
        const GroupElement x = c.side == Side::Left ? g.mul(c.rep, GroupElement{h}) : g.mul(GroupElement{h}, c.rep);
        best = std::min(best, x);
    }
    return best;
}

std::string describe(const Group& g, const Subgroup& h) {
    std::string s = "<";
    if (g.is_boolean()) {
        for (std::size_t i = 0; i < h.basis().size(); ++i) s += (i ? "," : "") + g.to_string({h.basis()[i]});
    } else {
        for (std::size_t i = 0; i < h.elements().size(); ++i)
            s += (i ? "," : "") + std::to_string(h.elements()[i]);
    }
    return s + ">";
}

std::string describe(const Group& g, const Coset& c) {
    const std::string rep = g.to_string(canonical_rep(g, c));
    return c.side == Side::Left ? rep + "*" + describe(g, c.subgroup) : describe(g, c.subgroup) + "*" + rep;
}

std::optional<Coset> coset_intersect(const Group& g, const Coset& a, const Coset& b) {
    if (g.is_boolean()) {
        const Zassenhaus z = zassenhaus(a.subgroup.basis(), b.subgroup.basis());
        std::uint64_t t = a.rep.value ^ b.rep.value, h = 0;
        for (auto [pa, pb] : z.pivots)
            if (t & (1ull << highest_bit(pa))) {
                t ^= pa;
                h ^= pb;
            }
        if (t != 0) return std::nullopt;
        Coset c{{a.rep.value ^ h}, Subgroup::boolean_span(z.intersection), a.side};
        c.rep = canonical_rep(g, c);
        return c;
    }
    if (a.side != b.side) throw InvalidArgument("coset_intersect: cosets on different sides");
    const Coset& small = a.subgroup.size() <= b.subgroup.size() ? a : b;
    const Coset& other = &small == &a ? b : a;
    std::optional<GroupElement> first;
    for (auto h : small.subgroup.elements()) {
        const GroupElement x =
            small.side == Side::Left ? g.mul(small.rep, GroupElement{h}) : g.mul(GroupElement{h}, small.rep);
        if (coset_contains(g, other, x) && (!first || x < *first)) first = x;
    }
    if (!first) return std::nullopt;
    return Coset{*first, intersect(g, a.subgroup, b.subgroup), a.side};
}

Verdict check_string_c_group(const Group& g, const std::vector<GroupElement>& gens) {
    const int n = static_cast<int>(gens.size());
    if (n > 16) throw InvalidArgument("check_string_c_group: too many generators");
    for (int i = 0; i < n; ++i) {
        if (!g.is_element(gens[i])) throw InvalidArgument("generator out of range");
        if (gens[i] == g.identity() || g.mul(gens[i], gens[i]) != g.identity())
            return Verdict::fail("rho_" + std::to_string(i) + " is not an involution");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i]))
                return Verdict::fail("rho_" + std::to_string(i) + " and rho_" + std::to_string(j) +
                                     " do not commute");
    std::vector<Subgroup> sub(1u << n);
    for (std::uint32_t mask = 0; mask < sub.size(); ++mask) {
        std::vector<GroupElement> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) s.push_back(gens[i]);
        sub[mask] = closure(g, s);
    }
    if (sub.back().size() != g.order()) return Verdict::fail("generators do not generate the group");
    for (std::uint32_t a = 0; a < sub.size(); ++a)
        for (std::uint32_t b = a + 1; b < sub.size(); ++b)
            if (!(intersect(g, sub[a], sub[b]) == sub[a & b]))
                return Verdict::fail("intersection property fails for I=" + ColorSet(a).to_string() +
                                     ", J=" + ColorSet(b).to_string());
    return Verdict::pass();
}

}  // namespace maniplex
