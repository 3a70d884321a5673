#include "jokerlab/group.hpp"

#include <algorithm>
#include <set>

namespace jokerlab {

namespace detail {

struct GroupData {
    std::string label;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inverse;
    std::map<std::string, std::size_t> generators;
};

}  // namespace detail

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupData> data)
    : data_(std::move(data)) {}

FiniteGroup FiniteGroup::from_table(std::string label, std::vector<std::string> names,
                                    std::vector<std::vector<std::size_t>> table,
                                    std::map<std::string, std::size_t> generators) {
    const std::size_t n = table.size();
    if (n == 0 || n > 48) throw Error("group order must be between 1 and 48");
    if (names.size() != n) throw Error("group name list does not match the table size");
    for (const auto& row : table) {
        if (row.size() != n) throw Error("group table is not square");
        for (auto v : row)
            if (v >= n) throw Error("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a)
            throw Error("element 0 is not an identity for the table");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] == 0 && table[b][a] == 0) {
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] == n) throw Error("group table has an element without inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("group table is not associative");
    for (const auto& [gname, idx] : generators) {
        if (idx >= n) throw Error("generator index out of range");
        (void)gname;
    }
    auto d = std::make_shared<detail::GroupData>();
    d->label = std::move(label);
    d->names = std::move(names);
    d->table = std::move(table);
    d->inverse = std::move(inverse);
    d->generators = std::move(generators);
    return FiniteGroup(std::move(d));
}

const std::string& FiniteGroup::label() const { return data_->label; }
std::size_t FiniteGroup::order() const { return data_->table.size(); }
const std::vector<std::string>& FiniteGroup::names() const { return data_->names; }
const std::string& FiniteGroup::name_of(std::size_t g) const { return data_->names.at(g); }

std::size_t FiniteGroup::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < data_->names.size(); ++i)
        if (data_->names[i] == name) return i;
    throw Error("no group element named '" + name + "'");
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
    return data_->table.at(a).at(b);
}

std::size_t FiniteGroup::inverse(std::size_t a) const { return data_->inverse.at(a); }

std::size_t FiniteGroup::conjugate(std::size_t g, std::size_t x) const {
    return mul(mul(g, x), inverse(g));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t acc = a, ord = 1;
    while (acc != 0) {
        acc = mul(acc, a);
        ++ord;
    }
    return ord;
}

const std::map<std::string, std::size_t>& FiniteGroup::generators() const {
    return data_->generators;
}

bool FiniteGroup::is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool FiniteGroup::is_2_group() const {
    std::size_t n = order();
    while (n % 2 == 0) n /= 2;
    return n == 1;
}

std::vector<std::size_t> FiniteGroup::center() const {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < order(); ++z) {
        bool central = true;
        for (std::size_t g = 0; g < order() && central; ++g)
            central = mul(z, g) == mul(g, z);
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<std::size_t> FiniteGroup::closure(std::vector<std::size_t> gens) const {
    std::set<std::size_t> seen{identity()};
    std::vector<std::size_t> frontier{identity()};
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (auto x : frontier) {
            for (auto g : gens) {
                std::size_t y = mul(x, g);
                if (seen.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return std::vector<std::size_t>(seen.begin(), seen.end());
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
    return data_ == other.data_ ||
           (data_->names == other.data_->names && data_->table == other.data_->table);
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::size_t> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_.front() != parent_.identity())
        throw Error("subgroup must contain the identity");
    for (auto a : members_) {
        if (a >= parent_.order()) throw Error("subgroup member out of range");
        if (!contains(parent_.inverse(a)))
            throw Error("subgroup is not closed under inverse");
        for (auto b : members_)
            if (!contains(parent_.mul(a, b)))
                throw Error("subgroup is not closed under product");
    }
}

bool Subgroup::contains(std::size_t g) const {
    return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_normal() const {
    for (std::size_t g = 0; g < parent_.order(); ++g)
        for (auto h : members_)
            if (!contains(parent_.conjugate(g, h))) return false;
    return true;
}

Subgroup::AsGroup Subgroup::as_group() const {
    std::vector<std::size_t> to_parent = members_;  // identity is least, so index 0
    std::vector<std::size_t> to_sub(parent_.order(), 0);
    for (std::size_t i = 0; i < to_parent.size(); ++i) to_sub[to_parent[i]] = i;
    const std::size_t n = to_parent.size();
    std::vector<std::string> names(n);
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = parent_.name_of(to_parent[i]);
        for (std::size_t j = 0; j < n; ++j)
            table[i][j] = to_sub[parent_.mul(to_parent[i], to_parent[j])];
    }
    std::map<std::string, std::size_t> gens;
    for (const auto& [gname, idx] : parent_.generators())
        if (contains(idx)) gens[gname] = to_sub[idx];
    FiniteGroup g = FiniteGroup::from_table(parent_.label() + "-sub" + std::to_string(n),
                                            std::move(names), std::move(table),
                                            std::move(gens));
    return AsGroup{std::move(g), std::move(to_parent)};
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> used(g.order(), false);
    std::vector<DoubleCoset> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (used[x]) continue;
        std::set<std::size_t> coset;
        for (auto a : h.members())
            for (auto b : h.members()) coset.insert(g.mul(g.mul(a, x), b));
        DoubleCoset dc;
        dc.representative = x;
        dc.elements.assign(coset.begin(), coset.end());
        for (auto e : dc.elements) used[e] = true;
        out.push_back(std::move(dc));
    }
    return out;
}

namespace {

std::vector<Coset> cosets_impl(const FiniteGroup& g, const Subgroup& h, bool left) {
    std::vector<bool> used(g.order(), false);
    std::vector<Coset> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (used[x]) continue;
        std::set<std::size_t> coset;
        for (auto a : h.members()) coset.insert(left ? g.mul(x, a) : g.mul(a, x));
        Coset c;
        c.representative = x;
        c.elements.assign(coset.begin(), coset.end());
        for (auto e : c.elements) used[e] = true;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h) {
    return cosets_impl(g, h, true);
}

std::vector<Coset> right_cosets(const FiniteGroup& g, const Subgroup& h) {
    return cosets_impl(g, h, false);
}

std::vector<Subgroup> elementary_abelian_subgroups(const FiniteGroup& g, unsigned p) {
    if (p != 2) throw Error("elementary abelian search is implemented for p = 2 only");
    std::vector<std::size_t> involutions;
    for (std::size_t x = 1; x < g.order(); ++x)
        if (g.mul(x, x) == g.identity()) involutions.push_back(x);

    /* Grow subgroups one commuting involution at a time; every elementary
     * abelian subgroup arises this way. */
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> frontier;
    for (auto t : involutions) {
        std::vector<std::size_t> s{g.identity(), t};
        std::sort(s.begin(), s.end());
        if (found.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& s : frontier) {
            for (auto t : involutions) {
                if (std::binary_search(s.begin(), s.end(), t)) continue;
                bool commutes = true;
                for (auto x : s)
                    if (g.mul(x, t) != g.mul(t, x)) { commutes = false; break; }
                if (!commutes) continue;
                std::vector<std::size_t> bigger = s;
                for (auto x : s) bigger.push_back(g.mul(x, t));
                std::sort(bigger.begin(), bigger.end());
                bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
                if (found.insert(bigger).second) next.push_back(bigger);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<std::size_t>> ordered(found.begin(), found.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    std::vector<Subgroup> out;
    for (auto& s : ordered) out.emplace_back(g, std::move(s));
    return out;
}

Subgroup centralizer_in(const Subgroup& h, std::size_t n) {
    const FiniteGroup& g = h.parent();
    std::vector<std::size_t> members;
    for (auto x : h.members())
        if (g.mul(x, n) == g.mul(n, x)) members.push_back(x);
    return Subgroup(g, std::move(members));
}

namespace {

/* Quaternion units as (sign, axis), axis 0=1, 1=i, 2=j, 3=k. */
struct Quat {
    unsigned sign;  // exponent of -1
    unsigned axis;
};

Quat quat_mul(Quat a, Quat b) {
    static const unsigned axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const unsigned sign_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return Quat{(a.sign + b.sign + sign_table[a.axis][b.axis]) % 2,
                axis_table[a.axis][b.axis]};
}

std::size_t quat_index(Quat q) { return q.axis * 2 + q.sign; }
Quat quat_of(std::size_t idx) {
    return Quat{static_cast<unsigned>(idx % 2), static_cast<unsigned>(idx / 2)};
}

/* The order-3 automorphism i -> j -> k -> i. */
Quat quat_rotate(Quat q, unsigned times) {
    Quat r = q;
    for (unsigned t = 0; t < times % 3; ++t)
        if (r.axis != 0) r.axis = r.axis % 3 + 1;
    return r;
}

}  // namespace

FiniteGroup make_q8() {
    std::vector<std::string> names{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b)
            table[a][b] = quat_index(quat_mul(quat_of(a), quat_of(b)));
    return FiniteGroup::from_table("q8", std::move(names), std::move(table),
                                   {{"i", 2}, {"j", 4}});
}

FiniteGroup make_c3() {
    return FiniteGroup::from_table("c3", {"1", "w", "w2"},
                                   {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {{"w", 1}});
}

FiniteGroup make_cyclic(std::size_t n) {
    if (n == 0 || n > 48) throw Error("cyclic group order must be between 1 and 48");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "1" : "g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    std::map<std::string, std::size_t> gens;
    if (n > 1) gens["g1"] = 1;
    return FiniteGroup::from_table("c" + std::to_string(n), std::move(names),
                                   std::move(table), std::move(gens));
}

FiniteGroup make_klein4() {
    std::vector<std::vector<std::size_t>> table(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
    return FiniteGroup::from_table("klein4", {"1", "a", "b", "ab"}, std::move(table),
                                   {{"a", 1}, {"b", 2}});
}

G24 make_g24() {
    const FiniteGroup q8 = make_q8();
    /* Element a*8+q is w^a q; moving q past w^b twists by the inverse rotation:
     * (w^a q1)(w^b q2) = w^(a+b) rot^(3-b)(q1) q2. */
    std::vector<std::string> names(24);
    std::vector<std::vector<std::size_t>> table(24, std::vector<std::size_t>(24));
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t q = 0; q < 8; ++q) {
            std::string w = a == 0 ? "" : (a == 1 ? "w" : "w2");
            std::string qn = q8.name_of(q);
            if (w.empty())
                names[a * 8 + q] = qn;
            else
                names[a * 8 + q] = q == 0 ? w : w + "*" + qn;
        }
    }
    for (std::size_t a1 = 0; a1 < 3; ++a1)
        for (std::size_t q1 = 0; q1 < 8; ++q1)
            for (std::size_t a2 = 0; a2 < 3; ++a2)
                for (std::size_t q2 = 0; q2 < 8; ++q2) {
                    std::size_t a = (a1 + a2) % 3;
                    Quat moved = quat_rotate(quat_of(q1), static_cast<unsigned>((3 - a2) % 3));
                    Quat q = quat_mul(moved, quat_of(q2));
                    table[a1 * 8 + q1][a2 * 8 + q2] = a * 8 + quat_index(q);
                }
    FiniteGroup g = FiniteGroup::from_table(
        "g24", std::move(names), std::move(table), {{"i", 2}, {"j", 4}, {"w", 8}});
    Subgroup q8_sub(g, {0, 1, 2, 3, 4, 5, 6, 7});
    Subgroup c3_sub(g, {0, 8, 16});
    return G24{std::move(g), std::move(q8_sub), std::move(c3_sub)};
}

}  // namespace jokerlab
