#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jokerlab/ffield.hpp"

namespace jokerlab {

namespace detail {
struct GroupData;
}

/* Finite group as a fully verified multiplication table (orders <= 48).
 * Element 0 is always the identity.  Value type sharing immutable data;
 * equality compares the tables themselves. */
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string label, std::vector<std::string> names,
                                  std::vector<std::vector<std::size_t>> table,
                                  std::map<std::string, std::size_t> generators);

    const std::string& label() const;
    std::size_t order() const;
    const std::vector<std::string>& names() const;
    const std::string& name_of(std::size_t g) const;
    std::size_t index_of(const std::string& name) const;

    std::size_t identity() const { return 0; }
    std::size_t mul(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;
    std::size_t conjugate(std::size_t g, std::size_t x) const;  // g x g^-1
    std::size_t element_order(std::size_t a) const;

    const std::map<std::string, std::size_t>& generators() const;

    bool is_abelian() const;
    bool is_2_group() const;  // order a power of two

    std::vector<std::size_t> center() const;  // sorted indices
    std::vector<std::size_t> closure(std::vector<std::size_t> gens) const;

    bool operator==(const FiniteGroup& other) const;
    bool operator!=(const FiniteGroup& other) const { return !(*this == other); }

private:
    explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data);
    std::shared_ptr<const detail::GroupData> data_;
};

/* Subset of a parent group, closed under product and inverse. */
class Subgroup {
public:
    Subgroup(FiniteGroup parent, std::vector<std::size_t> members);

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<std::size_t>& members() const { return members_; }  // sorted
    std::size_t order() const { return members_.size(); }
    bool contains(std::size_t g) const;
    bool is_normal() const;

    struct AsGroup {
        FiniteGroup group;
        std::vector<std::size_t> to_parent;  // new index -> parent index
    };
    /* Reindexes the members as a standalone group; member order is preserved
     * except the identity moves to index 0. */
    AsGroup as_group() const;

private:
    FiniteGroup parent_;
    std::vector<std::size_t> members_;
};

struct DoubleCoset {
    std::size_t representative;         // least element index in the coset
    std::vector<std::size_t> elements;  // sorted
};

/* Partition of g into H x H double cosets, ordered by representative. */
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& h);

struct Coset {
    std::size_t representative;
    std::vector<std::size_t> elements;
};

/* Cosets xH of h in g, ordered by least representative. */
std::vector<Coset> left_cosets(const FiniteGroup& g, const Subgroup& h);
/* Cosets Hx. */
std::vector<Coset> right_cosets(const FiniteGroup& g, const Subgroup& h);

/* All subgroups isomorphic to (Z/2)^r with r >= 1, found by extending sets of
 * commuting involutions; deduplicated, ordered by (order, members). */
std::vector<Subgroup> elementary_abelian_subgroups(const FiniteGroup& g, unsigned p);

/* Elements of h commuting with n, as a Subgroup of h.parent(). */
Subgroup centralizer_in(const Subgroup& h, std::size_t n);

FiniteGroup make_q8();
FiniteGroup make_c3();
FiniteGroup make_cyclic(std::size_t n);
FiniteGroup make_klein4();

struct G24 {
    FiniteGroup group;
    Subgroup q8;  // indices 0..7, the normal Sylow 2-subgroup
    Subgroup c3;  // indices {0, 8, 16}
};

/* G24 = C3 x| Q8 with w i w^-1 = j, w j w^-1 = k, w k w^-1 = i.
 * Element a*8+q is w^a q; generators i -> 2, j -> 4, w -> 8. */
G24 make_g24();

}  // namespace jokerlab
