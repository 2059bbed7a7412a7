#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ecom/budget.hpp"
#include "ecom/element_set.hpp"
#include "ecom/errors.hpp"

namespace ecom {

/// A finite group given by its complete multiplication table.  Elements are
/// dense indices 0..n-1 with the identity pinned at index 0.
///
/// Construction validates that the table is a Latin square, that index 0 is
/// a two-sided identity and that every element has an inverse.  The O(n^3)
/// associativity check is mandatory for n <= 512; above that it is skipped
/// by default and the `associativity_checked` flag records the trust.
class FiniteGroup {
public:
    enum class AssocCheck { automatic, force, skip };

    FiniteGroup(int order, std::vector<int> table, std::string name,
                std::vector<std::string> element_names = {},
                AssocCheck assoc = AssocCheck::automatic)
        : n_(order),
          table_(std::move(table)),
          name_(std::move(name)),
          element_names_(std::move(element_names)) {
        if (n_ <= 0) throw SpecError("group order must be positive");
        if (table_.size() != static_cast<std::size_t>(n_) * n_)
            throw SpecError("multiplication table has wrong size");
        validate_latin_square();
        validate_identity();
        build_inverses();
        bool want_assoc = (assoc == AssocCheck::force) ||
                          (assoc == AssocCheck::automatic && n_ <= 512);
        if (want_assoc) {
            validate_associativity();
            associativity_checked_ = true;
        }
        if (element_names_.empty()) {
            element_names_.reserve(static_cast<std::size_t>(n_));
            element_names_.push_back("e");
            for (int i = 1; i < n_; ++i) element_names_.push_back("g" + std::to_string(i));
        } else if (element_names_.size() != static_cast<std::size_t>(n_)) {
            throw SpecError("element name list has wrong size");
        }
    }

    int order() const { return n_; }
    int identity() const { return 0; }
    int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
    int inv(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    bool associativity_checked() const { return associativity_checked_; }
    const std::string& name() const { return name_; }
    const std::string& element_name(int i) const {
        return element_names_[static_cast<std::size_t>(i)];
    }
    const std::vector<int>& table() const { return table_; }

    bool commute(int i, int j) const { return mul(i, j) == mul(j, i); }

    /// [x,y] = x^{-1} y^{-1} x y.
    int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

    int conjugate(int g, int x) const { return mul(mul(inv(g), x), g); }

    int element_order(int g) const {
        int k = 1, x = g;
        while (x != 0) {
            x = mul(x, g);
            ++k;
        }
        return k;
    }

    bool is_abelian() const {
        for (int i = 1; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!commute(i, j)) return false;
        return true;
    }

    ElementSet all_elements() const { return ElementSet::full(n_); }

private:
    void validate_latin_square() {
        std::vector<char> seen(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int j = 0; j < n_; ++j) {
                int v = mul(i, j);
                if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
                    throw SpecError("multiplication table is not a Latin square (row " +
                                    std::to_string(i) + ")");
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
        for (int j = 0; j < n_; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int i = 0; i < n_; ++i) {
                int v = mul(i, j);
                if (seen[static_cast<std::size_t>(v)])
                    throw SpecError("multiplication table is not a Latin square (column " +
                                    std::to_string(j) + ")");
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
    }

    void validate_identity() {
        for (int j = 0; j < n_; ++j)
            if (mul(0, j) != j || mul(j, 0) != j)
                throw SpecError("index 0 is not a two-sided identity");
    }

    void build_inverses() {
        inverse_.assign(static_cast<std::size_t>(n_), -1);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (mul(i, j) == 0 && mul(j, i) == 0) {
                    inverse_[static_cast<std::size_t>(i)] = j;
                    break;
                }
        for (int i = 0; i < n_; ++i)
            if (inverse_[static_cast<std::size_t>(i)] < 0)
                throw SpecError("element " + std::to_string(i) + " has no two-sided inverse");
    }

    void validate_associativity() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int ij = mul(i, j);
                for (int k = 0; k < n_; ++k)
                    if (mul(ij, k) != mul(i, mul(j, k)))
                        throw SpecError("multiplication table is not associative at (" +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k) + ")");
            }
    }

    int n_;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::string name_;
    std::vector<std::string> element_names_;
    bool associativity_checked_ = false;
};

/// Subgroup as a set of element indices.  The factory functions in this
/// header guarantee closure; `is_subgroup` re-checks it for tests.
struct Subgroup {
    ElementSet elements;

    int order() const { return elements.count(); }
    bool operator==(const Subgroup& o) const { return elements == o.elements; }
    bool operator<(const Subgroup& o) const {
        int a = order(), b = o.order();
        if (a != b) return a < b;
        return elements < o.elements;
    }
};

/// Left coset gH in canonical form: the representative is the minimal
/// element index, so coset equality is element-set equality.
struct Coset {
    int representative = 0;
    ElementSet elements;
    ElementSet subgroup;

    int size() const { return elements.count(); }
    bool operator==(const Coset& o) const { return elements == o.elements; }
    bool operator<(const Coset& o) const {
        int a = size(), b = o.size();
        if (a != b) return a < b;
        return elements < o.elements;
    }
};

struct CosetHash {
    std::size_t operator()(const Coset& c) const { return c.elements.hash(); }
};

inline bool is_subgroup(const FiniteGroup& G, const ElementSet& s) {
    if (!s.test(0)) return false;
    for (int a : s)
        for (int b : s)
            if (!s.test(G.mul(a, b))) return false;
    return true;
}

inline bool is_abelian_subset(const FiniteGroup& G, const ElementSet& s) {
    auto v = s.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!G.commute(v[i], v[j])) return false;
    return true;
}

/// { g : gs = sg for all s in S }.  Always a subgroup.
inline Subgroup centralizer(const FiniteGroup& G, const ElementSet& s) {
    ElementSet c(G.order());
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int x : s)
            if (G.mul(g, x) != G.mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) c.set(g);
    }
    return Subgroup{c};
}

inline Subgroup center(const FiniteGroup& G) { return centralizer(G, G.all_elements()); }

/// Smallest subgroup containing S.  <empty> = {identity}.
inline Subgroup generated_subgroup(const FiniteGroup& G, const ElementSet& s) {
    ElementSet closure(G.order());
    closure.set(0);
    std::vector<int> members{0};
    std::vector<int> gens = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (int g : gens) {
            int x = G.mul(members[i], g);
            if (!closure.test(x)) {
                closure.set(x);
                members.push_back(x);
            }
        }
    return Subgroup{closure};
}

inline Subgroup generated_subgroup(const FiniteGroup& G, std::span<const int> gens) {
    ElementSet s(G.order());
    for (int g : gens) s.set(g);
    return generated_subgroup(G, s);
}

/// Subgroup generated by all commutators [x,y] = x^{-1}y^{-1}xy.
inline Subgroup derived_subgroup(const FiniteGroup& G) {
    ElementSet comms(G.order());
    for (int x = 0; x < G.order(); ++x)
        for (int y = x + 1; y < G.order(); ++y) {
            int c = G.commutator(x, y);
            comms.set(c);
            comms.set(G.inv(c));
        }
    return generated_subgroup(G, comms);
}

/// Derived subgroup of the subgroup H (commutators taken inside H).
inline Subgroup derived_subgroup_of(const FiniteGroup& G, const Subgroup& H) {
    ElementSet comms(G.order());
    auto v = H.elements.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            int c = G.commutator(v[i], v[j]);
            comms.set(c);
            comms.set(G.inv(c));
        }
    return generated_subgroup(G, comms);
}

/// All abelian subgroups, canonical and sorted by (order, element set).
///
/// Enumeration is breadth-first closure: seed with the cyclic subgroups
/// <g>, then extend each abelian A by any g in centralizer(A) \ A.  Such an
/// extension <A, g> is automatically abelian, so non-abelian subgroups are
/// never visited.
inline std::vector<Subgroup> abelian_subgroups(const FiniteGroup& G,
                                               const Budget& budget = {}) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> queue;
    auto push = [&](const ElementSet& s) {
        if (seen.insert(s).second) {
            queue.push_back(s);
            if (static_cast<long long>(seen.size()) > budget.max_subgroups)
                throw BudgetExceeded("abelian subgroup enumeration",
                                     static_cast<long long>(seen.size()));
        }
    };
    for (int g = 0; g < G.order(); ++g)
        push(generated_subgroup(G, ElementSet::singleton(G.order(), g)).elements);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        ElementSet a = queue[i];
        ElementSet candidates = centralizer(G, a).elements - a;
        for (int g : candidates) {
            ElementSet gen = a;
            gen.set(g);
            push(generated_subgroup(G, gen).elements);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.push_back(Subgroup{s});
    std::sort(out.begin(), out.end());
    return out;
}

/// Exactly the abelian subgroups A with centralizer(A) = A.
///
/// Every maximal abelian subgroup is the intersection of the element
/// centralizers of its members, so it suffices to close the family
/// { C(g) : g in G } under pairwise intersection and keep the abelian
/// members that equal their own centralizer.
inline std::vector<Subgroup> maximal_abelian_subgroups(const FiniteGroup& G,
                                                       const Budget& budget = {}) {
    std::unordered_set<ElementSet, ElementSetHash> family;
    std::vector<ElementSet> queue;
    auto push = [&](const ElementSet& s) {
        if (family.insert(s).second) {
            queue.push_back(s);
            if (static_cast<long long>(family.size()) > budget.max_subgroups)
                throw BudgetExceeded("centralizer family enumeration",
                                     static_cast<long long>(family.size()));
        }
    };
    for (int g = 0; g < G.order(); ++g)
        push(centralizer(G, ElementSet::singleton(G.order(), g)).elements);
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) push(queue[i] & queue[j]);

    std::vector<Subgroup> out;
    for (const auto& s : family)
        if (is_abelian_subset(G, s) && centralizer(G, s).elements == s)
            out.push_back(Subgroup{s});
    std::sort(out.begin(), out.end());
    return out;
}

inline Coset make_left_coset(const FiniteGroup& G, const ElementSet& subgroup, int g) {
    ElementSet elems(G.order());
    for (int h : subgroup) elems.set(G.mul(g, h));
    return Coset{elems.min_element(), elems, subgroup};
}

/// The |G|/|H| pairwise-disjoint left cosets of H, canonical and sorted.
inline std::vector<Coset> left_cosets(const FiniteGroup& G, const Subgroup& H) {
    std::vector<Coset> out;
    ElementSet covered(G.order());
    for (int g = 0; g < G.order(); ++g) {
        if (covered.test(g)) continue;
        Coset c = make_left_coset(G, H.elements, g);
        covered |= c.elements;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The coset s<s^{-1}S> for s = min(S) when S is affinely commutative,
/// nothing otherwise.  When it exists it is contained in every coset of an
/// abelian subgroup that contains S.
inline std::optional<Coset> minimal_enclosing_coset(const FiniteGroup& G,
                                                    const ElementSet& s) {
    if (s.none()) throw std::invalid_argument("minimal_enclosing_coset: empty set");
    int rep = s.min_element();
    ElementSet quotients(G.order());
    for (int x : s) quotients.set(G.mul(G.inv(rep), x));
    Subgroup H = generated_subgroup(G, quotients);
    if (!is_abelian_subset(G, H.elements)) return std::nullopt;
    return make_left_coset(G, H.elements, rep);
}

/// Affine commutativity of an ordered tuple, method 1: the consecutive
/// quotients s_i^{-1} s_{i+1} pairwise commute.
inline bool affinely_commutative_seq(const FiniteGroup& G, std::span<const int> seq) {
    if (seq.empty()) throw std::invalid_argument("is_affinely_commutative: empty set");
    std::vector<int> q;
    q.reserve(seq.size());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        q.push_back(G.mul(G.inv(seq[i]), seq[i + 1]));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (!G.commute(q[i], q[j])) return false;
    return true;
}

/// The three equivalent tests for affine commutativity of a set:
///   1. consecutive quotients (in increasing index order) pairwise commute;
///   2. <s_i^{-1} s_j> over all pairs is abelian;
///   3. S is contained in some coset of an abelian subgroup (via the
///      minimal enclosing coset).
inline bool is_affinely_commutative(const FiniteGroup& G, const ElementSet& s,
                                    int method = 1) {
    if (s.none()) throw std::invalid_argument("is_affinely_commutative: empty set");
    switch (method) {
        case 1: {
            auto v = s.to_vector();
            return affinely_commutative_seq(G, v);
        }
        case 2: {
            auto v = s.to_vector();
            ElementSet quotients(G.order());
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (i != j) quotients.set(G.mul(G.inv(v[i]), v[j]));
            return is_abelian_subset(G, generated_subgroup(G, quotients).elements);
        }
        case 3:
            return minimal_enclosing_coset(G, s).has_value();
        default:
            throw std::invalid_argument("is_affinely_commutative: method must be 1, 2 or 3");
    }
}

}  // namespace ecom
