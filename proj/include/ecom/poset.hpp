#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ecom/budget.hpp"
#include "ecom/complex.hpp"
#include "ecom/errors.hpp"
#include "ecom/group.hpp"

namespace ecom {

/// Finite poset of cosets ordered by inclusion.  Elements are stored
/// canonically sorted by (size, element set), so indices are deterministic.
class Poset {
public:
    Poset(std::vector<Coset> elements, std::vector<std::string> labels)
        : elements_(std::move(elements)), labels_(std::move(labels)) {}

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Coset>& elements() const { return elements_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int i, int j) const {
        return elements_[static_cast<std::size_t>(j)].elements.contains_all(
            elements_[static_cast<std::size_t>(i)].elements);
    }

    /// Cover relations (i, j) with i strictly below j and nothing between.
    /// Candidates are pruned by size: a proper subset has strictly fewer
    /// elements, and any witness between them has size in between.
    std::vector<std::pair<int, int>> hasse_edges() const {
        std::vector<std::pair<int, int>> out;
        int n = size();
        for (int j = 0; j < n; ++j) {
            int sj = elements_[static_cast<std::size_t>(j)].size();
            for (int i = 0; i < n; ++i) {
                if (i == j) continue;
                int si = elements_[static_cast<std::size_t>(i)].size();
                if (si >= sj || !leq(i, j)) continue;
                bool cover = true;
                for (int k = 0; k < n && cover; ++k) {
                    if (k == i || k == j) continue;
                    int sk = elements_[static_cast<std::size_t>(k)].size();
                    if (sk <= si || sk >= sj) continue;
                    if (leq(i, k) && leq(k, j)) cover = false;
                }
                if (cover) out.emplace_back(i, j);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Order complex (nerve): vertices are the poset elements, facets the
    /// maximal chains, i.e. cover paths from a minimal to a maximal element.
    SimplicialComplex order_complex(const Budget& budget = {}) const {
        auto covers = hasse_edges();
        int n = size();
        std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
        std::vector<char> has_lower(static_cast<std::size_t>(n), 0);
        for (auto [i, j] : covers) {
            up[static_cast<std::size_t>(i)].push_back(j);
            has_lower[static_cast<std::size_t>(j)] = 1;
        }
        std::vector<std::vector<int>> chains;
        long long budget_count = 0;
        std::vector<int> chain;
        auto dfs = [&](auto&& self, int v) -> void {
            chain.push_back(v);
            if (up[static_cast<std::size_t>(v)].empty()) {
                chains.push_back(chain);
                if (++budget_count > budget.max_simplices)
                    throw BudgetExceeded("maximal chain enumeration", budget_count);
            } else {
                for (int w : up[static_cast<std::size_t>(v)]) self(self, w);
            }
            chain.pop_back();
        };
        for (int v = 0; v < n; ++v)
            if (!has_lower[static_cast<std::size_t>(v)]) dfs(dfs, v);
        return SimplicialComplex(n, std::move(chains), labels_);
    }

private:
    std::vector<Coset> elements_;
    std::vector<std::string> labels_;
};

namespace detail {

inline Poset poset_from_cosets(const FiniteGroup& G, std::vector<Coset> cosets) {
    std::sort(cosets.begin(), cosets.end());
    cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
    std::vector<std::string> labels;
    labels.reserve(cosets.size());
    for (const auto& c : cosets) {
        std::string l = G.element_name(c.representative) + "*{";
        bool first = true;
        for (int h : c.subgroup) {
            if (!first) l += ",";
            l += G.element_name(h);
            first = false;
        }
        l += "}";
        labels.push_back(std::move(l));
    }
    return Poset(std::move(cosets), std::move(labels));
}

}  // namespace detail

/// AbCo(G): all cosets of all abelian subgroups, ordered by inclusion.
inline Poset abco_poset(const FiniteGroup& G, const Budget& budget = {}) {
    std::vector<Coset> cosets;
    for (const auto& h : abelian_subgroups(G, budget)) {
        for (const auto& c : left_cosets(G, h)) {
            cosets.push_back(c);
            if (static_cast<long long>(cosets.size()) > budget.max_poset_elements)
                throw BudgetExceeded("coset poset enumeration",
                                     static_cast<long long>(cosets.size()));
        }
    }
    return detail::poset_from_cosets(G, std::move(cosets));
}

/// mAbCo(G): cosets of the subgroups in the intersection closure of the
/// maximal abelian subgroups.  The closure starts from the maximal abelian
/// subgroups themselves and adds pairwise intersections to a fixed point;
/// the empty-family intersection is excluded.
inline Poset mabco_poset(const FiniteGroup& G, const Budget& budget = {}) {
    std::unordered_set<ElementSet, ElementSetHash> family;
    std::vector<ElementSet> queue;
    for (const auto& m : maximal_abelian_subgroups(G, budget))
        if (family.insert(m.elements).second) queue.push_back(m.elements);
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            ElementSet s = queue[i] & queue[j];
            if (family.insert(s).second) {
                queue.push_back(s);
                if (static_cast<long long>(family.size()) > budget.max_poset_elements)
                    throw BudgetExceeded("intersection closure",
                                         static_cast<long long>(family.size()));
            }
        }
    std::vector<Coset> cosets;
    for (const auto& h : family) {
        for (const auto& c : left_cosets(G, Subgroup{h})) {
            cosets.push_back(c);
            if (static_cast<long long>(cosets.size()) > budget.max_poset_elements)
                throw BudgetExceeded("coset poset enumeration",
                                     static_cast<long long>(cosets.size()));
        }
    }
    return detail::poset_from_cosets(G, std::move(cosets));
}

}  // namespace ecom
