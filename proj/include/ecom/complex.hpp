#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecom/budget.hpp"
#include "ecom/errors.hpp"
#include "ecom/group.hpp"

namespace ecom {

struct Simplex {
    std::vector<int> vertices;  // strictly increasing

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const { return vertices < o.vertices; }
};

namespace detail {

struct VecIntHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace detail

/// Simplicial complex stored by its maximal faces.  Construction sorts,
/// deduplicates and enforces maximality; k-faces are streamed per facet on
/// demand with a global deduplication set.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> faces,
                      std::vector<std::string> labels = {})
        : vertex_count_(vertex_count), labels_(std::move(labels)) {
        if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count_)
            throw SpecError("simplicial complex: label list has wrong size");
        for (auto& f : faces) {
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            if (f.empty()) throw SpecError("simplicial complex: empty face");
            if (f.front() < 0 || f.back() >= vertex_count_)
                throw SpecError("simplicial complex: vertex index out of range");
        }
        // maximality: keep faces not contained in any other, largest first
        std::sort(faces.begin(), faces.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      if (a.size() != b.size()) return a.size() > b.size();
                      return a < b;
                  });
        std::vector<std::vector<int>> by_vertex(static_cast<std::size_t>(vertex_count_));
        for (auto& f : faces) {
            bool contained = false;
            for (int idx : by_vertex[static_cast<std::size_t>(f.front())]) {
                if (std::includes(facets_[static_cast<std::size_t>(idx)].begin(),
                                  facets_[static_cast<std::size_t>(idx)].end(), f.begin(),
                                  f.end())) {
                    contained = true;
                    break;
                }
            }
            if (contained) continue;
            int idx = static_cast<int>(facets_.size());
            for (int v : f) by_vertex[static_cast<std::size_t>(v)].push_back(idx);
            facets_.push_back(std::move(f));
        }
        std::sort(facets_.begin(), facets_.end());
        ElementSet seen(vertex_count_);
        for (const auto& f : facets_)
            for (int v : f) seen.set(v);
        if (seen.count() != vertex_count_)
            throw SpecError("simplicial complex: vertex not covered by any facet");
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<std::string>& labels() const { return labels_; }

    int dimension() const {
        std::size_t m = 0;
        for (const auto& f : facets_) m = std::max(m, f.size());
        return static_cast<int>(m) - 1;
    }

    /// All k-faces, deduplicated and lexicographically sorted.  This
    /// ordering is the index contract used by the boundary matrices.
    std::vector<Simplex> k_simplices(int k, const Budget& budget = {}) const {
        if (k < 0) throw std::invalid_argument("k_simplices: k must be >= 0");
        std::unordered_set<std::vector<int>, detail::VecIntHash> seen;
        std::vector<int> pick(static_cast<std::size_t>(k) + 1);
        for (const auto& f : facets_) {
            int m = static_cast<int>(f.size());
            if (m < k + 1) continue;
            // enumerate (k+1)-subsets of f
            std::vector<int> idx(static_cast<std::size_t>(k) + 1);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                for (int i = 0; i <= k; ++i)
                    pick[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(
                        idx[static_cast<std::size_t>(i)])];
                if (seen.insert(pick).second &&
                    static_cast<long long>(seen.size()) > budget.max_simplices)
                    throw BudgetExceeded("k-simplex enumeration",
                                         static_cast<long long>(seen.size()));
                int i = k;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - (k + 1) + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j <= k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        std::vector<Simplex> out;
        out.reserve(seen.size());
        for (auto& v : seen) out.push_back(Simplex{v});
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Number of k-simplices for k = 0..dimension().
    std::vector<long long> simplex_counts(const Budget& budget = {}) const {
        std::vector<long long> counts;
        for (int k = 0; k <= dimension(); ++k)
            counts.push_back(static_cast<long long>(k_simplices(k, budget).size()));
        return counts;
    }

    /// Alternating sum over all dimensions present.
    long long euler_characteristic(const Budget& budget = {}) const {
        long long chi = 0;
        int sign = 1;
        for (long long c : simplex_counts(budget)) {
            chi += sign * c;
            sign = -sign;
        }
        return chi;
    }

    bool is_connected() const {
        if (vertex_count_ == 0) return true;
        std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const auto& f : facets_)
            for (std::size_t i = 1; i < f.size(); ++i) {
                int a = find(f[0]), b = find(f[i]);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
        int root = find(0);
        for (int v = 1; v < vertex_count_; ++v)
            if (find(v) != root) return false;
        return true;
    }

    /// Export format: {"vertices": n, "facets": [[...]], "labels": {...}}.
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["vertices"] = vertex_count_;
        j["facets"] = facets_;
        nlohmann::json lab = nlohmann::json::object();
        for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
            lab[std::to_string(v)] = labels_[static_cast<std::size_t>(v)];
        j["labels"] = lab;
        return j;
    }

private:
    int vertex_count_;
    std::vector<std::vector<int>> facets_;
    std::vector<std::string> labels_;
};

/// AfCom(G): vertices are the group elements, facets the distinct cosets of
/// the maximal abelian subgroups.  Its 1-skeleton is the complete graph.
inline SimplicialComplex afcom_complex(const FiniteGroup& G, const Budget& budget = {}) {
    std::vector<std::vector<int>> faces;
    for (const auto& m : maximal_abelian_subgroups(G, budget))
        for (const auto& c : left_cosets(G, m)) faces.push_back(c.elements.to_vector());
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(G.order()));
    for (int v = 0; v < G.order(); ++v) labels.push_back(G.element_name(v));
    return SimplicialComplex(G.order(), std::move(faces), std::move(labels));
}

}  // namespace ecom
