#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecom/budget.hpp"
#include "ecom/complex.hpp"
#include "ecom/errors.hpp"
#include "ecom/snf.hpp"

namespace ecom {

/// Z^betti plus the invariant factors > 1, torsion in invariant-factor form.
struct HomologyGroup {
    long long betti = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const HomologyGroup& o) const {
        return betti == o.betti && torsion == o.torsion;
    }
    bool is_trivial() const { return betti == 0 && torsion.empty(); }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        if (betti > 0) s = betti == 1 ? "Z" : "Z^" + std::to_string(betti);
        for (const auto& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.get_str();
        }
        return s;
    }
};

/// Matrix of the boundary map from k-chains to (k-1)-chains, with sign
/// (-1)^i on deleting the i-th vertex.  Rows and columns follow the
/// deterministic lexicographic ordering of k_simplices.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k,
                                     const Budget& budget = {}) {
    if (k < 1) throw std::invalid_argument("boundary_matrix: k must be >= 1");
    auto cols = K.k_simplices(k, budget);
    auto rows = K.k_simplices(k - 1, budget);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    auto row_index = [&](const Simplex& s) {
        auto it = std::lower_bound(rows.begin(), rows.end(), s);
        return static_cast<int>(it - rows.begin());
    };
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const auto& v = cols[static_cast<std::size_t>(c)].vertices;
        int sign = 1;
        Simplex face;
        face.vertices.resize(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::size_t t = 0;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != i) face.vertices[t++] = v[j];
            m.set(row_index(face), c, sign);
            sign = -sign;
        }
    }
    return m;
}

/// H_0 .. H_max_dim via Smith normal form of the boundary matrices.
/// Reduced mode subtracts one from betti_0.
inline std::vector<HomologyGroup> homology(const SimplicialComplex& K, int max_dim,
                                           bool reduced = false, const Budget& budget = {}) {
    if (max_dim < 0) throw std::invalid_argument("homology: max_dim must be >= 0");
    int dim = K.dimension();
    int top = std::min(max_dim, dim);
    std::vector<long long> counts;
    for (int k = 0; k <= top; ++k)
        counts.push_back(static_cast<long long>(K.k_simplices(k, budget).size()));

    // rank and invariant factors of each boundary map that exists
    std::vector<int> rank(static_cast<std::size_t>(top) + 2, 0);
    std::vector<std::vector<mpz_class>> tors(static_cast<std::size_t>(top) + 2);
    for (int k = 1; k <= std::min(top + 1, dim); ++k) {
        SmithNormalFormResult s = smith_normal_form(boundary_matrix(K, k, budget), budget);
        rank[static_cast<std::size_t>(k)] = s.rank;
        tors[static_cast<std::size_t>(k)] = s.nontrivial_factors();
    }

    std::vector<HomologyGroup> out(static_cast<std::size_t>(max_dim) + 1);
    for (int k = 0; k <= max_dim; ++k) {
        HomologyGroup h;
        if (k <= top) {
            long long kernel =
                counts[static_cast<std::size_t>(k)] -
                (k >= 1 ? rank[static_cast<std::size_t>(k)] : 0);
            h.betti = kernel - (k + 1 <= top + 1 ? rank[static_cast<std::size_t>(k + 1)] : 0);
            if (k + 1 < static_cast<int>(tors.size()))
                h.torsion = tors[static_cast<std::size_t>(k + 1)];
        }
        out[static_cast<std::size_t>(k)] = std::move(h);
    }
    if (reduced && !out.empty()) out[0].betti -= 1;
    return out;
}

/// Homology-level wedge-of-circles certificate: returns r when H_0 = Z,
/// H_1 = Z^r and H_k = 0 for 2 <= k <= dim K.  Contractible complexes
/// give r = 0.  Input must be connected.
inline std::optional<long long> is_homology_wedge_of_circles(const SimplicialComplex& K,
                                                             const Budget& budget = {}) {
    if (!K.is_connected())
        throw std::invalid_argument("is_homology_wedge_of_circles: complex is disconnected");
    auto h = homology(K, std::max(K.dimension(), 1), false, budget);
    if (h[0].betti != 1 || !h[0].torsion.empty()) return std::nullopt;
    if (!h[1].torsion.empty()) return std::nullopt;
    for (std::size_t k = 2; k < h.size(); ++k)
        if (!h[k].is_trivial()) return std::nullopt;
    return h[1].betti;
}

/// Report fragment: [{"dim":k,"betti":b,"torsion":[...]}, ...].
inline nlohmann::json homology_to_json(const std::vector<HomologyGroup>& hs) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k < static_cast<int>(hs.size()); ++k) {
        nlohmann::json item;
        item["dim"] = k;
        item["betti"] = hs[static_cast<std::size_t>(k)].betti;
        nlohmann::json t = nlohmann::json::array();
        for (const auto& d : hs[static_cast<std::size_t>(k)].torsion) t.push_back(d.get_str());
        item["torsion"] = t;
        arr.push_back(item);
    }
    return arr;
}

}  // namespace ecom
