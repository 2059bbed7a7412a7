#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecom/complex.hpp"
#include "ecom/errors.hpp"

namespace ecom {

/// Two-fold cover of a complex determined by a Z/2 edge labelling that sums
/// to zero around every triangle.  Sheet s over the least vertex of a facet
/// propagates along edges by the labelling; the triangle condition makes the
/// assignment consistent, which is re-checked here.
///
/// Vertex (v, s) has index v + s * n.  With a labelling induced by a
/// surjection pi_1 -> Z/2 this is the connected double cover; H_2 of it
/// reads off pi_2-level information when that cover is simply connected.
inline SimplicialComplex two_fold_cover(
    const SimplicialComplex& K, const std::map<std::pair<int, int>, int>& edge_parity) {
    int n = K.vertex_count();
    auto parity = [&](int u, int v) {
        auto it = edge_parity.find({std::min(u, v), std::max(u, v)});
        if (it == edge_parity.end())
            throw SpecError("two_fold_cover: missing edge parity");
        return it->second & 1;
    };
    std::vector<std::vector<int>> faces;
    for (const auto& f : K.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                for (std::size_t k = j + 1; k < f.size(); ++k)
                    if ((parity(f[i], f[j]) ^ parity(f[j], f[k])) != parity(f[i], f[k]))
                        throw SpecError("two_fold_cover: labelling violates a triangle");
        for (int s : {0, 1}) {
            std::vector<int> lift;
            lift.reserve(f.size());
            for (int v : f) {
                int sheet = (v == f[0]) ? s : (s ^ parity(f[0], v));
                lift.push_back(v + sheet * n);
            }
            faces.push_back(std::move(lift));
        }
    }
    std::vector<std::string> labels;
    if (!K.labels().empty()) {
        labels.reserve(static_cast<std::size_t>(2 * n));
        for (int s : {0, 1})
            for (int v = 0; v < n; ++v)
                labels.push_back(K.labels()[static_cast<std::size_t>(v)] + "." +
                                 std::to_string(s));
    }
    return SimplicialComplex(2 * n, std::move(faces), std::move(labels));
}

}  // namespace ecom
