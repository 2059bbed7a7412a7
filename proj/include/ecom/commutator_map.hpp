#pragma once

#include <stdexcept>

#include "ecom/budget.hpp"
#include "ecom/complex.hpp"
#include "ecom/group.hpp"
#include "ecom/presentation.hpp"

namespace ecom {

/// Result of realizing x_{g,h} -> [g,h] on the presentation coming from
/// AfCom(G) with the star tree at the identity.
struct CommutatorMorphismReport {
    Subgroup image;
    bool surjective_onto_derived = false;
    long long triangles_checked = 0;
    int edge_generators = 0;
};

/// Assigns [g,h] to each edge generator of AfCom(G), verifies every
/// triangle relator maps to the group identity, and compares the generated
/// image with the derived subgroup.  A relator violation would contradict
/// the commutator identity on affinely commutative triples and must never
/// fire; it is reported as a logic error rather than a result.
inline CommutatorMorphismReport commutator_morphism(const FiniteGroup& G,
                                                    const SimplicialComplex* afcom = nullptr,
                                                    const Budget& budget = {}) {
    SimplicialComplex local = afcom ? SimplicialComplex(*afcom) : afcom_complex(G, budget);
    CommutatorMorphismReport rep;
    ElementSet images(G.order());
    for (const auto& e : local.k_simplices(1, budget)) {
        int c = G.commutator(e.vertices[0], e.vertices[1]);
        images.set(c);
        images.set(G.inv(c));
        ++rep.edge_generators;
    }
    for (const auto& t : local.k_simplices(2, budget)) {
        int u = t.vertices[0], v = t.vertices[1], w = t.vertices[2];
        if (G.mul(G.commutator(u, v), G.commutator(v, w)) != G.commutator(u, w))
            throw std::logic_error("commutator_morphism: triangle relator not preserved");
        ++rep.triangles_checked;
    }
    rep.image = generated_subgroup(G, images);
    rep.surjective_onto_derived = rep.image.elements == derived_subgroup(G).elements;
    return rep;
}

/// Whether the abelianized commutator morphism is nonzero, i.e. whether
/// [G,G] fails to be perfect.  Only meaningful for non-abelian G.
inline bool feit_thompson_witness(const FiniteGroup& G) {
    if (G.is_abelian()) throw std::invalid_argument("feit_thompson_witness: abelian input");
    Subgroup derived = derived_subgroup(G);
    Subgroup second = derived_subgroup_of(G, derived);
    return second.elements != derived.elements;
}

}  // namespace ecom
