#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "ecom/commutator_map.hpp"
#include "ecom/cover.hpp"
#include "ecom/group_spec.hpp"
#include "ecom/homology.hpp"
#include "ecom/poset.hpp"
#include "ecom/presentation.hpp"
#include "ecom/todd_coxeter.hpp"
#include "oracles.hpp"

using namespace ecom;

namespace {

Word word(std::initializer_list<int> ls) { return Word{std::vector<int>(ls)}; }

Presentation pres(int gens, std::initializer_list<Word> rels) {
    Presentation p;
    p.generator_count = gens;
    p.relators = rels;
    p.generator_labels.assign(static_cast<std::size_t>(gens), {-1, -1});
    return p;
}

AbelianInvariants h1_invariants(const SimplicialComplex& k) {
    auto h = homology(k, 1);
    return AbelianInvariants{h[1].betti, h[1].torsion};
}

}  // namespace

TEST_CASE("pi1 presentations of tiny complexes") {
    SECTION("a single triangle presents the trivial group") {
        SimplicialComplex k(3, {{0, 1, 2}});
        Presentation p = tietze_simplify(pi1_presentation(k));
        REQUIRE(p.generator_count == 0);
        REQUIRE(p.relators.empty());
    }
    SECTION("AfCom(Z/2) is one edge: trivial group") {
        Presentation p = tietze_simplify(pi1_presentation(afcom_complex(make_cyclic(2))));
        REQUIRE(p.generator_count == 0);
        REQUIRE(p.relators.empty());
    }
    SECTION("AfCom(S3) simplifies to the free group of rank 8") {
        Presentation raw = pi1_presentation(afcom_complex(make_symmetric(3)));
        REQUIRE(raw.generator_count == 10);  // 15 edges minus 5 star-tree edges
        REQUIRE(raw.relators.size() == 2);
        Presentation p = tietze_simplify(raw);
        REQUIRE(p.generator_count == 8);
        REQUIRE(p.relators.empty());
    }
    SECTION("a circle: boundary of a triangle without the face") {
        SimplicialComplex k(3, {{0, 1}, {1, 2}, {0, 2}});
        Presentation p = tietze_simplify(pi1_presentation(k));
        REQUIRE(p.generator_count == 1);
        REQUIRE(p.relators.empty());
    }
    SECTION("disconnected input is rejected") {
        SimplicialComplex k(4, {{0, 1}, {2, 3}});
        REQUIRE_THROWS_AS(pi1_presentation(k), std::invalid_argument);
    }
}

TEST_CASE("tietze simplification examples") {
    SECTION("<a, b | b> -> <a |>") {
        Presentation p = tietze_simplify(pres(2, {word({2})}));
        REQUIRE(p.generator_count == 1);
        REQUIRE(p.relators.empty());
    }
    SECTION("<a | a^2, a^3> -> trivial via the gcd effect") {
        Presentation p = tietze_simplify(pres(1, {word({1, 1}), word({1, 1, 1})}));
        REQUIRE(p.generator_count == 0);
        REQUIRE(p.relators.empty());
    }
    SECTION("never grows generator count or total length") {
        Presentation q = pres(3, {word({1, 2, -3}), word({3, 2, 1}), word({2, 2})});
        Presentation p = tietze_simplify(q);
        REQUIRE(p.generator_count <= q.generator_count);
        REQUIRE(p.total_relator_length() <= q.total_relator_length());
    }
    SECTION("abelian invariants are preserved") {
        std::vector<Presentation> cases = {
            pres(2, {word({1, 1}), word({2, 2, 2}), word({1, 2, -1, -2})}),
            pres(3, {word({1, 2, -3}), word({3, 3})}),
            pres(1, {word({1, 1})}),
        };
        for (const auto& q : cases) {
            auto before = abelian_invariants(q);
            auto after = abelian_invariants(tietze_simplify(q));
            REQUIRE(before == after);
        }
    }
}

TEST_CASE("abelian invariants") {
    SECTION("free group of rank 3") {
        auto inv = abelian_invariants(pres(3, {}));
        REQUIRE(inv.rank == 3);
        REQUIRE(inv.torsion.empty());
    }
    SECTION("Z/2 x Z/6 from a direct presentation") {
        auto inv = abelian_invariants(
            pres(2, {word({1, 1}), word({2, 2, 2, 2, 2, 2}), word({1, 2, -1, -2})}));
        REQUIRE(inv.rank == 0);
        REQUIRE(inv.torsion == std::vector<mpz_class>{2, 6});
    }
    SECTION("AfCom(extraspecial32) has pi1 abelianization Z/2") {
        for (char t : {'+', '-'}) {
            Presentation p = pi1_presentation(afcom_complex(make_extraspecial32(t)));
            auto inv = abelian_invariants(p);
            REQUIRE(inv.rank == 0);
            REQUIRE(inv.torsion == std::vector<mpz_class>{2});
        }
    }
}

TEST_CASE("Hurewicz: abelianized pi1 equals H1, and tree choice does not matter") {
    for (const auto& g : oracles::named_groups_up_to(16)) {
        INFO(g.name());
        SimplicialComplex k = afcom_complex(g);
        auto h1 = h1_invariants(k);
        Presentation star = pi1_presentation(k, 0, SpanningTree::star);
        Presentation bfs = pi1_presentation(k, 0, SpanningTree::bfs);
        REQUIRE(abelian_invariants(star) == h1);
        REQUIRE(abelian_invariants(bfs) == h1);
        REQUIRE(abelian_invariants(tietze_simplify(star)) == h1);
    }
    // also across the nerve model
    SimplicialComplex nerve = mabco_poset(make_quaternion(16)).order_complex();
    REQUIRE(abelian_invariants(pi1_presentation(nerve)) == h1_invariants(nerve));
}

TEST_CASE("todd-coxeter enumeration") {
    SECTION("<a | a^2> has order 2") {
        auto r = todd_coxeter(pres(1, {word({1, 1})}), 100);
        REQUIRE(r.completed);
        REQUIRE(r.order == 2);
    }
    SECTION("Klein four group") {
        auto r = todd_coxeter(pres(2, {word({1, 1}), word({2, 2}), word({1, 2, 1, 2})}), 100);
        REQUIRE(r.completed);
        REQUIRE(r.order == 4);
    }
    SECTION("S3 = <a,b | a^3, b^2, (ab)^2>") {
        auto r =
            todd_coxeter(pres(2, {word({1, 1, 1}), word({2, 2}), word({1, 2, 1, 2})}), 100);
        REQUIRE(r.completed);
        REQUIRE(r.order == 6);
    }
    SECTION("quaternion group of order 8") {
        // <a, b | a^4, a^2 b^-2, b^-1 a b a>
        auto r = todd_coxeter(
            pres(2, {word({1, 1, 1, 1}), word({1, 1, -2, -2}), word({-2, 1, 2, 1})}), 200);
        REQUIRE(r.completed);
        REQUIRE(r.order == 8);
    }
    SECTION("free groups never finish: unknown, not a wrong answer") {
        auto r = todd_coxeter(pres(1, {}), 50);
        REQUIRE_FALSE(r.completed);
        REQUIRE(r.cosets_used >= 50);
    }
    SECTION("empty presentation has order 1") {
        auto r = todd_coxeter(pres(0, {}), 10);
        REQUIRE(r.completed);
        REQUIRE(r.order == 1);
    }
    SECTION("cyclic groups of several orders") {
        for (int n : {1, 2, 3, 5, 12}) {
            Word w;
            for (int i = 0; i < n; ++i) w.letters.push_back(1);
            auto r = todd_coxeter(pres(1, {w}), 100);
            REQUIRE(r.completed);
            REQUIRE(r.order == n);
        }
    }
    SECTION("agrees with the abelianization when that is already the full order") {
        Presentation p = pres(2, {word({1, 1}), word({2, 2, 2}), word({1, 2, -1, -2})});
        auto inv = abelian_invariants(p);
        mpz_class ab_order = 1;
        for (const auto& d : inv.torsion) ab_order *= d;
        REQUIRE(inv.rank == 0);
        auto r = todd_coxeter(p, 100);
        REQUIRE(r.completed);
        REQUIRE(mpz_class(static_cast<long>(r.order)) == ab_order);
    }
}

TEST_CASE("extraspecial32 pipeline: pi1 simplifies and certifies order 2") {
    for (char t : {'+', '-'}) {
        INFO(t);
        Presentation p =
            tietze_simplify(pi1_presentation(afcom_complex(make_extraspecial32(t))));
        auto r = todd_coxeter(p, 1000000);
        REQUIRE(r.completed);
        REQUIRE(r.order == 2);
    }
}

TEST_CASE("commutator morphism") {
    SECTION("abelian G: trivial image, trivially surjective") {
        auto rep = commutator_morphism(make_cyclic(8));
        REQUIRE(rep.image.order() == 1);
        REQUIRE(rep.surjective_onto_derived);
    }
    SECTION("S3: image is A3") {
        auto rep = commutator_morphism(make_symmetric(3));
        REQUIRE(rep.image.order() == 3);
        REQUIRE(rep.surjective_onto_derived);
        REQUIRE(rep.triangles_checked == 2);
    }
    SECTION("Q8: image is the center") {
        FiniteGroup q8 = make_quaternion(8);
        auto rep = commutator_morphism(q8);
        REQUIRE(rep.image.elements == center(q8).elements);
        REQUIRE(rep.surjective_onto_derived);
    }
    SECTION("image equals the derived subgroup for every named group of order <= 24") {
        for (const auto& g : oracles::named_groups_up_to(24)) {
            INFO(g.name());
            REQUIRE(commutator_morphism(g).surjective_onto_derived);
        }
    }
}

TEST_CASE("feit-thompson witness") {
    REQUIRE(feit_thompson_witness(make_symmetric(3)));
    // the non-abelian group of order 21 (x -> x+1, x -> 2x on Z/7)
    FiniteGroup f21 = load_group(nlohmann::json::parse(
        R"({"kind":"permutations","degree":7,
            "generators":[[[0,1,2,3,4,5,6]],[[1,2,4],[3,6,5]]]})"));
    REQUIRE(f21.order() == 21);
    REQUIRE(feit_thompson_witness(f21));
    // A5 is perfect: the witness is false
    REQUIRE_FALSE(feit_thompson_witness(make_alternating(5)));
    REQUIRE_THROWS_AS(feit_thompson_witness(make_cyclic(6)), std::invalid_argument);
}

TEST_CASE("double cover of AfCom(extraspecial32) recovers the paper-level H2") {
    // pi1 = Z/2 (certified by enumeration above); the connected double cover
    // is then simply connected and its H2 reads off pi2.
    FiniteGroup g = make_extraspecial32('+');
    SimplicialComplex k = afcom_complex(g);
    Presentation p = pi1_presentation(k);
    auto hom = mod2_homomorphism(p);
    REQUIRE(hom.has_value());
    std::map<std::pair<int, int>, int> parity;
    for (const auto& e : k.k_simplices(1)) parity[{e.vertices[0], e.vertices[1]}] = 0;
    for (int i = 0; i < p.generator_count; ++i)
        parity[p.generator_labels[static_cast<std::size_t>(i)]] =
            (*hom)[static_cast<std::size_t>(i)];
    SimplicialComplex cover = two_fold_cover(k, parity);
    REQUIRE(cover.vertex_count() == 64);
    REQUIRE(cover.is_connected());
    auto h = homology(cover, 2);
    REQUIRE(h[0] == HomologyGroup{1, {}});
    REQUIRE(h[1] == HomologyGroup{0, {}});  // simply connected cover
    REQUIRE(h[2] == HomologyGroup{151, {}});
}

TEST_CASE("presentation JSON export") {
    Presentation p = pi1_presentation(afcom_complex(make_symmetric(3)));
    auto j = p.to_json();
    REQUIRE(j["generators"] == 10);
    REQUIRE(j["labels"].size() == 10);
    REQUIRE(j["relators"].size() == 2);
}
