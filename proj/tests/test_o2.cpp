#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ecom/named_groups.hpp"
#include "ecom/o2.hpp"

using namespace ecom;

TEST_CASE("O(2) multiplication basics") {
    REQUIRE(o2_multiply(O2Element::rotation(1, 4), O2Element::rotation(1, 4)) ==
            O2Element::rotation(1, 2));
    // A * A = identity
    O2Element a = O2Element::reflection(0, 1);
    REQUIRE(o2_multiply(a, a) == O2Element::identity());
    // A R_{1/3} A = R_{2/3}
    O2Element r13 = O2Element::rotation(1, 3);
    REQUIRE(o2_multiply(o2_multiply(a, r13), a) == O2Element::rotation(2, 3));
    // angles reduce and normalize into [0,1)
    REQUIRE(O2Element::rotation(7, 3) == O2Element::rotation(1, 3));
    REQUIRE(O2Element::rotation(-1, 4) == O2Element::rotation(3, 4));
    REQUIRE(Angle::of(2, 4) == Angle::of(1, 2));
}

TEST_CASE("the three commutator identities at pinned sample points") {
    // [A R_theta, R_tau] = R_{2 tau} with theta = 1/5, tau = 1/7
    REQUIRE(o2_commutator(O2Element::reflection(1, 5), O2Element::rotation(1, 7)) ==
            O2Element::rotation(2, 7));
    // [R_theta, A R_tau] = R_{-2 theta} with theta = 1/3: R_{-2/3} = R_{1/3}
    REQUIRE(o2_commutator(O2Element::rotation(1, 3), O2Element::reflection(1, 11)) ==
            O2Element::rotation(1, 3));
    // [A R_theta, A R_tau] = R_{2(tau - theta)}; theta = tau gives the identity
    REQUIRE(o2_commutator(O2Element::reflection(2, 9), O2Element::reflection(2, 9)) ==
            O2Element::identity());
}

TEST_CASE("commutator identities over 1000 seeded rational samples, exactly") {
    std::mt19937_64 rng(20240209);
    auto random_angle = [&]() {
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 999);
        std::int64_t num = static_cast<std::int64_t>(rng() % 2000) - 1000;
        return Angle::of(num, den);
    };
    for (int i = 0; i < 1000; ++i) {
        Angle theta = random_angle(), tau = random_angle();
        O2Element r_theta{false, theta}, r_tau{false, tau};
        O2Element ar_theta{true, theta}, ar_tau{true, tau};

        REQUIRE(o2_commutator(ar_theta, r_tau) == (O2Element{false, tau.doubled()}));
        REQUIRE(o2_commutator(r_theta, ar_tau) == (O2Element{false, -(theta.doubled())}));
        REQUIRE(o2_commutator(ar_theta, ar_tau) ==
                (O2Element{false, (tau - theta).doubled()}));

        // commutators always land in the rotation subgroup
        for (const auto& x : {r_theta, ar_theta})
            for (const auto& y : {r_tau, ar_tau}) REQUIRE_FALSE(o2_commutator(x, y).reflect);
    }
}

TEST_CASE("associativity on random triples, exactly") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        auto rand_elem = [&]() {
            return O2Element{(rng() & 1) != 0,
                             Angle::of(static_cast<std::int64_t>(rng() % 200) - 100,
                                       1 + static_cast<std::int64_t>(rng() % 99))};
        };
        O2Element x = rand_elem(), y = rand_elem(), z = rand_elem();
        REQUIRE(o2_multiply(o2_multiply(x, y), z) == o2_multiply(x, o2_multiply(y, z)));
    }
}

TEST_CASE("the subgroup <A, R_{1/n}> is dihedral of order 2n, matching the table") {
    for (int n : {1, 2, 3, 4, 6, 8, 12}) {
        INFO("n = " << n);
        FiniteGroup d = make_dihedral(n);
        // index i < n -> R_{i/n}; index n + i -> A R_{i/n}
        auto elem = [&](int idx) {
            return idx < n ? O2Element::rotation(idx, n) : O2Element::reflection(idx - n, n);
        };
        // closure of {A, R_{1/n}} has exactly these 2n elements
        for (int i = 0; i < 2 * n; ++i)
            for (int j = 0; j < 2 * n; ++j) {
                O2Element prod = o2_multiply(elem(i), elem(j));
                REQUIRE(prod == elem(d.mul(i, j)));
            }
    }
}
