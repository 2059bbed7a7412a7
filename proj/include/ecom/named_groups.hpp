#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ecom/budget.hpp"
#include "ecom/errors.hpp"
#include "ecom/group.hpp"

namespace ecom {

namespace detail {

inline void check_order(long long n, const Budget& budget, const std::string& what) {
    if (n > budget.max_group_order) throw BudgetExceeded("group order (" + what + ")", n);
}

/// One-line permutation images; composition is (p*q)(x) = p(q(x)).
using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
        r[x] = p[static_cast<std::size_t>(q[x])];
    return r;
}

inline bool perm_is_even(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

inline std::string perm_cycle_label(const Perm& p) {
    std::string out;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

/// Group from a sorted, closed list of permutations (identity first).
inline FiniteGroup group_from_perm_list(std::vector<Perm> elems, std::string name) {
    std::sort(elems.begin(), elems.end());
    int n = static_cast<int>(elems.size());
    std::map<Perm, int> index;
    for (int i = 0; i < n; ++i) index[elems[static_cast<std::size_t>(i)]] = i;
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            table[static_cast<std::size_t>(i) * n + j] =
                index.at(perm_compose(elems[static_cast<std::size_t>(i)],
                                      elems[static_cast<std::size_t>(j)]));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& p : elems) labels.push_back(perm_cycle_label(p));
    return FiniteGroup(n, std::move(table), std::move(name), std::move(labels));
}

}  // namespace detail

inline FiniteGroup make_cyclic(int n, const Budget& budget = {}) {
    if (n < 1) throw SpecError("cyclic: order must be >= 1");
    detail::check_order(n, budget, "cyclic");
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    std::vector<std::string> labels{"e"};
    for (int i = 1; i < n; ++i) labels.push_back("g^" + std::to_string(i));
    return FiniteGroup(n, std::move(table), "cyclic(" + std::to_string(n) + ")",
                       std::move(labels));
}

/// Dihedral group of order 2n: indices 0..n-1 are the rotations r^i,
/// indices n..2n-1 are the reflections s r^{i-n}.
inline FiniteGroup make_dihedral(int n, const Budget& budget = {}) {
    if (n < 1) throw SpecError("dihedral: parameter must be >= 1");
    detail::check_order(2LL * n, budget, "dihedral");
    int m = 2 * n;
    std::vector<int> table(static_cast<std::size_t>(m) * m);
    auto idx = [n](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
    for (int i = 0; i < m; ++i) {
        bool ri = i >= n;
        int a = ri ? i - n : i;
        for (int j = 0; j < m; ++j) {
            bool rj = j >= n;
            int b = rj ? j - n : j;
            // (s^ri r^a)(s^rj r^b) = s^{ri xor rj} r^{b + (-1)^rj a}
            int k = rj ? b - a : b + a;
            table[static_cast<std::size_t>(i) * m + j] = idx(ri != rj, k);
        }
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "r^" + std::to_string(i));
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "s" : "s r^" + std::to_string(i));
    return FiniteGroup(m, std::move(table), "dihedral(" + std::to_string(n) + ")",
                       std::move(labels));
}

inline FiniteGroup make_symmetric(int n, const Budget& budget = {}) {
    if (n < 1) throw SpecError("symmetric: degree must be >= 1");
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    detail::check_order(order, budget, "symmetric");
    detail::Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<detail::Perm> elems;
    do {
        elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return detail::group_from_perm_list(std::move(elems),
                                        "symmetric(" + std::to_string(n) + ")");
}

inline FiniteGroup make_alternating(int n, const Budget& budget = {}) {
    if (n < 1) throw SpecError("alternating: degree must be >= 1");
    long long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (n >= 2) order /= 2;
    detail::check_order(order, budget, "alternating");
    detail::Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<detail::Perm> elems;
    do {
        if (detail::perm_is_even(p)) elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return detail::group_from_perm_list(std::move(elems),
                                        "alternating(" + std::to_string(n) + ")");
}

/// Generalized quaternion group of the given order 2^k, k >= 3:
/// x has order 2^{k-1}, y^2 = x^{2^{k-2}}, y^{-1} x y = x^{-1}.
/// Indices 0..2^{k-1}-1 are x^a, the rest are x^a y.
inline FiniteGroup make_quaternion(int order, const Budget& budget = {}) {
    if (order < 8 || (order & (order - 1)) != 0)
        throw SpecError("quaternion: order must be a power of two >= 8");
    detail::check_order(order, budget, "quaternion");
    int h = order / 2;  // order of x
    std::vector<int> table(static_cast<std::size_t>(order) * order);
    auto idx = [h](bool y, int a) { return (y ? h : 0) + ((a % h) + h) % h; };
    for (int i = 0; i < order; ++i) {
        bool yi = i >= h;
        int a = yi ? i - h : i;
        for (int j = 0; j < order; ++j) {
            bool yj = j >= h;
            int b = yj ? j - h : j;
            int k;
            if (!yi && !yj) k = a + b;       // x^a x^b
            else if (!yi && yj) k = a + b;   // x^a (x^b y)
            else if (yi && !yj) k = a - b;   // (x^a y) x^b = x^{a-b} y
            else k = a - b + h / 2;          // (x^a y)(x^b y) = x^{a-b} y^2
            table[static_cast<std::size_t>(i) * order + j] = idx(yi != yj, k);
        }
    }
    std::vector<std::string> labels;
    for (int a = 0; a < h; ++a) labels.push_back(a == 0 ? "e" : "x^" + std::to_string(a));
    for (int a = 0; a < h; ++a) labels.push_back(a == 0 ? "y" : "x^" + std::to_string(a) + " y");
    return FiniteGroup(order, std::move(table), "quaternion(" + std::to_string(order) + ")",
                       std::move(labels));
}

/// Direct product; element index of (a, b) is a*|H| + b, so the identity
/// pair lands at index 0.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                                  const Budget& budget = {}) {
    long long order = static_cast<long long>(G.order()) * H.order();
    detail::check_order(order, budget, "product");
    int n = static_cast<int>(order);
    int hn = H.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        int a1 = i / hn, b1 = i % hn;
        for (int j = 0; j < n; ++j) {
            int a2 = j / hn, b2 = j % hn;
            table[static_cast<std::size_t>(i) * n + j] = G.mul(a1, a2) * hn + H.mul(b1, b2);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        labels.push_back("(" + G.element_name(i / hn) + "," + H.element_name(i % hn) + ")");
    return FiniteGroup(n, std::move(table), G.name() + "x" + H.name(), std::move(labels),
                       n <= 512 ? FiniteGroup::AssocCheck::automatic
                                : FiniteGroup::AssocCheck::skip);
}

/// Central product G o H: quotient of G x H by the diagonal of the given
/// central involutions.  Representatives are the lexicographically smaller
/// member of each pair class.
inline FiniteGroup central_product(const FiniteGroup& G, const FiniteGroup& H, int zg,
                                   int zh, std::string name) {
    auto partner = [&](std::pair<int, int> p) {
        return std::pair<int, int>{G.mul(p.first, zg), H.mul(p.second, zh)};
    };
    std::vector<std::pair<int, int>> reps;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < H.order(); ++b) {
            std::pair<int, int> p{a, b};
            if (p <= partner(p)) reps.push_back(p);
        }
    std::sort(reps.begin(), reps.end());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        index[reps[static_cast<std::size_t>(i)]] = i;
        index[partner(reps[static_cast<std::size_t>(i)])] = i;
    }
    int n = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [a1, b1] = reps[static_cast<std::size_t>(i)];
            auto [a2, b2] = reps[static_cast<std::size_t>(j)];
            table[static_cast<std::size_t>(i) * n + j] =
                index.at({G.mul(a1, a2), H.mul(b1, b2)});
        }
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (const auto& [a, b] : reps)
        labels.push_back("(" + G.element_name(a) + "," + H.element_name(b) + ")");
    return FiniteGroup(n, std::move(table), std::move(name), std::move(labels));
}

/// The extraspecial groups of order 32, built as central products:
/// plus type D8 o D8, minus type D8 o Q8.
inline FiniteGroup make_extraspecial32(char type, const Budget& budget = {}) {
    detail::check_order(32, budget, "extraspecial32");
    FiniteGroup d8 = make_dihedral(4);
    auto central_involution = [](const FiniteGroup& G) {
        Subgroup z = center(G);
        for (int g : z.elements)
            if (g != 0) return g;
        throw SpecError("central product factor has trivial center");
    };
    if (type == '+')
        return central_product(d8, d8, central_involution(d8), central_involution(d8),
                               "extraspecial32(+)");
    if (type == '-') {
        FiniteGroup q8 = make_quaternion(8);
        return central_product(d8, q8, central_involution(d8), central_involution(q8),
                               "extraspecial32(-)");
    }
    throw SpecError("extraspecial32: parameter must be \"+\" or \"-\"");
}

/// Closure of a set of permutations of {0..degree-1}; elements sorted in
/// lexicographic one-line order, which puts the identity at index 0.
inline FiniteGroup group_from_permutations(int degree,
                                           const std::vector<detail::Perm>& generators,
                                           const Budget& budget = {}) {
    if (degree < 1) throw SpecError("permutations: degree must be >= 1");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != degree)
            throw SpecError("permutations: generator degree mismatch");
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        for (int v : g) {
            if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)])
                throw SpecError("permutations: generator is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    detail::Perm id(static_cast<std::size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    std::map<detail::Perm, int> seen;
    std::vector<detail::Perm> elems{id};
    seen[id] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : generators) {
            detail::Perm x = detail::perm_compose(elems[i], g);
            if (seen.emplace(x, static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(x));
                if (static_cast<long long>(elems.size()) > budget.max_group_order)
                    throw BudgetExceeded("group order (permutation closure)",
                                         static_cast<long long>(elems.size()));
            }
        }
    return detail::group_from_perm_list(std::move(elems),
                                        "permutations(deg " + std::to_string(degree) + ")");
}

inline FiniteGroup group_from_table(const std::vector<std::vector<int>>& rows,
                                    const Budget& budget = {}) {
    int n = static_cast<int>(rows.size());
    if (n == 0) throw SpecError("table: must have at least one row");
    detail::check_order(n, budget, "table");
    std::vector<int> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw SpecError("table: not square");
        table.insert(table.end(), row.begin(), row.end());
    }
    return FiniteGroup(n, std::move(table), "table(" + std::to_string(n) + ")");
}

}  // namespace ecom
