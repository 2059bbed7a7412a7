#pragma once

#include <cstdlib>
#include <deque>
#include <vector>

#include "ecom/budget.hpp"
#include "ecom/errors.hpp"
#include "ecom/presentation.hpp"

namespace ecom {

/// Outcome of a coset enumeration over the trivial subgroup: either the
/// exact order of the presented group, or unknown (never a wrong answer).
struct ToddCoxeterResult {
    bool completed = false;
    long long order = 0;
    long long cosets_used = 0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        if (completed)
            j["order"] = order;
        else {
            j["order"] = "unknown";
            j["cosets_used"] = cosets_used;
        }
        return j;
    }
};

/// HLT-style Todd-Coxeter enumeration of the cosets of the trivial subgroup.
/// Relator scans fill gaps by defining new cosets; coincidences are merged
/// through a queue with a union-find over coset numbers.
inline ToddCoxeterResult todd_coxeter(const Presentation& pres, long long max_cosets = 1000000,
                                      const Budget& budget = {}) {
    if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
    const int g = pres.generator_count;
    const int cols = 2 * g;  // column 2i = generator i, 2i+1 = its inverse

    std::vector<std::vector<int>> tab;  // tab[coset][col], -1 undefined
    std::vector<int> parent;            // union-find; live iff parent[a] == a
    long long defined = 1;

    auto rep = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto col_of_letter = [](int l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; };
    auto inv_col = [](int c) { return c ^ 1; };

    tab.emplace_back(static_cast<std::size_t>(cols), -1);
    parent.push_back(0);

    auto define = [&](int a, int c) {
        int n = static_cast<int>(tab.size());
        tab.emplace_back(static_cast<std::size_t>(cols), -1);
        parent.push_back(n);
        tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = n;
        tab[static_cast<std::size_t>(n)][static_cast<std::size_t>(inv_col(c))] = a;
        ++defined;
        if (static_cast<long long>(tab.size()) * cols * 4 >
            budget.mem_mb * 1024LL * 1024LL)
            throw BudgetExceeded("Todd-Coxeter table (MB)",
                                 static_cast<long long>(tab.size()) * cols * 4 /
                                     (1024 * 1024));
        return n;
    };

    std::deque<int> dead_queue;

    auto merge = [&](int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        dead_queue.push_back(b);
    };

    // Redistribute the rows of dead cosets: undefine the reverse pointer of
    // each entry first, then re-register the transition at the live
    // representatives, queueing any clash as a further coincidence.
    auto coincidence = [&](int a, int b) {
        merge(a, b);
        while (!dead_queue.empty()) {
            int y = dead_queue.front();
            dead_queue.pop_front();
            for (int c = 0; c < cols; ++c) {
                int d = tab[static_cast<std::size_t>(y)][static_cast<std::size_t>(c)];
                if (d < 0) continue;
                tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_col(c))] = -1;
                int mu = rep(y), nu = rep(d);
                int fwd = tab[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)];
                if (fwd >= 0) {
                    merge(nu, fwd);
                } else {
                    int bwd =
                        tab[static_cast<std::size_t>(nu)][static_cast<std::size_t>(inv_col(c))];
                    if (bwd >= 0) {
                        merge(mu, bwd);
                    } else {
                        tab[static_cast<std::size_t>(mu)][static_cast<std::size_t>(c)] = nu;
                        tab[static_cast<std::size_t>(nu)][static_cast<std::size_t>(inv_col(c))] =
                            mu;
                    }
                }
            }
        }
    };

    // scan relator w at coset a, defining cosets to fill the gap
    auto scan_and_fill = [&](int a, const Word& w) {
        if (w.letters.empty()) return;
        int i = 0, j = w.length() - 1;
        int f = a, b = a;
        while (true) {
            while (i <= j) {
                int c = col_of_letter(w.letters[static_cast<std::size_t>(i)]);
                int nxt = tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)];
                if (nxt < 0) break;
                f = rep(nxt);
                ++i;
            }
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i) {
                int c = inv_col(col_of_letter(w.letters[static_cast<std::size_t>(j)]));
                int prv = tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
                if (prv < 0) break;
                b = rep(prv);
                --j;
            }
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (j == i) {  // deduction closes the gap
                int c = col_of_letter(w.letters[static_cast<std::size_t>(i)]);
                tab[static_cast<std::size_t>(f)][static_cast<std::size_t>(c)] = b;
                tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(inv_col(c))] = f;
                return;
            }
            int c = col_of_letter(w.letters[static_cast<std::size_t>(i)]);
            define(f, c);
        }
    };

    for (int a = 0; a < static_cast<int>(tab.size()); ++a) {
        if (rep(a) != a) continue;
        for (const auto& r : pres.relators) {
            if (static_cast<long long>(tab.size()) > max_cosets)
                return {false, 0, static_cast<long long>(tab.size())};
            scan_and_fill(a, r);
            if (rep(a) != a) break;  // a died in a coincidence
        }
        if (rep(a) != a) continue;
        for (int c = 0; c < cols; ++c) {
            if (static_cast<long long>(tab.size()) > max_cosets)
                return {false, 0, static_cast<long long>(tab.size())};
            if (tab[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] < 0) define(a, c);
        }
    }

    long long live = 0;
    for (int a = 0; a < static_cast<int>(tab.size()); ++a)
        if (rep(a) == a) ++live;
    return {true, live, defined};
}

}  // namespace ecom
