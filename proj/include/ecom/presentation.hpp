#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ecom/budget.hpp"
#include "ecom/complex.hpp"
#include "ecom/errors.hpp"
#include "ecom/snf.hpp"

namespace ecom {

/// Word in the free group: nonzero letters, +k is generator k-1, -k its
/// inverse.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }

    void free_reduce() {
        std::vector<int> out;
        out.reserve(letters.size());
        for (int l : letters) {
            if (!out.empty() && out.back() == -l)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters = std::move(out);
    }

    void cyclic_reduce() {
        free_reduce();
        std::size_t a = 0, b = letters.size();
        while (b - a >= 2 && letters[a] == -letters[b - 1]) {
            ++a;
            --b;
        }
        letters = std::vector<int>(letters.begin() + static_cast<long>(a),
                                   letters.begin() + static_cast<long>(b));
    }

    Word inverse() const {
        Word w;
        w.letters.reserve(letters.size());
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
        return w;
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
};

struct AbelianInvariants {
    long long rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const AbelianInvariants& o) const {
        return rank == o.rank && torsion == o.torsion;
    }

    std::string to_string() const {
        if (rank == 0 && torsion.empty()) return "0";
        std::string s;
        if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
        for (const auto& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.get_str();
        }
        return s;
    }
};

/// Finite presentation; generators may carry edge labels (u, v) recording
/// which 1-simplex they came from.
struct Presentation {
    int generator_count = 0;
    std::vector<Word> relators;
    std::vector<std::pair<int, int>> generator_labels;

    long long total_relator_length() const {
        long long n = 0;
        for (const auto& r : relators) n += r.length();
        return n;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["generators"] = generator_count;
        nlohmann::json labels = nlohmann::json::array();
        for (auto [u, v] : generator_labels) {
            if (u < 0)
                labels.push_back(nullptr);
            else
                labels.push_back(nlohmann::json::array({u, v}));
        }
        j["labels"] = labels;
        nlohmann::json rel = nlohmann::json::array();
        for (const auto& r : relators) rel.push_back(r.letters);
        j["relators"] = rel;
        return j;
    }
};

enum class SpanningTree {
    automatic,  // star at the base when the base is adjacent to everything
    star,
    bfs
};

/// Presentation of pi_1(|K|, base): one generator per edge outside a
/// spanning tree, one relator x_{u,v} x_{v,w} x_{u,w}^{-1} per triangle
/// {u < v < w}, with tree letters dropped.
inline Presentation pi1_presentation(const SimplicialComplex& K, int base = 0,
                                     SpanningTree strategy = SpanningTree::automatic,
                                     const Budget& budget = {}) {
    if (!K.is_connected()) throw std::invalid_argument("pi1_presentation: complex disconnected");
    if (base < 0 || base >= K.vertex_count())
        throw std::invalid_argument("pi1_presentation: base vertex out of range");
    int n = K.vertex_count();
    auto edges = K.k_simplices(1, budget);
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        edge_index[{edges[static_cast<std::size_t>(i)].vertices[0],
                    edges[static_cast<std::size_t>(i)].vertices[1]}] = i;

    // choose tree edges
    std::vector<char> in_tree(edges.size(), 0);
    bool star_ok = true;
    for (int v = 0; v < n && star_ok; ++v)
        if (v != base && !edge_index.count({std::min(base, v), std::max(base, v)}))
            star_ok = false;
    if (strategy == SpanningTree::star && !star_ok)
        throw std::invalid_argument("pi1_presentation: star tree needs a base adjacent to all");
    bool use_star = (strategy == SpanningTree::star) ||
                    (strategy == SpanningTree::automatic && star_ok);
    if (use_star) {
        for (int v = 0; v < n; ++v)
            if (v != base)
                in_tree[static_cast<std::size_t>(
                    edge_index.at({std::min(base, v), std::max(base, v)}))] = 1;
    } else {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (const auto& e : edges) {
            adj[static_cast<std::size_t>(e.vertices[0])].push_back(e.vertices[1]);
            adj[static_cast<std::size_t>(e.vertices[1])].push_back(e.vertices[0]);
        }
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{base};
        seen[static_cast<std::size_t>(base)] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int u = queue[i];
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    in_tree[static_cast<std::size_t>(
                        edge_index.at({std::min(u, v), std::max(u, v)}))] = 1;
                    queue.push_back(v);
                }
        }
    }

    Presentation p;
    std::vector<int> gen_of_edge(edges.size(), 0);  // 0 = tree, else 1-based gen
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!in_tree[i]) {
            gen_of_edge[i] = ++p.generator_count;
            p.generator_labels.emplace_back(edges[i].vertices[0], edges[i].vertices[1]);
        }
    for (const auto& t : K.k_simplices(2, budget)) {
        int u = t.vertices[0], v = t.vertices[1], w = t.vertices[2];
        int a = gen_of_edge[static_cast<std::size_t>(edge_index.at({u, v}))];
        int b = gen_of_edge[static_cast<std::size_t>(edge_index.at({v, w}))];
        int c = gen_of_edge[static_cast<std::size_t>(edge_index.at({u, w}))];
        Word r;
        if (a) r.letters.push_back(a);
        if (b) r.letters.push_back(b);
        if (c) r.letters.push_back(-c);
        r.free_reduce();
        if (r.length() > 0) p.relators.push_back(std::move(r));
    }
    return p;
}

namespace tietze_detail {

inline std::vector<int> canonical_cyclic(const Word& w) {
    if (w.letters.empty()) return {};
    auto min_rotation = [](const std::vector<int>& v) {
        std::vector<int> best = v;
        std::vector<int> cur = v;
        for (std::size_t i = 1; i < v.size(); ++i) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        return best;
    };
    std::vector<int> a = min_rotation(w.letters);
    std::vector<int> b = min_rotation(w.inverse().letters);
    return std::min(a, b);
}

}  // namespace tietze_detail

/// Deterministic presentation simplification: rounds of free/cyclic
/// reduction, removal of empty and duplicate relators, elimination of
/// generators with a defining word of length <= 2, and common-prefix
/// substitution between relators.  Stops at a fixed point or after
/// `max_rounds` rounds; the returned presentation never has more
/// generators or a larger total relator length than the input.
inline Presentation tietze_simplify(Presentation p, int max_rounds = 200) {
    auto snapshot_key = [](const Presentation& q) {
        return std::pair<long long, long long>(q.generator_count, q.total_relator_length());
    };
    const long long input_length = p.total_relator_length();
    Presentation best = p;
    auto best_key = snapshot_key(best);
    // Only states whose total length does not exceed the input's are
    // admissible outputs; intermediate states may grow while collapsing.
    auto consider = [&](const Presentation& q) {
        auto key = snapshot_key(q);
        if (key.second <= input_length && key < best_key) {
            best = q;
            best_key = key;
        }
    };

    auto normalize = [](Presentation& q) {
        std::vector<std::pair<std::vector<int>, Word>> keyed;
        keyed.reserve(q.relators.size());
        for (auto& r : q.relators) {
            r.cyclic_reduce();
            if (r.length() == 0) continue;
            keyed.emplace_back(tietze_detail::canonical_cyclic(r), std::move(r));
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Word> out;
        out.reserve(keyed.size());
        for (std::size_t i = 0; i < keyed.size(); ++i)
            if (i == 0 || keyed[i].first != keyed[i - 1].first)
                out.push_back(std::move(keyed[i].second));
        q.relators = std::move(out);
    };

    auto substitute = [](Presentation& q, int gen, const Word& def) {
        // replace every occurrence of generator `gen` (1-based) by def
        for (auto& r : q.relators) {
            std::vector<int> out;
            out.reserve(r.letters.size() * 2);
            for (int l : r.letters) {
                if (l == gen)
                    out.insert(out.end(), def.letters.begin(), def.letters.end());
                else if (l == -gen) {
                    Word inv = def.inverse();
                    out.insert(out.end(), inv.letters.begin(), inv.letters.end());
                } else {
                    out.push_back(l);
                }
            }
            r.letters = std::move(out);
            r.free_reduce();
        }
        // renumber letters above `gen` down by one
        for (auto& r : q.relators)
            for (int& l : r.letters) {
                if (l > gen) --l;
                if (l < -gen) ++l;
            }
        q.generator_labels.erase(q.generator_labels.begin() + (gen - 1));
        --q.generator_count;
    };

    for (int round = 0; round < max_rounds; ++round) {
        auto before = snapshot_key(p);
        bool before_changed = false;
        normalize(p);

        // generator eliminations, best candidate (smallest growth) first
        while (true) {
            std::vector<long long> occurrences(static_cast<std::size_t>(p.generator_count) + 1,
                                               0);
            for (const auto& r : p.relators)
                for (int l : r.letters) ++occurrences[static_cast<std::size_t>(std::abs(l))];
            int pick_rel = -1, pick_gen = 0;
            long long pick_delta = 0;
            Word pick_def;
            for (int ri = 0; ri < static_cast<int>(p.relators.size()); ++ri) {
                const Word& r = p.relators[static_cast<std::size_t>(ri)];
                if (r.length() == 0 || r.length() > 3) continue;
                for (int pos = 0; pos < r.length(); ++pos) {
                    int g = std::abs(r.letters[static_cast<std::size_t>(pos)]);
                    int occurrences_here = 0;
                    for (int l : r.letters)
                        if (std::abs(l) == g) ++occurrences_here;
                    if (occurrences_here != 1) continue;
                    long long m = occurrences[static_cast<std::size_t>(g)] - 1;
                    // r = a g^e b = 1  =>  g^e = a^{-1} b^{-1}
                    Word a, b;
                    a.letters.assign(r.letters.begin(), r.letters.begin() + pos);
                    b.letters.assign(r.letters.begin() + pos + 1, r.letters.end());
                    Word def;
                    Word ai = a.inverse(), bi = b.inverse();
                    def.letters = ai.letters;
                    def.letters.insert(def.letters.end(), bi.letters.begin(),
                                       bi.letters.end());
                    if (r.letters[static_cast<std::size_t>(pos)] < 0) def = def.inverse();
                    def.free_reduce();
                    long long delta = m * (def.length() - 1) - r.length();
                    if (pick_rel < 0 || delta < pick_delta ||
                        (delta == pick_delta && g < pick_gen)) {
                        pick_rel = ri;
                        pick_gen = g;
                        pick_delta = delta;
                        pick_def = def;
                    }
                }
            }
            if (pick_rel < 0) break;
            p.relators.erase(p.relators.begin() + pick_rel);
            substitute(p, pick_gen, pick_def);
            for (std::size_t ri = 0; ri < p.relators.size();) {
                p.relators[ri].cyclic_reduce();
                if (p.relators[ri].length() == 0)
                    p.relators.erase(p.relators.begin() + static_cast<long>(ri));
                else
                    ++ri;
            }
            consider(p);
            before_changed = true;
        }
        normalize(p);

        // common-prefix substitution: if r = p s and r' = p t with
        // 2|p| > |r|, then r' may be replaced by s^{-1} t.
        std::sort(p.relators.begin(), p.relators.end(),
                  [](const Word& x, const Word& y) {
                      if (x.length() != y.length()) return x.length() < y.length();
                      return x.letters < y.letters;
                  });
        for (std::size_t i = 0; i < p.relators.size(); ++i)
            for (std::size_t j = 0; j < p.relators.size(); ++j) {
                if (i == j) continue;
                const Word& r = p.relators[i];
                Word& rp = p.relators[j];
                if (r.length() == 0 || r.length() > rp.length()) continue;
                for (const Word& variant : {r, r.inverse()}) {
                    int common = 0;
                    while (common < variant.length() && common < rp.length() &&
                           variant.letters[static_cast<std::size_t>(common)] ==
                               rp.letters[static_cast<std::size_t>(common)])
                        ++common;
                    if (2 * common <= variant.length()) continue;
                    // variant = p s (=1), rp = p t  =>  rp ~ s^{-1} t
                    Word s, t;
                    s.letters.assign(variant.letters.begin() + common, variant.letters.end());
                    t.letters.assign(rp.letters.begin() + common, rp.letters.end());
                    Word si = s.inverse();
                    Word next;
                    next.letters = si.letters;
                    next.letters.insert(next.letters.end(), t.letters.begin(),
                                        t.letters.end());
                    next.free_reduce();
                    if (next.length() < rp.length()) {
                        rp = next;
                        before_changed = true;
                        break;
                    }
                }
            }
        normalize(p);

        consider(p);
        if (!before_changed && snapshot_key(p) == before) break;
    }
    return best;
}

/// Smith normal form of the relator exponent matrix: free rank plus the
/// invariant factors > 1.
inline AbelianInvariants abelian_invariants(const Presentation& p, const Budget& budget = {}) {
    IntegerMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
    for (int i = 0; i < static_cast<int>(p.relators.size()); ++i)
        for (int l : p.relators[static_cast<std::size_t>(i)].letters)
            m.add(i, std::abs(l) - 1, l > 0 ? 1 : -1);
    SmithNormalFormResult s = smith_normal_form(m, budget);
    AbelianInvariants out;
    out.rank = p.generator_count - s.rank;
    out.torsion = s.nontrivial_factors();
    return out;
}

/// A surjection from the presented group onto Z/2, as a 0/1 vector over the
/// generators (relations hold mod 2), when one exists: any nonzero vector in
/// the null space of the exponent matrix over GF(2).
inline std::optional<std::vector<int>> mod2_homomorphism(const Presentation& p) {
    int g = p.generator_count;
    if (g == 0) return std::nullopt;
    // rows of the GF(2) system, one per relator
    std::vector<std::vector<std::uint64_t>> rows;
    std::size_t words = static_cast<std::size_t>((g + 63) / 64);
    for (const auto& r : p.relators) {
        std::vector<std::uint64_t> row(words, 0);
        for (int l : r.letters) {
            int idx = std::abs(l) - 1;
            row[static_cast<std::size_t>(idx) / 64] ^= std::uint64_t{1} << (idx % 64);
        }
        rows.push_back(std::move(row));
    }
    // eliminate; track pivot columns
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < g && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() &&
               !((rows[sel][static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1))
            ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i][static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1))
                for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
        pivot_col.push_back(c);
        ++rank;
    }
    // free column with the lowest index gives a deterministic solution
    std::vector<char> is_pivot(static_cast<std::size_t>(g), 0);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
    int free_col = -1;
    for (int c = 0; c < g; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;
    std::vector<int> x(static_cast<std::size_t>(g), 0);
    x[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        // pivot row i: x[pivot] = sum of free entries in that row
        int val = (rows[i][static_cast<std::size_t>(free_col) / 64] >> (free_col % 64)) & 1;
        x[static_cast<std::size_t>(pivot_col[i])] = val;
    }
    return x;
}

}  // namespace ecom
