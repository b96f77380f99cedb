#include "diagrams.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace diagrams {

namespace {

// Key codes: values below kCodeBase are leg colors, kCodeBase + w is an edge
// to the vertex with canonical id w.
constexpr int kCodeBase = 64;

void append_disjoint(Graph& g, const Graph& add) {
    int off = g.n;
    for (int v = 0; v < add.n; ++v) g.add_vertex();
    for (int h = 0; h < 3 * add.n; ++h) {
        g.mate[3 * off + h] = add.mate[h] < 0 ? -1 : add.mate[h] + 3 * off;
        g.leg[3 * off + h] = add.leg[h];
    }
}

struct CompCanon {
    std::vector<int> key;
    int sign = 1;
    bool zero = false;
};

// Parity bookkeeping for one vertex order: sorts each vertex's three items
// into canonical position and multiplies the slot-permutation parities.
// Parallel edges are tie-broken by current slot at the earlier endpoint and
// by the mate's assigned position at the later endpoint, which keeps the two
// ends consistent (a wholesale swap of two parallel edges is even).
int iso_sign(const Graph& g, const std::vector<int>& vs, const std::vector<int>& newid,
             std::vector<int>& target_pos) {
    int sign = 1;
    for (int w = 0; w < g.n; ++w) {
        int v = vs[w];
        std::array<std::array<int, 3>, 3> items;
        for (int s = 0; s < 3; ++s) {
            int h = 3 * v + s;
            int code, tie;
            if (g.mate[h] < 0) {
                code = g.leg[h];
                tie = s;
            } else {
                int u = g.mate[h] / 3;
                code = kCodeBase + newid[u];
                tie = (newid[u] >= w) ? s : target_pos[g.mate[h]];
            }
            items[s] = {code, tie, s};
        }
        std::array<std::array<int, 3>, 3> sorted = items;
        std::sort(sorted.begin(), sorted.end());
        int perm[3];
        for (int j = 0; j < 3; ++j) {
            perm[j] = sorted[j][2];
            target_pos[3 * v + sorted[j][2]] = j;
        }
        int inversions =
            (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
        if (inversions & 1) sign = -sign;
    }
    return sign;
}

// Canonical form of one connected graph: minimize the per-vertex sorted code
// sequence over all vertex orders; a class reachable with both signs is zero.
CompCanon canonical_component(const Graph& g) {
    CompCanon out;
    int m = g.n;
    for (int v = 0; v < m; ++v) {
        int cols[3];
        int nc = 0;
        for (int s = 0; s < 3; ++s) {
            int h = 3 * v + s;
            if (g.mate[h] >= 0 && g.mate[h] / 3 == v) out.zero = true;
            if (g.mate[h] < 0) cols[nc++] = g.leg[h];
        }
        for (int i = 0; i < nc; ++i)
            for (int j = i + 1; j < nc; ++j)
                if (cols[i] == cols[j]) out.zero = true;
    }

    std::vector<int> vs(m), newid(m), target_pos(3 * m);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<int> best, key;
    key.reserve(3 * m);
    int best_sign = 0;
    bool ambiguous = false;
    do {
        for (int w = 0; w < m; ++w) newid[vs[w]] = w;
        key.clear();
        for (int w = 0; w < m; ++w) {
            int v = vs[w];
            std::array<int, 3> codes;
            for (int s = 0; s < 3; ++s) {
                int h = 3 * v + s;
                codes[s] = g.mate[h] < 0 ? g.leg[h] : kCodeBase + newid[g.mate[h] / 3];
            }
            std::sort(codes.begin(), codes.end());
            key.insert(key.end(), codes.begin(), codes.end());
        }
        if (best.empty() || key < best) {
            best = key;
            best_sign = iso_sign(g, vs, newid, target_pos);
            ambiguous = false;
        } else if (key == best) {
            if (iso_sign(g, vs, newid, target_pos) != best_sign) ambiguous = true;
        }
    } while (std::next_permutation(vs.begin(), vs.end()));

    out.key = std::move(best);
    out.sign = best_sign;
    if (ambiguous) out.zero = true;
    return out;
}

}  // namespace

Graph theta() {
    // Wired exactly as the self-gluing of a two-wheel, so that closing a
    // two-wheel produces this orientation with sign +1.
    Graph g;
    g.add_vertex();
    g.add_vertex();
    g.connect(0, 0, 1, 0);
    g.connect(0, 1, 1, 2);
    g.connect(0, 2, 1, 1);
    return g;
}

Graph wheel(int spokes, int color) {
    Graph g;
    for (int i = 0; i < spokes; ++i) g.add_vertex();
    for (int i = 0; i < spokes; ++i) {
        g.set_leg(i, 0, color);
        g.connect(i, 2, (i + 1) % spokes, 1);
    }
    return g;
}

Graph theta_bubble() {
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.connect(0, 0, 1, 0);
    g.connect(0, 1, 1, 1);
    g.connect(0, 2, 3, 2);
    g.connect(1, 2, 2, 0);
    g.connect(2, 1, 3, 0);
    g.connect(2, 2, 3, 1);
    return g;
}

Graph two_leg_theta(int color) {
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.connect(0, 0, 1, 0);
    g.connect(0, 1, 1, 1);
    g.connect(0, 2, 2, 0);
    g.connect(2, 1, 3, 0);
    g.connect(3, 2, 1, 2);
    g.set_leg(2, 2, color);
    g.set_leg(3, 1, color);
    return g;
}

Graph tetrahedron() {
    Graph g;
    for (int i = 0; i < 4; ++i) g.add_vertex();
    g.connect(0, 0, 1, 0);
    g.connect(0, 1, 2, 0);
    g.connect(0, 2, 3, 0);
    g.connect(1, 1, 2, 1);
    g.connect(1, 2, 3, 1);
    g.connect(2, 2, 3, 2);
    return g;
}

Canonical canonicalize(const Graph& g) {
    Canonical out;
    // Split into connected components.
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int v0 = 0; v0 < g.n; ++v0) {
        if (comp[v0] >= 0) continue;
        std::vector<int> stack{v0};
        comp[v0] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 3; ++s) {
                int h = g.mate[3 * v + s];
                if (h < 0) continue;
                int u = h / 3;
                if (comp[u] < 0) {
                    comp[u] = ncomp;
                    stack.push_back(u);
                }
            }
        }
        ++ncomp;
    }

    for (int c = 0; c < ncomp; ++c) {
        Graph sub;
        std::vector<int> local(g.n, -1);
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == c) local[v] = sub.add_vertex();
        for (int v = 0; v < g.n; ++v) {
            if (comp[v] != c) continue;
            for (int s = 0; s < 3; ++s) {
                int h = 3 * v + s;
                if (g.mate[h] < 0) {
                    sub.leg[3 * local[v] + s] = g.leg[h];
                } else {
                    sub.mate[3 * local[v] + s] =
                        3 * local[g.mate[h] / 3] + (g.mate[h] % 3);
                }
            }
        }
        CompCanon cc = canonical_component(sub);
        if (cc.zero) {
            out.zero = true;
            out.sign = 0;
            out.component_keys.clear();
            return out;
        }
        out.sign *= cc.sign;
        out.component_keys.push_back(std::move(cc.key));
    }
    std::sort(out.component_keys.begin(), out.component_keys.end());
    return out;
}

Graph graph_from_key(const std::vector<int>& key) {
    int m = (int)key.size() / 3;
    Graph g;
    for (int v = 0; v < m; ++v) g.add_vertex();
    std::map<std::pair<int, int>, std::deque<int>> pending;  // (from,to) -> half-edges
    for (int w = 0; w < m; ++w) {
        for (int j = 0; j < 3; ++j) {
            int h = 3 * w + j;
            int code = key[h];
            if (code < kCodeBase) {
                g.leg[h] = code;
            } else {
                int w2 = code - kCodeBase;
                if (w2 > w) {
                    pending[{w, w2}].push_back(h);
                } else {
                    auto& q = pending[{w2, w}];
                    assert(!q.empty());
                    int h2 = q.front();
                    q.pop_front();
                    g.mate[h] = h2;
                    g.mate[h2] = h;
                }
            }
        }
    }
    return g;
}

void Element::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    if (basis_ == nullptr) basis_ = o.basis_;
    if (o.basis_ != nullptr && o.basis_ != basis_)
        throw std::logic_error("Element: mixing different spaces");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (basis_ == nullptr) basis_ = o.basis_;
    if (o.basis_ != nullptr && o.basis_ != basis_)
        throw std::logic_error("Element: mixing different spaces");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, const Rat& c) { return a *= c; }

int SpaceBasis::class_id(const std::vector<int>& key) const {
    auto it = id_by_key_.find(key);
    return it == id_by_key_.end() ? -1 : it->second;
}

int SpaceBasis::monomial_degree(const Monomial& m) const {
    int d = 0;
    for (int id : m) d += classes_[id].degree;
    return d;
}

std::string SpaceBasis::monomial_name(const Monomial& m) const {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size();) {
        size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!out.empty()) out += "*";
        out += classes_[m[i]].name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<long> SpaceBasis::graded_dimensions() const {
    std::vector<long> dp(cap_ + 1, 0);
    dp[0] = 1;
    for (int id : basis_ids_) {
        int d = classes_[id].degree;
        for (int t = d; t <= cap_; ++t) dp[t] += dp[t - d];
    }
    return dp;
}

namespace {

// All connected multigraphs on m labeled vertices, max degree 3, no self
// loops; unused slots are legs to be colored later.
void enumerate_connected_multigraphs(int m, const std::function<void(const Graph&)>& cb) {
    if (m == 1) {
        Graph g;
        g.add_vertex();
        cb(g);
        return;
    }
    std::vector<std::pair<int, int>> prs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) prs.push_back({i, j});
    std::vector<int> mult(prs.size(), 0), deg(m, 0);

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == prs.size()) {
            // Connectivity check.
            std::vector<int> root(m);
            std::iota(root.begin(), root.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (root[x] != x) x = root[x] = root[root[x]];
                return x;
            };
            for (size_t t = 0; t < prs.size(); ++t)
                if (mult[t] > 0) root[find(prs[t].first)] = find(prs[t].second);
            for (int v = 0; v < m; ++v)
                if (find(v) != find(0)) return;
            // Materialize.
            Graph g;
            for (int v = 0; v < m; ++v) g.add_vertex();
            std::vector<int> next(m, 0);
            for (size_t t = 0; t < prs.size(); ++t) {
                auto [i, j] = prs[t];
                for (int e = 0; e < mult[t]; ++e) {
                    g.connect(i, next[i]++, j, next[j]++);
                }
            }
            cb(g);
            return;
        }
        auto [i, j] = prs[idx];
        int hi = std::min(3 - deg[i], 3 - deg[j]);
        for (int t = 0; t <= hi; ++t) {
            mult[idx] = t;
            deg[i] += t;
            deg[j] += t;
            rec(idx + 1);
            deg[i] -= t;
            deg[j] -= t;
        }
        mult[idx] = 0;
    };
    rec(0);
}

// Ascending k-subsets of {0..n-1}.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& cb) {
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            cb(pick);
            return;
        }
        for (int c = start; c < n; ++c) {
            pick[depth] = c;
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

SpaceBasis SpaceBasis::build(int ncolors, int cap) {
    if (cap < 0 || cap > 6)
        throw exact::ValidationError("SpaceBasis: cap must be between 0 and 6");
    if (ncolors < 0 || ncolors >= kCodeBase)
        throw exact::ValidationError("SpaceBasis: bad color count");

    SpaceBasis b;
    b.ncolors_ = ncolors;
    b.cap_ = cap;

    // Enumerate nonzero connected classes, degree by degree.
    for (int m = 1; m <= cap; ++m) {
        // Dedupe bare multigraphs by their mono-colored canonical key.
        std::map<std::vector<int>, Graph> bare;
        enumerate_connected_multigraphs(m, [&](const Graph& g) {
            Graph mono = g;
            for (int h = 0; h < 3 * m; ++h)
                if (mono.mate[h] < 0) mono.leg[h] = 0;
            CompCanon cc = canonical_component(mono);
            bare.emplace(cc.key, g);
        });

        for (const auto& [bkey, bg] : bare) {
            (void)bkey;
            // Leg slots per vertex.
            std::vector<std::vector<int>> slots(m);
            bool too_many_legs = false;
            for (int v = 0; v < m; ++v) {
                for (int s = 0; s < 3; ++s)
                    if (bg.mate[3 * v + s] < 0) slots[v].push_back(3 * v + s);
                if ((int)slots[v].size() > ncolors) too_many_legs = true;
            }
            if (too_many_legs) continue;  // a repeated color would be zero anyway

            // All ways to give each vertex's legs distinct ascending colors.
            std::vector<std::vector<std::vector<int>>> per_vertex(m);
            for (int v = 0; v < m; ++v)
                for_each_combination(ncolors, (int)slots[v].size(),
                                     [&](const std::vector<int>& pick) {
                                         per_vertex[v].push_back(pick);
                                     });

            std::vector<size_t> choice(m, 0);
            while (true) {
                Graph g = bg;
                for (int v = 0; v < m; ++v)
                    for (size_t i = 0; i < slots[v].size(); ++i)
                        g.leg[slots[v][i]] = per_vertex[v][choice[v]][i];
                CompCanon cc = canonical_component(g);
                if (!cc.zero && b.id_by_key_.find(cc.key) == b.id_by_key_.end()) {
                    ConnectedClass cls;
                    cls.key = cc.key;
                    cls.rep = graph_from_key(cc.key);
                    cls.degree = m;
                    cls.leg_count.assign(ncolors, 0);
                    for (int h = 0; h < 3 * m; ++h)
                        if (cls.rep.mate[h] < 0) ++cls.leg_count[cls.rep.leg[h]];
                    int id = (int)b.classes_.size();
                    b.id_by_key_[cls.key] = id;
                    b.classes_.push_back(std::move(cls));
                }
                // Advance the mixed-radix choice vector.
                int v = 0;
                while (v < m && ++choice[v] == per_vertex[v].size()) choice[v++] = 0;
                if (v == m) break;
            }
        }
    }

    // Names for the well-known representatives; also drives the preferred
    // (kept-last, hence basis) column order inside each block.
    struct Named {
        std::string name;
        int pref;  // preference rank; -1 for non-preferred
    };
    std::map<std::vector<int>, Named> named;
    auto name_one = [&](const Graph& g, const std::string& nm, int pref) {
        CompCanon cc = canonical_component(g);
        if (!cc.zero) named[cc.key] = {nm, pref};
    };
    int pref = 0;
    if (cap >= 2) name_one(theta(), "theta", pref++);
    for (int c = 0; c < ncolors; ++c)
        if (cap >= 2) name_one(wheel(2, c), "w2[" + std::to_string(c) + "]", pref++);
    if (cap >= 4) name_one(theta_bubble(), "theta2", pref++);
    for (int c = 0; c < ncolors; ++c)
        if (cap >= 4) name_one(two_leg_theta(c), "t1[" + std::to_string(c) + "]", pref++);
    for (int c = 0; c < ncolors; ++c)
        if (cap >= 4) name_one(wheel(4, c), "w4[" + std::to_string(c) + "]", pref++);
    for (int c = 0; c < ncolors; ++c)
        if (cap >= 6) name_one(wheel(6, c), "w6[" + std::to_string(c) + "]", pref++);
    if (cap >= 4) name_one(tetrahedron(), "tet", -1);

    std::vector<int> pref_rank(b.classes_.size(), -1);
    for (size_t id = 0; id < b.classes_.size(); ++id) {
        auto it = named.find(b.classes_[id].key);
        if (it != named.end()) {
            b.classes_[id].name = it->second.name;
            pref_rank[id] = it->second.pref;
        } else {
            b.classes_[id].name = "g" + std::to_string(id);
        }
    }

    // IHX rows, grouped by (degree, leg colors) block.
    std::map<std::pair<int, std::vector<int>>, std::set<std::vector<std::pair<int, Rat>>>>
        block_rows;
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> block_classes;
    for (size_t id = 0; id < b.classes_.size(); ++id) {
        const ConnectedClass& cls = b.classes_[id];
        block_classes[{cls.degree, cls.leg_count}].push_back((int)id);
    }

    for (size_t id = 0; id < b.classes_.size(); ++id) {
        const ConnectedClass& cls = b.classes_[id];
        const Graph& g = cls.rep;
        for (int h1 = 0; h1 < 3 * g.n; ++h1) {
            int h2 = g.mate[h1];
            if (h2 < h1) continue;  // covers legs (-1) and each edge once
            int u = h1 / 3, v = h2 / 3;
            assert(u != v);
            int pa = 3 * u + (h1 % 3 + 1) % 3, pb = 3 * u + (h1 % 3 + 2) % 3;
            int pc = 3 * v + (h2 % 3 + 1) % 3, pd = 3 * v + (h2 % 3 + 2) % 3;

            // Re-seat the four attachment slots: with the edge slots fixed,
            // cyclic orders (a,b,.) (.,c,d) satisfy
            //   [a,b;c,d] + [b,c;a,d] + [c,a;b,d] = 0.
            auto rewire = [&](int na, int nb, int nc, int nd) {
                // content of slot pa moves to slot na, etc.
                int dst[4] = {na, nb, nc, nd};
                int src[4] = {pa, pb, pc, pd};
                Graph t = g;
                struct Item {
                    bool is_leg;
                    int color;
                    int mate;  // -1, external half-edge, or 0..3 for internal
                };
                Item it[4];
                for (int i = 0; i < 4; ++i) {
                    if (g.mate[src[i]] < 0) {
                        it[i] = {true, g.leg[src[i]], -1};
                    } else {
                        int mt = g.mate[src[i]];
                        int internal = -1;
                        for (int j = 0; j < 4; ++j)
                            if (src[j] == mt) internal = j;
                        it[i] = {false, -1, internal >= 0 ? ~internal : mt};
                    }
                }
                for (int i = 0; i < 4; ++i) {
                    t.mate[dst[i]] = -1;
                    t.leg[dst[i]] = -1;
                }
                for (int i = 0; i < 4; ++i) {
                    if (it[i].is_leg) {
                        t.leg[dst[i]] = it[i].color;
                    } else if (it[i].mate >= 0) {
                        t.mate[dst[i]] = it[i].mate;
                        t.mate[it[i].mate] = dst[i];
                    } else {
                        int j = ~it[i].mate;
                        if (j > i) continue;  // the pair is wired once, at the larger index
                        t.mate[dst[i]] = dst[j];
                        t.mate[dst[j]] = dst[i];
                    }
                }
                return t;
            };

            // Term 1 is g itself; terms 2 and 3 re-seat the four contents.
            Graph t2 = rewire(pc, pa, pb, pd);  // u = (b,c,.), v = (.,a,d)
            Graph t3 = rewire(pb, pc, pa, pd);  // u = (c,a,.), v = (.,b,d)

            std::map<int, Rat> row;
            row[(int)id] += 1;
            for (const Graph* t : {&t2, &t3}) {
                CompCanon cc = canonical_component(*t);
                if (cc.zero) continue;
                auto found = b.id_by_key_.find(cc.key);
                assert(found != b.id_by_key_.end());
                row[found->second] += cc.sign;
            }
            std::vector<std::pair<int, Rat>> rowv;
            for (const auto& [cid, coef] : row)
                if (coef != 0) rowv.push_back({cid, coef});
            if (!rowv.empty())
                block_rows[{cls.degree, cls.leg_count}].insert(std::move(rowv));
        }
    }

    // Exact row reduction per block; preferred classes sit in the last
    // columns so they survive as basis classes whenever possible.
    b.reductions_.assign(b.classes_.size(), {});
    b.is_basis_.assign(b.classes_.size(), 0);
    for (auto& [bkey, ids] : block_classes) {
        std::vector<int> cols = ids;
        std::sort(cols.begin(), cols.end(), [&](int x, int y) {
            bool px = pref_rank[x] >= 0, py = pref_rank[y] >= 0;
            if (px != py) return py;  // non-preferred first
            if (px && py) return pref_rank[x] < pref_rank[y];
            return b.classes_[x].key < b.classes_[y].key;
        });
        std::map<int, int> col_of;
        for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = (int)i;

        std::vector<std::vector<Rat>> mat;
        auto rows_it = block_rows.find(bkey);
        if (rows_it != block_rows.end()) {
            for (const auto& rowv : rows_it->second) {
                std::vector<Rat> dense(cols.size(), Rat(0));
                for (const auto& [cid, coef] : rowv) dense[col_of[cid]] = coef;
                mat.push_back(std::move(dense));
            }
        }

        size_t rank = 0;
        std::vector<int> pivot_col;
        for (size_t c = 0; c < cols.size() && rank < mat.size(); ++c) {
            size_t piv = rank;
            while (piv < mat.size() && mat[piv][c] == 0) ++piv;
            if (piv == mat.size()) continue;
            std::swap(mat[piv], mat[rank]);
            Rat d = mat[rank][c];
            for (size_t j = c; j < cols.size(); ++j) mat[rank][j] /= d;
            for (size_t r = 0; r < mat.size(); ++r) {
                if (r == rank || mat[r][c] == 0) continue;
                Rat f = mat[r][c];
                for (size_t j = c; j < cols.size(); ++j) mat[r][j] -= f * mat[rank][j];
            }
            pivot_col.push_back((int)c);
            ++rank;
        }

        std::vector<char> pivot(cols.size(), 0);
        for (int c : pivot_col) pivot[c] = 1;
        for (size_t r = 0; r < rank; ++r) {
            int cid = cols[pivot_col[r]];
            std::vector<std::pair<int, Rat>> red;
            for (size_t j = 0; j < cols.size(); ++j) {
                if (pivot[j] || mat[r][j] == 0) continue;
                red.push_back({cols[j], -mat[r][j]});
            }
            b.reductions_[cid] = std::move(red);
        }
        for (size_t j = 0; j < cols.size(); ++j) {
            if (pivot[j]) continue;
            b.is_basis_[cols[j]] = 1;
            b.reductions_[cols[j]] = {{cols[j], Rat(1)}};
        }
    }

    for (size_t id = 0; id < b.classes_.size(); ++id)
        if (b.is_basis_[id]) b.basis_ids_.push_back((int)id);
    return b;
}

Element reduce(const Graph& g, const SpaceBasis& b) {
    Element out(&b);
    if (g.n > b.cap()) return out;
    Canonical canon = canonicalize(g);
    if (canon.zero) return out;

    std::map<Monomial, Rat> acc;
    acc[{}] = Rat(canon.sign);
    for (const auto& key : canon.component_keys) {
        int id = b.class_id(key);
        if (id < 0)
            throw std::logic_error("reduce: missing connected class (enumeration gap)");
        const auto& red = b.reduction(id);
        std::map<Monomial, Rat> next;
        for (const auto& [mono, c] : acc) {
            for (const auto& [bid, r] : red) {
                Monomial m2 = mono;
                m2.insert(std::upper_bound(m2.begin(), m2.end(), bid), bid);
                next[m2] += c * r;
            }
        }
        acc = std::move(next);
    }
    for (const auto& [m, c] : acc) out.add_term(m, c);
    return out;
}

Element unit(const SpaceBasis& b) {
    Element e(&b);
    e.add_term({}, Rat(1));
    return e;
}

Element theta_element(const SpaceBasis& b) { return reduce(theta(), b); }
Element theta_bubble_element(const SpaceBasis& b) { return reduce(theta_bubble(), b); }
Element wheel_element(const SpaceBasis& b, int spokes, int color) {
    return reduce(wheel(spokes, color), b);
}
Element two_leg_theta_element(const SpaceBasis& b, int color) {
    return reduce(two_leg_theta(color), b);
}
Element tetrahedron_element(const SpaceBasis& b) { return reduce(tetrahedron(), b); }

Rat coefficient_of(const Element& z, const Element& e) {
    if (e.terms().size() != 1)
        throw std::logic_error("coefficient_of: reference element is not a single monomial");
    const auto& [mono, c] = *e.terms().begin();
    return z.coefficient(mono) / c;
}

Element product(const Element& x, const Element& y) {
    const SpaceBasis* b = x.basis() ? x.basis() : y.basis();
    Element out(b);
    if (!b) return out;
    int cap = b->cap();
    for (const auto& [mx, cx] : x.terms()) {
        int dx = b->monomial_degree(mx);
        for (const auto& [my, cy] : y.terms()) {
            if (dx + b->monomial_degree(my) > cap) continue;
            Monomial m;
            m.reserve(mx.size() + my.size());
            std::merge(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(m));
            out.add_term(m, cx * cy);
        }
    }
    return out;
}

Element exp_element(const Element& x) {
    const SpaceBasis* b = x.basis();
    if (!b) throw std::logic_error("exp_element: element without basis");
    if (x.coefficient({}) != 0)
        throw exact::ValidationError("exp_element: constant term must vanish");
    Element acc = unit(*b);
    Element term = unit(*b);
    for (int k = 1; k <= b->cap() + 1; ++k) {
        term = product(term, x);
        term *= Rat(1, k);
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

Element inverse_element(const Element& x) {
    const SpaceBasis* b = x.basis();
    if (!b) throw std::logic_error("inverse_element: element without basis");
    Rat c0 = x.coefficient({});
    if (c0 == 0)
        throw exact::ValidationError("inverse_element: constant term must be nonzero");
    Element u = x * (Rat(1) / c0);
    u -= unit(*b);
    Element acc = unit(*b);
    Element pw = unit(*b);
    for (int k = 1; k <= b->cap() + 1; ++k) {
        pw = product(pw, u);
        if (pw.is_zero()) break;
        acc += pw * Rat((k % 2) ? -1 : 1);
    }
    return acc * (Rat(1) / c0);
}

namespace {

Graph monomial_graph(const SpaceBasis& b, const Monomial& m) {
    Graph g;
    for (int id : m) append_disjoint(g, b.classes()[id].rep);
    return g;
}

std::vector<int> legs_of_color(const Graph& g, int color) {
    std::vector<int> out;
    for (int h = 0; h < 3 * g.n; ++h)
        if (g.mate[h] < 0 && g.leg[h] == color) out.push_back(h);
    return out;
}

}  // namespace

Element pair_elements(const Element& x, const Element& y, const std::set<int>& colors) {
    const SpaceBasis* b = x.basis() ? x.basis() : y.basis();
    Element out(b);
    if (!b) return out;
    int cap = b->cap();

    for (const auto& [mx, cx] : x.terms()) {
        int dx = b->monomial_degree(mx);
        Graph gx = monomial_graph(*b, mx);
        for (const auto& [my, cy] : y.terms()) {
            if (dx + b->monomial_degree(my) > cap) continue;
            Graph gy = monomial_graph(*b, my);

            std::vector<std::vector<int>> lx, ly;
            bool mismatch = false;
            for (int c : colors) {
                auto a = legs_of_color(gx, c);
                auto d = legs_of_color(gy, c);
                if (a.size() != d.size()) {
                    mismatch = true;
                    break;
                }
                if (!a.empty()) {
                    lx.push_back(std::move(a));
                    ly.push_back(std::move(d));
                }
            }
            if (mismatch) continue;

            Graph base = gx;
            int off = 3 * gx.n;
            append_disjoint(base, gy);

            Rat weight = cx * cy;
            // Enumerate the product of per-color bijections.
            std::function<void(size_t, Graph&)> rec = [&](size_t ci, Graph& cur) {
                if (ci == lx.size()) {
                    out += reduce(cur, *b) * weight;
                    return;
                }
                std::vector<int> perm = ly[ci];
                std::sort(perm.begin(), perm.end());
                do {
                    Graph next = cur;
                    for (size_t k = 0; k < perm.size(); ++k) {
                        int ha = lx[ci][k];
                        int hb = perm[k] + off;
                        next.mate[ha] = hb;
                        next.mate[hb] = ha;
                        next.leg[ha] = -1;
                        next.leg[hb] = -1;
                    }
                    rec(ci + 1, next);
                } while (std::next_permutation(perm.begin(), perm.end()));
            };
            rec(0, base);
        }
    }
    return out;
}

Element apply_gaussian(const QuadraticForm& q, const Element& y) {
    const SpaceBasis* b = y.basis();
    Element out(b);
    if (!b) return out;

    for (const auto& [m, c] : y.terms()) {
        Graph g = monomial_graph(*b, m);
        std::vector<int> legs;
        for (int h = 0; h < 3 * g.n; ++h)
            if (g.mate[h] < 0) legs.push_back(h);

        // Partial matchings: the first unused leg is either left alone or
        // matched to a later unused leg with nonzero pair weight.
        std::vector<std::pair<int, int>> pairs;
        std::vector<char> used(legs.size(), 0);
        std::function<void(size_t, const Rat&)> rec = [&](size_t i, const Rat& w) {
            while (i < legs.size() && used[i]) ++i;
            if (i == legs.size()) {
                Graph t = g;
                for (auto [ha, hb] : pairs) {
                    t.mate[ha] = hb;
                    t.mate[hb] = ha;
                    t.leg[ha] = -1;
                    t.leg[hb] = -1;
                }
                out += reduce(t, *b) * (c * w);
                return;
            }
            used[i] = 1;
            rec(i + 1, w);  // leg stays
            int ca = g.leg[legs[i]];
            for (size_t j = i + 1; j < legs.size(); ++j) {
                if (used[j]) continue;
                int cb = g.leg[legs[j]];
                Rat pw = q.get(ca, cb);
                if (ca == cb) pw *= 2;
                if (pw == 0) continue;
                used[j] = 1;
                pairs.push_back({legs[i], legs[j]});
                rec(i + 1, w * pw);
                pairs.pop_back();
                used[j] = 0;
            }
            used[i] = 0;
        };
        rec(0, Rat(1));
    }
    return out;
}

Element relabel_scale(const Element& y, int from, int to, const Rat& factor) {
    const SpaceBasis* b = y.basis();
    Element out(b);
    if (!b) return out;
    for (const auto& [m, c] : y.terms()) {
        Graph g = monomial_graph(*b, m);
        int count = 0;
        for (int h = 0; h < 3 * g.n; ++h) {
            if (g.mate[h] < 0 && g.leg[h] == from) {
                g.leg[h] = to;
                ++count;
            }
        }
        Rat scale = c;
        for (int i = 0; i < count; ++i) scale *= factor;
        out += reduce(g, *b) * scale;
    }
    return out;
}

std::vector<Rat> modified_bernoulli(int max_degree) {
    int d = std::max(max_degree, 2);
    // sinh(x/2)/(x/2) = sum x^(2n) / (4^n (2n+1)!)
    std::vector<Rat> f(d + 1, Rat(0));
    f[0] = 1;
    exact::Int pow4 = 1, fact = 1;
    for (int n = 1; 2 * n <= d; ++n) {
        pow4 *= 4;
        fact *= (2 * n) * (2 * n + 1);
        f[2 * n] = Rat(exact::Int(1), pow4 * fact);
    }
    // log(1 + u) = sum_{k>=1} (-1)^(k+1) u^k / k with u = f - 1.
    std::vector<Rat> u = f;
    u[0] -= 1;
    std::vector<Rat> log(d + 1, Rat(0)), upow = u;
    auto mul_series = [&](const std::vector<Rat>& a, const std::vector<Rat>& bb) {
        std::vector<Rat> r(d + 1, Rat(0));
        for (int i = 0; i <= d; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= d; ++j)
                if (bb[j] != 0) r[i + j] += a[i] * bb[j];
        }
        return r;
    };
    for (int k = 1; k <= d / 2; ++k) {
        Rat s = Rat((k % 2) ? 1 : -1, k);
        for (int i = 0; i <= d; ++i) log[i] += s * upow[i];
        upow = mul_series(upow, u);
    }
    std::vector<Rat> out;
    for (int m = 1; 2 * m <= max_degree; ++m) out.push_back(log[2 * m] / 2);
    return out;
}

Element omega_big(const SpaceBasis& b, int color) {
    std::vector<Rat> bern = modified_bernoulli(b.cap());
    Element x(&b);
    for (size_t m = 1; m <= bern.size(); ++m)
        x += wheel_element(b, 2 * (int)m, color) * bern[m - 1];
    return exp_element(x);
}

Element omega_small(const SpaceBasis& b) {
    if (b.ncolors() < 1)
        throw exact::ValidationError("omega_small: need at least one color");
    Element om = omega_big(b, 0);
    return pair_elements(om, om, {0});
}

Element omega_small_inverse(const SpaceBasis& b) { return inverse_element(omega_small(b)); }

}  // namespace diagrams
