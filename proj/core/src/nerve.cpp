#include <algorithm>
#include <set>
#include <stdexcept>

#include "ssetkit/combinators.hpp"

namespace sset {

namespace {

using Arrow = FinCategory::Arrow;

const Arrow* find_arrow(const FinCategory& c, const Id& name) {
    for (const auto& a : c.arrows)
        if (a.name == name) return &a;
    return nullptr;
}

}  // namespace

void FinCategory::check() const {
    std::set<Id> objs(objects.begin(), objects.end());
    if (objs.size() != objects.size())
        throw std::invalid_argument("category: duplicate object names");
    std::set<Id> names;
    for (const auto& a : arrows) {
        if (!objs.count(a.src) || !objs.count(a.dst))
            throw std::invalid_argument("category: arrow '" + a.name + "' has unknown endpoint");
        if (!names.insert(a.name).second)
            throw std::invalid_argument("category: duplicate arrow name '" + a.name + "'");
        if (names.count(a.src) || objs.count(a.name))
            throw std::invalid_argument("category: arrow name collides with object name");
    }
    auto comp = [&](const Id& f, const Id& g) -> Id {
        auto it = compose.find({f, g});
        if (it == compose.end())
            throw std::invalid_argument("category: composition table missing (" + f + ", " + g +
                                        ")");
        return it->second;
    };
    for (const auto& f : arrows) {
        for (const auto& g : arrows) {
            if (f.dst != g.src) continue;
            Id fg = comp(f.name, g.name);
            if (!fg.empty()) {
                const Arrow* h = find_arrow(*this, fg);
                if (!h || h->src != f.src || h->dst != g.dst)
                    throw std::invalid_argument("category: bad composite of (" + f.name + ", " +
                                                g.name + ")");
            } else if (f.src != g.dst) {
                throw std::invalid_argument("category: identity composite of (" + f.name + ", " +
                                            g.name + ") with mismatched endpoints");
            }
        }
    }
    // Associativity over all composable triples.
    auto comp_opt = [&](const Id& f, const Id& g) -> Id {
        if (f.empty()) return g;
        if (g.empty()) return f;
        return comp(f, g);
    };
    for (const auto& f : arrows)
        for (const auto& g : arrows) {
            if (f.dst != g.src) continue;
            for (const auto& h : arrows) {
                if (g.dst != h.src) continue;
                if (comp_opt(comp(f.name, g.name), h.name) !=
                    comp_opt(f.name, comp(g.name, h.name)))
                    throw std::invalid_argument("category: associativity fails at (" + f.name +
                                                ", " + g.name + ", " + h.name + ")");
            }
        }
}

bool FinCategory::has_cycle() const {
    // A cycle of non-identity arrows makes chains of unbounded length.
    std::map<Id, std::vector<Id>> out;
    for (const auto& a : arrows) {
        if (a.src == a.dst) return true;
        out[a.src].push_back(a.dst);
    }
    std::map<Id, int> state;  // 0 fresh, 1 on stack, 2 done
    std::function<bool(const Id&)> dfs = [&](const Id& v) {
        state[v] = 1;
        for (const Id& w : out[v]) {
            if (state[w] == 1) return true;
            if (state[w] == 0 && dfs(w)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (const Id& o : objects)
        if (state[o] == 0 && dfs(o)) return true;
    return false;
}

SSetPtr nerve(const FinCategory& c, std::optional<int> cap) {
    c.check();
    bool cyclic = c.has_cycle();
    if (cyclic && !cap)
        throw std::invalid_argument(
            "nerve: category has nondegenerate simplices in every dimension; "
            "a truncation cap is required");

    std::map<Id, const Arrow*> by_name;
    for (const auto& a : c.arrows) by_name.emplace(a.name, &a);

    auto chain_id = [](const std::vector<Id>& ch) {
        std::string s;
        for (std::size_t i = 0; i < ch.size(); ++i) {
            if (i) s += ".";
            s += ch[i];
        }
        return s;
    };

    SSet s;
    for (const Id& o : c.objects) s.add_simplex(o, 0);

    // chains of length d, extended on the right
    std::vector<std::vector<Id>> chains;
    for (const auto& a : c.arrows) chains.push_back({a.name});
    int d = 1;
    while (!chains.empty() && (!cap || d <= *cap)) {
        std::sort(chains.begin(), chains.end());
        for (const auto& ch : chains) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= d; ++i) {
                if (i == 0) {
                    if (d == 1)
                        faces.push_back(Simplex{by_name.at(ch[0])->dst, MonotoneMap::identity(1)});
                    else
                        faces.push_back(Simplex{chain_id({ch.begin() + 1, ch.end()}),
                                                MonotoneMap::identity(d)});
                } else if (i == d) {
                    if (d == 1)
                        faces.push_back(Simplex{by_name.at(ch[0])->src, MonotoneMap::identity(1)});
                    else
                        faces.push_back(Simplex{chain_id({ch.begin(), ch.end() - 1}),
                                                MonotoneMap::identity(d)});
                } else {
                    Id g = c.compose.at({ch[static_cast<std::size_t>(i - 1)],
                                         ch[static_cast<std::size_t>(i)]});
                    std::vector<Id> reduced;
                    for (int j = 0; j < d; ++j) {
                        if (j == i - 1) {
                            if (!g.empty()) reduced.push_back(g);
                        } else if (j != i) {
                            reduced.push_back(ch[static_cast<std::size_t>(j)]);
                        }
                    }
                    if (g.empty()) {
                        Id base = reduced.empty() ? by_name.at(ch[0])->src : chain_id(reduced);
                        faces.push_back(
                            Simplex{base, MonotoneMap::codegeneracy(d - 2, i - 1)});
                    } else {
                        faces.push_back(Simplex{chain_id(reduced), MonotoneMap::identity(d)});
                    }
                }
            }
            s.add_simplex(chain_id(ch), d, std::move(faces));
        }
        // extend
        std::vector<std::vector<Id>> next;
        for (const auto& ch : chains) {
            const Arrow* lastA = by_name.at(ch.back());
            for (const auto& a : c.arrows) {
                if (a.src == lastA->dst) {
                    auto ext = ch;
                    ext.push_back(a.name);
                    next.push_back(std::move(ext));
                }
            }
        }
        chains = std::move(next);
        ++d;
    }
    if (!chains.empty()) s.set_truncation(*cap);
    return std::make_shared<const SSet>(std::move(s));
}

FinCategory poset_category(const std::vector<Id>& elements,
                           const std::vector<std::pair<Id, Id>>& less) {
    // Transitive closure; reject reflexive or cyclic input.
    std::set<std::pair<Id, Id>> rel(less.begin(), less.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Id, Id>> add;
        for (const auto& [a, b] : rel)
            for (const auto& [c, d] : rel)
                if (b == c && !rel.count({a, d})) add.emplace_back(a, d);
        for (auto& p : add) grew |= rel.insert(p).second;
    }
    for (const auto& [a, b] : rel)
        if (a == b || rel.count({b, a}))
            throw std::invalid_argument("poset: relation is not a strict partial order");
    FinCategory c;
    c.objects = elements;
    for (const auto& [a, b] : rel) c.arrows.push_back({a + "<" + b, a, b});
    for (const auto& [a, b] : rel)
        for (const auto& [c2, d2] : rel)
            if (b == c2) c.compose[{a + "<" + b, c2 + "<" + d2}] = a + "<" + d2;
    return c;
}

SSetPtr nerve_of_poset(const std::vector<Id>& elements,
                       const std::vector<std::pair<Id, Id>>& less) {
    return nerve(poset_category(elements, less));
}

}  // namespace sset
