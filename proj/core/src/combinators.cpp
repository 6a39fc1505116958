#include "ssetkit/combinators.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sset {

namespace {

std::string word_str(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

SSetPtr freeze(SSet&& s) { return std::make_shared<const SSet>(std::move(s)); }

constexpr int kNoCap = 1 << 20;

void inherit_truncation(SSet& out, const SSet& a, const SSet& b) {
    if (a.truncation() || b.truncation())
        out.set_truncation(
            std::min(a.truncation().value_or(kNoCap), b.truncation().value_or(kNoCap)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Standard complexes

Id subset_id(const std::vector<int>& vertices) {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ".";
        s += std::to_string(vertices[i]);
    }
    return s;
}

std::vector<int> parse_subset_id(const Id& id) {
    std::vector<int> out;
    std::stringstream ss(id);
    std::string part;
    while (std::getline(ss, part, '.')) out.push_back(std::stoi(part));
    return out;
}

namespace {

void add_subsets(SSet& s, int n, const std::function<bool(const std::vector<int>&)>& keep) {
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<int> v(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (keep(v)) {
                std::vector<Simplex> faces;
                if (size > 1) {
                    for (int i = 0; i < size; ++i) {
                        std::vector<int> w = v;
                        w.erase(w.begin() + i);
                        faces.push_back(Simplex{subset_id(w), MonotoneMap::identity(size - 1)});
                    }
                }
                s.add_simplex(subset_id(v), size - 1, std::move(faces));
            }
            int i = size - 1;
            while (i >= 0 && v[static_cast<std::size_t>(i)] == n - (size - 1 - i)) --i;
            if (i < 0) break;
            ++v[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

SSetPtr std_simplex(int n) {
    if (n < 0) throw std::invalid_argument("std_simplex: n < 0");
    SSet s;
    add_subsets(s, n, [](const std::vector<int>&) { return true; });
    return freeze(std::move(s));
}

SSetPtr boundary(int n) {
    if (n < 0) throw std::invalid_argument("boundary: n < 0");
    SSet s;
    add_subsets(s, n,
                [n](const std::vector<int>& v) { return static_cast<int>(v.size()) != n + 1; });
    return freeze(std::move(s));
}

SSetPtr horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn: bad (n, k)");
    SSet s;
    add_subsets(s, n, [n, k](const std::vector<int>& v) {
        if (static_cast<int>(v.size()) == n + 1) return false;
        if (static_cast<int>(v.size()) == n)
            return std::find(v.begin(), v.end(), k) != v.end();
        return true;
    });
    return freeze(std::move(s));
}

SMap inclusion(SSetPtr sub, SSetPtr whole) {
    std::map<Id, Simplex> a;
    for (const Id& id : sub->all_ids()) a.emplace(id, whole->normalized(id));
    return SMap(std::move(sub), std::move(whole), std::move(a));
}

SMap std_map(const MonotoneMap& op) {
    int m = op.domain_size() - 1;
    int n = op.codomain_size() - 1;
    SSetPtr src = std_simplex(m);
    SSetPtr dst = std_simplex(n);
    std::map<Id, Simplex> a;
    for (const Id& id : src->all_ids()) {
        std::vector<int> verts = parse_subset_id(id);
        std::vector<int> image;
        std::vector<int> surj;
        for (int v : verts) {
            int w = op(v);
            if (image.empty() || image.back() != w) image.push_back(w);
            surj.push_back(static_cast<int>(image.size()) - 1);
        }
        a.emplace(id, Simplex{subset_id(image),
                              MonotoneMap(std::move(surj), static_cast<int>(image.size()))});
    }
    return SMap(std::move(src), std::move(dst), std::move(a));
}

// ---------------------------------------------------------------------------
// Opposite

Simplex opposite_simplex(const Simplex& s) { return Simplex{s.base, s.surj.reversed()}; }

SSetPtr opposite(const SSetPtr& s) {
    SSet out;
    for (int d = 0; d <= s->dim(); ++d) {
        for (const Id& id : s->nondegenerate(d)) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= d && d > 0; ++i)
                faces.push_back(opposite_simplex(s->face(id, d - i)));
            out.add_simplex(id, d, std::move(faces));
        }
    }
    if (s->truncation()) out.set_truncation(*s->truncation());
    return freeze(std::move(out));
}

SMap opposite_map(const SMap& f) {
    std::map<Id, Simplex> a;
    for (const auto& [id, v] : f.assignment()) a.emplace(id, opposite_simplex(v));
    return SMap(opposite(f.source()), opposite(f.target()), std::move(a));
}

// ---------------------------------------------------------------------------
// Join

struct JoinImpl {
    std::map<Id, std::pair<Id, Id>> mixed;  // pair id -> (left, right)
    std::map<Id, Id> left, right;           // pure part id -> original id
    std::map<std::pair<Id, Id>, Id> pair_id;
};

Simplex JoinResult::pair(const Simplex& left, const Simplex& right) const {
    return Simplex{impl->pair_id.at({left.base, right.base}),
                   MonotoneMap::join(left.surj, right.surj)};
}

JoinResult::Part JoinResult::part(const Id& id) const {
    if (impl->left.count(id)) return Part::Left;
    if (impl->right.count(id)) return Part::Right;
    return Part::Mixed;
}

std::pair<Id, Id> JoinResult::mixed_components(const Id& id) const { return impl->mixed.at(id); }

Id JoinResult::pure_component(const Id& id) const {
    auto it = impl->left.find(id);
    if (it != impl->left.end()) return it->second;
    return impl->right.at(id);
}

JoinResult join(SSetPtr a, SSetPtr b) {
    auto impl = std::make_shared<JoinImpl>();
    auto lid = [&](const Id& x) { return "l:" + x; };
    auto rid = [&](const Id& y) { return "r:" + y; };
    auto pid = [&](const Id& x, const Id& y) { return "(" + x + "*" + y + ")"; };

    SSet s;
    for (int d = 0; d <= a->dim(); ++d)
        for (const Id& id : a->nondegenerate(d)) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= d && d > 0; ++i) {
                Simplex f = a->face(id, i);
                faces.push_back(Simplex{lid(f.base), f.surj});
            }
            s.add_simplex(lid(id), d, std::move(faces));
            impl->left.emplace(lid(id), id);
        }
    for (int d = 0; d <= b->dim(); ++d)
        for (const Id& id : b->nondegenerate(d)) {
            std::vector<Simplex> faces;
            for (int i = 0; i <= d && d > 0; ++i) {
                Simplex f = b->face(id, i);
                faces.push_back(Simplex{rid(f.base), f.surj});
            }
            s.add_simplex(rid(id), d, std::move(faces));
            impl->right.emplace(rid(id), id);
        }
    int top = a->dim() + b->dim() + 1;
    for (int d = 1; d <= top; ++d) {
        for (int p = 0; p < d; ++p) {
            int q = d - 1 - p;
            if (p > a->dim() || q > b->dim()) continue;
            for (const Id& xa : a->nondegenerate(p)) {
                for (const Id& yb : b->nondegenerate(q)) {
                    std::vector<Simplex> faces;
                    for (int i = 0; i <= d; ++i) {
                        if (i <= p) {
                            if (p == 0) {
                                faces.push_back(Simplex{rid(yb), MonotoneMap::identity(q + 1)});
                            } else {
                                Simplex f = a->face(xa, i);
                                faces.push_back(Simplex{
                                    pid(f.base, yb),
                                    MonotoneMap::join(f.surj, MonotoneMap::identity(q + 1))});
                            }
                        } else {
                            if (q == 0) {
                                faces.push_back(Simplex{lid(xa), MonotoneMap::identity(p + 1)});
                            } else {
                                Simplex f = b->face(yb, i - p - 1);
                                faces.push_back(Simplex{
                                    pid(xa, f.base),
                                    MonotoneMap::join(MonotoneMap::identity(p + 1), f.surj)});
                            }
                        }
                    }
                    s.add_simplex(pid(xa, yb), d, std::move(faces));
                    impl->mixed.emplace(pid(xa, yb), std::make_pair(xa, yb));
                    impl->pair_id.emplace(std::make_pair(xa, yb), pid(xa, yb));
                }
            }
        }
    }
    inherit_truncation(s, *a, *b);
    SSetPtr sp = freeze(std::move(s));

    std::map<Id, Simplex> ia, ib, itv;
    SSetPtr interval = std_simplex(1);
    for (const Id& id : a->all_ids()) {
        ia.emplace(id, sp->normalized(lid(id)));
        itv.emplace(lid(id), Simplex{"0", MonotoneMap::constant(a->dim_of(id) + 1, 0, 1)});
    }
    for (const Id& id : b->all_ids()) {
        ib.emplace(id, sp->normalized(rid(id)));
        itv.emplace(rid(id), Simplex{"1", MonotoneMap::constant(b->dim_of(id) + 1, 0, 1)});
    }
    for (const auto& [mid, xy] : impl->mixed) {
        int p = a->dim_of(xy.first), q = b->dim_of(xy.second);
        std::vector<int> v(static_cast<std::size_t>(p + q + 2), 1);
        for (int i = 0; i <= p; ++i) v[static_cast<std::size_t>(i)] = 0;
        itv.emplace(mid, Simplex{"0.1", MonotoneMap(std::move(v), 2)});
    }
    return JoinResult{sp, SMap(a, sp, std::move(ia)), SMap(b, sp, std::move(ib)),
                      SMap(sp, interval, std::move(itv)), impl};
}

SMap join_map(const JoinResult& src, const JoinResult& dst, const SMap& f, const SMap& g) {
    std::map<Id, Simplex> a;
    for (const Id& id : src.sset->all_ids()) {
        switch (src.part(id)) {
            case JoinResult::Part::Left: {
                Simplex v = f.at(src.pure_component(id));
                a.emplace(id, Simplex{"l:" + v.base, v.surj});
                break;
            }
            case JoinResult::Part::Right: {
                Simplex v = g.at(src.pure_component(id));
                a.emplace(id, Simplex{"r:" + v.base, v.surj});
                break;
            }
            case JoinResult::Part::Mixed: {
                auto [xa, yb] = src.mixed_components(id);
                a.emplace(id, dst.pair(f.at(xa), g.at(yb)));
                break;
            }
        }
    }
    return SMap(src.sset, dst.sset, std::move(a));
}

// ---------------------------------------------------------------------------
// Product

struct ProductImpl {
    std::map<std::string, Id> basis;
    std::map<Id, std::pair<Simplex, Simplex>> component;
};

namespace {

std::string pkey(const Id& x, const std::vector<int>& sv, const Id& y,
                 const std::vector<int>& tv) {
    return x + "{" + word_str(sv) + "}|" + y + "{" + word_str(tv) + "}";
}

/// Splits a pair of equal-dimension normalized simplices into the jointly
/// nondegenerate pair plus the common surjection.
Simplex normalize_pair(const ProductImpl& impl, const Simplex& left, const Simplex& right) {
    int n = left.dim();
    std::vector<int> dl = left.surj.descents();
    std::vector<int> dr = right.surj.descents();
    std::vector<int> common;
    std::set_intersection(dl.begin(), dl.end(), dr.begin(), dr.end(),
                          std::back_inserter(common));
    std::vector<int> rho_vals(static_cast<std::size_t>(n) + 1);
    int drop = 0;
    std::size_t p = 0;
    for (int i = 0; i <= n; ++i) {
        rho_vals[static_cast<std::size_t>(i)] = i - drop;
        if (p < common.size() && common[p] == i) {
            ++drop;
            ++p;
        }
    }
    std::vector<int> sv, tv;
    for (int i = 0; i <= n; ++i) {
        if (i == 0 ||
            rho_vals[static_cast<std::size_t>(i)] != rho_vals[static_cast<std::size_t>(i - 1)]) {
            sv.push_back(left.surj(i));
            tv.push_back(right.surj(i));
        }
    }
    auto it = impl.basis.find(pkey(left.base, sv, right.base, tv));
    if (it == impl.basis.end()) throw std::logic_error("product: missing basis simplex");
    return Simplex{it->second,
                   MonotoneMap(std::move(rho_vals), n + 1 - static_cast<int>(common.size()))};
}

}  // namespace

Simplex ProductResult::pair(const Simplex& left, const Simplex& right) const {
    if (left.dim() != right.dim())
        throw std::invalid_argument("product pair: dimension mismatch");
    return normalize_pair(*impl, left, right);
}

std::pair<Simplex, Simplex> ProductResult::components(const Simplex& s) const {
    auto it = impl->component.find(s.base);
    if (it == impl->component.end())
        throw std::invalid_argument("product components: unknown simplex");
    const auto& [l, r] = it->second;
    return {Simplex{l.base, l.surj.after(s.surj)}, Simplex{r.base, r.surj.after(s.surj)}};
}

ProductResult product(SSetPtr a, SSetPtr b) {
    auto impl = std::make_shared<ProductImpl>();
    std::vector<std::pair<Id, int>> order;
    for (int n = 0; n <= a->dim() + b->dim(); ++n) {
        for (int p = 0; p <= std::min(n, a->dim()); ++p) {
            auto sl = surjections(n, p);
            for (int q = 0; q <= std::min(n, b->dim()); ++q) {
                if ((n - p) + (n - q) > n) continue;
                auto sr = surjections(n, q);
                for (const Id& xa : a->nondegenerate(p)) {
                    for (const Id& yb : b->nondegenerate(q)) {
                        for (const auto& sg : sl) {
                            std::vector<int> ds = sg.descents();
                            for (const auto& tg : sr) {
                                std::vector<int> dt = tg.descents();
                                std::vector<int> common;
                                std::set_intersection(ds.begin(), ds.end(), dt.begin(),
                                                      dt.end(), std::back_inserter(common));
                                if (!common.empty()) continue;
                                Id id = pkey(xa, sg.values(), yb, tg.values());
                                impl->basis.emplace(id, id);
                                impl->component.emplace(
                                    id, std::make_pair(Simplex{xa, sg}, Simplex{yb, tg}));
                                order.emplace_back(id, n);
                            }
                        }
                    }
                }
            }
        }
    }
    SSet s;
    for (const auto& [id, n] : order) {
        const auto& [l, r] = impl->component.at(id);
        std::vector<Simplex> faces;
        for (int i = 0; i <= n && n > 0; ++i) {
            MonotoneMap d = MonotoneMap::coface(n, i);
            faces.push_back(normalize_pair(*impl, a->act(l, d), b->act(r, d)));
        }
        s.add_simplex(id, n, std::move(faces));
    }
    inherit_truncation(s, *a, *b);
    SSetPtr sp = freeze(std::move(s));
    std::map<Id, Simplex> pl, pr;
    for (const auto& [id, comp] : impl->component) {
        pl.emplace(id, comp.first);
        pr.emplace(id, comp.second);
    }
    return ProductResult{sp, SMap(sp, a, std::move(pl)), SMap(sp, b, std::move(pr)), impl};
}

SMap product_mediate(const ProductResult& p, const SMap& f, const SMap& g) {
    if (!same_sset(f.source(), g.source()))
        throw std::invalid_argument("product_mediate: sources disagree");
    std::map<Id, Simplex> a;
    for (const Id& id : f.source()->all_ids()) a.emplace(id, p.pair(f.at(id), g.at(id)));
    return SMap(f.source(), p.sset, std::move(a));
}

SMap product_map(const ProductResult& src, const ProductResult& dst, const SMap& f,
                 const SMap& g) {
    return product_mediate(dst, src.pr_left.then(f), src.pr_right.then(g));
}

SMap product_switch(const ProductResult& ab, const ProductResult& ba) {
    return product_mediate(ba, ab.pr_right, ab.pr_left);
}

// ---------------------------------------------------------------------------
// Pullback

PullbackResult pullback(const SMap& f, const SMap& g) {
    if (!same_sset(f.target(), g.target()))
        throw std::invalid_argument("pullback: codomains disagree");
    auto ambient = std::make_shared<ProductResult>(product(f.source(), g.source()));
    std::vector<Id> keep;
    for (const Id& id : ambient->sset->all_ids()) {
        auto [l, r] = ambient->components(ambient->sset->normalized(id));
        if (f.apply(l) == g.apply(r)) keep.push_back(id);
    }
    SSetPtr sub = subcomplex(ambient->sset, keep);
    std::map<Id, Simplex> pl, pr;
    for (const Id& id : sub->all_ids()) {
        auto [l, r] = ambient->components(sub->normalized(id));
        pl.emplace(id, l);
        pr.emplace(id, r);
    }
    return PullbackResult{sub, SMap(sub, f.source(), std::move(pl)),
                          SMap(sub, g.source(), std::move(pr)), ambient};
}

SMap pullback_mediate(const PullbackResult& p, const SMap& f, const SMap& g) {
    if (!same_sset(f.source(), g.source()))
        throw std::invalid_argument("pullback_mediate: sources disagree");
    std::map<Id, Simplex> a;
    for (const Id& id : f.source()->all_ids()) {
        Simplex v = p.ambient().pair(f.at(id), g.at(id));
        if (!p.sset->contains(v.base))
            throw std::invalid_argument("pullback_mediate: square does not commute at '" + id +
                                        "'");
        a.emplace(id, v);
    }
    return SMap(f.source(), p.sset, std::move(a));
}

// ---------------------------------------------------------------------------
// Pushout along a monomorphism

PushoutResult pushout_along_mono(const SMap& i, const SMap& f) {
    if (!same_sset(i.source(), f.source()))
        throw std::invalid_argument("pushout_along_mono: legs have different sources");
    if (!i.is_mono())
        throw std::invalid_argument("pushout_along_mono: designated leg is not mono");
    const SSetPtr& b = i.target();
    const SSetPtr& c = f.target();

    std::map<Id, Id> image_inv;
    for (const auto& [aid, v] : i.assignment()) image_inv.emplace(v.base, aid);

    std::map<Id, Id> rename;
    std::set<Id> used;
    for (const Id& cid : c->all_ids()) used.insert(cid);
    for (const Id& bid : b->all_ids()) {
        if (image_inv.count(bid)) continue;
        Id pick = bid;
        while (used.count(pick)) pick += "'";
        used.insert(pick);
        rename.emplace(bid, pick);
    }

    auto push_value = [&](const Simplex& bs) -> Simplex {
        auto it = image_inv.find(bs.base);
        if (it == image_inv.end()) return Simplex{rename.at(bs.base), bs.surj};
        Simplex v = f.at(it->second);
        return Simplex{v.base, v.surj.after(bs.surj)};
    };

    SSet s;
    int top = std::max(b->dim(), c->dim());
    for (int d = 0; d <= top; ++d) {
        for (const Id& cid : c->nondegenerate(d)) s.add_simplex(cid, d, c->faces_of(cid));
        for (const Id& bid : b->nondegenerate(d)) {
            if (image_inv.count(bid)) continue;
            std::vector<Simplex> faces;
            for (int k = 0; k <= d && d > 0; ++k) faces.push_back(push_value(b->face(bid, k)));
            s.add_simplex(rename.at(bid), d, std::move(faces));
        }
    }
    inherit_truncation(s, *b, *c);
    SSetPtr sp = freeze(std::move(s));

    std::map<Id, Simplex> mc, mb;
    for (const Id& cid : c->all_ids()) mc.emplace(cid, sp->normalized(cid));
    for (const Id& bid : b->all_ids()) mb.emplace(bid, push_value(b->normalized(bid)));
    return PushoutResult{sp, SMap(c, sp, std::move(mc)), SMap(b, sp, std::move(mb))};
}

SMap pushout_mediate(const PushoutResult& p, const SMap& from_b, const SMap& from_c) {
    std::map<Id, Id> binv;
    for (const auto& [bid, v] : p.from_b.assignment())
        if (v.is_nondegenerate()) binv.emplace(v.base, bid);
    std::map<Id, Simplex> a;
    for (const Id& pid : p.sset->all_ids()) {
        if (p.from_c.source()->contains(pid))
            a.emplace(pid, from_c.at(pid));
        else
            a.emplace(pid, from_b.at(binv.at(pid)));
    }
    return SMap(p.sset, from_b.target(), std::move(a));
}

// ---------------------------------------------------------------------------
// Coproduct, empty, subcomplexes

CoproductResult disjoint_union(SSetPtr a, SSetPtr b) {
    SSet s;
    int top = std::max(a->dim(), b->dim());
    for (int d = 0; d <= top; ++d) {
        for (const Id& id : a->nondegenerate(d)) {
            std::vector<Simplex> faces;
            for (int k = 0; k <= d && d > 0; ++k) {
                Simplex f = a->face(id, k);
                faces.push_back(Simplex{"l:" + f.base, f.surj});
            }
            s.add_simplex("l:" + id, d, std::move(faces));
        }
        for (const Id& id : b->nondegenerate(d)) {
            std::vector<Simplex> faces;
            for (int k = 0; k <= d && d > 0; ++k) {
                Simplex f = b->face(id, k);
                faces.push_back(Simplex{"r:" + f.base, f.surj});
            }
            s.add_simplex("r:" + id, d, std::move(faces));
        }
    }
    inherit_truncation(s, *a, *b);
    SSetPtr sp = freeze(std::move(s));
    std::map<Id, Simplex> ia, ib;
    for (const Id& id : a->all_ids()) ia.emplace(id, Simplex{"l:" + id, a->normalized(id).surj});
    for (const Id& id : b->all_ids()) ib.emplace(id, Simplex{"r:" + id, b->normalized(id).surj});
    return CoproductResult{sp, SMap(a, sp, std::move(ia)), SMap(b, sp, std::move(ib))};
}

SMap coproduct_mediate(const CoproductResult& c, const SMap& f, const SMap& g) {
    std::map<Id, Simplex> a;
    for (const Id& id : c.sset->all_ids()) {
        if (id.rfind("l:", 0) == 0)
            a.emplace(id, f.at(id.substr(2)));
        else
            a.emplace(id, g.at(id.substr(2)));
    }
    return SMap(c.sset, f.target(), std::move(a));
}

SSetPtr empty_sset() {
    static SSetPtr e = std::make_shared<const SSet>();
    return e;
}

SSetPtr subcomplex(const SSetPtr& s, const std::vector<Id>& keep) {
    std::set<Id> keep_set(keep.begin(), keep.end());
    SSet out;
    for (int d = 0; d <= s->dim(); ++d) {
        for (const Id& id : s->nondegenerate(d)) {
            if (!keep_set.count(id)) continue;
            for (int k = 0; k <= d && d > 0; ++k)
                if (!keep_set.count(s->face(id, k).base))
                    throw std::invalid_argument("subcomplex: not face-closed at '" + id + "'");
            out.add_simplex(id, d, s->faces_of(id));
        }
    }
    if (s->truncation()) out.set_truncation(*s->truncation());
    return freeze(std::move(out));
}

std::vector<Id> face_closure(const SSet& s, std::vector<Id> seeds) {
    std::set<Id> seen(seeds.begin(), seeds.end());
    std::deque<Id> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        Id id = work.front();
        work.pop_front();
        int d = s.dim_of(id);
        for (int k = 0; k <= d && d > 0; ++k) {
            const Id& f = s.face(id, k).base;
            if (seen.insert(f).second) work.push_back(f);
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Slices

namespace {

Id end_vertex(const SSet& x, const Id& id, bool last) {
    int d = x.dim_of(id);
    return x.act(x.normalized(id), MonotoneMap::constant(1, last ? d : 0, d + 1)).base;
}

SliceResult cone_slice(SSetPtr x, const Id& vertex, bool at_end) {
    if (!x->contains(vertex) || x->dim_of(vertex) != 0)
        throw std::invalid_argument("slice: vertex not found");
    auto marked = [&](const Id& id) { return end_vertex(*x, id, at_end) == vertex; };

    // Slice-normal form of an X-simplex w of dimension q+1 representing a
    // slice q-simplex: drop the marked position of the surjection; the base
    // keeps the collapse at the marked end if there is one.
    auto slice_normal = [&](const Simplex& w) -> Simplex {
        int q = w.dim() - 1;
        int k = w.base_dim();
        const auto& pv = w.surj.values();
        bool collapsed = at_end
                             ? pv[static_cast<std::size_t>(q)] == pv[static_cast<std::size_t>(q + 1)]
                             : pv[0] == pv[1];
        std::vector<int> rv(static_cast<std::size_t>(q) + 1);
        for (int j = 0; j <= q; ++j) {
            int v = at_end ? pv[static_cast<std::size_t>(j)] : pv[static_cast<std::size_t>(j + 1)];
            if (!collapsed && !at_end) v -= 1;
            rv[static_cast<std::size_t>(j)] = v;
        }
        Id base = (collapsed ? "s:" : "e:") + w.base;
        return Simplex{base, MonotoneMap(std::move(rv), collapsed ? k + 1 : k)};
    };

    SSet s;
    std::map<Id, Simplex> underlying;
    for (int q = 0; q <= x->dim(); ++q) {
        for (const Id& y : x->nondegenerate(q)) {
            if (!marked(y)) continue;
            Simplex u{y, MonotoneMap::codegeneracy(q, at_end ? q : 0)};
            std::vector<Simplex> faces;
            for (int i = 0; i <= q && q > 0; ++i)
                faces.push_back(slice_normal(
                    x->act(u, MonotoneMap::coface(q + 1, at_end ? i : i + 1))));
            s.add_simplex("s:" + y, q, std::move(faces));
            underlying.emplace("s:" + y, u);
        }
        if (q + 1 > x->dim()) continue;
        for (const Id& y : x->nondegenerate(q + 1)) {
            if (!marked(y)) continue;
            Simplex u = x->normalized(y);
            std::vector<Simplex> faces;
            for (int i = 0; i <= q && q > 0; ++i)
                faces.push_back(slice_normal(
                    x->act(u, MonotoneMap::coface(q + 1, at_end ? i : i + 1))));
            s.add_simplex("e:" + y, q, std::move(faces));
            underlying.emplace("e:" + y, u);
        }
    }
    if (x->truncation()) s.set_truncation(std::max(0, *x->truncation() - 1));
    SSetPtr sp = freeze(std::move(s));
    std::map<Id, Simplex> proj;
    for (const auto& [id, u] : underlying) {
        int q = u.dim() - 1;
        std::vector<int> iv(static_cast<std::size_t>(q) + 1);
        for (int j = 0; j <= q; ++j) iv[static_cast<std::size_t>(j)] = at_end ? j : j + 1;
        proj.emplace(id, x->act(u, MonotoneMap(std::move(iv), q + 2)));
    }
    return SliceResult{sp, SMap(sp, x, std::move(proj))};
}

}  // namespace

SliceResult slice_over(SSetPtr x, const Id& vertex) { return cone_slice(x, vertex, true); }
SliceResult coslice_under(SSetPtr x, const Id& vertex) { return cone_slice(x, vertex, false); }

}  // namespace sset
