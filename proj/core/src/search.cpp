#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "ssetkit/combinators.hpp"

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

std::string skey(const Simplex& s) { return s.base + "#" + word_str(s.surj.values()); }

// ---------------------------------------------------------------------------
// Fingerprints for isomorphism pruning: a few rounds of face-profile and
// coface-profile refinement.

std::map<Id, std::uint64_t> fingerprints(const SSet& s) {
    std::hash<std::string> h;
    std::map<Id, std::uint64_t> fp;
    for (const Id& id : s.all_ids()) fp[id] = static_cast<std::uint64_t>(s.dim_of(id));
    for (int round = 0; round < 3; ++round) {
        std::map<Id, std::vector<std::uint64_t>> coface_sig;
        for (const Id& id : s.all_ids()) {
            int d = s.dim_of(id);
            for (int i = 0; i <= d && d > 0; ++i) {
                const Simplex& f = s.face(id, i);
                coface_sig[f.base].push_back(
                    fp[id] * 31 + static_cast<std::uint64_t>(i) * 7 + f.surj.descents().size());
            }
        }
        std::map<Id, std::uint64_t> next;
        for (const Id& id : s.all_ids()) {
            std::string sig = std::to_string(s.dim_of(id)) + ";";
            int d = s.dim_of(id);
            for (int i = 0; i <= d && d > 0; ++i) {
                const Simplex& f = s.face(id, i);
                sig += std::to_string(i) + ":" + word_str(f.surj.degeneracy_word()) + ":" +
                       std::to_string(fp[f.base]) + "|";
            }
            auto cs = coface_sig[id];
            std::sort(cs.begin(), cs.end());
            sig += "/";
            for (auto v : cs) sig += std::to_string(v) + ",";
            next[id] = h(sig);
        }
        fp = std::move(next);
    }
    return fp;
}

}  // namespace

// ---------------------------------------------------------------------------
// Isomorphism search

std::optional<SMap> iso_search(SSetPtr a, SSetPtr b, const IsoOptions& opts) {
    if (a->dim() != b->dim()) return std::nullopt;
    for (int d = 0; d <= a->dim(); ++d)
        if (a->nondegenerate(d).size() != b->nondegenerate(d).size()) return std::nullopt;

    auto fpa = fingerprints(*a);
    auto fpb = fingerprints(*b);
    {
        std::multiset<std::uint64_t> ma, mb;
        for (auto& [k, v] : fpa) ma.insert(v);
        for (auto& [k, v] : fpb) mb.insert(v);
        if (ma != mb) return std::nullopt;
    }

    // Index b's generators by their exact face tuple for forced lookup.
    std::map<std::string, std::vector<Id>> b_by_faces;
    for (const Id& id : b->all_ids()) {
        int d = b->dim_of(id);
        if (d == 0) continue;
        std::string key = std::to_string(d);
        for (int i = 0; i <= d; ++i) key += "|" + skey(b->face(id, i));
        b_by_faces[key].push_back(id);
    }

    std::vector<Id> order = a->all_ids();  // dimension-major
    std::map<Id, Id> assign;
    std::set<Id> used;

    std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
        if (k == order.size()) return true;
        const Id& x = order[k];
        int d = a->dim_of(x);
        std::vector<Id> candidates;
        if (d == 0) {
            for (const Id& c : b->nondegenerate(0))
                if (fpb[c] == fpa[x]) candidates.push_back(c);
        } else {
            std::string key = std::to_string(d);
            bool ok = true;
            for (int i = 0; i <= d; ++i) {
                const Simplex& f = a->face(x, i);
                auto it = assign.find(f.base);
                if (it == assign.end()) {
                    ok = false;
                    break;
                }
                key += "|" + skey(Simplex{it->second, f.surj});
            }
            if (!ok) return false;
            auto it = b_by_faces.find(key);
            if (it != b_by_faces.end()) candidates = it->second;
        }
        auto pin = opts.pinned.find(x);
        for (const Id& c : candidates) {
            if (used.count(c)) continue;
            if (fpb[c] != fpa[x]) continue;
            if (pin != opts.pinned.end() && pin->second != c) continue;
            if (opts.over_src && opts.over_dst &&
                !(opts.over_dst->at(c) == opts.over_src->at(x)))
                continue;
            assign[x] = c;
            used.insert(c);
            if (go(k + 1)) return true;
            assign.erase(x);
            used.erase(c);
        }
        return false;
    };

    if (!go(0)) return std::nullopt;
    std::map<Id, Simplex> m;
    for (const auto& [x, c] : assign) m.emplace(x, b->normalized(c));
    return SMap(a, b, std::move(m));
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of simplicial maps

namespace {

struct LevelInfo {
    std::vector<Simplex> simplices;
    std::vector<std::vector<Simplex>> faces;            // per simplex, its faces
    std::map<std::string, std::vector<int>> by_face0;   // skey(face 0) -> indices
};

struct Searcher {
    const SSet& src;
    const SSet& dst;
    const MapSearchOptions& opts;
    std::map<int, LevelInfo> levels;
    std::map<Id, Simplex> val;
    std::vector<SMap> out;
    SSetPtr src_ptr, dst_ptr;

    const LevelInfo& level(int n) {
        auto it = levels.find(n);
        if (it != levels.end()) return it->second;
        LevelInfo info;
        info.simplices = dst.simplices_at_level(n);
        info.faces.resize(info.simplices.size());
        for (std::size_t k = 0; k < info.simplices.size(); ++k) {
            if (n > 0) {
                for (int i = 0; i <= n; ++i)
                    info.faces[k].push_back(
                        dst.act(info.simplices[k], MonotoneMap::coface(n, i)));
                info.by_face0[skey(info.faces[k][0])].push_back(static_cast<int>(k));
            }
        }
        return levels.emplace(n, std::move(info)).first->second;
    }

    bool admissible(const Id& x, const Simplex& s) {
        auto pin = opts.pinned.find(x);
        if (pin != opts.pinned.end() && !(pin->second == s)) return false;
        if (opts.over_src && opts.over_dst) {
            Simplex lhs = opts.over_dst->apply(s);
            if (!(lhs == opts.over_src->at(x))) return false;
        }
        return true;
    }

    void emit() {
        out.push_back(SMap(src_ptr, dst_ptr, val));
    }

    bool done() const { return opts.limit && out.size() >= *opts.limit; }

    // Simple exhaustive path: generators ascending by (dim, id); candidate
    // values are dst simplices whose faces match the already-determined
    // images of the generator's faces.
    void run_simple() {
        std::vector<Id> order = src.all_ids();
        std::function<void(std::size_t)> go = [&](std::size_t k) {
            if (done()) return;
            if (k == order.size()) {
                emit();
                return;
            }
            const Id& x = order[k];
            int d = src.dim_of(x);
            const LevelInfo& info = level(d);
            std::vector<Simplex> req;
            for (int i = 0; i <= d && d > 0; ++i) {
                Simplex f = src.face(x, i);
                const Simplex& fv = val.at(f.base);
                req.push_back(Simplex{fv.base, fv.surj.after(f.surj)});
            }
            auto try_candidate = [&](std::size_t ci) {
                const Simplex& s = info.simplices[ci];
                for (int i = 0; i <= d && d > 0; ++i)
                    if (!(info.faces[ci][static_cast<std::size_t>(i)] ==
                          req[static_cast<std::size_t>(i)]))
                        return;
                if (!admissible(x, s)) return;
                val.emplace(x, s);
                go(k + 1);
                val.erase(x);
            };
            if (d == 0) {
                for (std::size_t ci = 0; ci < info.simplices.size(); ++ci) try_candidate(ci);
            } else {
                auto it = info.by_face0.find(skey(req[0]));
                if (it == info.by_face0.end()) return;
                for (int ci : it->second) try_candidate(static_cast<std::size_t>(ci));
            }
        };
        go(0);
    }

    // Fast path for regular presentations (all face pointers nondegenerate):
    // backtrack over maximal generators only, propagating values down the
    // face lattice.
    void run_maximal(const std::vector<Id>& maximals) {
        std::function<void(std::size_t)> go = [&](std::size_t k) {
            if (done()) return;
            if (k == maximals.size()) {
                emit();
                return;
            }
            const Id& x = maximals[k];
            int d = src.dim_of(x);
            const LevelInfo& info = level(d);

            // Use a determined face as an index key when available.
            int pivot = -1;
            Simplex pivot_req{"", MonotoneMap::identity(1)};
            if (d > 0) {
                Simplex f = src.face(x, 0);
                auto it = val.find(f.base);
                if (it != val.end()) {
                    pivot = 0;
                    pivot_req = Simplex{it->second.base, it->second.surj.after(f.surj)};
                }
            }

            auto attempt = [&](std::size_t ci) {
                const Simplex& s = info.simplices[ci];
                if (!admissible(x, s)) return;
                std::vector<Id> trail;
                if (!propagate(x, s, info.faces[ci], trail)) {
                    for (const Id& t : trail) val.erase(t);
                    return;
                }
                go(k + 1);
                for (const Id& t : trail) val.erase(t);
            };
            if (pivot == 0) {
                auto it = info.by_face0.find(skey(pivot_req));
                if (it == info.by_face0.end()) return;
                for (int ci : it->second) attempt(static_cast<std::size_t>(ci));
            } else {
                for (std::size_t ci = 0; ci < info.simplices.size(); ++ci) attempt(ci);
            }
        };
        go(0);
    }

    // Sets val[x] = s and forces all iterated faces; returns false on clash.
    bool propagate(const Id& x, const Simplex& s, const std::vector<Simplex>& s_faces,
                   std::vector<Id>& trail) {
        auto it = val.find(x);
        if (it != val.end()) return it->second == s;
        auto pin = opts.pinned.find(x);
        if (pin != opts.pinned.end() && !(pin->second == s)) return false;
        val.emplace(x, s);
        trail.push_back(x);
        int d = src.dim_of(x);
        for (int i = 0; i <= d && d > 0; ++i) {
            Simplex f = src.face(x, i);
            Simplex target = s_faces.empty()
                                 ? dst.act(s, MonotoneMap::coface(d, i))
                                 : s_faces[static_cast<std::size_t>(i)];
            // face pointer is nondegenerate in a regular presentation
            std::vector<Simplex> sub;
            if (src.dim_of(f.base) > 0) {
                int fd = src.dim_of(f.base);
                for (int j = 0; j <= fd; ++j)
                    sub.push_back(dst.act(target, MonotoneMap::coface(fd, j)));
            }
            if (!propagate(f.base, target, sub, trail)) return false;
        }
        return true;
    }

    void run() {
        if (src.empty()) {
            emit();
            return;
        }
        bool regular = true;
        std::set<Id> nonmaximal;
        for (const Id& id : src.all_ids()) {
            int d = src.dim_of(id);
            for (int i = 0; i <= d && d > 0; ++i) {
                const Simplex& f = src.face(id, i);
                if (!f.is_nondegenerate()) regular = false;
                nonmaximal.insert(f.base);
            }
        }
        if (!regular) {
            run_simple();
            return;
        }
        std::vector<Id> maximals;
        for (const Id& id : src.all_ids())
            if (!nonmaximal.count(id)) maximals.push_back(id);
        // Assign high-dimensional cells first, then favor connectivity with
        // what is already assigned.
        std::stable_sort(maximals.begin(), maximals.end(), [&](const Id& p, const Id& q) {
            return src.dim_of(p) > src.dim_of(q);
        });
        std::vector<Id> ordered;
        std::set<Id> covered;  // generators with determined values so far
        std::vector<bool> taken(maximals.size(), false);
        for (std::size_t step = 0; step < maximals.size(); ++step) {
            int best = -1, best_gain = -1;
            for (std::size_t k = 0; k < maximals.size(); ++k) {
                if (taken[k]) continue;
                int gain = 0;
                int d = src.dim_of(maximals[k]);
                for (int i = 0; i <= d && d > 0; ++i)
                    if (covered.count(src.face(maximals[k], i).base)) ++gain;
                if (gain > best_gain) {
                    best_gain = gain;
                    best = static_cast<int>(k);
                }
            }
            taken[static_cast<std::size_t>(best)] = true;
            const Id& chosen = maximals[static_cast<std::size_t>(best)];
            ordered.push_back(chosen);
            for (const Id& f : face_closure(src, {chosen})) covered.insert(f);
        }
        run_maximal(ordered);
    }
};

}  // namespace

std::vector<SMap> enumerate_maps(SSetPtr src, SSetPtr dst, const MapSearchOptions& opts) {
    Searcher s{*src, *dst, opts};
    s.src_ptr = src;
    s.dst_ptr = dst;
    s.run();
    return std::move(s.out);
}

}  // namespace sset
