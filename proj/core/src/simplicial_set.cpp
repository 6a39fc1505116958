#include "ssetkit/simplicial_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace sset {

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::string s;
    for (const auto& issue : issues) {
        s += issue.simplex + ": " + issue.message + "\n";
    }
    return s;
}

void SSet::add_simplex(const Id& id, int dim, std::vector<Simplex> faces) {
    if (entries_.count(id))
        throw std::invalid_argument("SSet: duplicate simplex id '" + id + "'");
    if (dim < 0) throw std::invalid_argument("SSet: negative dimension");
    if (dim == 0) {
        if (!faces.empty()) throw std::invalid_argument("SSet: vertex with faces");
    } else if (static_cast<int>(faces.size()) != dim + 1) {
        throw std::invalid_argument("SSet: simplex '" + id + "' needs " +
                                    std::to_string(dim + 1) + " faces");
    }
    for (const Simplex& f : faces) {
        auto it = entries_.find(f.base);
        if (it == entries_.end())
            throw std::invalid_argument("SSet: face of '" + id + "' targets missing '" +
                                        f.base + "'");
        if (f.base_dim() != it->second.dim)
            throw std::invalid_argument("SSet: face surjection of '" + id +
                                        "' does not match dim of '" + f.base + "'");
        if (f.dim() != dim - 1)
            throw std::invalid_argument("SSet: face of '" + id + "' has wrong dimension");
        if (!f.surj.is_surjective())
            throw std::invalid_argument("SSet: face pointer of '" + id + "' not surjective");
    }
    entries_[id] = Entry{dim, std::move(faces)};
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(static_cast<std::size_t>(dim) + 1);
    auto& v = by_dim_[static_cast<std::size_t>(dim)];
    v.insert(std::lower_bound(v.begin(), v.end(), id), id);
}

int SSet::dim_of(const Id& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::out_of_range("SSet: no simplex '" + id + "'");
    return it->second.dim;
}

const std::vector<Simplex>& SSet::faces_of(const Id& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::out_of_range("SSet: no simplex '" + id + "'");
    return it->second.faces;
}

const std::vector<Id>& SSet::nondegenerate(int dim) const {
    static const std::vector<Id> kEmpty;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[static_cast<std::size_t>(dim)];
}

std::vector<Id> SSet::all_ids() const {
    std::vector<Id> out;
    out.reserve(entries_.size());
    for (const auto& level : by_dim_)
        for (const Id& id : level) out.push_back(id);
    return out;
}

Simplex SSet::normalized(const Id& id) const {
    return Simplex{id, MonotoneMap::identity(dim_of(id) + 1)};
}

Simplex SSet::face(const Id& id, int i) const {
    const auto& fs = faces_of(id);
    if (i < 0 || i >= static_cast<int>(fs.size()))
        throw std::out_of_range("SSet::face: index out of range for '" + id + "'");
    return fs[static_cast<std::size_t>(i)];
}

Simplex SSet::act(const Simplex& s, const MonotoneMap& op) const {
    if (op.codomain_size() != s.dim() + 1)
        throw std::invalid_argument("SSet::act: operator codomain does not match simplex");
    MonotoneMap total = s.surj.after(op);
    auto [pi, iota] = total.ez_factor();
    if (iota.is_identity()) return Simplex{s.base, pi};
    // Peel the largest missing vertex through the face table, then recurse
    // on the shrunken injection.
    int miss = iota.missing_values().back();
    Simplex f = face(s.base, miss);
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(iota.domain_size()));
    for (int j = 0; j < iota.domain_size(); ++j)
        vals.push_back(iota(j) < miss ? iota(j) : iota(j) - 1);
    MonotoneMap iota2(std::move(vals), iota.codomain_size() - 1);
    Simplex t = act(f, iota2);
    return Simplex{t.base, t.surj.after(pi)};
}

std::vector<Simplex> SSet::simplices_at_level(int n) const {
    std::vector<Simplex> out;
    for (int m = 0; m <= std::min(n, dim()); ++m) {
        auto surjs = surjections(n, m);
        for (const Id& id : nondegenerate(m))
            for (const auto& s : surjs) out.push_back(Simplex{id, s});
    }
    return out;
}

std::size_t SSet::count_at_level(int n) const {
    std::size_t total = 0;
    for (int m = 0; m <= std::min(n, dim()); ++m)
        total += nondegenerate(m).size() * surjections(n, m).size();
    return total;
}

ValidationReport SSet::validate() const {
    ValidationReport report;
    for (const auto& [id, entry] : entries_) {
        if (entry.dim < 2) continue;
        // d_i d_j = d_{j-1} d_i for i < j, evaluated as normalized pairs.
        for (int j = 1; j <= entry.dim; ++j) {
            for (int i = 0; i < j; ++i) {
                Simplex lhs = act(face(id, j), MonotoneMap::coface(entry.dim - 1, i));
                Simplex rhs = act(face(id, i), MonotoneMap::coface(entry.dim - 1, j - 1));
                if (!(lhs == rhs)) {
                    report.issues.push_back(
                        {id, "simplicial identity d_" + std::to_string(i) + " d_" +
                                 std::to_string(j) + " failed: " + lhs.str() +
                                 " != " + rhs.str()});
                }
            }
        }
    }
    return report;
}

bool operator==(const SSet& a, const SSet& b) {
    if (a.truncated_at_ != b.truncated_at_) return false;
    if (a.entries_.size() != b.entries_.size()) return false;
    for (const auto& [id, e] : a.entries_) {
        auto it = b.entries_.find(id);
        if (it == b.entries_.end()) return false;
        if (it->second.dim != e.dim || !(it->second.faces == e.faces)) return false;
    }
    return true;
}

std::vector<MonotoneMap> surjections(int n, int m) {
    std::vector<MonotoneMap> out;
    if (m > n || m < 0) return out;
    int k = n - m;  // descents to choose among positions 0..n-1
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    auto emit = [&]() {
        std::vector<int> vals(static_cast<std::size_t>(n) + 1);
        int drop = 0;
        std::size_t p = 0;
        for (int i = 0; i <= n; ++i) {
            vals[static_cast<std::size_t>(i)] = i - drop;
            if (p < idx.size() && idx[p] == i) {
                ++drop;
                ++p;
            }
        }
        out.emplace_back(std::move(vals), m + 1);
    };
    if (k == 0) {
        emit();
        return out;
    }
    while (true) {
        emit();
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 1 - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<MonotoneMap> injections(int m, int n) {
    std::vector<MonotoneMap> out;
    if (m > n || m < 0) return out;
    std::vector<int> vals(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) vals[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.emplace_back(vals, n + 1);
        int i = m;
        while (i >= 0 && vals[static_cast<std::size_t>(i)] == n - (m - i)) --i;
        if (i < 0) break;
        ++vals[static_cast<std::size_t>(i)];
        for (int j = i + 1; j <= m; ++j)
            vals[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<MonotoneMap> all_monotone(int m, int n) {
    std::vector<MonotoneMap> out;
    std::vector<int> vals(static_cast<std::size_t>(m) + 1, 0);
    while (true) {
        out.emplace_back(vals, n + 1);
        int i = m;
        while (i >= 0 && vals[static_cast<std::size_t>(i)] == n) --i;
        if (i < 0) break;
        int v = vals[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j <= m; ++j) vals[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

}  // namespace sset
