#include "ssetkit/smap.hpp"

#include <stdexcept>

namespace sset {

bool same_sset(const SSetPtr& a, const SSetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

SMap::SMap(SSetPtr source, SSetPtr target, std::map<Id, Simplex> assignment)
    : src_(std::move(source)), dst_(std::move(target)), assign_(std::move(assignment)) {
    if (!src_ || !dst_) throw std::invalid_argument("SMap: null source or target");
    for (const Id& id : src_->all_ids()) {
        auto it = assign_.find(id);
        if (it == assign_.end())
            throw std::invalid_argument("SMap: no value for generator '" + id + "'");
        const Simplex& v = it->second;
        if (!dst_->contains(v.base))
            throw std::invalid_argument("SMap: value of '" + id + "' targets missing simplex");
        if (v.base_dim() != dst_->dim_of(v.base) || v.dim() != src_->dim_of(id))
            throw std::invalid_argument("SMap: value of '" + id + "' has wrong dimension");
        if (!v.surj.is_surjective())
            throw std::invalid_argument("SMap: value of '" + id + "' is not normalized");
    }
    if (assign_.size() != src_->size())
        throw std::invalid_argument("SMap: assignment mentions unknown generators");
}

SMap SMap::identity(SSetPtr s) {
    std::map<Id, Simplex> a;
    for (const Id& id : s->all_ids()) a.emplace(id, s->normalized(id));
    return SMap(s, s, std::move(a));
}

const Simplex& SMap::at(const Id& id) const {
    auto it = assign_.find(id);
    if (it == assign_.end()) throw std::out_of_range("SMap: no generator '" + id + "'");
    return it->second;
}

Simplex SMap::apply(const Simplex& s) const {
    const Simplex& v = at(s.base);
    return Simplex{v.base, v.surj.after(s.surj)};
}

SMap SMap::then(const SMap& g) const {
    if (!same_sset(dst_, g.src_))
        throw std::invalid_argument("SMap::then: middle objects disagree");
    std::map<Id, Simplex> a;
    for (const auto& [id, v] : assign_) a.emplace(id, g.apply(v));
    return SMap(src_, g.dst_, std::move(a));
}

SMap SMap::with_target(SSetPtr new_target) const {
    return SMap(src_, std::move(new_target), assign_);
}

bool SMap::is_identity_assignment() const {
    for (const auto& [id, v] : assign_)
        if (v.base != id || !v.surj.is_identity()) return false;
    return true;
}

bool SMap::is_mono() const {
    std::map<Id, Id> seen;
    for (const auto& [id, v] : assign_) {
        if (!v.is_nondegenerate()) return false;
        auto [it, fresh] = seen.emplace(v.base, id);
        if (!fresh) return false;
    }
    return true;
}

ValidationReport SMap::validate() const {
    ValidationReport report;
    for (const auto& [id, v] : assign_) {
        int n = src_->dim_of(id);
        for (int i = 0; i <= n && n > 0; ++i) {
            Simplex lhs = apply(src_->face(id, i));
            Simplex rhs = dst_->act(v, MonotoneMap::coface(n, i));
            if (!(lhs == rhs))
                report.issues.push_back({id, "naturality fails at face " + std::to_string(i) +
                                                 ": " + lhs.str() + " != " + rhs.str()});
        }
    }
    return report;
}

bool operator==(const SMap& a, const SMap& b) {
    return same_sset(a.src_, b.src_) && same_sset(a.dst_, b.dst_) && a.assign_ == b.assign_;
}

}  // namespace sset
