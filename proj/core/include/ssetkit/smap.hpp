#pragma once

#include <map>

#include "ssetkit/simplicial_set.hpp"

namespace sset {

/// A simplicial map, stored on nondegenerate generators of the source.
/// Values on degenerate simplices follow by naturality.
class SMap {
public:
    SMap() = default;
    SMap(SSetPtr source, SSetPtr target, std::map<Id, Simplex> assignment);

    static SMap identity(SSetPtr s);

    const SSetPtr& source() const { return src_; }
    const SSetPtr& target() const { return dst_; }
    const std::map<Id, Simplex>& assignment() const { return assign_; }

    /// Value on a nondegenerate source simplex.
    const Simplex& at(const Id& id) const;

    /// Value on an arbitrary normalized simplex of the source.
    Simplex apply(const Simplex& s) const;

    /// Composite g ∘ *this (apply *this first).
    SMap then(const SMap& g) const;

    /// Same assignment viewed into a larger (or equal) target presentation.
    /// Every value must already exist in `new_target`.
    SMap with_target(SSetPtr new_target) const;

    bool is_identity_assignment() const;
    bool is_mono() const;

    /// Naturality on every generator and face index; also checks dimension
    /// preservation and target existence.
    ValidationReport validate() const;

    friend bool operator==(const SMap& a, const SMap& b);

private:
    SSetPtr src_;
    SSetPtr dst_;
    std::map<Id, Simplex> assign_;
};

/// Structural equality of the underlying presentations (pointer fast path).
bool same_sset(const SSetPtr& a, const SSetPtr& b);

}  // namespace sset
