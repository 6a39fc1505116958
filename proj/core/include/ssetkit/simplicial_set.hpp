#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ssetkit/monotone.hpp"

namespace sset {

using Id = std::string;

/// A simplex in Eilenberg-Zilber normal form: a nondegenerate base
/// together with the surjective operator producing it.  The surjection is
/// the identity exactly when the simplex is nondegenerate.
struct Simplex {
    Id base;
    MonotoneMap surj;

    int dim() const { return surj.domain_size() - 1; }
    int base_dim() const { return surj.codomain_size() - 1; }
    bool is_nondegenerate() const { return surj.is_identity(); }

    friend bool operator==(const Simplex& a, const Simplex& b) {
        return a.base == b.base && a.surj == b.surj;
    }
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        if (auto c = a.base <=> b.base; c != 0) return c;
        return a.surj <=> b.surj;
    }
    std::string str() const { return base + "·" + surj.str(); }
};

struct ValidationIssue {
    Id simplex;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string str() const;
};

/// A finite simplicial set presented by its nondegenerate simplices and a
/// face table with normalized entries.  Immutable once built; all
/// operations are const.
class SSet {
public:
    SSet() = default;

    /// Registers a nondegenerate simplex.  `faces` must have dim+1 entries
    /// (d_0..d_dim) for dim >= 1 and be empty for vertices.  Faces must
    /// refer to already-added simplices.
    void add_simplex(const Id& id, int dim, std::vector<Simplex> faces = {});

    /// Marks the presentation as only faithful up to the given dimension.
    void set_truncation(int cap) { truncated_at_ = cap; }
    std::optional<int> truncation() const { return truncated_at_; }

    bool contains(const Id& id) const { return entries_.count(id) > 0; }
    int dim_of(const Id& id) const;
    const std::vector<Simplex>& faces_of(const Id& id) const;

    /// Ids of nondegenerate simplices of the given dimension, sorted.
    const std::vector<Id>& nondegenerate(int dim) const;
    std::vector<Id> all_ids() const;  // dimension-major order
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    Simplex normalized(const Id& id) const;
    Simplex face(const Id& id, int i) const;

    /// Functorial action: the normalized value of S(op) on s, where
    /// op : [m] -> [dim s].  Total, pure, routes iterated faces through
    /// the face table with re-normalization at each step.
    Simplex act(const Simplex& s, const MonotoneMap& op) const;

    /// All n-simplices: pairs (nondegenerate base of dim m <= n,
    /// surjection [n] ->> [m]).
    std::vector<Simplex> simplices_at_level(int n) const;
    std::size_t count_at_level(int n) const;

    /// Checks all presentation invariants; violations carry witnesses.
    ValidationReport validate() const;

    friend bool operator==(const SSet& a, const SSet& b);

private:
    struct Entry {
        int dim = 0;
        std::vector<Simplex> faces;
    };
    std::map<Id, Entry> entries_;
    std::vector<std::vector<Id>> by_dim_;
    std::optional<int> truncated_at_;
};

using SSetPtr = std::shared_ptr<const SSet>;

/// Surjections [n] ->> [m], enumerated by descent sets, lexicographic.
std::vector<MonotoneMap> surjections(int n, int m);

/// Injections [m] -> [n], enumerated by image sets, lexicographic.
std::vector<MonotoneMap> injections(int m, int n);

/// All monotone maps [m] -> [n].
std::vector<MonotoneMap> all_monotone(int m, int n);

}  // namespace sset
