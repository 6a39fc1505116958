#pragma once

#include <functional>
#include <optional>

#include "ssetkit/smap.hpp"

namespace sset {

// ---------------------------------------------------------------------------
// Standard complexes

/// Δⁿ: one nondegenerate simplex per nonempty subset of [n]; the id of a
/// simplex is its vertex list joined by '.', e.g. "0.1.2".
SSetPtr std_simplex(int n);
/// ∂Δⁿ (omits the top cell) and Λⁿ_k (additionally omits the k-th face).
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);

/// Canonical inclusion of a subcomplex built with the same id scheme.
SMap inclusion(SSetPtr sub, SSetPtr whole);

/// The simplicial map Δᵐ -> Δⁿ induced by op : [m] -> [n].
SMap std_map(const MonotoneMap& op);

/// Id of the nondegenerate face of Δⁿ spanned by `vertices` (sorted).
Id subset_id(const std::vector<int>& vertices);
std::vector<int> parse_subset_id(const Id& id);

// ---------------------------------------------------------------------------
// Opposite

SSetPtr opposite(const SSetPtr& s);
/// Same normalized simplex seen in the opposite presentation.
Simplex opposite_simplex(const Simplex& s);
SMap opposite_map(const SMap& f);

// ---------------------------------------------------------------------------
// Join

struct JoinImpl;

struct JoinResult {
    SSetPtr sset;
    SMap incl_left, incl_right;  // A -> A⋆B, B -> A⋆B
    SMap to_interval;            // A⋆B -> Δ¹, left part over 0, right over 1
    std::shared_ptr<const JoinImpl> impl;

    /// The mixed simplex x⋆y; either side may be degenerate.
    Simplex pair(const Simplex& left, const Simplex& right) const;
    enum class Part { Left, Right, Mixed };
    Part part(const Id& id) const;
    /// For a mixed cell, its two nondegenerate constituents.
    std::pair<Id, Id> mixed_components(const Id& id) const;
    /// For a pure cell, the originating id.
    Id pure_component(const Id& id) const;
};

JoinResult join(SSetPtr a, SSetPtr b);
/// Functoriality: f⋆g on the joins the two results present.
SMap join_map(const JoinResult& src, const JoinResult& dst, const SMap& f, const SMap& g);

// ---------------------------------------------------------------------------
// Product

struct ProductImpl;

struct ProductResult {
    SSetPtr sset;
    SMap pr_left, pr_right;
    std::shared_ptr<const ProductImpl> impl;

    /// Normalizes a pair of equal-dimension simplices into the product.
    Simplex pair(const Simplex& left, const Simplex& right) const;
    /// Components of a normalized product simplex.
    std::pair<Simplex, Simplex> components(const Simplex& s) const;
};

ProductResult product(SSetPtr a, SSetPtr b);
SMap product_mediate(const ProductResult& p, const SMap& f, const SMap& g);
SMap product_map(const ProductResult& src, const ProductResult& dst, const SMap& f,
                 const SMap& g);
/// The symmetry A×B -> B×A.
SMap product_switch(const ProductResult& ab, const ProductResult& ba);

// ---------------------------------------------------------------------------
// Limits / colimits

struct PullbackResult {
    SSetPtr sset;
    SMap pr_left, pr_right;  // to X and Y
    const ProductResult& ambient() const { return *ambient_; }
    std::shared_ptr<ProductResult> ambient_;
};

/// Dimensionwise fiber product of f : X -> S and g : Y -> S.
PullbackResult pullback(const SMap& f, const SMap& g);
SMap pullback_mediate(const PullbackResult& p, const SMap& f, const SMap& g);

struct PushoutResult {
    SSetPtr sset;
    SMap from_c;  // C -> P
    SMap from_b;  // B -> P
};

/// Pushout of C <- A -> B where i : A -> B is a monomorphism.  C keeps its
/// ids; B-cells outside the image keep theirs unless that collides.
PushoutResult pushout_along_mono(const SMap& i, const SMap& f);
SMap pushout_mediate(const PushoutResult& p, const SMap& from_b, const SMap& from_c);

struct CoproductResult {
    SSetPtr sset;
    SMap incl_left, incl_right;
};

CoproductResult disjoint_union(SSetPtr a, SSetPtr b);
SMap coproduct_mediate(const CoproductResult& c, const SMap& f, const SMap& g);

SSetPtr empty_sset();

/// Induced subcomplex on the given nondegenerate ids (must be face-closed).
SSetPtr subcomplex(const SSetPtr& s, const std::vector<Id>& keep);
/// Smallest face-closed id set containing the seeds.
std::vector<Id> face_closure(const SSet& s, std::vector<Id> seeds);

// ---------------------------------------------------------------------------
// Slices

struct SliceResult {
    SSetPtr sset;
    SMap projection;  // to X
};

/// X_{/a}: q-simplices are (q+1)-simplices of X whose last vertex is a.
SliceResult slice_over(SSetPtr x, const Id& vertex);
/// X_{b/}: q-simplices are (q+1)-simplices of X whose first vertex is b.
SliceResult coslice_under(SSetPtr x, const Id& vertex);

// ---------------------------------------------------------------------------
// Nerves

/// A finite category: all non-identity arrows listed explicitly, with a
/// total composition table on composable pairs ("" means the composite is
/// an identity).
struct FinCategory {
    struct Arrow {
        Id name, src, dst;
    };
    std::vector<Id> objects;
    std::vector<Arrow> arrows;
    std::map<std::pair<Id, Id>, Id> compose;  // (first, second) -> name or ""

    void check() const;  // associativity, table totality
    bool has_cycle() const;
};

/// Nerve: n-simplices are composable n-chains.  A category with a cycle of
/// non-identity arrows has nondegenerate simplices in every dimension and
/// requires `cap`; the result is then marked truncated.
SSetPtr nerve(const FinCategory& c, std::optional<int> cap = std::nullopt);

/// Poset presented by its strict relations (closed under transitivity).
FinCategory poset_category(const std::vector<Id>& elements,
                           const std::vector<std::pair<Id, Id>>& less);
SSetPtr nerve_of_poset(const std::vector<Id>& elements,
                       const std::vector<std::pair<Id, Id>>& less);

// ---------------------------------------------------------------------------
// Isomorphism search

struct IsoOptions {
    std::map<Id, Id> pinned;                       // required generator images
    const SMap* over_src = nullptr;                // structure map of A
    const SMap* over_dst = nullptr;                // structure map of B; require
                                                   // over_dst ∘ iso = over_src
};

/// Dimension-graded backtracking over nondegenerate simplices, pruned by
/// face-profile fingerprints.  Failure is exhaustive.
std::optional<SMap> iso_search(SSetPtr a, SSetPtr b, const IsoOptions& opts = {});

// ---------------------------------------------------------------------------
// Simplicial map enumeration

struct MapSearchOptions {
    std::map<Id, Simplex> pinned;    // required values on some generators
    const SMap* over_src = nullptr;  // src -> base
    const SMap* over_dst = nullptr;  // dst -> base
    std::optional<std::size_t> limit;
};

/// All simplicial maps src -> dst subject to the constraints, in a stable
/// order.  Exhaustive backtracking over generators by (dim, id).
std::vector<SMap> enumerate_maps(SSetPtr src, SSetPtr dst, const MapSearchOptions& opts = {});

}  // namespace sset
