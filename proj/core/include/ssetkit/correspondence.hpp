#pragma once

#include "ssetkit/combinators.hpp"
#include "ssetkit/levelwise.hpp"

namespace sset {

/// An object of (sSet)_{/S}: a simplicial set with a structure map.
struct SliceObject {
    SSetPtr total;
    SMap structure;  // total -> base
    const SSetPtr& base() const { return structure.target(); }
};

/// A simplicial set over Δ¹ whose fibers over 0 and 1 are identified with
/// B and A by stored embeddings.
struct Correspondence {
    SSetPtr a, b;
    SSetPtr total;
    SMap structure;  // total -> Δ¹
    SMap incl_a;     // A -> total, image = fiber over 1
    SMap incl_b;     // B -> total, image = fiber over 0

    /// Checks the fiber conditions exactly: the embeddings are mono, land
    /// in the right fibers, and exhaust them.
    ValidationReport validate() const;

    /// Inverts an embedding on a normalized total simplex in its image.
    Simplex preimage_in_a(const Simplex& s) const;
    Simplex preimage_in_b(const Simplex& s) const;
};

/// A morphism of correspondences: a map over Δ¹ restricting to the
/// identity on A and on B.
bool is_corr_map(const Correspondence& x, const Correspondence& y, const SMap& f);

/// All correspondence morphisms X -> Y.
std::vector<SMap> corr_maps(const Correspondence& x, const Correspondence& y,
                            std::optional<std::size_t> limit = std::nullopt);

/// B ⊔ A over ∂Δ¹ ⊆ Δ¹ — the initial object.
Correspondence corr_initial(SSetPtr a, SSetPtr b);

/// B ⋆ A — the terminal object.
Correspondence corr_terminal(SSetPtr a, SSetPtr b);

/// The unique correspondence morphism X -> B⋆A, via the join decomposition
/// of each simplex.
SMap terminal_map(const Correspondence& x, const Correspondence& terminal,
                  const JoinResult& jr);

/// The reflector L : (sSet)_{/B⋆A} -> Corr(A,B): pushout of
/// B⊔A <- p⁻¹(B⊔A) -> X.  Also returns the unit X -> L(X).
struct ReflectorResult {
    Correspondence corr;
    SMap unit;  // X -> L(X) (underlying simplicial map)
};
ReflectorResult reflector_L(const SliceObject& x, const Correspondence& terminal,
                            const JoinResult& jr, SSetPtr a, SSetPtr b);

/// Functoriality of L on maps over B⋆A.
SMap reflector_map(const ReflectorResult& lx, const ReflectorResult& ly, const SMap& f);

/// X ⊗ K: pushout of (B×K)⊔(A×K) -> X×K along the projections.
Correspondence tensor(const Correspondence& x, SSetPtr k);

/// ^K Y: levelwise maps K×Δⁿ -> Y over a simplex of B⋆A; truncated at cap.
Correspondence cotensor(const Correspondence& y, SSetPtr k, int cap,
                        const Correspondence& terminal, const JoinResult& jr,
                        const SMap& to_terminal);

/// map_S(M, X): n-simplices are maps M×Δⁿ -> X over S, for n <= cap.
SSetPtr mapping_space(const SliceObject& m, const SliceObject& x, int cap);

/// Γ(X) = map_{Δ¹}(Δ¹, X), with structure map to A×B induced by ∂Δ¹ ⊆ Δ¹.
SliceObject gamma(const Correspondence& x, const ProductResult& axb, int cap);

/// C(X) = (X×Δ¹) ∪_{X×∂Δ¹} (B⊔A) for (f,g) : X -> A×B.
Correspondence cee(const SliceObject& x, const ProductResult& axb, SSetPtr a, SSetPtr b);

}  // namespace sset
