#ifndef GREENLIE_EXTENSIONS_HPP
#define GREENLIE_EXTENSIONS_HPP

#include "greenlie/cohomology.hpp"

#include <optional>

namespace greenlie {

/// Levelwise linear splitting of the quotient map of an extension: j o s = id, with s
/// commuting with r, t and c. A section is not a Lie homomorphism in general; its
/// failure to be one is the extracted 2-cocycle.
struct SectionPair {
  Matrix top;    ///< B(C_p) x L(C_p)
  Matrix bottom; ///< B(e) x L(e)
};

/// Abelian-kernel extension 0 -> M -> B -> L -> 0 of C_p-Green functors of Lie type:
/// i is an injective morphism of C_p-Mackey functors, j a surjective morphism of Green
/// functors of Lie type, ker j = im i at both levels, the bracket of B vanishes on im i
/// and induces M's module structure there.
struct Extension {
  GreenLieFunctor L;
  LieBimodule M;
  GreenLieFunctor B;
  GreenLieMorphism i; ///< kernel inclusion M -> B
  GreenLieMorphism j; ///< quotient map B -> L
  std::optional<SectionPair> s;
};

/// Checks every Extension invariant: validity of L and B (findings prefixed "L_", "B_"),
/// of M over L ("M_") and of j as a morphism ("j_"); injectivity of i, surjectivity of
/// j, exactness, the Mackey squares for i, the abelian kernel, agreement of B's bracket
/// with M's actions on the kernel, and the section conditions when s is present.
ValidationReport validate_extension(const Extension& E);

/// The six conditions making a degree-2 cochain pair a cocycle, in canonical order:
/// 1 top-level Chevalley-Eilenberg cocycle, 2 bottom-level cocycle, 3 conjugation
/// compatibility f_e(c_L x, c_L y) = c_M f_e(x, y), 4 restriction compatibility
/// f_e(r_L x, r_L y) = r_M f_top(x, y), 5 transfer in the first slot
/// f_top(t_L x, a) = t_M f_e(x, r_L a), 6 transfer in the last slot
/// f_top(a, t_L x) = t_M f_e(r_L a, x). Findings are named condition_<k>_<name> with
/// the offending basis indices.
ValidationReport check_cocycle_conditions(const GreenLieFunctor& L, const LieBimodule& M,
                                          const EquivCochain& f);

/// The extension with total space M + L (module coordinates first) twisted by a
/// 2-cocycle: bracket ((u,x), (v,y)) = (x.v - y.u + f(x,y), [x,y]) at each level,
/// componentwise r, t, c, i = (u -> (u,0)), j = ((u,x) -> x) and the canonical section
/// x -> (0,x). The result passes validate_green_lie and validate_extension.
/// Errors: PrecondError("NotACocycle") naming the first violated cocycle condition
/// together with the axiom the unchecked total space breaks -- a failed condition
/// always breaks one (1,2 -> jacobi; 3 -> conjugation hom; 4 -> restriction hom;
/// 5,6 -> Frobenius).
Extension build_extension(const GreenLieFunctor& L, const LieBimodule& M,
                          const EquivCochain& f);

/// The 2-cocycle measuring the section's failure to split the brackets:
/// f(x,y) = i^{-1}([s x, s y]_B - s [x,y]_L) at each level, the preimage a deterministic
/// linear solve against i's columns. The output is verified to be a cocycle pair.
/// Errors: PrecondError("SectionMissing" | "SectionNotCompatible");
/// InternalCheckError("PreimageFailure") when a bracket defect escapes im i (falsifies
/// exactness); InternalCheckError("ConstraintViolation") when the output fails the
/// cocycle conditions.
EquivCochain extract_cocycle(const Extension& E);

/// A 1-cochain pair h with dh = f - g, or nullopt when no such h exists. The witness is
/// searched over the constrained degree-1 pair space (conjugation, restriction and both
/// transfer families), so that beta(u,x) = (u + h(x), x) is an equivalence of the
/// twisted extensions: a Lie isomorphism at both levels (unit triangular, hence
/// invertible) commuting with r, t and c. Those facts are re-verified on the returned
/// witness; InternalCheckError("WellDefinednessFailure") on any failure.
/// Errors: PrecondError("NotACocycle") unless f and g are cocycle pairs.
std::optional<EquivCochain> find_equivalence(const GreenLieFunctor& L, const LieBimodule& M,
                                             const EquivCochain& f, const EquivCochain& g);

/// Equivalence classes of abelian-kernel extensions of L by M form a Q-vector space
/// isomorphic to degree-2 cohomology. The report carries the dimension at both levels
/// (there are infinitely many classes whenever it is positive, so never a count),
/// representative cocycle pairs for the top level, and the built extension for each
/// representative.
struct ExtensionClassification {
  CohomologyResult h2;
  std::vector<EquivCochain> representatives;
  std::vector<Extension> extensions;
};

ExtensionClassification classify_extensions(const GreenLieFunctor& L, const LieBimodule& M);

} // namespace greenlie

#endif
