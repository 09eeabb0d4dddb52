#ifndef GREENLIE_SERIALIZATION_HPP
#define GREENLIE_SERIALIZATION_HPP

#include "greenlie/cup.hpp"
#include "greenlie/extensions.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace greenlie {

/// All documents are JSON with exact scalars as canonical strings ("a" or "a/b",
/// denominator positive), matrices as arrays of row arrays, and sparse tables for
/// brackets and cochains. Loaders throw ParseError on any malformed document; they do
/// NOT validate algebraic axioms — loaded objects are unchecked so that broken inputs
/// can be loaded and then reported by the validators.
using Json = nlohmann::ordered_json;

Json dump_matrix(const Matrix& m);
/// The expected shape comes from the surrounding document; `name` labels errors.
Matrix load_matrix(const Json& doc, std::size_t rows, std::size_t cols,
                   const std::string& name = "matrix");

/// {"dim": n, "basis": [names], "brackets": [{"i": i, "j": j, "coeffs": {"k": "a/b"}}]}
/// Pairs omitted from "brackets" have zero bracket. On load the table is completed
/// antisymmetrically; entries that contradict an earlier entry or its mirror are
/// rejected, as are nonzero diagonal entries.
Json dump_lie_algebra(const LieAlgebra& g);
LieAlgebra load_lie_algebra(const Json& doc);

/// {"p": p, "top": <algebra>, "bottom": <algebra>, "r": <matrix>, "t": <matrix>,
///  "c": <matrix>} with r: bottom x top, t: top x bottom, c: bottom x bottom.
Json dump_functor(const GreenLieFunctor& g);
GreenLieFunctor load_functor(const Json& doc);

/// {"module_top_dim", "module_bottom_dim", "r", "t", "c", "action_top": [one matrix per
/// L(C_p) basis vector], "action_bottom": [...]} plus optional "bracket_top" /
/// "bracket_bottom" algebra documents when the module carries Lie structure (cup
/// products need it). Loading needs L for the action shapes.
Json dump_bimodule(const LieBimodule& m);
LieBimodule load_bimodule(const Json& doc, const GreenLieFunctor& L);

/// {"degree": n, "top": {"i,j": [module coords]}, "bottom": {...}} keyed by strictly
/// increasing index tuples (comma-joined; the empty key for degree 0); zero blocks are
/// omitted. Loading needs L and M for the coefficient shapes.
Json dump_cochain(const EquivCochain& f);
EquivCochain load_cochain(const Json& doc, const GreenLieFunctor& L, const LieBimodule& M);

/// {"ok": bool, "findings": [{"check", "indices", "detail"}]}
Json dump_report(const ValidationReport& report);

/// {"degree", "dim_top", "dim_bottom", "representatives": [<cochain> per top class],
///  "representatives_bottom": [level maps], "induced_r/t/c": matrices}
Json dump_cohomology(const GreenLieFunctor& L, const LieBimodule& M,
                     const CohomologyResult& h);

/// {"max_degree", "groups": [<cohomology> per degree], "products": {"m,n": {"top",
///  "bottom", "top_defect_entries", "bottom_defect_entries"}}}
Json dump_product_table(const GreenLieFunctor& L, const LieBimodule& M,
                        const GradedCohomologyTable& table);

/// The functor document of the total space B extended with "i", "j", "s" (levelwise
/// matrix pairs), "quotient" (functor document of L), "module" (bimodule document of M)
/// and "provenance"; pass the twisting cocycle to record it in the provenance.
Json dump_extension(const Extension& E, const EquivCochain* cocycle = nullptr);
Extension load_extension(const Json& doc);

/// Canonical rendering: 2-space indent, trailing newline. Identical documents render
/// byte-identically.
std::string render_document(const Json& doc);
Json parse_document(const std::string& text);
Json read_document(const std::string& path);
void write_document(const std::string& path, const Json& doc);

} // namespace greenlie

#endif
