#pragma once

#include "lie5/cohomology.hpp"
#include "lie5/extensions.hpp"
#include "lie5/lie_algebra.hpp"

#include <functional>
#include <string>

namespace lie5 {

// Algebra text format:
//   { "name": str, "dim": n, "basis": [labels],
//     "brackets": [[label_i, label_j, {label_k: "p/q", ...}], ...] }
// Unlisted brackets are zero; listing both (i,j) and (j,i) is a format
// error, as is a bracket of a label with itself.
LieAlgebra algebra_from_json_text(const std::string& text);
std::string algebra_to_json_text(const LieAlgebra& L);

// Resolves "algebra": either an inline object or a name looked up through
// the supplied resolver (the CLI passes the atlas).
using AlgebraResolver = std::function<LieAlgebra(const std::string&)>;

// Representation format:
//   { "algebra": <name or inline>, "module_dim": m,
//     "action": { label: [[...rationals...]], ... } }
// Omitted labels act as zero.
Representation representation_from_json_text(const std::string& text,
                                             const AlgebraResolver& resolve);

// ExtensionSpec format: like the representation format, with "quotient" and
// "kernel" algebras and a cocycle:
//   { "quotient": <name or inline>, "kernel": <name or inline>,
//     "action": { label: [[...]], ... },
//     "cocycle": [[label_i, label_j, [h-vector rationals]], ...] }
ExtensionSpec extension_spec_from_json_text(const std::string& text,
                                            const AlgebraResolver& resolve);

}  // namespace lie5
