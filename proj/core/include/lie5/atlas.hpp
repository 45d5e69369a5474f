#pragma once

#include "lie5/lie_algebra.hpp"
#include "lie5/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lie5 {

// Catalog entry: an algebra plus the invariants claimed for it, re-derivable
// by the library (the verify suite and tests assert equality). Geometric
// metadata (model/maximality flags and the like) is carried in free-form
// tags and never asserted.
struct AtlasEntry {
  LieAlgebra algebra;
  std::size_t claimed_center_dim = 0;
  std::size_t claimed_sout_dim = 0;
  bool claimed_unimodular = false;
  std::optional<Subspace> claimed_nilradical;
  // Claimed abelian subalgebras (e.g. stabilizers of associated-bundle
  // actions at rational parameter samples); checked to be abelian
  // subalgebras, nothing more.
  std::optional<Subspace> claimed_abelian_subalgebra;
  std::vector<std::string> tags;
  std::string provenance;
};

// Alphabetized list of entry names.
std::vector<std::string> atlas_list();

// Throws UnknownName for unlisted names.
const AtlasEntry& atlas_get(const std::string& name);
bool atlas_has(const std::string& name);

// Canonical serialization of an entry's algebra in the algebra text format.
std::string atlas_export_text(const std::string& name);

enum class VerifyTable {
  derivations,   // centers and traceless outer derivation algebras
  cohozero,      // H^2(isom M; R) = 0 for the three constant curvatures
  essential_coho,  // H^2(conf+ E^2; R^2) case table
  essential_out,   // outer derivation algebra dimensions
  nilmanifolds,    // H^2(R^2; R^3), built extensions, filtration, rotations
};

Report verify_paper(VerifyTable table);

// Self-consistency sweep: every claimed field of every entry equals the
// freshly computed value.
Report verify_atlas_claims();

}  // namespace lie5
