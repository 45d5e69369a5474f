#include "lie5/atlas.hpp"

#include "lie5/cohomology.hpp"
#include "lie5/derivations.hpp"
#include "lie5/errors.hpp"
#include "lie5/extensions.hpp"
#include "lie5/json_io.hpp"

#include <map>
#include <memory>
#include <sstream>

namespace lie5 {

namespace {

// Readable construction of structure constants by label.
class Build {
 public:
  Build(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)) {}

  Build& br(const std::string& a, const std::string& b,
            std::vector<std::pair<std::string, Rational>> terms) {
    std::size_t i = index(a), j = index(b);
    Vec v(labels_.size());
    for (const auto& [label, coeff] : terms) v[index(label)] = coeff;
    if (i < j)
      structure_[{i, j}] = std::move(v);
    else
      structure_[{j, i}] = vec_scale(-1, v);
    return *this;
  }

  LieAlgebra done() const { return LieAlgebra(name_, labels_, structure_); }

 private:
  std::size_t index(const std::string& l) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == l) return i;
    throw std::invalid_argument("atlas builder: unknown label " + l);
  }

  std::string name_;
  std::vector<std::string> labels_;
  LieAlgebra::StructureMap structure_;
};

LieAlgebra make_rn(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return LieAlgebra("r" + std::to_string(n), std::move(labels), {});
}

LieAlgebra make_heis3() {
  return Build("heis3", {"x", "y", "z"}).br("x", "y", {{"z", 1}}).done();
}

LieAlgebra make_heis5() {
  return Build("heis5", {"x1", "y1", "x2", "y2", "z"})
      .br("x1", "y1", {{"z", 1}})
      .br("x2", "y2", {{"z", 1}})
      .done();
}

LieAlgebra make_sol3() {
  return Build("sol3", {"x", "y", "z"})
      .br("z", "x", {{"x", 1}})
      .br("z", "y", {{"y", -1}})
      .done();
}

LieAlgebra make_so3(const std::string& name = "so3") {
  return Build(name, {"e1", "e2", "e3"})
      .br("e1", "e2", {{"e3", 1}})
      .br("e2", "e3", {{"e1", 1}})
      .br("e3", "e1", {{"e2", 1}})
      .done();
}

LieAlgebra make_sl2(const std::string& name = "sl2") {
  return Build(name, {"h", "e", "f"})
      .br("h", "e", {{"e", 2}})
      .br("h", "f", {{"f", -2}})
      .br("e", "f", {{"h", 1}})
      .done();
}

LieAlgebra make_isom_e2() {
  return Build("isom_e2", {"x", "y", "r"})
      .br("r", "x", {{"y", 1}})
      .br("r", "y", {{"x", -1}})
      .done();
}

// Isometry algebra of the 3-dimensional space form with curvature K:
// spanning set r_ij (i<j) and t_i with [r_ij, r_jk] = r_ki,
// [r_ij, t_i] = t_j, [t_i, t_j] = K r_ij.
LieAlgebra make_isom3(const std::string& name, const Rational& curvature) {
  Build b(name, {"r12", "r13", "r23", "t1", "t2", "t3"});
  b.br("r12", "r13", {{"r23", 1}})
      .br("r12", "r23", {{"r13", -1}})
      .br("r13", "r23", {{"r12", 1}});
  b.br("r12", "t1", {{"t2", 1}}).br("r12", "t2", {{"t1", -1}});
  b.br("r13", "t1", {{"t3", 1}}).br("r13", "t3", {{"t1", -1}});
  b.br("r23", "t2", {{"t3", 1}}).br("r23", "t3", {{"t2", -1}});
  if (curvature != 0) {
    b.br("t1", "t2", {{"r12", curvature}})
        .br("t1", "t3", {{"r13", curvature}})
        .br("t2", "t3", {{"r23", curvature}});
  }
  return b.done();
}

LieAlgebra make_isom_heis3() {
  return Build("isom_heis3", {"x", "y", "z", "r"})
      .br("x", "y", {{"z", 1}})
      .br("r", "x", {{"y", 1}})
      .br("r", "y", {{"x", -1}})
      .done();
}

LieAlgebra make_conf_e2() {
  return Build("conf_e2", {"x", "y", "r", "s"})
      .br("r", "x", {{"y", 1}})
      .br("r", "y", {{"x", -1}})
      .br("s", "x", {{"x", 1}})
      .br("s", "y", {{"y", 1}})
      .done();
}

LieAlgebra make_conf_e3() {
  Build b("conf_e3", {"t1", "t2", "t3", "r12", "r13", "r23", "s"});
  b.br("r12", "r13", {{"r23", 1}})
      .br("r12", "r23", {{"r13", -1}})
      .br("r13", "r23", {{"r12", 1}});
  b.br("r12", "t1", {{"t2", 1}}).br("r12", "t2", {{"t1", -1}});
  b.br("r13", "t1", {{"t3", 1}}).br("r13", "t3", {{"t1", -1}});
  b.br("r23", "t2", {{"t3", 1}}).br("r23", "t3", {{"t2", -1}});
  b.br("s", "t1", {{"t1", 1}}).br("s", "t2", {{"t2", 1}}).br("s", "t3", {{"t3", 1}});
  return b.done();
}

// R |x conf+ E^3 with the scaling element acting on the extra line by -3,
// the unique choice making the sum unimodular.
LieAlgebra make_r_semi_conf_e3() {
  Build b("r_semi_conf_e3", {"z0", "t1", "t2", "t3", "r12", "r13", "r23", "s"});
  b.br("r12", "r13", {{"r23", 1}})
      .br("r12", "r23", {{"r13", -1}})
      .br("r13", "r23", {{"r12", 1}});
  b.br("r12", "t1", {{"t2", 1}}).br("r12", "t2", {{"t1", -1}});
  b.br("r13", "t1", {{"t3", 1}}).br("r13", "t3", {{"t1", -1}});
  b.br("r23", "t2", {{"t3", 1}}).br("r23", "t3", {{"t2", -1}});
  b.br("s", "t1", {{"t1", 1}}).br("s", "t2", {{"t2", 1}}).br("s", "t3", {{"t3", 1}});
  b.br("s", "z0", {{"z0", -3}});
  return b.done();
}

LieAlgebra make_a51() {
  return Build("a51", {"x", "y", "u", "v", "w"})
      .br("x", "w", {{"u", 1}})
      .br("y", "w", {{"v", 1}})
      .done();
}

LieAlgebra make_a53() {
  return Build("a53", {"x", "y", "u", "v", "w"})
      .br("x", "w", {{"u", 1}})
      .br("y", "w", {{"v", 1}})
      .br("x", "y", {{"w", 1}})
      .done();
}

// The nilpotent algebra whose automorphisms are all upper-triangular (its
// maximal realization has no compact directions).
LieAlgebra make_nil5_rigid() {
  return Build("nil5_rigid", {"x", "y", "u", "v", "w"})
      .br("x", "u", {{"w", 1}})
      .br("y", "v", {{"w", 1}})
      .br("x", "y", {{"u", 1}})
      .done();
}

// R^4 |x R with t acting by the matrix with the given diagonal, plus
// optional Jordan 1 in the (1,2) slot.
LieAlgebra make_r4_semi_r(const std::string& name, const Vec& diag,
                          bool jordan12) {
  Build b(name, {"e1", "e2", "e3", "e4", "t"});
  for (std::size_t i = 0; i < 4; ++i) {
    std::string ei = "e" + std::to_string(i + 1);
    std::vector<std::pair<std::string, Rational>> terms;
    if (diag[i] != 0) terms.push_back({ei, diag[i]});
    if (jordan12 && i == 1) terms.push_back({"e1", 1});
    if (!terms.empty()) b.br("t", ei, terms);
  }
  return b.done();
}

LieAlgebra make_r2_semi_sl2() {
  LieAlgebra sl2 = make_sl2();
  LieAlgebra r2("r2_mod", {"u", "v"}, {});
  std::vector<RatMatrix> action = {
      RatMatrix{{1, 0}, {0, -1}},  // h
      RatMatrix{{0, 1}, {0, 0}},   // e
      RatMatrix{{0, 0}, {1, 0}},   // f
  };
  return semidirect_sum(sl2, r2, action, "r2_semi_sl2");
}

LieAlgebra make_heis3_semi_sl2() {
  LieAlgebra sl2 = make_sl2();
  LieAlgebra h = make_heis3();
  std::vector<RatMatrix> action = {
      RatMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}},
      RatMatrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
      RatMatrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}},
  };
  return semidirect_sum(sl2, h, action, "heis3_semi_sl2");
}

LieAlgebra make_r3_semi_so3() {
  LieAlgebra so3 = make_so3();
  LieAlgebra r3("r3_mod", {"u1", "u2", "u3"}, {});
  std::vector<RatMatrix> action = {
      RatMatrix{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}},
      RatMatrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}},
      RatMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 0}},
  };
  return semidirect_sum(so3, r3, action, "r3_semi_so3");
}

LieAlgebra make_r3_semi_so21() {
  LieAlgebra sl2 = make_sl2();
  LieAlgebra r3("r3_mod", {"u1", "u2", "u3"}, {});
  // Adjoint action of sl2 on its underlying 3-space (h, e, f order),
  // preserving a signature (2,1) form.
  std::vector<RatMatrix> action;
  for (std::size_t i = 0; i < 3; ++i) action.push_back(sl2.adjoint_basis(i));
  return semidirect_sum(sl2, r3, action, "r3_semi_so21");
}

struct Claims {
  std::size_t center = 0;
  std::size_t sout = 0;
  bool unimodular = true;
};

AtlasEntry entry(LieAlgebra algebra, Claims c, std::vector<std::string> tags,
                 std::string provenance) {
  AtlasEntry e;
  e.algebra = std::move(algebra);
  e.claimed_center_dim = c.center;
  e.claimed_sout_dim = c.sout;
  e.claimed_unimodular = c.unimodular;
  e.tags = std::move(tags);
  e.provenance = std::move(provenance);
  return e;
}

Subspace full_nilradical(const LieAlgebra& L) { return Subspace::full(L.dim()); }

// Span of the e1..e4 coordinates in the r4_semi_r algebras.
Subspace first_k_coords(std::size_t ambient, std::size_t k) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(unit_vec(ambient, i));
  return Subspace::span(ambient, gens);
}

std::map<std::string, AtlasEntry> build_atlas() {
  std::map<std::string, AtlasEntry> m;
  auto add = [&m](AtlasEntry e) {
    std::string key = e.algebra.name();
    m.emplace(std::move(key), std::move(e));
  };

  // Abelian algebras; sout R^n = sl_n.
  const std::size_t sout_abelian[6] = {0, 0, 3, 8, 15, 24};
  for (std::size_t n = 1; n <= 5; ++n) {
    AtlasEntry e = entry(make_rn(n), {n, sout_abelian[n], true},
                         {"abelian", "table:derivations"},
                         n == 3 ? "derivations-table row r3" : "abelian");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }

  {
    AtlasEntry e = entry(make_heis3(), {1, 3, true},
                         {"nilpotent", "geometry:Heis3", "table:derivations"},
                         "derivations-table row heis3");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }
  {
    AtlasEntry e = entry(make_heis5(), {1, 10, true},
                         {"nilpotent", "geometry:Heis5"}, "heis5");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }
  add(entry(make_sol3(), {0, 0, true},
            {"solvable", "geometry:Sol3", "table:derivations"},
            "derivations-table row sol3"));
  add(entry(make_so3(), {0, 0, true},
            {"semisimple", "table:derivations", "table:essential-out"},
            "derivations-table row so3"));
  add(entry(make_sl2(), {0, 0, true},
            {"semisimple", "table:derivations", "table:essential-out"},
            "derivations-table row sl2"));
  add(entry(direct_sum(make_so3(), make_so3()).renamed("so4"), {0, 0, true},
            {"semisimple"}, "so4 = so3 + so3"));
  add(entry(make_isom_e2(), {0, 0, true},
            {"solvable", "table:derivations", "table:essential-out"},
            "derivations-table row isom_e2"));
  add(entry(make_isom3("isom_e3", 0), {0, 0, true}, {"isometry", "curvature:0"},
            "cohozero K=0"));
  add(entry(make_isom3("isom_s3", 1), {0, 0, true},
            {"isometry", "curvature:1", "semisimple"}, "cohozero K=1"));
  add(entry(make_isom3("isom_h3", -1), {0, 0, true},
            {"isometry", "curvature:-1", "semisimple"}, "cohozero K=-1"));
  add(entry(make_isom_heis3(), {1, 1, true},
            {"solvable", "table:derivations"},
            "derivations-table row isom_heis3"));
  add(entry(make_conf_e2(), {0, 0, false}, {"conformal", "non-unimodular"},
            "essential-coho coefficients"));
  add(entry(make_conf_e3(), {0, 0, false}, {"conformal", "non-unimodular"},
            "conf+ E3"));
  add(entry(make_r_semi_conf_e3(), {0, 0, true},
            {"solvable-by-conformal", "k:-3"},
            "unimodular extension of conf+ E3"));

  {
    AtlasEntry e = entry(make_a51(), {2, 9, true},
                         {"nilpotent", "geometry:A51"}, "nilmanifolds");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }
  {
    AtlasEntry e = entry(make_a53(), {2, 6, true},
                         {"nilpotent", "geometry:A53"}, "nilmanifolds");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }
  {
    AtlasEntry e = entry(make_nil5_rigid(), {1, 5, true},
                         {"nilpotent", "eliminated:rigid-filtration"},
                         "nilmanifolds eliminated case");
    e.claimed_nilradical = full_nilradical(e.algebra);
    add(std::move(e));
  }

  // R^4 |x R families. Diagonal exponents (1, 1, a-1, -a-1); a = 1 and
  // a = 2 are the degenerate boundary cases.
  struct Family {
    std::string name;
    Vec diag;
    bool jordan;
    Claims claims;
    std::vector<std::string> tags;
  };
  std::vector<Family> families = {
      {"a57", {1, 1, -1, -1}, false, {0, 6, true},
       {"solvable", "geometry:A57", "isotropy:SO2xSO2"}},
      {"a59", {1, 1, -1, -1}, true, {0, 4, true},
       {"solvable", "geometry:A59", "isotropy:SO2"}},
      {"a57_a1_2", {1, 1, Rational(-1, 2), Rational(-3, 2)}, false, {0, 4, true},
       {"solvable", "family:a=1/2"}},
      {"a57_a3", {1, 1, 2, -4}, false, {0, 4, true}, {"solvable", "family:a=3"}},
      {"a57_a4", {1, 1, 3, -5}, false, {0, 4, true}, {"solvable", "family:a=4"}},
      {"a57_a1", {1, 1, 0, -2}, false, {1, 5, true},
       {"solvable", "degenerate:a=1", "geometry:Sol40xE"}},
      {"a57_a2", {1, 1, 1, -3}, false, {0, 8, true},
       {"solvable", "degenerate:a=2", "subsumed-by:r_semi_conf_e3"}},
  };
  for (const auto& f : families) {
    AtlasEntry e = entry(make_r4_semi_r(f.name, f.diag, f.jordan), f.claims,
                         f.tags, "solvable R^4 |x R family");
    e.claimed_nilradical = first_k_coords(5, 4);
    add(std::move(e));
  }

  add(entry(make_r2_semi_sl2(), {0, 0, true}, {"geometry:SAffR2"},
            "semidirect table"));
  add(entry(make_heis3_semi_sl2(), {1, 0, true}, {"geometry:F5"},
            "semidirect table"));
  add(entry(make_r3_semi_so3(), {0, 0, true}, {"isom-e3-isomorphic"},
            "semidirect table"));
  add(entry(make_r3_semi_so21(), {0, 0, true}, {"geometry:T1E12"},
            "semidirect table"));

  // Direct sums with a line (the H-candidates with 2-torus isotropy).
  add(entry(direct_sum(make_so3(), make_rn(1)).renamed("so3+r1"), {1, 0, true},
            {"table:derivations"}, "derivations-table row so3+R"));
  add(entry(direct_sum(make_sl2(), make_rn(1)).renamed("sl2+r1"), {1, 0, true},
            {"table:derivations"}, "derivations-table row sl2+R"));
  add(entry(direct_sum(make_isom_e2(), make_rn(1)).renamed("isom_e2+r1"),
            {1, 2, true}, {"table:derivations"},
            "derivations-table row isom_e2+R"));

  // Product transformation groups (direct sums of fiber and base algebras).
  struct Product {
    std::string name;
    LieAlgebra algebra;
    Claims claims;
    std::vector<std::string> tags;
  };
  LieAlgebra so3_b = make_so3("so3");
  LieAlgebra sl2_b = make_sl2("sl2");
  LieAlgebra ie2 = make_isom_e2();
  LieAlgebra ihe = make_isom_heis3();
  LieAlgebra h3 = make_heis3();
  LieAlgebra s3 = make_sol3();
  LieAlgebra r1 = make_rn(1);
  LieAlgebra r3 = make_rn(3);

  auto triple = [&](const LieAlgebra& a, const LieAlgebra& b, const std::string& n) {
    return direct_sum(direct_sum(a, b), r1).renamed(n);
  };
  std::vector<Product> products;
  products.push_back({"isom_e2+isom_e2+r1", triple(ie2, ie2, "isom_e2+isom_e2+r1"),
                      {1, 4, true}, {"table:product-groups"}});
  products.push_back({"isom_e2+so3+r1", triple(ie2, so3_b, "isom_e2+so3+r1"),
                      {1, 2, true}, {"table:product-groups"}});
  products.push_back({"isom_e2+sl2+r1", triple(ie2, sl2_b, "isom_e2+sl2+r1"),
                      {1, 2, true}, {"table:product-groups"}});
  products.push_back({"so3+so3+r1", triple(so3_b, so3_b, "so3+so3+r1"),
                      {1, 0, true}, {"table:product-groups", "assoc-bundle:L(a;1)xL(b;1)"}});
  products.push_back({"so3+sl2+r1", triple(so3_b, sl2_b, "so3+sl2+r1"),
                      {1, 0, true}, {"table:product-groups", "assoc-bundle:SL2xS3"}});
  products.push_back({"sl2+sl2+r1", triple(sl2_b, sl2_b, "sl2+sl2+r1"),
                      {1, 0, true}, {"table:product-groups", "assoc-bundle:SL2xSL2"}});
  products.push_back({"isom_heis3+isom_e2", direct_sum(ihe, ie2).renamed("isom_heis3+isom_e2"),
                      {1, 3, true}, {"table:product-groups"}});
  products.push_back({"isom_heis3+so3", direct_sum(ihe, so3_b).renamed("isom_heis3+so3"),
                      {1, 1, true}, {"table:product-groups", "assoc-bundle:Heis3xS3"}});
  products.push_back({"isom_heis3+sl2", direct_sum(ihe, sl2_b).renamed("isom_heis3+sl2"),
                      {1, 1, true}, {"table:product-groups", "assoc-bundle:Heis3xSL2"}});
  products.push_back({"isom_e2+isom_e2", direct_sum(ie2, ie2).renamed("isom_e2+isom_e2"),
                      {0, 1, true}, {"table:product-groups"}});
  products.push_back({"isom_e2+so3", direct_sum(ie2, so3_b).renamed("isom_e2+so3"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"isom_e2+sl2", direct_sum(ie2, sl2_b).renamed("isom_e2+sl2"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"so3+sl2", direct_sum(so3_b, sl2_b).renamed("so3+sl2"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"sl2+sl2", direct_sum(sl2_b, sl2_b).renamed("sl2+sl2"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"sol3+isom_e2", direct_sum(s3, ie2).renamed("sol3+isom_e2"),
                      {0, 1, true}, {"table:product-groups"}});
  products.push_back({"sol3+so3", direct_sum(s3, so3_b).renamed("sol3+so3"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"sol3+sl2", direct_sum(s3, sl2_b).renamed("sol3+sl2"),
                      {0, 0, true}, {"table:product-groups"}});
  products.push_back({"heis3+isom_e2", direct_sum(h3, ie2).renamed("heis3+isom_e2"),
                      {1, 5, true}, {"table:product-groups"}});
  products.push_back({"heis3+so3", direct_sum(h3, so3_b).renamed("heis3+so3"),
                      {1, 3, true}, {"table:product-groups"}});
  products.push_back({"heis3+sl2", direct_sum(h3, sl2_b).renamed("heis3+sl2"),
                      {1, 3, true}, {"table:product-groups"}});
  products.push_back({"r3+so3", direct_sum(r3, so3_b).renamed("r3+so3"),
                      {3, 8, true}, {"table:product-groups"}});
  products.push_back({"r3+sl2", direct_sum(r3, sl2_b).renamed("r3+sl2"),
                      {3, 8, true}, {"table:product-groups"}});
  for (auto& p : products)
    add(entry(std::move(p.algebra), p.claims, p.tags, "product-groups table"));

  // Stabilizer samples for the associated-bundle products: span of
  // (elliptic_1 + a z, elliptic_2 + b z) at (a, b) = (1, 2), claimed to be
  // a 2-dimensional abelian subalgebra (group-level closedness is not an
  // algebra statement and is not claimed).
  auto set_stabilizer = [&m](const std::string& name, const Vec& g1, const Vec& g2) {
    auto it = m.find(name);
    it->second.claimed_abelian_subalgebra =
        Subspace::span(it->second.algebra.dim(), {g1, g2});
  };
  {
    // so3+so3+r1, basis e1 e2 e3 | e1' e2' e3' | e1'': elliptics e3, e3'.
    Vec g1(7), g2(7);
    g1[2] = 1; g1[6] = 1;   // e3 + 1 z
    g2[5] = 1; g2[6] = 2;   // e3' + 2 z
    set_stabilizer("so3+so3+r1", g1, g2);
  }
  {
    // sl2+sl2+r1, basis h e f | h' e' f' | z: elliptics e - f, e' - f'.
    Vec g1(7), g2(7);
    g1[1] = 1; g1[2] = -1; g1[6] = 1;
    g2[4] = 1; g2[5] = -1; g2[6] = 2;
    set_stabilizer("sl2+sl2+r1", g1, g2);
  }
  {
    // so3+sl2+r1: elliptics e3, e' - f'.
    Vec g1(7), g2(7);
    g1[2] = 1; g1[6] = 1;
    g2[4] = 1; g2[5] = -1; g2[6] = 2;
    set_stabilizer("so3+sl2+r1", g1, g2);
  }
  {
    // isom_heis3+so3, basis x y z r | e1 e2 e3: central direction is z,
    // elliptics r, e3.
    Vec g1(7), g2(7);
    g1[3] = 1; g1[2] = 1;   // r + 1 z
    g2[6] = 1; g2[2] = 2;   // e3 + 2 z
    set_stabilizer("isom_heis3+so3", g1, g2);
  }
  {
    // isom_heis3+sl2: elliptics r, e' - f'.
    Vec g1(7), g2(7);
    g1[3] = 1; g1[2] = 1;
    g2[5] = 1; g2[6] = -1; g2[2] = 2;
    set_stabilizer("isom_heis3+sl2", g1, g2);
  }

  return m;
}

const std::map<std::string, AtlasEntry>& atlas() {
  static const std::map<std::string, AtlasEntry> m = build_atlas();
  return m;
}

}  // namespace

std::vector<std::string> atlas_list() {
  std::vector<std::string> names;
  for (const auto& [name, e] : atlas()) names.push_back(name);
  return names;  // std::map iterates alphabetized
}

bool atlas_has(const std::string& name) { return atlas().count(name) > 0; }

const AtlasEntry& atlas_get(const std::string& name) {
  auto it = atlas().find(name);
  if (it == atlas().end()) throw UnknownName(name);
  return it->second;
}

std::string atlas_export_text(const std::string& name) {
  return algebra_to_json_text(atlas_get(name).algebra);
}

}  // namespace lie5
