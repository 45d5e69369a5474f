// Command-line front end: structure checks, invariants, derivations,
// cohomology, extensions, the verification tables, and the integer-quartic
// searches. Exit codes: 0 success, 1 domain failure, 2 input error.

#include "lie5/atlas.hpp"
#include "lie5/cohomology.hpp"
#include "lie5/derivations.hpp"
#include "lie5/errors.hpp"
#include "lie5/extensions.hpp"
#include "lie5/json_io.hpp"
#include "lie5/quartic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lie5;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Bare names hit the atlas (or LIE5_ATLAS_DIR when set); paths hit files.
// A name that is both a file and an atlas entry resolves to the file, with
// a warning.
LieAlgebra resolve_algebra_arg(const std::string& arg) {
  bool is_file = std::filesystem::exists(arg) &&
                 std::filesystem::is_regular_file(arg);
  const char* dir = std::getenv("LIE5_ATLAS_DIR");
  if (is_file) {
    if (atlas_has(arg))
      std::cerr << "warning: '" << arg
                << "' is both a file and an atlas name; using the file\n";
    return algebra_from_json_text(read_file(arg));
  }
  if (dir) {
    std::filesystem::path p = std::filesystem::path(dir) / (arg + ".json");
    if (std::filesystem::exists(p))
      return algebra_from_json_text(read_file(p.string()));
  }
  return atlas_get(arg).algebra;
}

void print_report(const Report& r, bool as_json) {
  if (as_json) {
    json j;
    j["claims"] = json::array();
    for (const auto& c : r.claims)
      j["claims"].push_back({{"description", c.description},
                             {"computed", c.computed},
                             {"expected", c.expected},
                             {"provenance", c.provenance},
                             {"pass", c.pass}});
    j["passed"] = r.passed();
    j["failed"] = r.failed();
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& c : r.claims)
    std::printf("[%s] %-64s computed=%s expected=%s (%s)\n",
                c.pass ? "pass" : "FAIL", c.description.c_str(),
                c.computed.c_str(), c.expected.c_str(), c.provenance.c_str());
  std::printf("%zu/%zu claims pass\n", r.passed(), r.claims.size());
}

int cmd_check(const std::string& file) {
  LieAlgebra L = algebra_from_json_text(read_file(file));
  if (auto bad = L.jacobi_first_failure()) {
    std::cout << "Jacobi fails on basis triple (" << L.basis_labels()[(*bad)[0]]
              << ", " << L.basis_labels()[(*bad)[1]] << ", "
              << L.basis_labels()[(*bad)[2]] << ")\n";
    return kExitDomain;
  }
  std::cout << L.name() << ": " << L.dim() << "-dimensional, Jacobi holds\n";
  return kExitOk;
}

int cmd_invariants(const std::string& name, bool as_json) {
  LieAlgebra L = resolve_algebra_arg(name);
  if (!L.jacobi_check()) {
    std::cerr << "Jacobi identity fails\n";
    return kExitDomain;
  }
  DerivationAlgebra d = derivation_algebra(L);
  auto series_dims = [](const std::vector<Subspace>& s) {
    json dims = json::array();
    for (const auto& t : s) dims.push_back(t.dim());
    return dims;
  };
  json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["center_dim"] = L.center().dim();
  j["derived_series_dims"] = series_dims(L.derived_series());
  j["lower_central_series_dims"] = series_dims(L.lower_central_series());
  j["nilpotent"] = L.is_nilpotent();
  j["solvable"] = L.is_solvable();
  j["unimodular"] = L.is_unimodular();
  j["der_dim"] = d.der_dim;
  j["inner_dim"] = d.inner_dim;
  j["outer_dim"] = d.outer_dim;
  j["sout_dim"] = d.traceless_outer_dim;
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << L.name() << " (dim " << L.dim() << ")\n"
              << "  center dim:        " << j["center_dim"] << "\n"
              << "  derived series:    " << j["derived_series_dims"] << "\n"
              << "  lower central:     " << j["lower_central_series_dims"] << "\n"
              << "  nilpotent:         " << (L.is_nilpotent() ? "yes" : "no") << "\n"
              << "  solvable:          " << (L.is_solvable() ? "yes" : "no") << "\n"
              << "  unimodular:        " << (L.is_unimodular() ? "yes" : "no") << "\n"
              << "  der/inner/out:     " << d.der_dim << "/" << d.inner_dim
              << "/" << d.outer_dim << "\n"
              << "  sout dim:          " << d.traceless_outer_dim << "\n";
  }
  return kExitOk;
}

int cmd_derivations(const std::string& name, bool as_json) {
  LieAlgebra L = resolve_algebra_arg(name);
  DerivationAlgebra d = derivation_algebra(L);
  json j = {{"der_dim", d.der_dim},
            {"inner_dim", d.inner_dim},
            {"outer_dim", d.outer_dim},
            {"sout_dim", d.traceless_outer_dim}};
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << L.name() << ": der " << d.der_dim << ", inner " << d.inner_dim
              << ", outer " << d.outer_dim << ", sout "
              << d.traceless_outer_dim << "\n";
  return kExitOk;
}

RepPtr resolve_module(const LieAlgebra& L, const std::string& module_arg) {
  if (module_arg == "trivial")
    return std::make_shared<Representation>(Representation::trivial(L));
  if (module_arg == "adjoint")
    return std::make_shared<Representation>(Representation::adjoint(L));
  Representation rep = representation_from_json_text(
      read_file(module_arg),
      [](const std::string& n) { return atlas_get(n).algebra; });
  if (rep.algebra().structure() != L.structure())
    throw IncompatibleRepresentation(
        "module file algebra does not match the requested algebra");
  return std::make_shared<Representation>(std::move(rep));
}

int cmd_cohomology(const std::string& name, const std::string& module_arg,
                   int degree, bool representatives, bool as_json) {
  LieAlgebra L = resolve_algebra_arg(name);
  if (degree < 0 || static_cast<std::size_t>(degree) > L.dim()) {
    std::cerr << "degree must be between 0 and dim = " << L.dim() << "\n";
    return kExitInput;
  }
  RepPtr rep = resolve_module(L, module_arg);
  std::size_t h = cohomology_dim(rep, degree);
  json j = {{"algebra", L.name()},
            {"degree", degree},
            {"module_dim", rep->module_dim()},
            {"dim", h}};
  if (representatives) {
    json rlist = json::array();
    for (const auto& c : cohomology_reps(rep, degree)) {
      json one = json::array();
      for (const auto& [t, v] : c.coeffs()) {
        json labels = json::array();
        for (auto i : t) labels.push_back(L.basis_labels()[i]);
        json vals = json::array();
        for (const auto& x : v) vals.push_back(rat_to_string(x));
        one.push_back({{"tuple", labels}, {"value", vals}});
      }
      rlist.push_back(one);
    }
    j["representatives"] = rlist;
  }
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else {
    std::cout << "dim H^" << degree << "(" << L.name() << "; module dim "
              << rep->module_dim() << ") = " << h << "\n";
    if (representatives) std::cout << j["representatives"].dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_extend(const std::string& file, bool as_json) {
  ExtensionSpec spec = extension_spec_from_json_text(
      read_file(file), [](const std::string& n) { return atlas_get(n).algebra; });
  LieAlgebra e = build_extension(spec);
  bool split = is_split(spec);
  json j;
  j["name"] = e.name();
  j["dim"] = e.dim();
  j["jacobi"] = true;  // build_extension throws otherwise
  j["split"] = split;
  j["algebra"] = json::parse(algebra_to_json_text(e));
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << "built " << e.name() << " (dim " << e.dim() << "), "
              << (split ? "split" : "non-split") << " extension\n"
              << algebra_to_json_text(e);
  return kExitOk;
}

int cmd_verify_paper(const std::string& table, bool as_json) {
  Report r;
  bool all = table == "all";
  if (all || table == "derivations") r.merge(verify_paper(VerifyTable::derivations));
  if (all || table == "cohozero") r.merge(verify_paper(VerifyTable::cohozero));
  if (all || table == "essential-coho")
    r.merge(verify_paper(VerifyTable::essential_coho));
  if (all || table == "essential-out")
    r.merge(verify_paper(VerifyTable::essential_out));
  if (all || table == "nilmanifolds")
    r.merge(verify_paper(VerifyTable::nilmanifolds));
  if (all || table == "obstruction") {
    auto hits = galois_obstruction_search(20);
    r.add("integer quartics with eigenvalues l, l e^(i t), l e^(-i t), l^-3 "
          "(height 20)",
          std::to_string(hits.size()) + " candidates found",
          "0 candidates found", "obstruction");
  }
  if (r.claims.empty()) {
    std::cerr << "unknown table: " << table << "\n";
    return kExitInput;
  }
  print_report(r, as_json);
  return r.all_pass() ? kExitOk : kExitDomain;
}

int cmd_lattice_search(int height, double tol, int threads, bool as_json) {
  SearchResult res = model_quartic_search(height, tol, 1e-9, threads);
  if (as_json) {
    for (const auto& h : res.hits) {
      json j;
      json poly = json::array();
      for (const auto& c : h.poly.coeffs()) poly.push_back(c.str());
      j["poly"] = poly;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", h.phi1);
      j["phi1"] = json::parse(buf);
      std::snprintf(buf, sizeof buf, "%.17g", h.phi2);
      j["phi2"] = json::parse(buf);
      std::snprintf(buf, sizeof buf, "%.17g", h.parameter_a);
      j["a"] = json::parse(buf);
      j["disc"] = h.disc.str();
      j["certified"] = h.certified;
      std::cout << j.dump() << "\n";
    }
    return kExitOk;
  }
  for (const auto& h : res.hits)
    std::printf("%-40s a = %.12f  phi1 = %.9f  phi2 = %.9f  disc = %s\n",
                h.poly.to_string().c_str(), h.parameter_a, h.phi1, h.phi2,
                h.disc.str().c_str());
  for (const auto& d : res.degenerate)
    std::printf("%-40s excluded (%s)\n", d.poly.to_string().c_str(),
                d.status == QuarticStatus::degenerate_reciprocal
                    ? "reciprocal, phi1 phi2 = 1"
                    : "parameter within tolerance of {0,1,2}");
  std::printf("%zu hits, %zu excluded\n", res.hits.size(), res.degenerate.size());
  return kExitOk;
}

int cmd_atlas_list() {
  for (const auto& n : atlas_list()) {
    const AtlasEntry& e = atlas_get(n);
    std::printf("%-22s dim %zu  %s\n", n.c_str(), e.algebra.dim(),
                e.provenance.c_str());
  }
  return kExitOk;
}

int cmd_atlas_show(const std::string& name, bool as_json) {
  const AtlasEntry& e = atlas_get(name);
  json j;
  j["algebra"] = json::parse(atlas_export_text(name));
  j["claimed_center_dim"] = e.claimed_center_dim;
  j["claimed_sout_dim"] = e.claimed_sout_dim;
  j["claimed_unimodular"] = e.claimed_unimodular;
  j["tags"] = e.tags;
  j["provenance"] = e.provenance;
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else {
    std::cout << atlas_export_text(name) << "tags:";
    for (const auto& t : e.tags) std::cout << " " << t;
    std::cout << "\nclaims: center " << e.claimed_center_dim << ", sout "
              << e.claimed_sout_dim << ", "
              << (e.claimed_unimodular ? "unimodular" : "not unimodular")
              << "\n";
  }
  return kExitOk;
}

int cmd_atlas_export(const std::string& name, const std::string& out_path) {
  std::string text = atlas_export_text(name);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << text;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational Lie theory toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, name, module_arg = "trivial", table = "all", out_path;
  int degree = 2, height = 10, threads = 1;
  double tol = 1e-12;
  bool representatives = false;

  auto* check = app.add_subcommand("check", "parse an algebra file and verify Jacobi");
  check->add_option("file", file)->required();

  auto* inv = app.add_subcommand("invariants", "structural invariants of an algebra");
  inv->add_option("algebra", name)->required();

  auto* der = app.add_subcommand("derivations", "derivation algebra dimensions");
  der->add_option("algebra", name)->required();

  auto* coho = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimension");
  coho->add_option("algebra", name)->required();
  coho->add_option("module", module_arg,
                   "'trivial', 'adjoint', or a representation file");
  coho->add_option("degree", degree)->required();
  coho->add_flag("--representatives", representatives,
                 "print canonical representative cocycles");

  auto* ext = app.add_subcommand("extend", "build an extension from a spec file");
  ext->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify-paper", "re-verify the recorded tables");
  verify->add_option("--table", table,
                     "all|derivations|cohozero|essential-coho|essential-out|"
                     "nilmanifolds|obstruction");

  auto* search = app.add_subcommand("lattice-search",
                                    "search unit quartics with two positive real roots");
  search->add_option("--height", height, "coefficient height bound")->required();
  search->add_option("--tol", tol, "parameter interval tolerance");
  search->add_option("--threads", threads, "worker threads");

  auto* atlas_cmd = app.add_subcommand("atlas", "catalog of named algebras");
  auto* atlas_list_cmd = atlas_cmd->add_subcommand("list", "list entries");
  auto* atlas_show = atlas_cmd->add_subcommand("show", "entry with claims");
  atlas_show->add_option("name", name)->required();
  auto* atlas_export_cmd = atlas_cmd->add_subcommand("export", "write the algebra file");
  atlas_export_cmd->add_option("name", name)->required();
  atlas_export_cmd->add_option("out", out_path, "output path (stdout if omitted)");

  for (auto* sub : {check, inv, der, coho, ext, verify, search})
    sub->add_flag("--json", as_json, "machine-readable output");
  for (auto* sub : {atlas_list_cmd, atlas_show, atlas_export_cmd})
    sub->add_flag("--json", as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (inv->parsed()) return cmd_invariants(name, as_json);
    if (der->parsed()) return cmd_derivations(name, as_json);
    if (coho->parsed())
      return cmd_cohomology(name, module_arg, degree, representatives, as_json);
    if (ext->parsed()) return cmd_extend(file, as_json);
    if (verify->parsed()) return cmd_verify_paper(table, as_json);
    if (search->parsed()) return cmd_lattice_search(height, tol, threads, as_json);
    if (atlas_cmd->parsed()) {
      if (atlas_list_cmd->parsed()) return cmd_atlas_list();
      if (atlas_show->parsed()) return cmd_atlas_show(name, as_json);
      if (atlas_export_cmd->parsed()) return cmd_atlas_export(name, out_path);
      std::cerr << "atlas needs a subcommand: list, show, export\n";
      return kExitInput;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownName& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitInput;
}
