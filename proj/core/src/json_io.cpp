#include "lie5/json_io.hpp"

#include "lie5/errors.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace lie5 {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  throw ParseError("rationals must be integers or \"p/q\" strings");
}

std::size_t index_of_label(const std::vector<std::string>& labels,
                           const std::string& l, const std::string& context) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw ParseError(context + ": unknown basis label '" + l + "'");
}

LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra must be a JSON object");
  if (!j.contains("name") || !j["name"].is_string())
    throw ParseError("algebra needs a string \"name\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("algebra needs an integer \"dim\"");
  if (!j.contains("basis") || !j["basis"].is_array())
    throw ParseError("algebra needs a \"basis\" array");
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) throw ParseError("basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (labels.size() != j["dim"].get<std::size_t>())
    throw ParseError("dim does not match basis length");

  LieAlgebra::StructureMap structure;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("brackets must be an array");
    for (const auto& entry : j["brackets"]) {
      if (!entry.is_array() || entry.size() != 3)
        throw ParseError("each bracket is [label_i, label_j, {label_k: coeff}]");
      std::size_t i = index_of_label(labels, entry[0].get<std::string>(), "brackets");
      std::size_t k = index_of_label(labels, entry[1].get<std::string>(), "brackets");
      if (i == k) throw ParseError("bracket of a label with itself");
      if (seen.count({i, k}) || seen.count({k, i}))
        throw ParseError("bracket pair (" + labels[std::min(i, k)] + ", " +
                         labels[std::max(i, k)] + ") listed twice");
      seen.insert({i, k});
      Vec v(labels.size());
      if (!entry[2].is_object())
        throw ParseError("bracket value must be an object {label: coeff}");
      for (auto it = entry[2].begin(); it != entry[2].end(); ++it) {
        std::size_t t = index_of_label(labels, it.key(), "bracket value");
        v[t] = rational_from_json(it.value());
      }
      if (i < k) {
        structure[{i, k}] = std::move(v);
      } else {
        structure[{k, i}] = vec_scale(-1, v);
      }
    }
  }
  return LieAlgebra(j["name"].get<std::string>(), std::move(labels),
                    std::move(structure));
}

}  // namespace

LieAlgebra algebra_from_json_text(const std::string& text) {
  return algebra_from_json(parse(text));
}

std::string algebra_to_json_text(const LieAlgebra& L) {
  json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["basis"] = L.basis_labels();
  json brackets = json::array();
  for (const auto& [key, val] : L.structure()) {
    if (vec_is_zero(val)) continue;
    json coeffs = json::object();
    for (std::size_t k = 0; k < val.size(); ++k)
      if (val[k] != 0) coeffs[L.basis_labels()[k]] = rat_to_string(val[k]);
    brackets.push_back(json::array(
        {L.basis_labels()[key.first], L.basis_labels()[key.second], coeffs}));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

namespace {

LieAlgebra resolve_algebra(const json& v, const AlgebraResolver& resolve,
                           const std::string& field) {
  if (v.is_string()) return resolve(v.get<std::string>());
  if (v.is_object()) return algebra_from_json(v);
  throw ParseError(field + " must be an algebra name or an inline object");
}

RatMatrix matrix_from_json(const json& v, std::size_t m) {
  if (!v.is_array() || v.size() != m)
    throw ParseError("action matrix must have module_dim rows");
  RatMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!v[i].is_array() || v[i].size() != m)
      throw ParseError("action matrix must be square of size module_dim");
    for (std::size_t j = 0; j < m; ++j) out(i, j) = rational_from_json(v[i][j]);
  }
  return out;
}

std::vector<RatMatrix> action_from_json(const json& j, const LieAlgebra& L,
                                        std::size_t m) {
  std::vector<RatMatrix> action(L.dim(), RatMatrix::zero(m, m));
  if (j.contains("action")) {
    if (!j["action"].is_object())
      throw ParseError("action must be an object {label: matrix}");
    for (auto it = j["action"].begin(); it != j["action"].end(); ++it) {
      auto idx = L.label_index(it.key());
      if (!idx) throw ParseError("action: unknown basis label '" + it.key() + "'");
      action[*idx] = matrix_from_json(it.value(), m);
    }
  }
  return action;
}

}  // namespace

Representation representation_from_json_text(const std::string& text,
                                             const AlgebraResolver& resolve) {
  json j = parse(text);
  if (!j.is_object()) throw ParseError("representation must be a JSON object");
  if (!j.contains("algebra")) throw ParseError("representation needs \"algebra\"");
  if (!j.contains("module_dim") || !j["module_dim"].is_number_integer())
    throw ParseError("representation needs an integer \"module_dim\"");
  LieAlgebra L = resolve_algebra(j["algebra"], resolve, "algebra");
  std::size_t m = j["module_dim"].get<std::size_t>();
  return Representation(L, m, action_from_json(j, L, m));
}

ExtensionSpec extension_spec_from_json_text(const std::string& text,
                                            const AlgebraResolver& resolve) {
  json j = parse(text);
  if (!j.is_object()) throw ParseError("extension spec must be a JSON object");
  if (!j.contains("quotient") || !j.contains("kernel"))
    throw ParseError("extension spec needs \"quotient\" and \"kernel\"");
  LieAlgebra q = resolve_algebra(j["quotient"], resolve, "quotient");
  LieAlgebra h = resolve_algebra(j["kernel"], resolve, "kernel");
  std::vector<RatMatrix> action = action_from_json(j, q, h.dim());

  auto rep = std::make_shared<Representation>(q, h.dim(), action);
  Cochain cocycle(rep, 2);
  if (j.contains("cocycle")) {
    if (!j["cocycle"].is_array()) throw ParseError("cocycle must be an array");
    for (const auto& entry : j["cocycle"]) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
        throw ParseError("each cocycle entry is [label_i, label_j, [values]]");
      auto i = q.label_index(entry[0].get<std::string>());
      auto k = q.label_index(entry[1].get<std::string>());
      if (!i || !k) throw ParseError("cocycle: unknown quotient label");
      if (entry[2].size() != h.dim())
        throw ParseError("cocycle value length must be the kernel dimension");
      Vec v(h.dim());
      for (std::size_t t = 0; t < h.dim(); ++t)
        v[t] = rational_from_json(entry[2][t]);
      cocycle.add_value({*i, *k}, v);
    }
  }
  return ExtensionSpec{std::move(q), std::move(h), std::move(action),
                       std::move(cocycle)};
}

}  // namespace lie5
