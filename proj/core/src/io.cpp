// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand/io.hpp"

#include <fstream>
#include <sstream>

#include "estimand/error.hpp"

namespace estimand {

namespace {

/// Reports floating-point numbers as strings carrying their source text.
class ExactSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  explicit ExactSax(Json& root) : Base(root, true) {}

  bool number_float(Json::number_float_t, const Json::string_t& text) {
    Json::string_t copy = text;
    return Base::string(copy);
  }
};

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

int require_int(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) throw ValidationError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string require_string(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<WeightEntry> entries_from_json(const Json& list, int k) {
  if (!list.is_array()) throw ValidationError("'entries' must be an array");
  std::vector<WeightEntry> out;
  for (const Json& e : list) {
    out.push_back({subset_from_json(require(e, "T"), k), subset_from_json(require(e, "Y"), k),
                   rational_from_json(require(e, "w"))});
  }
  return out;
}

Json entries_to_json(const WeightSpec& weights) {
  Json list = Json::array();
  for (const WeightEntry& e : weights.entries()) {
    list.push_back({{"T", subset_to_json(e.t)}, {"Y", subset_to_json(e.y)}, {"w", rational_to_json(e.w)}});
  }
  return list;
}

std::map<std::string, Rational> state_map(const Json& obj) {
  if (!obj.is_object()) throw ValidationError("expected an object keyed by state strings");
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : obj.items()) {
    std::string state;
    for (char c : key) {
      if (c != ',' && c != ' ') state += c;
    }
    if (!out.emplace(state, rational_from_json(value)).second) {
      throw ValidationError("duplicate state '" + key + "'");
    }
  }
  return out;
}

}  // namespace

Json parse_exact_json(std::string_view text) {
  Json root;
  ExactSax sax(root);
  try {
    Json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return root;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_exact_json(buffer.str());
}

std::string dump_canonical(const Json& value) { return value.dump(2) + "\n"; }

Json rational_to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw ValidationError("expected a rational as a string or integer, got " + value.dump());
}

Json subset_to_json(SubsetMask a) { return a.indices(); }

SubsetMask subset_from_json(const Json& value, int k) {
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    if (s.size() != static_cast<std::size_t>(k)) {
      throw ValidationError("state string '" + s + "' does not have length " + std::to_string(k));
    }
    return SubsetMask::from_state_string(s);
  }
  if (!value.is_array()) throw ValidationError("subset must be an index array or a state string");
  std::vector<int> idx;
  for (const Json& v : value) {
    if (!v.is_number_integer()) throw ValidationError("subset indices must be integers");
    idx.push_back(v.get<int>());
  }
  return SubsetMask::from_indices(k, idx);
}

Json permutation_to_json(const LabelPermutation& sigma) { return sigma.image(); }

LabelPermutation permutation_from_json(const Json& value) {
  if (value.is_string()) return LabelPermutation::parse(value.get<std::string>());
  if (!value.is_array()) throw ValidationError("permutation must be an image array");
  std::vector<int> image;
  for (const Json& v : value) {
    if (!v.is_number_integer()) throw ValidationError("permutation images must be integers");
    image.push_back(v.get<int>());
  }
  return LabelPermutation(std::move(image));
}

Json generator_to_json(const GeneratorMatrix& h) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < h.rows(); ++r) {
    Json row = Json::array();
    for (const Rational& x : h.matrix().row(r)) row.push_back(rational_to_json(x));
    rows.push_back(std::move(row));
  }
  return {{"k", h.k()},
          {"basis", h.basis() == Basis::canonical ? "canonical" : "expanded"},
          {"rows", std::move(rows)}};
}

GeneratorMatrix generator_from_json(const Json& value) {
  const int k = require_int(value, "k");
  const std::string basis = value.contains("basis") ? require_string(value, "basis") : "canonical";
  const Json& rows = require(value, "rows");
  if (!rows.is_array()) throw ValidationError("'rows' must be an array");
  std::vector<std::vector<Rational>> data;
  for (const Json& row : rows) {
    if (!row.is_array()) throw ValidationError("each row must be an array");
    std::vector<Rational> r;
    for (const Json& x : row) r.push_back(rational_from_json(x));
    data.push_back(std::move(r));
  }
  RationalMatrix m = RationalMatrix::from_rows(data);
  if (basis == "canonical") return GeneratorMatrix::canonical(k, std::move(m));
  if (basis == "expanded") return GeneratorMatrix::expanded(k, std::move(m));
  throw ValidationError("unknown basis '" + basis + "'");
}

Json weights_to_json(const WeightSpec& weights) {
  Json out = {{"k", weights.k()}};
  if (weights.source_pmf()) {
    out["kind"] = to_string(WeightKind::compatible_pmf);
    Json pmf = Json::object();
    const auto& p = *weights.source_pmf();
    for (std::size_t b = 0; b < p.size(); ++b) {
      pmf[SubsetMask(static_cast<std::uint32_t>(b), weights.k()).state_string()] =
          rational_to_json(p[b]);
    }
    out["pmf"] = std::move(pmf);
    return out;
  }
  out["kind"] = to_string(weights.kind());
  switch (weights.kind()) {
    case WeightKind::point_mass:
      break;
    case WeightKind::invariant:
      if (auto table = weights.cardinality_table()) {
        Json t = Json::object();
        for (const auto& [key, w] : *table) {
          t[std::to_string(key.first) + ":" + std::to_string(key.second)] = rational_to_json(w);
        }
        out["table"] = std::move(t);
      } else {
        out["entries"] = entries_to_json(weights);
        out["strict"] = false;
      }
      break;
    case WeightKind::permutable:
    case WeightKind::compatible_pmf:
      out["entries"] = entries_to_json(weights);
      break;
  }
  return out;
}

WeightSpec weights_from_json(const Json& value) {
  const int k = require_int(value, "k");
  const WeightKind kind = weight_kind_from_string(require_string(value, "kind"));
  switch (kind) {
    case WeightKind::point_mass:
      return WeightSpec::point_mass(k);
    case WeightKind::invariant: {
      if (value.contains("table")) {
        const Json& t = value.at("table");
        if (!t.is_object()) throw ValidationError("'table' must be an object keyed \"q:t\"");
        CardinalityTable table;
        for (const auto& [key, w] : t.items()) {
          const auto colon = key.find(':');
          int q = 0;
          int tt = 0;
          try {
            if (colon == std::string::npos) throw std::invalid_argument(key);
            std::size_t used_q = 0;
            std::size_t used_t = 0;
            q = std::stoi(key.substr(0, colon), &used_q);
            tt = std::stoi(key.substr(colon + 1), &used_t);
            if (used_q != colon || used_t != key.size() - colon - 1) throw std::invalid_argument(key);
          } catch (const std::logic_error&) {
            throw ValidationError("invariant table key '" + key + "' is not of the form \"q:t\"");
          }
          table[{q, tt}] = rational_from_json(w);
        }
        return WeightSpec::invariant(k, table);
      }
      const bool strict = !value.contains("strict") || value.at("strict").get<bool>();
      return WeightSpec::invariant_from_entries(k, entries_from_json(require(value, "entries"), k),
                                                strict);
    }
    case WeightKind::permutable:
      return WeightSpec::permutable(k, entries_from_json(require(value, "entries"), k));
    case WeightKind::compatible_pmf: {
      std::vector<Rational> pmf(std::size_t{1} << k, Rational(0));
      for (const auto& [state, p] : state_map(require(value, "pmf"))) {
        if (state.size() != static_cast<std::size_t>(k)) {
          throw ValidationError("pmf key '" + state + "' is not a state string of length " +
                                std::to_string(k));
        }
        pmf[SubsetMask::from_state_string(state).bits()] = p;
      }
      return derive_compatible_weights(k, pmf);
    }
  }
  throw InternalError("unhandled weight kind");
}

Json expression_to_json(const EstimandExpression& expr) {
  Json coeffs = Json::object();
  for (const auto& [bits, c] : expr.terms()) {
    coeffs[SubsetMask(bits, expr.k()).state_string()] = rational_to_json(c);
  }
  Json out = {{"coeffs", std::move(coeffs)}};
  if (expr.target()) out["y"] = subset_to_json(*expr.target());
  return out;
}

EstimandExpression expression_from_json(const Json& value, int k) {
  std::optional<SubsetMask> target;
  if (value.contains("y")) target = subset_from_json(value.at("y"), k);
  EstimandExpression out(k, target);
  for (const auto& [state, c] : state_map(require(value, "coeffs"))) {
    if (state.size() != static_cast<std::size_t>(k)) {
      throw ValidationError("coefficient key '" + state + "' is not a state string of length " +
                            std::to_string(k));
    }
    out.add(SubsetMask::from_state_string(state), c);
  }
  return out;
}

Json class_to_json(const EstimandClass& cls) {
  Json members = Json::array();
  for (const EstimandExpression& m : cls.members()) members.push_back(expression_to_json(m));
  return {{"format", "estimand-class"}, {"version", 1},          {"k", cls.k()},
          {"scale", "difference"},      {"weights", weights_to_json(cls.weights())},
          {"members", std::move(members)}};
}

Json class_to_json(const RatioClass& cls) {
  Json members = Json::array();
  for (const RatioEstimand& m : cls.members()) {
    Json exps = Json::object();
    for (const auto& [bits, e] : m.exponents()) exps[SubsetMask(bits, cls.k()).state_string()] = e;
    members.push_back({{"y", subset_to_json(m.target())}, {"exponents", std::move(exps)}});
  }
  return {{"format", "estimand-class"},
          {"version", 1},
          {"k", cls.k()},
          {"scale", std::string(to_string(cls.link()))},
          {"weights", weights_to_json(WeightSpec::point_mass(cls.k()))},
          {"members", std::move(members)}};
}

ClassDocument class_from_json(const Json& value) {
  if (value.contains("format") && require_string(value, "format") != "estimand-class") {
    throw ValidationError("not an estimand-class document");
  }
  if (value.contains("version") && require_int(value, "version") != 1) {
    throw ValidationError("unsupported estimand-class version");
  }
  ClassDocument doc;
  doc.k = require_int(value, "k");
  doc.scale = value.contains("scale") ? require_string(value, "scale") : "difference";
  const WeightSpec weights = weights_from_json(require(value, "weights"));
  const Json* members = value.contains("members") ? &value.at("members") : nullptr;
  if (members && !members->is_array()) throw ValidationError("'members' must be an array");

  if (doc.scale == "difference") {
    doc.difference = build_class(doc.k, weights);
    if (members) {
      for (const Json& m : *members) {
        const EstimandExpression stored = expression_from_json(m, doc.k);
        if (!stored.target()) throw ValidationError("stored member lacks 'y'");
        if (stored != doc.difference->member(*stored.target())) {
          throw ValidationError("stored member for Y = " + stored.target()->to_string() +
                                " does not match the weights");
        }
      }
    }
    return doc;
  }
  const RatioLink link = ratio_link_from_string(doc.scale);
  doc.ratio = build_ratio_class(doc.k, link, weights);
  if (members) {
    for (const Json& m : *members) {
      const SubsetMask y = subset_from_json(require(m, "y"), doc.k);
      const RatioEstimand& built = doc.ratio->member(y);
      const Json& exps = require(m, "exponents");
      if (!exps.is_object() || exps.size() != built.exponents().size()) {
        throw ValidationError("stored exponents for Y = " + y.to_string() + " do not match");
      }
      for (const auto& [state, e] : exps.items()) {
        if (!e.is_number_integer() || state.size() != static_cast<std::size_t>(doc.k) ||
            built.exponent(SubsetMask::from_state_string(state)) != e.get<int>()) {
          throw ValidationError("stored exponents for Y = " + y.to_string() + " do not match");
        }
      }
    }
  }
  return doc;
}

Json mu_to_json(const MuTable& mu) {
  Json out = Json::object();
  for (const auto& [state, v] : mu.values()) out[state] = rational_to_json(v);
  return out;
}

MuTable mu_from_json(const Json& value, std::optional<int> k) {
  const Json* source = &value;
  if (value.is_object() && value.contains("values")) {
    source = &value.at("values");
    if (value.contains("k")) k = require_int(value, "k");
  }
  std::map<std::string, Rational> values = state_map(*source);
  if (values.empty()) throw ValidationError("mu table is empty");
  const int inferred = static_cast<int>(values.begin()->first.size());
  if (k && *k != inferred) {
    throw DimensionError("mu table keys have length " + std::to_string(inferred) +
                         ", expected K = " + std::to_string(*k));
  }
  return MuTable(inferred, std::move(values));
}

}  // namespace estimand
