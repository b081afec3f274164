// Copyright 2026 The zclosure Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zclosure/document.hpp"

#include "json.hpp"
#include "zclosure/factor.hpp"

namespace zc {

using nlohmann::json;

namespace {

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw ParseError("expected an integer");
}

Rational parse_scalar(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("matrix entries must be strings or integers, got " + j.dump());
}

NfElem parse_field_entry(const json& j, const FieldPtr& K) {
  if (!j.is_array()) return NfElem(K, parse_scalar(j));
  if (j.size() > static_cast<size_t>(K->degree())) throw ParseError("too many coordinates in " + j.dump());
  std::vector<Rational> c(K->degree(), Rational(0));
  for (size_t i = 0; i < j.size(); ++i) c[i] = parse_scalar(j[i]);
  return NfElem(K, c);
}

template <class Fn>
auto parse_matrix(const json& j, Fn&& entry) {
  using F = decltype(entry(j));
  if (!j.is_array() || j.empty()) throw ParseError("a matrix must be a non-empty array of rows");
  const size_t n = j.size();
  std::vector<F> v;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) throw ParseError("matrix is not square");
    for (const auto& x : row) v.push_back(entry(x));
  }
  return Matrix<F>::from_flat(n, std::move(v));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

FieldPtr parse_field(const json& j) {
  if (!j.is_array()) throw ParseError("field must be a list of integer coefficients");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(parse_integer(x));
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2 || c.back() != 1) throw ParseError("field polynomial must be monic of degree >= 1");
  if (c.size() == 2) return nullptr;
  std::vector<Rational> q(c.begin(), c.end());
  if (!is_irreducible_over_q(Poly<Rational>(q))) throw ParseError("field polynomial is not irreducible");
  return NumberField::create(std::move(c));
}

EntryText entry_text(const Rational& q) { return {to_string(q)}; }
EntryText entry_text(const NfElem& a, const FieldPtr& K) {
  EntryText t;
  for (const auto& c : a.in_field(K).coords()) t.push_back(to_string(c));
  return t;
}

template <class F, class Fn>
MatrixText matrix_text(const Matrix<F>& m, Fn&& fn) {
  MatrixText t(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) t[i].push_back(fn(m(i, j)));
  return t;
}

json entry_json(const EntryText& e, bool list) {
  if (!list) return e.at(0);
  return json(e);
}

json matrix_json(const MatrixText& m, bool list) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& e : r) row.push_back(entry_json(e, list));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixText matrix_from_json(const json& j) {
  MatrixText m;
  for (const auto& r : j) {
    std::vector<EntryText> row;
    for (const auto& e : r) row.push_back(e.is_array() ? e.get<EntryText>() : EntryText{e.get<std::string>()});
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<std::string> field_text(const FieldPtr& K) {
  std::vector<std::string> t;
  if (K)
    for (const auto& c : K->coefficients()) t.push_back(to_string(c));
  return t;
}

template <class F, class Fn>
OutputDocument describe_result(const ClosureResult<F>& r, const FieldPtr& K, Fn&& fn) {
  OutputDocument d;
  d.field = field_text(K);
  d.n = r.group.n;
  d.lie_dim = r.group.lie_algebra.dim();
  for (const auto& b : r.group.lie_algebra.basis()) d.lie_basis.push_back(matrix_text(b, fn));
  d.component_count = r.group.components.size();
  for (const auto& c : r.group.components) d.component_reps.push_back(matrix_text(c, fn));
  d.certified = r.group.certified;
  d.trace = r.trace;
  return d;
}

}  // namespace

size_t InputDocument::size() const {
  if (!rational_generators.empty()) return rational_generators[0].rows();
  if (!field_generators.empty()) return field_generators[0].rows();
  return 0;
}

size_t InputDocument::generator_count() const {
  return field ? field_generators.size() : rational_generators.size();
}

InputDocument parse_input_document(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  InputDocument doc;
  if (j.contains("field") && !j["field"].is_null()) doc.field = parse_field(j["field"]);
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw ParseError("input needs a non-empty \"generators\" list");
  for (const auto& m : j["generators"]) {
    if (doc.field) {
      const FieldPtr K = doc.field;
      doc.field_generators.push_back(parse_matrix(m, [&](const json& x) { return parse_field_entry(x, K); }));
    } else {
      doc.rational_generators.push_back(parse_matrix(m, [](const json& x) { return parse_scalar(x); }));
    }
  }
  const size_t n = doc.size();
  for (const auto& m : doc.rational_generators)
    if (m.rows() != n) throw ParseError("generators differ in size");
  for (const auto& m : doc.field_generators)
    if (m.rows() != n) throw ParseError("generators differ in size");
  return doc;
}

std::string input_to_json(const InputDocument& doc) {
  json j;
  const bool list = doc.field != nullptr;
  if (list) j["field"] = field_text(doc.field);
  j["generators"] = json::array();
  for (const auto& m : doc.rational_generators)
    j["generators"].push_back(matrix_json(matrix_text(m, [](const Rational& q) { return entry_text(q); }), false));
  for (const auto& m : doc.field_generators)
    j["generators"].push_back(
        matrix_json(matrix_text(m, [&](const NfElem& a) { return entry_text(a, doc.field); }), true));
  return j.dump(2);
}

bool operator==(const OutputDocument& a, const OutputDocument& b) {
  const auto& s = a.trace;
  const auto& t = b.trace;
  return a.status == b.status && a.message == b.message && a.field == b.field && a.n == b.n &&
         a.lie_dim == b.lie_dim && a.lie_basis == b.lie_basis && a.component_count == b.component_count &&
         a.component_reps == b.component_reps && a.certified == b.certified && s.rounds == t.rounds &&
         s.dim_history == t.dim_history && s.bfs_lengths == t.bfs_lengths && s.multrel_calls == t.multrel_calls &&
         s.multrel_time == t.multrel_time && s.membership_calls == t.membership_calls &&
         s.membership_time == t.membership_time && s.total_time == t.total_time &&
         s.max_field_degree == t.max_field_degree;
}

std::string output_to_json(const OutputDocument& d, int indent) {
  const bool list = !d.field.empty();
  json j;
  j["status"] = d.status;
  if (!d.message.empty()) j["message"] = d.message;
  if (list) j["field"] = d.field;
  j["n"] = d.n;
  j["lie_dim"] = d.lie_dim;
  j["lie_basis"] = json::array();
  for (const auto& m : d.lie_basis) j["lie_basis"].push_back(matrix_json(m, list));
  j["component_count"] = d.component_count;
  j["component_reps"] = json::array();
  for (const auto& m : d.component_reps) j["component_reps"].push_back(matrix_json(m, list));
  j["certified"] = d.certified;
  const auto& t = d.trace;
  j["trace"] = {{"rounds", t.rounds},
                {"dim_history", t.dim_history},
                {"bfs_lengths", t.bfs_lengths},
                {"multrel_calls", t.multrel_calls},
                {"multrel_time", t.multrel_time},
                {"membership_calls", t.membership_calls},
                {"membership_time", t.membership_time},
                {"total_time", t.total_time},
                {"max_field_degree", t.max_field_degree}};
  return j.dump(indent);
}

OutputDocument parse_output_document(const std::string& json_text) {
  const json j = parse_json(json_text);
  OutputDocument d;
  try {
    d.status = j.at("status").get<std::string>();
    d.message = j.value("message", std::string());
    if (j.contains("field")) d.field = j["field"].get<std::vector<std::string>>();
    d.n = j.at("n").get<size_t>();
    d.lie_dim = j.at("lie_dim").get<size_t>();
    for (const auto& m : j.at("lie_basis")) d.lie_basis.push_back(matrix_from_json(m));
    d.component_count = j.at("component_count").get<size_t>();
    for (const auto& m : j.at("component_reps")) d.component_reps.push_back(matrix_from_json(m));
    d.certified = j.at("certified").get<bool>();
    const auto& t = j.at("trace");
    d.trace.rounds = t.at("rounds").get<size_t>();
    d.trace.dim_history = t.at("dim_history").get<std::vector<size_t>>();
    d.trace.bfs_lengths = t.at("bfs_lengths").get<std::vector<size_t>>();
    d.trace.multrel_calls = t.at("multrel_calls").get<size_t>();
    d.trace.multrel_time = t.at("multrel_time").get<double>();
    d.trace.membership_calls = t.at("membership_calls").get<size_t>();
    d.trace.membership_time = t.at("membership_time").get<double>();
    d.trace.total_time = t.at("total_time").get<double>();
    d.trace.max_field_degree = t.at("max_field_degree").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed output document: ") + e.what());
  }
  return d;
}

ComputedGroup compute_group(const InputDocument& doc, const ClosureConfig& config) {
  ComputedGroup g;
  g.field = doc.field;
  if (doc.field)
    g.over_k = zariski_closure(doc.field_generators, doc.field, config);
  else
    g.over_q = zariski_closure(doc.rational_generators, NumberField::rationals(), config);
  return g;
}

OutputDocument describe(const ComputedGroup& g) {
  if (g.over_q) return describe_result(*g.over_q, nullptr, [](const Rational& q) { return entry_text(q); });
  if (g.over_k) return describe_result(*g.over_k, g.field, [&](const NfElem& a) { return entry_text(a, g.field); });
  throw DomainError("empty group result");
}

OutputDocument describe_partial(const ClosureTrace& trace, const FieldPtr& field, size_t n, const std::string& what) {
  OutputDocument d;
  d.status = "budget_exhausted";
  d.message = what;
  d.field = field_text(field);
  d.n = n;
  d.trace = trace;
  return d;
}

MembershipVerdict member_from_json(const ComputedGroup& g, const std::string& matrix_json,
                                   const ClosureConfig& config) {
  const json j = parse_json(matrix_json);
  if (g.over_q) return member(g.over_q->group, parse_matrix(j, [](const json& x) { return parse_scalar(x); }), config);
  if (g.over_k) {
    const FieldPtr K = g.field;
    return member(g.over_k->group, parse_matrix(j, [&](const json& x) { return parse_field_entry(x, K); }), config);
  }
  throw DomainError("empty group result");
}

std::vector<std::string> check_invariants(const InputDocument& doc, const ComputedGroup& g,
                                          const ClosureConfig& config) {
  if (g.over_q) return check_closure_invariants(doc.rational_generators, *g.over_q, config);
  if (g.over_k) return check_closure_invariants(doc.field_generators, *g.over_k, config);
  throw DomainError("empty group result");
}

}  // namespace zc
