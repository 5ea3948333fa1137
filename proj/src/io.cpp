#include "gevp/io.hpp"

#include <json.hpp>

namespace gevp {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  json j = json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  if (!j.is_object()) throw SchemaError("$", "document must be a JSON object");
  return j;
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(key, "missing required field");
  return *it;
}

std::size_t require_positive_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw SchemaError(key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::vector<std::string> string_array(const json& v, const std::string& path, std::size_t want) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  if (v.size() != want)
    throw LengthMismatch(path, "expected " + std::to_string(want) + " entries, found " +
                                   std::to_string(v.size()));
  std::vector<std::string> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected a number string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::vector<int> epsilon_array(const json& v, std::size_t order) {
  if (!v.is_array()) throw SchemaError("epsilon", "expected an array of 0/1");
  if (v.size() + 1 != order)
    throw LengthMismatch("epsilon", "expected " + std::to_string(order - 1) + " entries, found " +
                                        std::to_string(v.size()));
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer())
      throw SchemaError("epsilon[" + std::to_string(i) + "]", "expected 0 or 1");
    const auto b = v[i].get<long>();
    if (b != 0 && b != 1) throw SchemaError("epsilon[" + std::to_string(i) + "]", "expected 0 or 1");
    out.push_back(static_cast<int>(b));
  }
  return out;
}

// Validates number strings eagerly so malformed literals are reported with
// their document path even when the caller only wants the raw document.
void check_literals(const std::vector<std::string>& values, const std::string& path) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    try {
      (void)Rational::parse(values[i]);
    } catch (const ParseError& err) {
      throw ParseError(path + "[" + std::to_string(i) + "]: " + err.what());
    }
  }
}

json q_matrix_to_json(const std::vector<std::vector<std::string>>& q) {
  json rows = json::array();
  for (const auto& row : q) {
    json r = json::array();
    for (const auto& s : row) r.push_back(s);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string document_format(std::string_view text) {
  const json j = parse_json(text);
  const json& f = require(j, "format");
  if (!f.is_string()) throw SchemaError("format", "expected a string");
  return f.get<std::string>();
}

PencilDocument read_pencil_document(std::string_view text) {
  const json j = parse_json(text);
  if (require(j, "format").get<std::string>() != "gevp-pencil/1")
    throw SchemaError("format", "expected \"gevp-pencil/1\"");

  PencilDocument doc;
  doc.order = require_positive_int(j, "N");
  doc.factor_count = require_positive_int(j, "M");

  if (const auto it = j.find("epsilon"); it != j.end())
    doc.epsilon = epsilon_array(*it, doc.order);
  else
    doc.epsilon.assign(doc.order - 1, 1);

  const json& q = require(j, "q");
  if (!q.is_array()) throw SchemaError("q", "expected an array");
  const bool flat = !q.empty() && q[0].is_string();
  if (flat) {
    // Single-factor convenience form: a flat array of N number strings.
    if (doc.factor_count != 1)
      throw LengthMismatch("q", "flat q array is only valid for M = 1");
    doc.q.push_back(string_array(q, "q", doc.order));
  } else {
    if (q.size() != doc.factor_count)
      throw LengthMismatch("q", "expected " + std::to_string(doc.factor_count) +
                                    " rows, found " + std::to_string(q.size()));
    for (std::size_t r = 0; r < q.size(); ++r)
      doc.q.push_back(string_array(q[r], "q[" + std::to_string(r) + "]", doc.order));
  }
  doc.e = string_array(require(j, "e"), "e", doc.order - 1);

  for (std::size_t r = 0; r < doc.q.size(); ++r)
    check_literals(doc.q[r], "q[" + std::to_string(r) + "]");
  check_literals(doc.e, "e");
  return doc;
}

ResultDocument read_result_document(std::string_view text) {
  const json j = parse_json(text);
  if (require(j, "format").get<std::string>() != "gevp-result/1")
    throw SchemaError("format", "expected \"gevp-result/1\"");

  ResultDocument doc;
  const json& kind = require(j, "kind");
  if (!kind.is_string()) throw SchemaError("kind", "expected a string");
  doc.kind = kind.get<std::string>();
  doc.order = require_positive_int(j, "N");
  doc.factor_count = require_positive_int(j, "M");
  if (doc.kind != "tridiagonal" && doc.kind != "hessenberg")
    throw SchemaError("kind", "expected \"tridiagonal\" or \"hessenberg\"");
  if ((doc.kind == "tridiagonal") != (doc.factor_count == 1))
    throw SchemaError("kind", "kind must be \"tridiagonal\" exactly when M = 1");

  doc.epsilon = epsilon_array(require(j, "epsilon"), doc.order);

  const json& q = require(j, "q_hat");
  if (!q.is_array() || q.size() != doc.factor_count)
    throw LengthMismatch("q_hat", "expected " + std::to_string(doc.factor_count) + " rows");
  for (std::size_t r = 0; r < q.size(); ++r)
    doc.q_hat.push_back(string_array(q[r], "q_hat[" + std::to_string(r) + "]", doc.order));
  doc.e_hat = string_array(require(j, "e_hat"), "e_hat", doc.order - 1);

  if (const auto it = j.find("charpoly"); it != j.end())
    doc.charpoly = string_array(*it, "charpoly", doc.order + 1);
  if (const auto it = j.find("verified"); it != j.end()) {
    if (!it->is_boolean()) throw SchemaError("verified", "expected a boolean");
    doc.verified = it->get<bool>();
  }

  // Literals are validated on conversion, not here: float-mode results carry
  // decimal strings outside the exact grammar.
  return doc;
}

std::string write_pencil_document(const PencilDocument& doc) {
  json j;
  j["format"] = "gevp-pencil/1";
  j["N"] = doc.order;
  j["M"] = doc.factor_count;
  j["epsilon"] = doc.epsilon;
  j["q"] = q_matrix_to_json(doc.q);
  j["e"] = doc.e;
  return j.dump(2) + "\n";
}

std::string write_result_document(const ResultDocument& doc) {
  json j;
  j["format"] = "gevp-result/1";
  j["kind"] = doc.factor_count == 1 ? "tridiagonal" : "hessenberg";
  j["N"] = doc.order;
  j["M"] = doc.factor_count;
  j["epsilon"] = doc.epsilon;
  j["q_hat"] = q_matrix_to_json(doc.q_hat);
  j["e_hat"] = doc.e_hat;
  if (doc.charpoly) j["charpoly"] = *doc.charpoly;
  if (doc.verified) j["verified"] = *doc.verified;
  return j.dump(2) + "\n";
}

}  // namespace gevp
