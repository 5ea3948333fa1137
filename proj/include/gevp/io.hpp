#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gevp/pencil.hpp"
#include "gevp/rational.hpp"

// Bit-exact JSON formats. Numbers travel as strings in the scalar literal
// grammar so that exactness survives any JSON parser; serialization is
// canonical (fixed key order, two-space indent) and byte-stable.

namespace gevp {

struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string at, const std::string& message)
      : std::runtime_error(at + ": " + message), path(std::move(at)) {}
};

struct LengthMismatch : SchemaError {
  using SchemaError::SchemaError;
};

/// On-disk pencil, format "gevp-pencil/1".
struct PencilDocument {
  std::size_t order = 0;         // N
  std::size_t factor_count = 1;  // M
  std::vector<int> epsilon;      // length N-1; all ones when omitted in input
  std::vector<std::vector<std::string>> q;
  std::vector<std::string> e;
};

/// On-disk result, format "gevp-result/1"; kind is "tridiagonal" exactly
/// when the factor count is 1, "hessenberg" otherwise.
struct ResultDocument {
  std::string kind;
  std::size_t order = 0;
  std::size_t factor_count = 1;
  std::vector<int> epsilon;
  std::vector<std::vector<std::string>> q_hat;
  std::vector<std::string> e_hat;
  std::optional<std::vector<std::string>> charpoly;  // ascending degree, N+1 entries
  std::optional<bool> verified;
};

PencilDocument read_pencil_document(std::string_view text);
ResultDocument read_result_document(std::string_view text);
std::string write_pencil_document(const PencilDocument& doc);
std::string write_result_document(const ResultDocument& doc);

/// Peeks at the "format" field: "gevp-pencil/1" or "gevp-result/1".
std::string document_format(std::string_view text);

// Scalar <-> canonical string bridging for both computation modes.
template <typename S>
struct ScalarIo;

template <>
struct ScalarIo<Rational> {
  static Rational parse(const std::string& text) { return Rational::parse(text); }
  static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct ScalarIo<double> {
  static double parse(const std::string& text) { return Rational::parse(text).to_double(); }
  static std::string str(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  }
};

template <typename S>
PencilSpec<S> to_spec(const PencilDocument& doc) {
  PencilSpec<S> spec;
  spec.order = doc.order;
  spec.factor_count = doc.factor_count;
  spec.epsilon = EpsilonVector(doc.epsilon);
  for (const auto& row : doc.q) {
    std::vector<S> parsed;
    parsed.reserve(row.size());
    for (const auto& s : row) parsed.push_back(ScalarIo<S>::parse(s));
    spec.q.push_back(std::move(parsed));
  }
  spec.e.reserve(doc.e.size());
  for (const auto& s : doc.e) spec.e.push_back(ScalarIo<S>::parse(s));
  spec.validate();
  return spec;
}

template <typename S>
PencilDocument from_spec(const PencilSpec<S>& spec) {
  PencilDocument doc;
  doc.order = spec.order;
  doc.factor_count = spec.factor_count;
  doc.epsilon = spec.epsilon.bits();
  for (const auto& row : spec.q) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(ScalarIo<S>::str(v));
    doc.q.push_back(std::move(out));
  }
  for (const auto& v : spec.e) doc.e.push_back(ScalarIo<S>::str(v));
  return doc;
}

template <typename S>
ResultDocument from_result(const TransformResult<S>& result) {
  ResultDocument doc;
  doc.kind = result.factor_count == 1 ? "tridiagonal" : "hessenberg";
  doc.order = result.order;
  doc.factor_count = result.factor_count;
  doc.epsilon = result.epsilon.bits();
  for (const auto& row : result.q_hat) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(ScalarIo<S>::str(v));
    doc.q_hat.push_back(std::move(out));
  }
  for (const auto& v : result.e_hat) doc.e_hat.push_back(ScalarIo<S>::str(v));
  return doc;
}

template <typename S>
TransformResult<S> to_result(const ResultDocument& doc) {
  TransformResult<S> result;
  result.order = doc.order;
  result.factor_count = doc.factor_count;
  result.epsilon = EpsilonVector(doc.epsilon);
  for (const auto& row : doc.q_hat) {
    std::vector<S> parsed;
    parsed.reserve(row.size());
    for (const auto& s : row) parsed.push_back(ScalarIo<S>::parse(s));
    result.q_hat.push_back(std::move(parsed));
  }
  for (const auto& s : doc.e_hat) result.e_hat.push_back(ScalarIo<S>::parse(s));
  return result;
}

}  // namespace gevp
