#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homaff {

/// Elements of a finite structure are 0-based contiguous indices.
using Element = std::uint32_t;

/// Base of every error the library throws. `witness()` carries the first
/// offending indices found by the scan that raised it (possibly empty).
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, std::vector<Element> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  std::vector<Element> witness_;
};

template <typename KindT>
class KindedError : public Error {
 public:
  using Kind = KindT;

  KindedError(Kind kind, const std::string& what,
              std::vector<Element> witness = {})
      : Error(what, std::move(witness)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class ParseErrorKind { Syntax };
enum class QuandleErrorKind {
  Malformed,
  NotIdempotent,
  RowNotBijective,
  NotLeftDistributive,
  InvalidPartition,
  NotACongruence,
};
enum class PermErrorKind { NotBijective, DegreeMismatch };
enum class GroupErrorKind {
  EmptyModuli,
  InvalidModulus,
  SizeMismatch,
  NotBijective,
  NotAdditive,
  NotAGroup,
};
enum class MeshErrorKind {
  Malformed,
  NotAHomomorphism,
  M1Violation,
  M2Violation,
  M3Violation,
  M4Violation,
  InvalidParams,
};
enum class CoverErrorKind {
  NotHomImage,
  InvalidMultitransversal,
  OplusUndefined,
  InternalAssertionFailure,
};

using ParseError = KindedError<ParseErrorKind>;
using QuandleError = KindedError<QuandleErrorKind>;
using PermError = KindedError<PermErrorKind>;
using GroupError = KindedError<GroupErrorKind>;
using MeshError = KindedError<MeshErrorKind>;
using CoverError = KindedError<CoverErrorKind>;

}  // namespace homaff
