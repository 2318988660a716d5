#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pipefit {

enum class ErrorKind {
  InfeasibleVertex,  // edges cannot meet symmetrically at the vertex
  ArityMismatch,     // hub arm count differs from the vertex degree
  Degenerate,        // zero edge-to-axis angle
  OutOfRange,        // bend outside the realizable range for a hub
  NonpositiveCut,    // fittings consume the whole pipe length
  EmptyCatalog,
  CatalogParse,
  CatalogValidation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Catalog problems are input problems; everything else is a geometric
  /// impossibility of the requested build.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::CatalogParse ||
           kind_ == ErrorKind::CatalogValidation;
  }

 private:
  ErrorKind kind_;
};

}  // namespace pipefit
