#pragma once

#include "cellkit/cellular.hpp"

#include <optional>
#include <string>

namespace cellkit {

struct SpecFile {
  Algebra algebra;
  std::optional<CellDatum> datum;
};

/// Canonical text of the spec file: fixed key order, products row-major with
/// ascending k, one product per line. Integers outside int64 are strings.
std::string export_spec(const Algebra& a, const CellDatum* datum = nullptr);

/// Throws ParseError on malformed input.
SpecFile load_spec(const std::string& text);
SpecFile load_spec_file(const std::string& path);

}  // namespace cellkit
