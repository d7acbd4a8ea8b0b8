#pragma once

// JSON encodings of the core types.  Integers are written as JSON numbers
// when they fit in 64 bits and as decimal strings otherwise; both forms are
// accepted on input.

#include "tdesc/fan.hpp"
#include "tdesc/glattice.hpp"

#include <json.hpp>

#include <string>

namespace tdesc {

using Json = nlohmann::ordered_json;

/// Raised for malformed input documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int int_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j, std::size_t cols_if_empty = 0);
Json to_json(const Int& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const FGAbelianGroup& g);

Fan fan_from_json(const Json& j);
Json fan_to_json(const Fan& f);

/// {"rank": r, "generators": [matrix, ...]}
GLattice glattice_from_json(const Json& j);

/// Parse text; throws ParseError with a readable message.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace tdesc
