#pragma once

// JSON reading and writing. Matrices are arrays of rows of nonnegative integers; printing is
// deterministic, so print(parse(print(x))) reproduces the same bytes.

#include <nlohmann/json.hpp>
#include <string>

#include "smith/dga.hpp"

namespace smith {

using Json = nlohmann::json;

/// Bad input, with the JSON pointer (or byte offset) where it was found.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json to_json(const Matrix& m);
Json to_json(const ChainComplex& c);
Json to_json(const ChainMap& f);
Json arrow_to_json(const ArrowObject& f);
Json to_json(const ArrowSquare& a);
Json to_json(const DGAlgebra& r);
Json to_json(const SmithIdeal& s);
Json to_json(const SmithModule& m);

ChainComplex complex_from_json(const Json& j, const std::string& at = "");
ChainMap map_from_json(const Json& j, const std::string& at = "");
ArrowObject arrow_from_json(const Json& j, const std::string& at = "");
ArrowSquare square_from_json(const Json& j, const std::string& at = "");
DGAlgebra dga_from_json(const Json& j, const std::string& at = "");
SmithIdeal smith_from_json(const Json& j, const std::string& at = "");
SmithModule module_from_json(const Json& j, const std::string& at = "");

Json parse_json(const std::string& text);
std::string print_json(const Json& j);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace smith
