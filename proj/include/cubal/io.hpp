#pragma once

// File formats. All indices in text and JSON are 1-based.
//
//   Cayley table, text:  first line m, then m lines of m integers.
//   Cayley table, JSON:  {"m": 2, "table": [[1,1],[1,2]]}
//   Cubic matrix, JSON:  {"m": 2, "entries": [[["1","0"],["0","0"]], ...]}   entries[i][j][k]
//   Square matrix, JSON: {"m": 2, "entries": [["1","-1/2"],["0","3"]]}
//   Census, JSON:        {"m":..,"total":..,"orbit_count":..,"orbits":[{"representative":table,"size":..}]}
//
// Scalars are written as reduced-fraction strings; integer JSON numbers are
// accepted on input.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cubal/cubic_matrix.hpp"
#include "cubal/enumerate.hpp"
#include "cubal/semigroup.hpp"
#include "cubal/structure.hpp"

namespace cubal {

using Json = nlohmann::ordered_json;

/// Throws MalformedInput if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

Operation parse_operation_text(std::string_view text, Checking checking = Checking::Associative);
Operation parse_operation_json(const Json& doc, Checking checking = Checking::Associative);
/// Dispatches on the first non-blank character: '{' means JSON.
Operation parse_operation(std::string_view content, Checking checking = Checking::Associative);
Operation load_operation(const std::filesystem::path& path, Checking checking = Checking::Associative);

std::string format_operation_text(const Operation& a);
/// The nested 1-based table alone.
Json table_json(const Operation& a);
Json to_json(const Operation& a);

CubicMatrix parse_cubic_matrix_json(const Json& doc);
CubicMatrix load_cubic_matrix(const std::filesystem::path& path);
Json to_json(const CubicMatrix& x);

Matrix parse_square_matrix_json(const Json& doc);
Json square_matrix_json(const Matrix& b);
Json to_json(const AccompanyingElement& u);

Json to_json(const LinearForm<Scalar>& chi);
Json to_json(const Subset& s);
Json to_json(const Triple& t);
Json to_json(const SpannedSubspace& s);
Json to_json(const SequenceClass& c);
Json to_json(const CensusResult& census);
CensusResult parse_census_json(const Json& doc);

/// Parses JSON text, mapping parser errors to MalformedInput.
Json parse_json(std::string_view text);

}  // namespace cubal
