#pragma once

#include <string>

#include <json.hpp>

#include "cohid/cdga.hpp"
#include "cohid/dgku.hpp"
#include "cohid/filtered.hpp"
#include "cohid/persistence_dg.hpp"

namespace cohid::io {

using nlohmann::json;

/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const json& j);
ExtendedRational extended_from_json(const json& j);

json to_json(const Barcode& b);
Barcode barcode_from_json(const json& j);

/// Nested rows of rational strings; the shape is checked against rows x cols.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Field& f);

json to_json(const PersistenceModule& m);
PersistenceModule persistence_module_from_json(const json& j, const Field& f = Field::rationals());

json to_json(const PersistenceDgModule& x);
PersistenceDgModule persistence_dg_from_json(const json& j, const Field& f = Field::rationals());

json to_json(const DgKuModule& m);
DgKuModule dgku_from_json(const json& j, const Field& f = Field::rationals());

json to_json(const FilteredKtModule& m);
FilteredKtModule filtered_from_json(const json& j, const Field& f = Field::rationals());

json to_json(const FreeCdga& a);
FreeCdga model_from_json(const json& j);

/// Reads a whole file; throws std::runtime_error when unreadable or malformed.
json read_json_file(const std::string& path);

}  // namespace cohid::io
