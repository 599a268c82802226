#pragma once

#include "fdrm/anticodes.hpp"
#include "fdrm/multilevel.hpp"
#include "fdrm/oracle.hpp"

#include <json.hpp>

namespace fdrm {

// FieldSpec: {"p", "e", "modulus" low-to-high}.
nlohmann::json to_json(const Field& f);
FieldPtr field_from_json(const nlohmann::json& j);

// Matrix: {"field", "k", "m", "rows"}; entries are field encodings.
nlohmann::json to_json(const Matrix& M);
Matrix matrix_from_json(const nlohmann::json& j);

// MatrixSpace: {"field", "k", "m", "basis": [Matrix, ...]}.
nlohmann::json to_json(const MatrixSpace& S);
// Accepts any object carrying the MatrixSpace keys (extra keys are ignored,
// so ConstructionResult files load as spaces too).
MatrixSpace space_from_json(const nlohmann::json& j);

// MatrixSpace keys plus {"method", "tdelta", "attains_bound", "transposed"}.
nlohmann::json to_json(const ConstructionResult& r);

// Profile: {"k", "m", "cells": [[i,j], ...]} 1-indexed.
nlohmann::json to_json(const Profile& P);
Profile profile_from_json(const nlohmann::json& j);

// LineSelection: {"rows": [int], "cols": [int]}.
nlohmann::json to_json(const LineSelection& L);

// MatrixSpace keys plus {"lines", "tdelta"}.
nlohmann::json to_json(const AnticodeResult& r);

nlohmann::json to_json(const VerifyReport& r);

// {"maxdim", "certified", "nodes", "witness": MatrixSpace}.
nlohmann::json to_json(const SearchResult& r);

// {"n", "k", "q", "levels": [{"pivot", "dim", "tdelta", "method"}],
//  "cardinality": decimal string, "min_distance_certificate"}.
nlohmann::json code_summary_json(const SubspaceCode& C, const DistanceCertificate& cert);

}  // namespace fdrm
