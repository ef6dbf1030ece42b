// Copyright 2026 The fswgnn Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FSWGNN_JSON_FORMAT_H_
#define FSWGNN_JSON_FORMAT_H_

#include <string>

#include <json.hpp>

#include "fswgnn/common.h"

namespace fswgnn {

// Serializes with keys in insertion order and every floating-point number
// printed as %.17g, so identical values always produce identical bytes.
// Non-finite numbers become null. indent < 0 gives a single line.
std::string DumpJson(const nlohmann::ordered_json& value, int indent = 2);

// %.17g, the float format used by DumpJson and the CSV writers.
std::string FormatDouble(double x);

nlohmann::ordered_json VectorToJson(const Vector& v);
nlohmann::ordered_json MatrixToJson(const Matrix& m);

}  // namespace fswgnn

#endif  // FSWGNN_JSON_FORMAT_H_
