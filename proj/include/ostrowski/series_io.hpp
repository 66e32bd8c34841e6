#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ostrowski/power_series.hpp"

namespace ostrowski {

/// Series file: the series plus an optional "construction" metadata object.
///
///   { "centre": ["re", "im"], "radius_hint": "1" | "inf", "precision_bits": 256,
///     "coeffs": [["re", "im"], ...], "construction": {...} }
///
/// Decimal strings carry enough digits to read back bit-identically at
/// precision_bits.
struct SeriesDocument {
  PowerSeries series;
  nlohmann::json construction = nullptr;
};

nlohmann::json to_json(const PowerSeries& series);
nlohmann::json to_json(const Complex& z);
PowerSeries series_from_json(const nlohmann::json& j);
Complex complex_from_json(const nlohmann::json& j, Precision p);

nlohmann::json to_json(const SeriesDocument& doc);
SeriesDocument document_from_json(const nlohmann::json& j);

SeriesDocument read_series_file(const std::filesystem::path& path);
void write_series_file(const std::filesystem::path& path, const SeriesDocument& doc);

/// Writes via a sibling temporary file and rename, so readers never see a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace ostrowski
