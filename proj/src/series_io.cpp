#include "ostrowski/series_io.hpp"

#include <fstream>
#include <sstream>

#include "ostrowski/errors.hpp"

namespace ostrowski {

using nlohmann::json;

namespace {

std::string as_decimal(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  throw Error(ErrorKind::parse, std::string(what) + " must be a decimal string");
}

}  // namespace

json to_json(const Complex& z) { return json::array({z.re().to_string(), z.im().to_string()}); }

Complex complex_from_json(const json& j, Precision p) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::parse, "complex value must be [\"re\", \"im\"]");
  return {Real::parse(as_decimal(j[0], "re"), p), Real::parse(as_decimal(j[1], "im"), p)};
}

json to_json(const PowerSeries& series) {
  json coeffs = json::array();
  for (const auto& c : series.coeffs()) coeffs.push_back(to_json(c));
  return json{{"centre", to_json(series.centre())},
              {"radius_hint", series.radius_hint().to_string()},
              {"precision_bits", series.precision().bits},
              {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::parse, "series file must hold a JSON object");
    const Precision p{j.at("precision_bits").get<long>()};
    if (p.bits < 2) throw Error(ErrorKind::parse, "precision_bits must be at least 2");
    Complex centre = complex_from_json(j.at("centre"), p);
    Real hint = Real::parse(as_decimal(j.at("radius_hint"), "radius_hint"), p);
    const json& cj = j.at("coeffs");
    if (!cj.is_array()) throw Error(ErrorKind::parse, "coeffs must be an array");
    std::vector<Complex> coeffs;
    coeffs.reserve(cj.size());
    for (const auto& c : cj) coeffs.push_back(complex_from_json(c, p));
    return {std::move(centre), std::move(coeffs), std::move(hint)};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::parse) throw;
    throw Error(ErrorKind::parse, e.what());
  }
}

json to_json(const SeriesDocument& doc) {
  json j = to_json(doc.series);
  if (!doc.construction.is_null()) j["construction"] = doc.construction;
  return j;
}

SeriesDocument document_from_json(const json& j) {
  SeriesDocument doc{series_from_json(j)};
  if (j.contains("construction")) doc.construction = j.at("construction");
  return doc;
}

SeriesDocument read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::parse, path.string() + " is not valid JSON");
  return document_from_json(j);
}

void write_series_file(const std::filesystem::path& path, const SeriesDocument& doc) {
  write_text_atomic(path, to_json(doc).dump(1) + "\n");
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::config, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorKind::config, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ostrowski
