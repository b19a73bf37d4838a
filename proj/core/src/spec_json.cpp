#include <fstream>
#include <sstream>

#include <json.hpp>

#include "foxh/hfun_spec.hpp"

namespace foxh {

namespace {

using nlohmann::json;

std::vector<ParamPair> parse_row(const json& arr, const char* name) {
  if (!arr.is_array()) throw spec_error(std::string("spec json: ") + name + " must be an array");
  std::vector<ParamPair> row;
  row.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw spec_error(std::string("spec json: entries of ") + name + " must be [a, A] pairs");
    row.push_back({item[0].get<double>(), item[1].get<double>()});
  }
  return row;
}

json row_to_json(const std::vector<ParamPair>& row) {
  json arr = json::array();
  for (const auto& pr : row) arr.push_back(json::array({pr.a, pr.A}));
  return arr;
}

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw spec_error("spec json: malformed document");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spec_error("spec json: cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::string to_json_string(const HFunctionSpec& spec, SpecConvention convention) {
  json doc;
  if (convention == SpecConvention::Paper) {
    doc["convention"] = "paper";
    doc["m"] = spec.m();
    doc["n"] = spec.n();
    doc["upper"] = row_to_json(spec.upper());
    doc["lower"] = row_to_json(spec.lower());
  } else {
    doc["convention"] = "standard";
    doc["m"] = spec.n();
    doc["n"] = spec.m();
    doc["upper"] = row_to_json(spec.lower());
    doc["lower"] = row_to_json(spec.upper());
  }
  return doc.dump(2);
}

HFunctionSpec h_spec_from_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.contains("m") || !doc.contains("n") || !doc.contains("upper") || !doc.contains("lower"))
    throw spec_error("spec json: required fields m, n, upper, lower");
  std::string convention = doc.value("convention", "paper");
  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  auto upper = parse_row(doc["upper"], "upper");
  auto lower = parse_row(doc["lower"], "lower");
  if (convention == "paper") {
    return HFunctionSpec(m, n, std::move(upper), std::move(lower));
  }
  if (convention == "standard") {
    return HFunctionSpec::standard_form(m, n, std::move(upper), std::move(lower));
  }
  throw spec_error("spec json: convention must be \"paper\" or \"standard\"");
}

HFunctionSpec h_spec_from_file(const std::string& path) {
  return h_spec_from_json(read_file(path));
}

std::string to_json_string(const FoxWrightSpec& fw) {
  json doc;
  doc["upper"] = row_to_json(fw.upper);
  doc["lower"] = row_to_json(fw.lower);
  return doc.dump(2);
}

FoxWrightSpec fw_spec_from_json(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.contains("upper") || !doc.contains("lower"))
    throw spec_error("spec json: required fields upper, lower");
  return FoxWrightSpec(parse_row(doc["upper"], "upper"), parse_row(doc["lower"], "lower"));
}

FoxWrightSpec fw_spec_from_file(const std::string& path) {
  return fw_spec_from_json(read_file(path));
}

}  // namespace foxh
