#include "margchoice/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace margchoice {

namespace {

using nlohmann::json;

// Builds a DOM in which every number is kept as its source text.
class ExactNumberBuilder : public nlohmann::json_sax<json> {
 public:
  json root;
  std::string error;

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override { return put(s); }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t&) override { return false; }
  bool start_object(std::size_t) override { return open(json::object()); }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& e) override {
    error = "byte " + std::to_string(position) + ": " + e.what();
    return false;
  }

 private:
  std::vector<json*> stack_;
  std::string key_;

  json* slot(json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    parent[key_] = std::move(value);
    return &parent[key_];
  }
  bool put(json value) {
    slot(std::move(value));
    return true;
  }
  bool open(json value) {
    stack_.push_back(slot(std::move(value)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }
};

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::Parse, message); }

std::vector<std::pair<std::string, std::string>> weights(const json& doc, const char* field) {
  const json& obj = doc.at(field);
  if (!obj.is_object()) fail(std::string(field) + ": expected an object");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_string()) fail(std::string(field) + "[\"" + key + "\"]: expected a number or \"p/q\" string");
    out.emplace_back(key, value.get<std::string>());
  }
  return out;
}

}  // namespace

RawDataset parse_dataset_json(std::string_view text) {
  ExactNumberBuilder builder;
  if (!json::sax_parse(text, &builder)) fail("invalid JSON at " + builder.error);
  const json& doc = builder.root;
  if (!doc.is_object()) fail("top level: expected an object");

  RawDataset raw;
  if (!doc.contains("alternatives")) fail("alternatives: missing");
  if (!doc["alternatives"].is_array()) fail("alternatives: expected an array of strings");
  for (const auto& label : doc["alternatives"]) {
    if (!label.is_string()) fail("alternatives: expected an array of strings");
    raw.alternatives.push_back(label.get<std::string>());
  }
  if (doc.contains("mu")) raw.mu = weights(doc, "mu");
  if (doc.contains("lambda")) raw.lambda = weights(doc, "lambda");
  if (doc.contains("xi")) {
    raw.xi = weights(doc, "xi");
    raw.has_xi = true;
  }
  if (doc.contains("outside_option")) {
    if (!doc["outside_option"].is_boolean()) fail("outside_option: expected true or false");
    raw.outside_option = doc["outside_option"].get<bool>();
  }
  if (doc.contains("feasible")) {
    if (!doc["feasible"].is_array()) fail("feasible: expected an array of menu strings");
    for (const auto& menu : doc["feasible"]) {
      if (!menu.is_string()) fail("feasible: expected an array of menu strings");
      raw.feasible.push_back(menu.get<std::string>());
    }
    raw.has_feasible = true;
  }
  for (const auto& [key, value] : doc.items())
    if (key != "alternatives" && key != "mu" && key != "lambda" && key != "xi" && key != "outside_option" &&
        key != "feasible")
      fail(key + ": unknown field");
  return raw;
}

RawDataset read_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset_json(buffer.str());
}

std::string dataset_to_json(const RawDataset& raw, int indent) {
  json doc = json::object();
  doc["alternatives"] = raw.alternatives;
  auto object = [](const std::vector<std::pair<std::string, std::string>>& entries) {
    json obj = json::object();
    for (const auto& [k, v] : entries) obj[k] = v;
    return obj;
  };
  doc["mu"] = object(raw.mu);
  doc["lambda"] = object(raw.lambda);
  if (raw.outside_option) doc["outside_option"] = true;
  if (raw.has_xi) doc["xi"] = object(raw.xi);
  if (raw.has_feasible) doc["feasible"] = raw.feasible;
  return doc.dump(indent);
}

}  // namespace margchoice
