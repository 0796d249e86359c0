#include "ofg/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ofg {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) throw ParseError(std::string(where) + " entry is not an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string(where) + " entry is missing \"" + key + "\"");
  return *it;
}

std::int64_t read_id(const json& obj, const char* key, const char* where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(std::string(where) + " \"" + key + "\" must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(std::string(where) + " \"" + key + "\" is out of range");
  return v.get<std::int64_t>();
}

double read_real(const json& obj, const char* key, const char* where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) throw ParseError(std::string(where) + " \"" + key + "\" must be a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(where) + " \"" + key + "\" is not finite");
  return x;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw std::invalid_argument(std::string("cannot serialize non-finite ") + what);
}

}  // namespace

GameInstance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("document root must be an object");
  const json& nodes = field(doc, "nodes", "document");
  const json& edges = field(doc, "edges", "document");
  if (!nodes.is_array()) throw ParseError("\"nodes\" must be an array");
  if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
  if (nodes.empty()) throw ParseError("\"nodes\" is empty");

  struct RawNode {
    double s;
    double w;
  };
  std::map<std::int64_t, RawNode> by_id;
  for (const json& node : nodes) {
    std::int64_t id = read_id(node, "id", "node");
    RawNode raw{read_real(node, "s", "node"), read_real(node, "self_weight", "node")};
    if (!by_id.emplace(id, raw).second) throw ParseError("duplicate node id " + std::to_string(id));
  }

  std::vector<std::int64_t> labels;
  std::vector<double> s, w;
  std::map<std::int64_t, NodeId> dense;
  for (const auto& [id, raw] : by_id) {
    dense.emplace(id, labels.size());
    labels.push_back(id);
    s.push_back(raw.s);
    w.push_back(raw.w);
  }

  std::vector<Edge> parsed;
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const json& edge : edges) {
    std::int64_t from = read_id(edge, "from", "edge");
    std::int64_t to = read_id(edge, "to", "edge");
    double weight = read_real(edge, "weight", "edge");
    auto f = dense.find(from);
    auto t = dense.find(to);
    if (f == dense.end() || t == dense.end())
      throw ParseError("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                       ") references an undeclared node");
    if (from == to) throw ParseError("self edge on node " + std::to_string(from) + "; use self_weight");
    if (weight <= 0.0)
      throw ParseError("non-positive edge weight on (" + std::to_string(from) + ", " + std::to_string(to) + ")");
    if (!seen.emplace(f->second, t->second).second)
      throw ParseError("duplicate edge (" + std::to_string(from) + ", " + std::to_string(to) + ")");
    parsed.push_back({f->second, t->second, weight});
  }

  return GameInstance(std::move(w), std::move(s), std::move(parsed), std::move(labels));
}

std::string serialize_instance(const GameInstance& instance, std::span<const std::size_t> levels) {
  if (!levels.empty() && levels.size() != instance.size())
    throw std::invalid_argument("levels length does not match node count");
  json nodes = json::array();
  for (NodeId i = 0; i < instance.size(); ++i) {
    require_finite(instance.internal_opinion(i), "internal opinion");
    require_finite(instance.self_weight(i), "self weight");
    nodes.push_back({{"id", instance.labels()[i]},
                     {"s", instance.internal_opinion(i)},
                     {"self_weight", instance.self_weight(i)}});
  }
  json edges = json::array();
  for (const Edge& e : instance.edges()) {
    require_finite(e.weight, "edge weight");
    edges.push_back({{"from", instance.labels()[e.from]},
                     {"to", instance.labels()[e.to]},
                     {"weight", e.weight}});
  }
  json doc = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  if (!levels.empty()) doc["levels"] = std::vector<std::size_t>(levels.begin(), levels.end());
  return doc.dump(1);
}

std::vector<std::size_t> parse_levels(std::string_view text) {
  const json doc = parse_document(text);
  auto it = doc.find("levels");
  if (it == doc.end()) return {};
  if (!it->is_array()) throw ParseError("\"levels\" must be an array");
  std::vector<std::size_t> out;
  for (const json& v : *it) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ParseError("\"levels\" entries must be non-negative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

GameInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace ofg
