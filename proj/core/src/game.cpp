#include "ofg/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ofg {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool by_from,
               std::vector<std::size_t>& offsets, std::vector<Neighbor>& adj) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_from ? e.from : e.to) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adj.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    NodeId key = by_from ? e.from : e.to;
    adj[cursor[key]++] = Neighbor{by_from ? e.to : e.from, e.weight};
  }
}

}  // namespace

GameInstance::GameInstance(std::vector<double> self_weight,
                           std::vector<double> internal_opinion,
                           std::vector<Edge> edges,
                           std::vector<std::int64_t> labels)
    : self_weight_(std::move(self_weight)),
      internal_opinion_(std::move(internal_opinion)),
      edges_(std::move(edges)),
      labels_(std::move(labels)) {
  const std::size_t n = self_weight_.size();
  if (n == 0) throw std::invalid_argument("game instance needs at least one node");
  if (internal_opinion_.size() != n)
    throw std::invalid_argument("internal opinion count does not match node count");
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), std::int64_t{0});
  } else if (labels_.size() != n) {
    throw std::invalid_argument("label count does not match node count");
  } else {
    std::unordered_set<std::int64_t> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) throw std::invalid_argument("duplicate node label");
  }

  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.from << ", " << e.to << ") has an endpoint outside [0, " << n << ")";
      throw std::invalid_argument(msg.str());
    }
    if (e.from == e.to)
      throw std::invalid_argument("self edges are not allowed; use the self weight");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to;
  });
  if (dup != edges_.end()) {
    std::ostringstream msg;
    msg << "duplicate edge (" << dup->from << ", " << dup->to << ")";
    throw std::invalid_argument(msg.str());
  }

  build_csr(n, edges_, true, out_offsets_, out_);
  build_csr(n, edges_, false, in_offsets_, in_);
  received_.assign(n, 0.0);
  exerted_.assign(n, 0.0);
  for (const Edge& e : edges_) {
    received_[e.from] += e.weight;
    exerted_[e.to] += e.weight;
  }
}

std::span<const Neighbor> GameInstance::influencers(NodeId i) const {
  if (i >= size()) throw std::out_of_range("node index out of range");
  return std::span<const Neighbor>(out_).subspan(out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const Neighbor> GameInstance::influenced(NodeId i) const {
  if (i >= size()) throw std::out_of_range("node index out of range");
  return std::span<const Neighbor>(in_).subspan(in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]);
}

double GameInstance::weight(NodeId i, NodeId j) const {
  if (i == j) return self_weight(i);
  for (const Neighbor& nb : influencers(i))
    if (nb.node == j) return nb.weight;
  return 0.0;
}

std::optional<NodeId> GameInstance::index_of(std::int64_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

double GameInstance::opinion_scale() const {
  double m = 0.0;
  for (double s : internal_opinion_) m = std::max(m, std::abs(s));
  return 1.0 + m;
}

GameInstance GameInstance::with_internal_opinions(std::vector<double> s) const {
  return GameInstance(self_weight_, std::move(s), edges_, labels_);
}

GameInstance GameInstance::with_self_weight(NodeId i, double w) const {
  auto weights = self_weight_;
  weights.at(i) = w;
  return GameInstance(std::move(weights), internal_opinion_, edges_, labels_);
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::error;
  }));
}

std::size_t ValidationReport::warning_count() const {
  return findings.size() - error_count();
}

ValidationReport validate(const GameInstance& instance) {
  ValidationReport report;
  auto node_error = [&](NodeId i, std::string msg) {
    report.findings.push_back({Severity::error, i, std::nullopt, std::move(msg)});
  };

  for (NodeId i = 0; i < instance.size(); ++i) {
    const double w = instance.self_weight(i);
    if (!std::isfinite(w))
      node_error(i, "non-finite self weight");
    else if (w < 0.0)
      node_error(i, "negative self weight");
    else if (w == 0.0)
      node_error(i, "zero self weight");
    if (!std::isfinite(instance.internal_opinion(i))) node_error(i, "non-finite internal opinion");
  }
  for (const Edge& e : instance.edges()) {
    std::string msg;
    if (!std::isfinite(e.weight))
      msg = "non-finite edge weight";
    else if (e.weight <= 0.0)
      msg = "non-positive edge weight";
    if (!msg.empty())
      report.findings.push_back({Severity::error, std::nullopt, std::pair{e.from, e.to}, std::move(msg)});
  }
  if (instance.edge_count() == 0)
    report.findings.push_back({Severity::warning, std::nullopt, std::nullopt, "instance has no influence edges"});
  return report;
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::ostringstream out;
  out << "invalid game instance (" << report.error_count() << " error(s))";
  for (const Finding& f : report.findings) {
    if (f.severity != Severity::error) continue;
    out << "; " << f.message;
    if (f.node) out << " at node " << *f.node;
    if (f.edge) out << " at edge (" << f.edge->first << ", " << f.edge->second << ")";
    break;
  }
  return out.str();
}

}  // namespace

InvalidInstance::InvalidInstance(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

void require_valid(const GameInstance& instance) {
  ValidationReport report = validate(instance);
  if (!report.ok()) throw InvalidInstance(std::move(report));
}

void require_profile(const GameInstance& instance, std::span<const double> z) {
  if (z.size() != instance.size())
    throw std::invalid_argument("profile length does not match node count");
  for (double v : z)
    if (!std::isfinite(v)) throw std::invalid_argument("profile has a non-finite entry");
}

}  // namespace ofg
