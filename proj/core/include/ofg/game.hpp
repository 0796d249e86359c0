#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ofg/errors.hpp"

namespace ofg {

using NodeId = std::size_t;

/// Expressed opinions indexed by node. The same type holds equilibrium and
/// optimum profiles.
using OpinionProfile = std::vector<double>;

/// Directed influence edge: `from` is influenced by `to` with `weight`
/// (the cost term weight * (z_from - z_to)^2 belongs to `from`).
struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double weight = 0.0;
};

/// An opinion formation game: self-weights, internal opinions and a sparse
/// influence map. Immutable once built.
///
/// The constructor enforces structure only (sizes, index range, no self
/// edges, no duplicate edges). Numeric preconditions such as positive
/// self-weights are checked by validate() so that bad data can be reported
/// rather than rejected outright.
class GameInstance {
 public:
  GameInstance(std::vector<double> self_weight,
               std::vector<double> internal_opinion,
               std::vector<Edge> edges,
               std::vector<std::int64_t> labels = {});

  std::size_t size() const { return self_weight_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  double self_weight(NodeId i) const { return self_weight_.at(i); }
  double internal_opinion(NodeId i) const { return internal_opinion_.at(i); }
  std::span<const double> self_weights() const { return self_weight_; }
  std::span<const double> internal_opinions() const { return internal_opinion_; }

  /// Edges sorted by (from, to).
  std::span<const Edge> edges() const { return edges_; }

  /// Nodes j with w_ij > 0: the players whose opinions enter C_i.
  std::span<const Neighbor> influencers(NodeId i) const;
  /// Nodes k with w_ki > 0: the players whose costs depend on z_i.
  std::span<const Neighbor> influenced(NodeId i) const;

  /// Sum over j != i of w_ij.
  double influence_received(NodeId i) const { return received_.at(i); }
  /// Sum over j != i of w_ji.
  double influence_exerted(NodeId i) const { return exerted_.at(i); }

  /// Weight w_ij, 0 when absent.
  double weight(NodeId i, NodeId j) const;

  /// External node ids used by the on-disk format; labels()[i] is the id of
  /// dense index i.
  std::span<const std::int64_t> labels() const { return labels_; }
  std::optional<NodeId> index_of(std::int64_t label) const;

  /// 1 + max_i |s_i|, the reference magnitude for absolute tolerances.
  double opinion_scale() const;

  /// Copy with every internal opinion replaced.
  GameInstance with_internal_opinions(std::vector<double> s) const;
  /// Copy with one self-weight replaced; handy for building invalid inputs.
  GameInstance with_self_weight(NodeId i, double w) const;

 private:
  std::vector<double> self_weight_;
  std::vector<double> internal_opinion_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> labels_;

  // CSR adjacency in both directions.
  std::vector<std::size_t> out_offsets_;
  std::vector<Neighbor> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Neighbor> in_;
  std::vector<double> received_;
  std::vector<double> exerted_;
};

enum class Severity { error, warning };

struct Finding {
  Severity severity = Severity::error;
  std::optional<NodeId> node;
  std::optional<std::pair<NodeId, NodeId>> edge;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> findings;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool ok() const { return error_count() == 0; }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

ValidationReport validate(const GameInstance& instance);

/// Thrown by every solver when validate() reports at least one error.
class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws InvalidInstance unless validate(instance).ok().
void require_valid(const GameInstance& instance);

/// Throws std::invalid_argument unless the profile has one finite entry per
/// node.
void require_profile(const GameInstance& instance, std::span<const double> z);

}  // namespace ofg
