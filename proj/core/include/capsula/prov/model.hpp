#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace capsula::prov {

/// Qualified identifier, written "namespace:local" in documents.
struct NodeId {
  std::string ns;
  std::string local;

  std::string full() const { return ns + ":" + local; }
  auto operator<=>(const NodeId&) const = default;

  /// Splits at the first ':'. Both parts must be non-empty.
  static NodeId parse(const std::string& text);
};

enum class NodeKind { Entity, Activity, Agent };
enum class EntitySubkind { None, DataValue, File, Library, RngState, Console };
enum class EdgeKind { Used, WasGeneratedBy, WasInformedBy, WasAssociatedWith };

const char* node_kind_name(NodeKind k);
const char* subkind_name(EntitySubkind k);
const char* edge_kind_name(EdgeKind k);

using AttrMap = std::map<std::string, std::string>;

struct ProvNode {
  NodeId id;
  NodeKind kind = NodeKind::Entity;
  EntitySubkind subkind = EntitySubkind::None; // entities only
  AttrMap attrs;

  friend bool operator==(const ProvNode&, const ProvNode&) = default;
};

struct ProvEdge {
  EdgeKind kind{};
  NodeId src;
  NodeId dst;

  auto operator<=>(const ProvEdge&) const = default;
};

/// Immutable-after-construction provenance DAG. Node ids are unique;
/// edges form a multiset. Structural equality ignores insertion order.
class ProvenanceGraph {
public:
  ProvNode& add_node(ProvNode node); // throws InvalidGraph on duplicate id
  void add_edge(EdgeKind kind, NodeId src, NodeId dst);

  const ProvNode* find(const NodeId& id) const;
  const ProvNode* find(const std::string& full_id) const;

  std::span<const ProvNode> nodes() const { return nodes_; }
  std::span<const ProvEdge> edges() const { return edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::vector<const ProvNode*> sorted_nodes() const; // by (kind, id)
  std::vector<ProvEdge> sorted_edges() const;        // by (kind, src, dst)

  friend bool operator==(const ProvenanceGraph& a, const ProvenanceGraph& b);

private:
  std::vector<ProvNode> nodes_;
  std::vector<ProvEdge> edges_;
  std::map<std::string, std::size_t> index_; // full id -> nodes_ position
};

struct Violation {
  std::string rule;    // rule id, e.g. "edge-endpoint"
  std::string message;
  std::string where;   // offending node id or edge description
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Structural validation: edge endpoint typing, dangling endpoints,
/// single generation per entity, derivation acyclicity, required
/// attributes per node kind. Violations are data, not errors.
ValidationReport validate_graph(const ProvenanceGraph& g);

/// True when the used/wasGeneratedBy relation (read src -> dst) is acyclic.
bool derivation_acyclic(const ProvenanceGraph& g);

struct OutputInfo {
  NodeId entity;
  std::string path;   // file path, or "console"
  bool is_console = false;
  int line = 0;       // source line of the producing activity
};

/// Final file outputs (highest version per path, sorted by path), then the
/// console stream if anything was written to it.
std::vector<OutputInfo> list_outputs(const ProvenanceGraph& g);

} // namespace capsula::prov
