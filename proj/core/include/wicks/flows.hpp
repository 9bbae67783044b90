#pragma once

// Flows over Z/2 and Z/3 on the graph of a word, and the quotients of
// symmetric maximal words by automorphisms of order 2 and 3.

#include <map>
#include <optional>
#include <string>

#include "wicks/canonical.hpp"
#include "wicks/word.hpp"

namespace wicks {

// Edge id -> value in [0, p). For p = 3 the value belongs to the edge
// oriented like its positive occurrence; the reverse edge carries -value.
struct FlowVector {
  int modulus = 2;
  std::map<int, int> values;

  int at(int id) const;
  friend bool operator==(const FlowVector&, const FlowVector&) = default;
};

// Conservation at every vertex: for p = 2 the incident values sum to 0, for
// p = 3 the values of edges oriented toward the vertex do. Edges absent from
// the map count as 0.
bool is_flow(const WicksWord& word, const FlowVector& flow);

// Dimension of the kernel of the vertex incidence map over Z/p, p in {2, 3}.
int flow_space_dimension(const WicksWord& word, int p);

struct QuotientData {
  int order = 0;
  // Empty when the quotient has genus 0. Letters keep the smallest id of
  // their orbit in the input word.
  std::optional<WicksWord> reduced_word;
  std::optional<FlowVector> flow;
  int genus = 0;
  int r = 0;  // order 2: reversed edges
  int s = 0;  // order 3: fixed positive vertices
  int t = 0;  // order 3: fixed negative vertices

  bool empty() const { return !reduced_word.has_value(); }
};

// Quotient of a maximal word by its involution (rotation by `shift`, which
// must be half the length). The flow value of a letter is 1 exactly when its
// two preimage sides lie on different circles of the two-circle picture,
// where the circle changes at every side of a reversed edge.
QuotientData quotient_by_involution(const WicksWord& word, int shift);

// Quotient by an order-3 rotation with no fixed negative vertex, genus > 1.
// Circles are indexed by Z/3 and change at each corner of a fixed vertex.
QuotientData quotient_by_order3(const WicksWord& word, int shift);

// Dimension of the Z/p flows invariant under the edge permutation induced by
// an order-3 rotation.
int invariant_flow_dimension(const WicksWord& word, int shift, int p = 2);

// Canonical form of the word with the flow carried along the relabeling.
struct CanonicalFlow {
  CanonicalForm form;
  FlowVector flow;
};
CanonicalFlow canonical_flow(const WicksWord& word, const FlowVector& flow);

// "a1=1 a2=0 ..." using the default letter names.
std::string to_string(const FlowVector& flow);
std::string to_string(const FlowVector& flow, const Alphabet& names);

}  // namespace wicks
