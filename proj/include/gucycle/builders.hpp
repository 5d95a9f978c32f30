#ifndef GUCYCLE_BUILDERS_HPP_
#define GUCYCLE_BUILDERS_HPP_

#include <vector>

#include "gucycle/arc_digraph.hpp"
#include "gucycle/families.hpp"
#include "gucycle/labeled_graph.hpp"
#include "gucycle/string_ucycles.hpp"

namespace gucycle {

// Cyclic list of equal-order window graphs. A simple sequence holds only
// simple graphs and assembles into a simple host; multigraph sequences
// assemble into multigraph hosts whatever their multiplicities.
class WindowSequence {
 public:
  explicit WindowSequence(std::vector<LabeledGraph> windows,
                          bool multigraph = false);

  const std::vector<LabeledGraph>& windows() const noexcept { return windows_; }
  int order() const noexcept { return windows_.front().order(); }
  std::size_t size() const noexcept { return windows_.size(); }
  bool simple() const noexcept { return simple_; }

 private:
  std::vector<LabeledGraph> windows_;
  bool simple_ = true;
};

// Arc digraph whose vertices are the objects on [n-1] and whose arcs are the
// objects on [n]: an arc carries an object x, runs from x minus its largest
// element to x minus its smallest element (both relabeled onto [n-1]).
// Supported families: permutations, involutions, partitions; n >= 3.
ArcDigraph<FamilyObject> build_arc_digraph(Family family, int n);

// Host on N = |seq| vertices whose i-th window is seq[i]. Every window pair
// {a, b} pins host pair (i+a-1, i+b-1) mod N; a pair pinned twice must be
// pinned to the same multiplicity. Requires |seq| >= window order.
HostGraph host_from_window_sequence(const WindowSequence& seq);

// Window sequences of the string-backbone constructions, one window per
// rotation of the backbone word.
//   subsets:   backbone is a binary word whose (n-1)-windows have weight k-1 or
//              k; the deficit edge e_n = {n,1} tops weight-(k-1) windows up.
//   multisets: backbone is a (k+1)-ary word whose (n-1)-windows have weight
//              <= k; e_n carries multiplicity k minus the window weight.
WindowSequence subset_windows_from_backbone(const CyclicWord& backbone, int n,
                                            int k);
WindowSequence multiset_windows_from_backbone(const CyclicWord& backbone, int n,
                                              int k);

// Gucycle of the family. The result always passes verify(); a failure there
// raises PostconditionFailed. Degenerate parameters raise
// DegenerateParameters.
HostGraph build_gucycle(Family family, const FamilyParams& params);

}  // namespace gucycle

#endif  // GUCYCLE_BUILDERS_HPP_
