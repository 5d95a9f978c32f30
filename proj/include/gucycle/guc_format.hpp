#ifndef GUCYCLE_GUC_FORMAT_HPP_
#define GUCYCLE_GUC_FORMAT_HPP_

#include <string>
#include <string_view>

#include "gucycle/families.hpp"
#include "gucycle/labeled_graph.hpp"

namespace gucycle {

struct FamilyDescriptor {
  Family family = Family::subsets;
  FamilyParams params;

  friend bool operator==(const FamilyDescriptor&,
                         const FamilyDescriptor&) = default;
};

// GUC v1 text:
//
//   guc 1
//   family <subsets|multisets|permutations|involutions|partitions>
//   params n=<int> [k=<int>]
//   N <int>
//   w <int>
//   e <a> <b> <mult>      one line per edge, a < b, sorted
//   end
//
// k appears only for subsets and multisets. Output is deterministic.
std::string serialize(const HostGraph& host, const FamilyDescriptor& meta);

struct ParsedHost {
  HostGraph host;
  FamilyDescriptor meta;
};

// Inverse of serialize. Multiset hosts are multigraph hosts; every other
// family yields a simple host. Errors carry the offending line number.
ParsedHost parse(std::string_view text);

}  // namespace gucycle

#endif  // GUCYCLE_GUC_FORMAT_HPP_
