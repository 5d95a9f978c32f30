#ifndef GUCYCLE_VERIFIER_HPP_
#define GUCYCLE_VERIFIER_HPP_

#include <string>

#include "gucycle/families.hpp"
#include "gucycle/labeled_graph.hpp"
#include "gucycle/report.hpp"

namespace gucycle {

// Checks that the N windows of host decode, one-to-one, onto the family.
// Uses only window extraction, decode and enumerate. With jobs > 1 the
// windows are decoded on that many threads.
VerificationReport verify(const HostGraph& host, Family family,
                          const FamilyParams& params, unsigned jobs = 1);

// Reads a GUC v1 file and verifies it against the family it declares.
// Parse and I/O errors propagate as exceptions.
VerificationReport verify_file(const std::string& path, unsigned jobs = 1);

}  // namespace gucycle

#endif  // GUCYCLE_VERIFIER_HPP_
