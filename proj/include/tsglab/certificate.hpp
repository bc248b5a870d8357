#ifndef TSGLAB_CERTIFICATE_HPP
#define TSGLAB_CERTIFICATE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsglab/edges.hpp"

namespace tsglab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kRealizationSchema = "tsglab.realization/1";

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json profile_json(const FixedVertexProfile& p);

/// Self-contained certificate: elements with permutations and matrices,
/// vertex coordinates, arcs and the hypothesis report.
Json realization_json(const VertexAction& a, const RealizedVertices& r, const HypothesisReport& report);

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckOutcome> checks;  // in evaluation order, up to the first failure

  bool ok() const { return !checks.empty() && checks.back().pass; }
  /// Name of the failing check, empty if all passed.
  std::string failed() const { return ok() ? std::string() : checks.back().name; }
};

/// Re-checks a certificate from its contents alone, in the order
/// schema, group-closure, homomorphism, faithful, orthogonality,
/// representation, invariance, unit-norm, separation, profile, burnside,
/// h1..h5. Stops at the first failure. Throws SchemaError for malformed
/// input.
VerifyResult verify_realization(const Json& file);

/// Writes through a temporary file in the same directory and renames it.
void write_atomically(const std::filesystem::path& path, const std::string& text);

}  // namespace tsglab

#endif  // TSGLAB_CERTIFICATE_HPP
