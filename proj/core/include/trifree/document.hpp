#pragma once

#include "trifree/frame_encoding.hpp"
#include "trifree/independent.hpp"
#include "trifree/probe.hpp"
#include "trifree/uniform.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trifree {

enum class FamilyMode { independent, uniform, encoded_frames };

std::string to_string(FamilyMode mode);
/// Accepts "independent", "uniform", "encoded-frames".
FamilyMode parse_mode(std::string_view text);

/// A built family with everything needed to re-verify it.
struct FamilyDocument {
  FamilyMode mode = FamilyMode::independent;
  std::string shape;  ///< catalog name
  int k = 1;
  std::optional<Rat> epsilon;  ///< uniform mode only
  bool augmented = true;       ///< diagonals for the final probes appended
  std::vector<TransformedCopy> copies;
  /// Probes of the first s_k copies (independent and uniform modes).
  std::vector<Probe> probes;
  std::vector<UniformParams> params;
  std::optional<StrategyTree> tree;  ///< encoded-frames mode
};

struct BuildRequest {
  FamilyMode mode = FamilyMode::independent;
  std::string shape = "frame";
  int k = 1;
  std::optional<Rat> epsilon;
  bool augment = true;
  int tree_limit = kDefaultTreeLimit;
  int budget = 0;  ///< encoded-frames: 0 means k + 1
};

/// Throws std::invalid_argument for inconsistent requests (epsilon given
/// outside uniform mode or missing in it, unknown shape, shape without an
/// anchored representative) and ConstructionError on failed checks.
FamilyDocument build_document(const BuildRequest& request);

/// Shape the document's copies are made of.
std::shared_ptr<const RectilinearShape> document_shape(FamilyMode mode, std::string_view shape);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(std::string_view name) const;
};

struct VerifyOptions {
  unsigned jobs = 1;
  /// Compare against a fresh deterministic rebuild and check its
  /// recursion-level contact laws.
  bool rebuild = true;
};

/// Runs every invariant that applies to the document's mode.
VerifyReport verify_document(const FamilyDocument& doc, const VerifyOptions& options = {});

}  // namespace trifree
