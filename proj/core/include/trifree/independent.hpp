#pragma once

#include "trifree/probe.hpp"
#include "trifree/shapes.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace trifree {

/// Raised when a construction step fails one of its verified claims.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SizeCounts {
  BigInt s;  ///< number of copies in F(k)
  BigInt p;  ///< number of probes in P(k)
};

/// s_1 = p_1 = 1, s_{i+1} = (p_i + 1) s_i + p_i^2, p_{i+1} = 2 p_i^2.
/// Throws std::invalid_argument for k < 1.
SizeCounts size_formulas(int k);

/// p_k == 2^(2^(k-1) - 1) and p_k <= s_k <= 2^(2^(k-1)) - 1.
bool size_bound_holds(int k);

enum class ContactLaw {
  diagonal,          // neighbours of D_P == copies pierced by the upper part of P
  upper_probe,       // U_{P,Q} pierces exactly {D_Q} and the outer copies pierced by P
  lower_probe,       // L_{P,Q} pierces exactly the outer copies pierced by P and the inner ones pierced by Q
  lower_avoids_diagonal,
};

std::string to_string(ContactLaw law);

/// One exact set comparison made while building level `level`. Ids refer
/// to that level's family (for diagonal checks: F(level-1) plus diagonals).
struct ContactLawCheck {
  int level = 0;
  ContactLaw law = ContactLaw::diagonal;
  std::size_t subject = 0;  ///< probe or diagonal index within the level
  std::vector<std::size_t> expected;
  std::vector<std::size_t> actual;

  bool holds() const { return expected == actual; }
};

struct ConstructionLevel {
  int k = 0;
  CatalogEntry entry;
  std::vector<TransformedCopy> family;
  std::vector<Probe> probes;
  /// Contact-law checks from every recursion level up to k.
  std::vector<ContactLawCheck> audits;
};

/// The copy whose bounding box is the upper part of p, then stretched
/// horizontally by 2 w2 / w1 about its left side. Throws ConstructionError
/// unless its empty rectangle lies strictly right of `family_box` and its
/// left stabber stabs the upper part horizontally.
TransformedCopy make_diagonal(const Probe& p, const CatalogEntry& entry, const Rect& family_box,
                              Lineage lineage = {LineageKind::diagonal, 0});

/// F(k) and P(k) for the catalog shape. Every probe condition, the contact
/// laws, the sizes and triangle-freeness are re-verified; any failure
/// throws ConstructionError.
ConstructionLevel build(int k, const CatalogEntry& entry);

/// F(k) plus one diagonal per probe, size s_k + p_k.
std::vector<TransformedCopy> augment(const ConstructionLevel& level);

/// Diagonal law on an augmented family: the neighbours of each appended
/// diagonal are exactly the copies pierced by the upper part of its probe.
std::vector<ContactLawCheck> augmentation_audit(const ConstructionLevel& level,
                                                std::span<const TransformedCopy> augmented);

}  // namespace trifree
