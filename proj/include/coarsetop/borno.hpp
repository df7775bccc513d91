#pragma once

#include <string>
#include <vector>

#include "coarsetop/foundations.hpp"

namespace coarsetop::borno {

/// Raw candidate family of bounded sets, exactly as given by the user.
struct SetFamily {
  Carrier carrier;
  std::vector<Mask> members;  // deduplicated by validate_family
};

/// Prebornological space in canonical form. On a finite carrier every
/// prebornology collapses to "∅ plus the nonempty subsets of the blocks
/// of a partition" (the galaxy partition); validate_family proves the
/// collapse for each input rather than assuming it.
class Prebornology {
 public:
  Prebornology(Carrier c, Partition galaxy_partition);

  const Carrier& carrier() const { return carrier_; }
  const Partition& galaxy_partition() const { return galaxy_; }

  /// Canonical-form boundedness: ∅ or a subset of one block.
  bool bounded(Mask b) const;
  Mask galaxy_mask(std::size_t x) const { return galaxy_.block_mask(x); }

  /// All bounded sets, 2^|block| per block; fine at desk scale.
  std::vector<Mask> all_bounded_sets() const;
  /// BN(x): the bounded sets containing x.
  std::vector<Mask> bn_of(std::size_t x) const;

  bool operator==(const Prebornology& o) const {
    return carrier_ == o.carrier_ && galaxy_ == o.galaxy_;
  }
  bool operator!=(const Prebornology& o) const { return !(*this == o); }

  std::string render() const { return galaxy_.render(); }

 private:
  Carrier carrier_;
  Partition galaxy_;
};

/// Checks the prebornology axioms (nonempty cover, downward closed, closed
/// under non-disjoint union) and returns the canonical form. Each violated
/// axiom yields one error with a minimal witness. On success the finite
/// collapse (members = ∅ ∪ nonempty subsets of blocks) is asserted.
Validated<Prebornology> validate_family(const SetFamily& f);

/// Smallest prebornology containing the generators; singletons are added
/// to satisfy the cover axiom. Throws if a generator leaves the carrier.
Prebornology from_generators(const Carrier& c, const std::vector<Mask>& gens);

/// Boundedness with the four equivalent conditions of the characterisation
/// evaluated independently and checked against each other.
bool is_bounded(const Prebornology& p, Mask b);

/// Galaxy of a point: its block; checked against the union of all bounded
/// sets containing the point. Throws std::invalid_argument on unknown point.
Mask galaxy(const Prebornology& p, std::size_t x);
Mask galaxy(const Prebornology& p, const std::string& label);

/// Candidate galaxy map, unvalidated at construction.
struct GalaxyMapSpec {
  Carrier carrier;
  std::vector<Mask> g;  // g[x]
};

struct GalaxyMapReport {
  bool pointwise_galactic = true;  // vacuous on finite carriers, reported
  bool membership = true;          // x ∈ g(x)
  bool coherence = true;           // g(x) ∩ g(y) ≠ ∅ ⟺ g(x) = g(y)
  std::string membership_witness;
  std::string coherence_witness;
  bool ok() const { return membership && coherence; }
};

GalaxyMapReport galaxy_map_properties(const GalaxyMapSpec& gm);

/// The unique prebornology whose galaxy map is gm; fails with the violated
/// property and witness otherwise. A successful reconstruction round-trips.
Validated<Prebornology> reconstruct_from_galaxy(const GalaxyMapSpec& gm);

/// Candidate bornological neighbourhood system: bn[x] lists the sets asked
/// to be the bounded sets containing x.
struct BNSystem {
  Carrier carrier;
  std::vector<std::vector<Mask>> bn;
};

/// Checks BN1–BN4 (plus nonemptiness of each BN(x)) and builds the unique
/// prebornology with that neighbourhood system; round-trip asserted.
Validated<Prebornology> from_bn_system(const BNSystem& sys);

/// Connectedness with the four equivalent conditions evaluated independently
/// and checked against each other. A connected prebornology is a bornology.
bool is_connected(const Prebornology& p);

// §-example constructions. Each returns a validated canonical form and
// checks its stated galaxy law.

Prebornology maximal(const Carrier& c);
Prebornology discrete(const Carrier& c);
/// On a finite carrier the finite bornology is the maximal one (degenerate).
Prebornology finite_bornology(const Carrier& c);
/// Every finite topological space is compact, so this equals maximal;
/// the galaxy bound G(x) ⊆ NS(X) is still checked.
Prebornology compact_bornology(const FiniteTopology& t);
/// Coincides with compact_bornology on finite carriers.
Prebornology relatively_compact_bornology(const FiniteTopology& t);
Prebornology bounded_bornology(const PseudometricInf& m);
/// Subspace on the sub-carrier induced by a; galaxy law G_A(x)=G_X(x)∩A.
Prebornology subspace(const Prebornology& p, Mask a);
/// Intersection of finitely many prebornologies on one carrier = meet of
/// galaxy partitions; galaxy law G(x)=⋂G_i(x) for finite index sets.
Prebornology intersect(const std::vector<Prebornology>& ps);
/// Smallest bornology containing p; galaxy law G'(x)=⋃_y G(y).
Prebornology smallest_bornology(const Prebornology& p);
/// Product with tuple labels "(x,y,..)"; blocks are products of blocks.
Prebornology product(const std::vector<Prebornology>& ps);
/// Sum with labels "<i>:<label>"; blocks are the disjoint union of blocks.
Prebornology sum(const std::vector<Prebornology>& ps);

/// Carrier of a product space, labels "(x,y,..)" in lexicographic index
/// order; point index = mixed-radix number, low factor varying slowest.
Carrier product_carrier(const std::vector<Carrier>& cs);
std::size_t product_index(const std::vector<Carrier>& cs,
                          const std::vector<std::size_t>& coords);

}  // namespace coarsetop::borno
