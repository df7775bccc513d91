#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coarsetop/errors.hpp"

namespace coarsetop {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Subset of a carrier, one bit per point. Carriers are capped at 64 points.
using Mask = std::uint64_t;

inline Mask bit(std::size_t i) { return Mask{1} << i; }
inline bool has_bit(Mask m, std::size_t i) { return (m >> i) & 1u; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Finite point set with stable label order. Copies are cheap (shared data).
class Carrier {
 public:
  Carrier() : data_(std::make_shared<Data>()) {}

  explicit Carrier(std::vector<std::string> labels);
  Carrier(std::initializer_list<const char*> labels);

  /// n points labelled p0, p1, ... (tests and generators).
  static Carrier numbered(std::size_t n, const std::string& prefix = "p");

  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return data_->labels.empty(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  /// Throws std::invalid_argument for an unknown point.
  std::size_t index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  Mask full_mask() const {
    std::size_t n = size();
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  bool operator==(const Carrier& o) const {
    return data_ == o.data_ || data_->labels == o.data_->labels;
  }
  bool operator!=(const Carrier& o) const { return !(*this == o); }

  std::string render_subset(Mask m) const;
  std::string render_point(std::size_t i) const { return label(i); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws std::invalid_argument unless both values live on the same carrier.
void require_same_carrier(const Carrier& a, const Carrier& b,
                          const char* where);

/// Binary relation on a carrier, stored as successor bitmask rows.
class Relation {
 public:
  explicit Relation(Carrier c) : carrier_(std::move(c)), rows_(carrier_.size(), 0) {}
  Relation(Carrier c, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  Relation(Carrier c, std::vector<Mask> rows);

  static Relation diagonal(const Carrier& c);
  static Relation full(const Carrier& c);

  const Carrier& carrier() const { return carrier_; }
  bool contains(std::size_t x, std::size_t y) const { return has_bit(rows_[x], y); }
  Mask row(std::size_t x) const { return rows_[x]; }
  const std::vector<Mask>& rows() const { return rows_; }

  std::size_t pair_count() const;
  bool is_empty() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool subset_of(const Relation& o) const;
  bool operator==(const Relation& o) const {
    return carrier_ == o.carrier_ && rows_ == o.rows_;
  }
  bool operator!=(const Relation& o) const { return !(*this == o); }

  /// this ∘ f: f applied first, then this. (x,z) iff ∃y. (x,y)∈f ∧ (y,z)∈this.
  Relation compose(const Relation& f) const;
  Relation inverse() const;
  Relation union_with(const Relation& o) const;
  Relation intersect(const Relation& o) const;
  /// Restriction to a subset, as a relation on the same carrier.
  Relation restrict_to(Mask a) const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  /// Image of a relation under a pointwise map given as index table.
  Relation map_pairs(const std::vector<std::size_t>& f, const Carrier& target) const;

  std::string render() const;

 private:
  Carrier carrier_;
  std::vector<Mask> rows_;
};

/// e ∘ f with f applied first (pins the composition convention).
Relation relation_compose(const Relation& e, const Relation& f);

/// Smallest equivalence relation containing r ∪ Δ (union-find).
Relation equivalence_closure(const Relation& r);

/// Partition of a carrier into disjoint nonempty blocks.
class Partition {
 public:
  /// Validates disjointness and cover; throws std::invalid_argument.
  Partition(Carrier c, std::vector<Mask> blocks);

  static Partition singletons(const Carrier& c);
  static Partition single_block(const Carrier& c);
  /// block_of[i] = arbitrary block ids; normalized to first-occurrence order.
  static Partition from_block_ids(Carrier c, const std::vector<int>& block_of);
  /// Classes of an equivalence relation.
  static Partition from_equivalence(const Relation& eq);

  const Carrier& carrier() const { return carrier_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Mask>& blocks() const { return blocks_; }
  int block_id(std::size_t point) const { return block_of_[point]; }
  Mask block_mask(std::size_t point) const {
    return blocks_[static_cast<std::size_t>(block_of_[point])];
  }
  bool same_block(std::size_t x, std::size_t y) const {
    return block_of_[x] == block_of_[y];
  }

  Partition meet(const Partition& o) const;

  /// Block-equivalence as a Relation (contains the diagonal).
  Relation as_relation() const;

  bool operator==(const Partition& o) const {
    return carrier_ == o.carrier_ && blocks_ == o.blocks_;
  }
  bool operator!=(const Partition& o) const { return !(*this == o); }

  std::string render() const;

 private:
  Carrier carrier_;
  std::vector<Mask> blocks_;    // sorted by least element
  std::vector<int> block_of_;   // point -> index into blocks_
  void rebuild_index();
};

/// Meet = coarsest common refinement; realizes the intersection prebornology.
Partition partition_meet(const Partition& p, const Partition& q);

/// Rational extended with +∞ and -∞ as distinguished states.
class ExtendedRational {
 public:
  ExtendedRational() : state_(State::finite), v_(0) {}
  ExtendedRational(Rational v) : state_(State::finite), v_(std::move(v)) {}
  ExtendedRational(int v) : state_(State::finite), v_(v) {}

  static ExtendedRational infinity() { return ExtendedRational(State::pos_inf); }
  static ExtendedRational neg_infinity() { return ExtendedRational(State::neg_inf); }

  bool is_finite() const { return state_ == State::finite; }
  bool is_pos_inf() const { return state_ == State::pos_inf; }
  bool is_neg_inf() const { return state_ == State::neg_inf; }
  /// Finite value; throws std::logic_error on an infinity.
  const Rational& value() const;

  /// Addition with absorbing infinities; +∞ + -∞ is a logic error.
  ExtendedRational operator+(const ExtendedRational& o) const;
  ExtendedRational operator*(const Rational& r) const;

  bool operator==(const ExtendedRational& o) const;
  bool operator!=(const ExtendedRational& o) const { return !(*this == o); }
  bool operator<(const ExtendedRational& o) const;
  bool operator<=(const ExtendedRational& o) const { return *this < o || *this == o; }
  bool operator>(const ExtendedRational& o) const { return o < *this; }
  bool operator>=(const ExtendedRational& o) const { return o <= *this; }

  std::string render() const;

 private:
  enum class State { neg_inf, finite, pos_inf };
  explicit ExtendedRational(State s) : state_(s), v_(0) {}
  State state_;
  Rational v_;
};

/// Symmetric pseudometric with values in ℚ≥0 ∪ {∞}. Validated on construction:
/// zero diagonal, symmetry, triangle inequality with ∞ absorbing.
class PseudometricInf {
 public:
  PseudometricInf(Carrier c, std::vector<ExtendedRational> flat_matrix);

  /// Build from entries (x, y, d); unspecified off-diagonal entries are ∞.
  static PseudometricInf from_entries(
      const Carrier& c,
      const std::vector<std::tuple<std::size_t, std::size_t, ExtendedRational>>&
          entries);

  const Carrier& carrier() const { return carrier_; }
  const ExtendedRational& d(std::size_t x, std::size_t y) const {
    return d_[x * carrier_.size() + y];
  }

 private:
  Carrier carrier_;
  std::vector<ExtendedRational> d_;
};

/// Equivalence classes of "d(x,y) < ∞".
Partition metric_components(const PseudometricInf& m);

/// Finite topology given by its full family of open sets. Validated on
/// construction: contains ∅ and the carrier, closed under union and
/// intersection.
class FiniteTopology {
 public:
  FiniteTopology(Carrier c, std::vector<Mask> opens);

  static FiniteTopology discrete(const Carrier& c);
  static FiniteTopology indiscrete(const Carrier& c);

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Mask>& opens() const { return opens_; }
  bool is_open(Mask m) const;

  /// μ(x): the minimal open set containing x (the monad, realized exactly
  /// on finite spaces).
  Mask minimal_open(std::size_t x) const;

 private:
  Carrier carrier_;
  std::vector<Mask> opens_;  // sorted, unique
};

/// Finite uniformity represented by its smallest entourage, which on a
/// finite set is an equivalence relation; every entourage is a superset
/// of the core.
class FiniteUniformity {
 public:
  /// Throws std::invalid_argument if core is not an equivalence relation.
  explicit FiniteUniformity(Relation core);

  static FiniteUniformity discrete(const Carrier& c);
  static FiniteUniformity indiscrete(const Carrier& c);

  const Carrier& carrier() const { return core_.carrier(); }
  const Relation& core() const { return core_; }
  bool is_entourage(const Relation& r) const {
    return core_.subset_of(r);
  }
  /// x ≈ y: the infinite-closeness relation is the core itself.
  bool infinitely_close(std::size_t x, std::size_t y) const {
    return core_.contains(x, y);
  }

 private:
  Relation core_;
};

}  // namespace coarsetop
