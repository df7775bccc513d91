#include "coarsetop/foundations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coarsetop {

// ---------------------------------------------------------------------------
// Carrier

Carrier::Carrier(std::vector<std::string> labels) {
  if (labels.size() > 64)
    throw std::invalid_argument("carrier: at most 64 points supported");
  auto data = std::make_shared<Data>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = data->index.emplace(labels[i], i);
    if (!fresh)
      throw std::invalid_argument("carrier: duplicate label '" + labels[i] + "'");
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Carrier::Carrier(std::initializer_list<const char*> labels)
    : Carrier(std::vector<std::string>(labels.begin(), labels.end())) {}

Carrier Carrier::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Carrier(std::move(labels));
}

std::size_t Carrier::index_of(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end())
    throw std::invalid_argument("unknown point '" + std::string(label) + "'");
  return it->second;
}

bool Carrier::has_label(std::string_view label) const {
  return data_->index.count(std::string(label)) != 0;
}

std::string Carrier::render_subset(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!has_bit(m, i)) continue;
    if (!first) out += ",";
    out += label(i);
    first = false;
  }
  out += "}";
  return out;
}

void require_same_carrier(const Carrier& a, const Carrier& b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": carrier mismatch");
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(Carrier c,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : carrier_(std::move(c)), rows_(carrier_.size(), 0) {
  for (auto [x, y] : pairs) {
    if (x >= carrier_.size() || y >= carrier_.size())
      throw std::invalid_argument("relation: pair out of carrier");
    rows_[x] |= bit(y);
  }
}

Relation::Relation(Carrier c, std::vector<Mask> rows)
    : carrier_(std::move(c)), rows_(std::move(rows)) {
  if (rows_.size() != carrier_.size())
    throw std::invalid_argument("relation: row count mismatch");
  const Mask full = carrier_.full_mask();
  for (Mask r : rows_)
    if (r & ~full) throw std::invalid_argument("relation: pair out of carrier");
}

Relation Relation::diagonal(const Carrier& c) {
  std::vector<Mask> rows(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) rows[i] = bit(i);
  return Relation(c, std::move(rows));
}

Relation Relation::full(const Carrier& c) {
  return Relation(c, std::vector<Mask>(c.size(), c.full_mask()));
}

std::size_t Relation::pair_count() const {
  std::size_t n = 0;
  for (Mask r : rows_) n += static_cast<std::size_t>(popcount(r));
  return n;
}

bool Relation::is_empty() const {
  for (Mask r : rows_)
    if (r) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y = 0; y < rows_.size(); ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

bool Relation::subset_of(const Relation& o) const {
  require_same_carrier(carrier_, o.carrier_, "subset_of");
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (rows_[x] & ~o.rows_[x]) return false;
  return true;
}

Relation Relation::compose(const Relation& f) const {
  require_same_carrier(carrier_, f.carrier_, "relation_compose");
  const std::size_t n = carrier_.size();
  std::vector<Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    Mask mid = f.rows_[x];
    while (mid) {
      std::size_t y = static_cast<std::size_t>(std::countr_zero(mid));
      mid &= mid - 1;
      rows[x] |= rows_[y];
    }
  }
  return Relation(carrier_, std::move(rows));
}

Relation Relation::inverse() const {
  const std::size_t n = carrier_.size();
  std::vector<Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (contains(x, y)) rows[y] |= bit(x);
  return Relation(carrier_, std::move(rows));
}

Relation Relation::union_with(const Relation& o) const {
  require_same_carrier(carrier_, o.carrier_, "union_with");
  std::vector<Mask> rows(rows_);
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x] |= o.rows_[x];
  return Relation(carrier_, std::move(rows));
}

Relation Relation::intersect(const Relation& o) const {
  require_same_carrier(carrier_, o.carrier_, "intersect");
  std::vector<Mask> rows(rows_);
  for (std::size_t x = 0; x < rows.size(); ++x) rows[x] &= o.rows_[x];
  return Relation(carrier_, std::move(rows));
}

Relation Relation::restrict_to(Mask a) const {
  std::vector<Mask> rows(rows_.size(), 0);
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (has_bit(a, x)) rows[x] = rows_[x] & a;
  return Relation(carrier_, std::move(rows));
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y = x + 1; y < rows_.size(); ++y)
      if (contains(x, y) != contains(y, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  return compose(*this).subset_of(*this);
}

Relation Relation::map_pairs(const std::vector<std::size_t>& f,
                             const Carrier& target) const {
  std::vector<Mask> rows(target.size(), 0);
  for (std::size_t x = 0; x < rows_.size(); ++x)
    for (std::size_t y = 0; y < rows_.size(); ++y)
      if (contains(x, y)) rows[f[x]] |= bit(f[y]);
  return Relation(target, std::move(rows));
}

std::string Relation::render() const {
  std::string out = "{";
  bool first = true;
  for (auto [x, y] : pairs()) {
    if (!first) out += ",";
    out += "(" + carrier_.label(x) + "," + carrier_.label(y) + ")";
    first = false;
  }
  out += "}";
  return out;
}

Relation relation_compose(const Relation& e, const Relation& f) {
  return e.compose(f);
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Relation equivalence_closure(const Relation& r) {
  const std::size_t n = r.carrier().size();
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (r.contains(x, y)) uf.merge(x, y);
  std::vector<Mask> rows(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (uf.find(x) == uf.find(y)) rows[x] |= bit(y);
  return Relation(r.carrier(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(Carrier c, std::vector<Mask> blocks)
    : carrier_(std::move(c)), blocks_(std::move(blocks)) {
  Mask seen = 0;
  for (Mask b : blocks_) {
    if (b == 0) throw std::invalid_argument("partition: empty block");
    if (b & seen) throw std::invalid_argument("partition: blocks overlap");
    if (b & ~carrier_.full_mask())
      throw std::invalid_argument("partition: block outside carrier");
    seen |= b;
  }
  if (seen != carrier_.full_mask())
    throw std::invalid_argument("partition: blocks do not cover carrier");
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
  rebuild_index();
}

void Partition::rebuild_index() {
  block_of_.assign(carrier_.size(), -1);
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    for (std::size_t i = 0; i < carrier_.size(); ++i)
      if (has_bit(blocks_[bi], i)) block_of_[i] = static_cast<int>(bi);
}

Partition Partition::singletons(const Carrier& c) {
  std::vector<Mask> blocks;
  for (std::size_t i = 0; i < c.size(); ++i) blocks.push_back(bit(i));
  return Partition(c, std::move(blocks));
}

Partition Partition::single_block(const Carrier& c) {
  if (c.empty()) return Partition(c, {});
  return Partition(c, {c.full_mask()});
}

Partition Partition::from_block_ids(Carrier c, const std::vector<int>& block_of) {
  if (block_of.size() != c.size())
    throw std::invalid_argument("partition: id table size mismatch");
  std::unordered_map<int, Mask> acc;
  std::vector<int> order;
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    if (acc.find(block_of[i]) == acc.end()) order.push_back(block_of[i]);
    acc[block_of[i]] |= bit(i);
  }
  std::vector<Mask> blocks;
  for (int id : order) blocks.push_back(acc[id]);
  return Partition(std::move(c), std::move(blocks));
}

Partition Partition::from_equivalence(const Relation& eq) {
  if (!eq.is_equivalence())
    throw std::invalid_argument("from_equivalence: not an equivalence relation");
  const std::size_t n = eq.carrier().size();
  std::vector<Mask> blocks;
  Mask seen = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (has_bit(seen, x)) continue;
    blocks.push_back(eq.row(x));
    seen |= eq.row(x);
  }
  return Partition(eq.carrier(), std::move(blocks));
}

Partition Partition::meet(const Partition& o) const {
  require_same_carrier(carrier_, o.carrier_, "partition_meet");
  std::vector<Mask> blocks;
  for (Mask p : blocks_)
    for (Mask q : o.blocks_)
      if (p & q) blocks.push_back(p & q);
  return Partition(carrier_, std::move(blocks));
}

Relation Partition::as_relation() const {
  std::vector<Mask> rows(carrier_.size(), 0);
  for (std::size_t i = 0; i < carrier_.size(); ++i) rows[i] = block_mask(i);
  return Relation(carrier_, std::move(rows));
}

std::string Partition::render() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    out += carrier_.render_subset(blocks_[i]);
  }
  out += "}";
  return out;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  return p.meet(q);
}

// ---------------------------------------------------------------------------
// ExtendedRational

const Rational& ExtendedRational::value() const {
  if (state_ != State::finite)
    throw std::logic_error("extended rational: value() on an infinity");
  return v_;
}

ExtendedRational ExtendedRational::operator+(const ExtendedRational& o) const {
  if (is_finite() && o.is_finite()) return ExtendedRational(v_ + o.v_);
  if ((is_pos_inf() && o.is_neg_inf()) || (is_neg_inf() && o.is_pos_inf()))
    throw std::logic_error("extended rational: ∞ + -∞");
  return is_finite() ? o : *this;
}

ExtendedRational ExtendedRational::operator*(const Rational& r) const {
  if (is_finite()) return ExtendedRational(v_ * r);
  if (r == 0) throw std::logic_error("extended rational: 0 * ∞");
  if (r > 0) return *this;
  return is_pos_inf() ? neg_infinity() : infinity();
}

bool ExtendedRational::operator==(const ExtendedRational& o) const {
  if (state_ != o.state_) return false;
  return state_ != State::finite || v_ == o.v_;
}

bool ExtendedRational::operator<(const ExtendedRational& o) const {
  if (state_ == State::neg_inf) return o.state_ != State::neg_inf;
  if (state_ == State::pos_inf) return false;
  if (o.state_ == State::pos_inf) return true;
  if (o.state_ == State::neg_inf) return false;
  return v_ < o.v_;
}

std::string ExtendedRational::render() const {
  if (is_pos_inf()) return "inf";
  if (is_neg_inf()) return "-inf";
  std::ostringstream os;
  os << v_;
  return os.str();
}

// ---------------------------------------------------------------------------
// PseudometricInf

PseudometricInf::PseudometricInf(Carrier c, std::vector<ExtendedRational> flat)
    : carrier_(std::move(c)), d_(std::move(flat)) {
  const std::size_t n = carrier_.size();
  if (d_.size() != n * n)
    throw std::invalid_argument("pseudometric: matrix size mismatch");
  const ExtendedRational zero(Rational(0));
  for (std::size_t x = 0; x < n; ++x) {
    if (d(x, x) != zero)
      throw std::invalid_argument("pseudometric: d(" + carrier_.label(x) +
                                  "," + carrier_.label(x) + ") != 0");
    for (std::size_t y = 0; y < n; ++y) {
      if (d(x, y) < zero)
        throw std::invalid_argument("pseudometric: negative distance at (" +
                                    carrier_.label(x) + "," + carrier_.label(y) + ")");
      if (!(d(x, y) == d(y, x)))
        throw std::invalid_argument("pseudometric: asymmetric at (" +
                                    carrier_.label(x) + "," + carrier_.label(y) + ")");
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (d(x, y) + d(y, z) < d(x, z))
          throw std::invalid_argument(
              "pseudometric: triangle inequality fails at (" + carrier_.label(x) +
              "," + carrier_.label(y) + "," + carrier_.label(z) + ")");
}

PseudometricInf PseudometricInf::from_entries(
    const Carrier& c,
    const std::vector<std::tuple<std::size_t, std::size_t, ExtendedRational>>&
        entries) {
  const std::size_t n = c.size();
  std::vector<ExtendedRational> flat(n * n, ExtendedRational::infinity());
  for (std::size_t x = 0; x < n; ++x) flat[x * n + x] = ExtendedRational(Rational(0));
  for (const auto& [x, y, v] : entries) {
    if (x >= n || y >= n)
      throw std::invalid_argument("pseudometric: entry out of carrier");
    flat[x * n + y] = v;
    flat[y * n + x] = v;
  }
  return PseudometricInf(c, std::move(flat));
}

Partition metric_components(const PseudometricInf& m) {
  const Carrier& c = m.carrier();
  std::vector<Mask> rows(c.size(), 0);
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (m.d(x, y).is_finite()) rows[x] |= bit(y);
  // Finite-distance reachability is already transitive by the triangle
  // inequality; from_equivalence revalidates that.
  return Partition::from_equivalence(Relation(c, std::move(rows)));
}

// ---------------------------------------------------------------------------
// FiniteTopology

FiniteTopology::FiniteTopology(Carrier c, std::vector<Mask> opens)
    : carrier_(std::move(c)), opens_(std::move(opens)) {
  const Mask full = carrier_.full_mask();
  for (Mask u : opens_)
    if (u & ~full) throw std::invalid_argument("topology: open outside carrier");
  opens_.push_back(0);
  opens_.push_back(full);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (Mask u : opens_)
    for (Mask v : opens_) {
      if (!is_open(u | v))
        throw std::invalid_argument("topology: not closed under union: " +
                                    carrier_.render_subset(u) + " ∪ " +
                                    carrier_.render_subset(v));
      if (!is_open(u & v))
        throw std::invalid_argument("topology: not closed under intersection: " +
                                    carrier_.render_subset(u) + " ∩ " +
                                    carrier_.render_subset(v));
    }
}

FiniteTopology FiniteTopology::discrete(const Carrier& c) {
  std::vector<Mask> opens;
  const Mask full = c.full_mask();
  for (Mask m = 0;; ++m) {
    opens.push_back(m);
    if (m == full) break;
  }
  return FiniteTopology(c, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(const Carrier& c) {
  return FiniteTopology(c, {});
}

bool FiniteTopology::is_open(Mask m) const {
  return std::binary_search(opens_.begin(), opens_.end(), m);
}

Mask FiniteTopology::minimal_open(std::size_t x) const {
  Mask acc = carrier_.full_mask();
  for (Mask u : opens_)
    if (has_bit(u, x)) acc &= u;
  return acc;
}

// ---------------------------------------------------------------------------
// FiniteUniformity

FiniteUniformity::FiniteUniformity(Relation core) : core_(std::move(core)) {
  if (!core_.is_equivalence())
    throw std::invalid_argument("uniformity: core must be an equivalence relation");
}

FiniteUniformity FiniteUniformity::discrete(const Carrier& c) {
  return FiniteUniformity(Relation::diagonal(c));
}

FiniteUniformity FiniteUniformity::indiscrete(const Carrier& c) {
  return FiniteUniformity(Relation::full(c));
}

}  // namespace coarsetop
