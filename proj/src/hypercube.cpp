#include "cayleyqc/hypercube.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

namespace {

void require_ground_set(std::size_t n) {
  if (n > max_ground_set) {
    throw ValidationError("ground set size " + std::to_string(n) + " exceeds " + std::to_string(max_ground_set));
  }
}

void require_t(std::size_t n, std::size_t t) {
  if (t < 1 || t >= n) {
    throw ValidationError("need 1 <= t < n, got n = " + std::to_string(n) + ", t = " + std::to_string(t));
  }
}

// Parity of |f ∩ N(S)| for every S adjacent to some member; other centers see nothing.
std::unordered_map<SubsetMask, std::size_t> neighbour_counts(const SetFamily& f) {
  std::unordered_map<SubsetMask, std::size_t> counts;
  for (SubsetMask m : f.members()) {
    for (std::size_t e = 0; e < f.n(); ++e) counts[m ^ (SubsetMask{1} << e)] += 1;
  }
  return counts;
}

}  // namespace

SetFamily::SetFamily(std::size_t n) : n_(n) { require_ground_set(n); }

SetFamily::SetFamily(std::size_t n, std::vector<SubsetMask> members) : n_(n), members_(std::move(members)) {
  require_ground_set(n);
  for (SubsetMask s : members_) check(s);
  std::sort(members_.begin(), members_.end(), ball_order_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetFamily SetFamily::from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& lists) {
  std::vector<SubsetMask> masks;
  for (const auto& list : lists) {
    SubsetMask s = 0;
    for (std::size_t e : list) {
      if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " not in [n]");
      s |= SubsetMask{1} << (e - 1);
    }
    masks.push_back(s);
  }
  return SetFamily(n, std::move(masks));
}

void SetFamily::check(SubsetMask s) const {
  if (n_ < 64 && (s >> n_) != 0) throw ValidationError("subset is not contained in [n]");
}

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(members_.begin(), members_.end(), s, ball_order_less);
}

void SetFamily::insert(SubsetMask s) {
  check(s);
  auto it = std::lower_bound(members_.begin(), members_.end(), s, ball_order_less);
  if (it == members_.end() || *it != s) members_.insert(it, s);
}

void SetFamily::toggle(SubsetMask s) {
  check(s);
  auto it = std::lower_bound(members_.begin(), members_.end(), s, ball_order_less);
  if (it != members_.end() && *it == s) {
    members_.erase(it);
  } else {
    members_.insert(it, s);
  }
}

SetFamily SetFamily::symmetric_difference(const SetFamily& other) const {
  if (other.n_ != n_) throw DimensionError("families over different ground sets");
  SetFamily out(n_);
  std::set_symmetric_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                                std::back_inserter(out.members_), ball_order_less);
  return out;
}

std::vector<std::vector<std::size_t>> SetFamily::to_lists() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(members_.size());
  for (SubsetMask s : members_) {
    std::vector<std::size_t> list;
    for (std::size_t e = 0; e < n_; ++e) {
      if ((s >> e) & 1U) list.push_back(e + 1);
    }
    out.push_back(std::move(list));
  }
  return out;
}

SetFamily neighborhood(std::size_t n, SubsetMask s) {
  std::vector<SubsetMask> members;
  members.reserve(n);
  for (std::size_t e = 0; e < n; ++e) members.push_back(s ^ (SubsetMask{1} << e));
  return SetFamily(n, std::move(members));
}

bool is_t_pseudo_border(const SetFamily& f, std::size_t t) {
  require_t(f.n(), t);
  if (!f.contains(0)) return false;
  for (SubsetMask m : f.members()) {
    if (subset_size(m) > t) return false;
  }
  for (const auto& [center, count] : neighbour_counts(f)) {
    if (subset_size(center) + 1 <= t && count % 2 != 0) return false;
  }
  return true;
}

SetFamily flip(const SetFamily& f, SubsetMask s) { return f.symmetric_difference(neighborhood(f.n(), s)); }

BallIndex::BallIndex(std::size_t n, std::size_t radius) : n_(n), radius_(radius) {
  require_ground_set(n);
  if (radius > n) radius_ = radius = n;
  offsets_.push_back(0);
  for (std::size_t k = 0; k <= radius; ++k) {
    // Gosper's successor walks a layer in increasing numeric, i.e. colex, order.
    if (k == 0) {
      masks_.push_back(0);
    } else {
      SubsetMask s = (SubsetMask{1} << k) - 1;
      const SubsetMask limit = SubsetMask{1} << n;
      while (s < limit) {
        masks_.push_back(s);
        const SubsetMask low = s & (~s + 1);
        const SubsetMask ripple = s + low;
        s = ripple | (((s ^ ripple) >> 2) / low);
      }
    }
    offsets_.push_back(masks_.size());
  }
}

std::size_t BallIndex::column_of(SubsetMask s) const {
  const std::size_t k = subset_size(s);
  if (k > radius_ || (n_ < 64 && (s >> n_) != 0)) throw IndexError("subset lies outside the ball");
  std::size_t rank = 0;
  std::size_t i = 1;
  for (SubsetMask rest = s; rest != 0; rest &= rest - 1, ++i) {
    const auto element = static_cast<std::size_t>(__builtin_ctzll(rest));
    rank += binomial(element, i);
  }
  return offsets_[k] + rank;
}

BitVector PseudoBorderInstance::indicator(const SetFamily& f) const {
  if (f.n() != n) throw DimensionError("family over a different ground set");
  BitVector x(ball.size());
  for (SubsetMask m : f.members()) x.set(ball.column_of(m));
  return x;
}

SetFamily PseudoBorderInstance::family(const BitVector& x) const {
  if (x.size() != ball.size()) throw DimensionError("indicator length does not match the ball");
  std::vector<SubsetMask> members;
  for (std::size_t c = x.first_set(); c < x.size(); c = x.next_set(c)) members.push_back(ball.mask_at(c));
  return SetFamily(n, std::move(members));
}

PseudoBorderInstance build_constraints(std::size_t n, std::size_t t, std::size_t max_columns) {
  require_ground_set(n);
  require_t(n, t);
  std::uint64_t columns = 0;
  for (std::size_t k = 0; k <= t; ++k) columns += binomial(n, k);
  if (columns > max_columns) {
    throw ResourceError("ball of radius " + std::to_string(t) + " in the " + std::to_string(n) + "-cube has " +
                        std::to_string(columns) + " vertices, above the budget of " + std::to_string(max_columns));
  }

  PseudoBorderInstance inst;
  inst.n = n;
  inst.t = t;
  inst.ball = BallIndex(n, t);
  inst.constraints = BitMatrix(0, inst.ball.size());
  for (std::size_t c = 0; c < inst.ball.layer_end(t - 1); ++c) {
    const SubsetMask center = inst.ball.mask_at(c);
    inst.centers.push_back(center);
    BitVector row(inst.ball.size());
    for (std::size_t e = 0; e < n; ++e) row.set(inst.ball.column_of(center ^ (SubsetMask{1} << e)));
    inst.constraints.append_row(std::move(row));
  }
  return inst;
}

namespace {

// Kernel vector with the empty-set coordinate set, plus a basis of the kernel
// vectors with that coordinate clear.
struct AffineSplit {
  std::optional<BitVector> anchor;
  BitMatrix homogeneous;
};

AffineSplit split_on_empty_set(const PseudoBorderInstance& inst) {
  const BitMatrix kernel = kernel_basis(inst.constraints);
  AffineSplit split{std::nullopt, BitMatrix(0, inst.ball.size())};
  for (const auto& v : kernel.row_data()) {
    if (v.get(0) && !split.anchor) split.anchor = v;
  }
  for (const auto& v : kernel.row_data()) {
    if (split.anchor && v == *split.anchor) continue;
    split.homogeneous.append_row(v.get(0) ? v ^ *split.anchor : v);
  }
  return split;
}

}  // namespace

MinimalPseudoBorder minimal_t_pseudo_border(std::size_t n, std::size_t t, std::optional<std::size_t> cap,
                                            SearchStrategy strategy) {
  const auto inst = build_constraints(n, t);
  const auto split = split_on_empty_set(inst);

  MinimalPseudoBorder out;
  if (!split.anchor) {
    out.status = SearchStatus::none_exists;
    return out;
  }

  // Vectors of the kernel outside the homogeneous hyperplane are exactly the
  // solutions with the empty set present.
  CosetSearchOptions options;
  if (cap) options.cap = *cap;
  options.strategy = strategy;
  auto found = min_weight_in_coset(inst.constraints, split.homogeneous, options);
  out.status = found.status;
  out.size = found.weight;
  out.ruled_out_below_or_at = found.ruled_out_below_or_at;
  if (found.witness) out.witness = inst.family(*found.witness);
  return out;
}

std::optional<SetFamily> random_t_pseudo_border(std::size_t n, std::size_t t, std::uint64_t seed) {
  const auto inst = build_constraints(n, t);
  const auto split = split_on_empty_set(inst);
  if (!split.anchor) return std::nullopt;

  std::mt19937_64 rng(seed);
  BitVector x = *split.anchor;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < split.homogeneous.rows(); ++i) {
    if (i % 64 == 0) bits = rng();
    if ((bits >> (i % 64)) & 1U) x ^= split.homogeneous.row(i);
  }
  return inst.family(x);
}

std::vector<SetFamily> all_t_pseudo_borders(std::size_t n, std::size_t t, std::size_t max_dimension) {
  const auto inst = build_constraints(n, t);
  const auto split = split_on_empty_set(inst);
  std::vector<SetFamily> out;
  if (!split.anchor) return out;
  const std::size_t dim = split.homogeneous.rows();
  if (dim > max_dimension) {
    throw ResourceError("affine space of " + std::to_string(n) + "," + std::to_string(t) +
                        "-pseudo-borders has dimension " + std::to_string(dim));
  }
  BitVector x = *split.anchor;
  out.push_back(inst.family(x));
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << dim); ++step) {
    x ^= split.homogeneous.row(static_cast<std::size_t>(__builtin_ctzll(step)));
    out.push_back(inst.family(x));
  }
  return out;
}

std::size_t count_k_sets(const SetFamily& f, std::size_t k) {
  return static_cast<std::size_t>(
      std::count_if(f.members().begin(), f.members().end(), [k](SubsetMask m) { return subset_size(m) == k; }));
}

SetFamily odd_sets(const SetFamily& f, std::size_t k) {
  if (k < 1) throw ValidationError("odd k-sets need k >= 1");
  std::unordered_map<SubsetMask, bool> parity;
  for (SubsetMask m : f.members()) {
    if (subset_size(m) + 1 != k) continue;
    for (std::size_t e = 0; e < f.n(); ++e) {
      const SubsetMask bit = SubsetMask{1} << e;
      if ((m & bit) == 0) parity[m | bit] ^= true;
    }
  }
  std::vector<SubsetMask> odd;
  for (const auto& [s, p] : parity) {
    if (p) odd.push_back(s);
  }
  return SetFamily(f.n(), std::move(odd));
}

OddToNextCheck verify_odd_to_next(const SetFamily& f, std::size_t k) {
  OddToNextCheck c;
  c.odd_k_sets = odd_sets(f, k).size();
  c.next_layer = count_k_sets(f, k + 1);
  c.holds = c.next_layer * (k + 1) >= c.odd_k_sets;
  return c;
}

SetsToOddCheck verify_sets_to_odd(const SetFamily& f, std::size_t k) {
  if (k < 1) throw ValidationError("need k >= 1");
  SetsToOddCheck c;
  c.k_sets = count_k_sets(f, k);
  c.odd_next = odd_sets(f, k + 1).size();
  const auto lhs = static_cast<long long>(k + 1) * static_cast<long long>(c.odd_next);
  const auto coeff = static_cast<long long>(f.n()) - static_cast<long long>((k - 1) * k);
  c.holds = lhs >= coeff * static_cast<long long>(c.k_sets);
  return c;
}

std::optional<std::pair<SubsetMask, long>> best_flip(const SetFamily& f, std::size_t t) {
  std::optional<std::pair<SubsetMask, long>> best;
  const auto n = static_cast<long>(f.n());
  for (const auto& [center, count] : neighbour_counts(f)) {
    const std::size_t size = subset_size(center);
    if (size < 2 || size + 1 > t) continue;
    const long delta = n - 2 * static_cast<long>(count);
    if (!best || delta < best->second || (delta == best->second && ball_order_less(center, best->first))) {
      best = std::make_pair(center, delta);
    }
  }
  return best;
}

FlipDescent flip_descent(const SetFamily& f, std::size_t t, std::size_t budget) {
  if (!is_t_pseudo_border(f, t)) throw StructuralError("flip_descent needs a t-pseudo-border to start from");
  FlipDescent out{f, 0, false};
  while (true) {
    const auto best = best_flip(out.family, t);
    if (!best || best->second >= 0) {
      out.flip_minimal = true;
      return out;
    }
    if (out.flips == budget) return out;
    out.family = flip(out.family, best->first);
    ++out.flips;
  }
}

}  // namespace cayleyqc
