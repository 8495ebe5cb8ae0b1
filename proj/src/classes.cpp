#include "eopart/classes.hpp"

#include <stdexcept>

namespace eopart {

namespace {

constexpr std::string_view kWhere = "classes";

EnumConstraints constraints_for(Family f, FamilyIndex i) {
  EnumConstraints c;
  // Every G_i and H_i part is >= 2i-1; only a pruning hint, the predicate
  // still checks it.
  if (f != Family::Gprime) c.min_part = i.min_part();
  return c;
}

}  // namespace

FamilyIndex::FamilyIndex(int i) : i_(i) {
  if (i != 1 && i != 2) throw std::invalid_argument("family index must be 1 or 2");
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::G: return "G";
    case Family::Gprime: return "Gprime";
    case Family::H: return "H";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "G") return Family::G;
  if (name == "Gprime") return Family::Gprime;
  if (name == "H") return Family::H;
  return std::nullopt;
}

bool is_gg_member(const Partition& p, FamilyIndex i) {
  const auto parts = p.parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < i.min_part()) return false;
    if (k + 1 < parts.size() && parts[k] - parts[k + 1] <= 1) return false;
  }
  const auto split = split_even_odd(p);
  for (std::size_t k = 0; k + 1 < split.evens.size(); ++k)
    if (split.evens[k] - split.evens[k + 1] <= 2) return false;
  return true;
}

bool mod8_residue_allowed(Part part, FamilyIndex i) noexcept {
  const int residue = part % 8;
  return i.value() == 1 ? (residue == 1 || residue == 4 || residue == 7)
                        : (residue == 3 || residue == 4 || residue == 5);
}

bool is_mod8_member(const Partition& p, FamilyIndex i) {
  for (Part part : p.parts())
    if (!mod8_residue_allowed(part, i)) return false;
  return true;
}

bool is_h_member(const Partition& p, FamilyIndex i) {
  const auto split = split_even_odd(p);
  for (std::size_t k = 0; k + 1 < split.odds.size(); ++k)
    if (split.odds[k] == split.odds[k + 1]) return false;
  const int length = split.r() + split.s();
  if (auto e = split.smallest_even(); e && *e < 2 * (length + i.value() - 1)) return false;
  if (auto o = split.smallest_odd(); o && *o < i.min_part()) return false;
  return true;
}

bool is_member(Family f, const Partition& p, FamilyIndex i) {
  switch (f) {
    case Family::G: return is_gg_member(p, i);
    case Family::Gprime: return is_mod8_member(p, i);
    case Family::H: return is_h_member(p, i);
  }
  return false;
}

Count count_refined(Family f, const RefinedKey& key) {
  if (f == Family::Gprime)
    throw std::invalid_argument("refined counts are defined for G and H only");
  if (key.r < 0 || key.s < 0 || key.n < 0) return 0;
  if (key.r + key.s > key.n) return 0;  // more parts than weight
  auto c = constraints_for(f, key.i);
  c.max_length = static_cast<int>(key.r + key.s);
  Count total = 0;
  for (const Partition& p : enumerate_partitions(key.n, c)) {
    if (static_cast<std::int64_t>(p.length()) != key.r + key.s) continue;
    const auto split = split_even_odd(p);
    if (split.r() != key.r) continue;
    if (is_member(f, p, key.i)) total = checked_add<Count>(total, 1, kWhere);
  }
  return total;
}

Count count_total(Family f, FamilyIndex i, std::int64_t n) {
  if (n < 0) return 0;
  Count total = 0;
  for (const Partition& p : enumerate_partitions(n, constraints_for(f, i)))
    if (is_member(f, p, i)) total = checked_add<Count>(total, 1, kWhere);
  return total;
}

std::vector<Partition> members(Family f, FamilyIndex i, std::int64_t n,
                               std::optional<std::int64_t> r,
                               std::optional<std::int64_t> s) {
  std::vector<Partition> out;
  if (n < 0 || (r && *r < 0) || (s && *s < 0)) return out;
  auto c = constraints_for(f, i);
  if (r && s) {
    if (*r + *s > n) return out;
    c.max_length = static_cast<int>(*r + *s);
  }
  for (const Partition& p : enumerate_partitions(n, c)) {
    if (!is_member(f, p, i)) continue;
    const auto split = split_even_odd(p);
    if (r && split.r() != *r) continue;
    if (s && split.s() != *s) continue;
    out.push_back(p);
  }
  return out;
}

RefinedTable::RefinedTable(Family f, FamilyIndex i, std::int64_t n) : n_(n) {
  if (f == Family::Gprime)
    throw std::invalid_argument("refined counts are defined for G and H only");
  if (n < 0) return;
  side_ = static_cast<std::size_t>(n) + 1;
  cells_.assign(side_ * side_, 0);
  for (const Partition& p : enumerate_partitions(n, constraints_for(f, i))) {
    if (!is_member(f, p, i)) continue;
    const auto split = split_even_odd(p);
    auto& cell = cells_[static_cast<std::size_t>(split.r()) * side_ +
                        static_cast<std::size_t>(split.s())];
    cell = checked_add<Count>(cell, 1, kWhere);
    total_ = checked_add<Count>(total_, 1, kWhere);
  }
}

Count RefinedTable::at(std::int64_t r, std::int64_t s) const {
  if (r < 0 || s < 0 || r > n_ || s > n_) return 0;
  return cells_[static_cast<std::size_t>(r) * side_ + static_cast<std::size_t>(s)];
}

BruteForceCounter::BruteForceCounter(Family f) : family_(f) {
  if (f == Family::Gprime)
    throw std::invalid_argument("refined counts are defined for G and H only");
}

Count BruteForceCounter::operator()(const RefinedKey& key) {
  if (key.n < 0 || key.r < 0 || key.s < 0) return 0;
  auto& tables = tables_[key.i.value() - 1];
  const auto n = static_cast<std::size_t>(key.n);
  if (tables.size() <= n) tables.resize(n + 1);
  if (!tables[n]) tables[n].emplace(family_, key.i, key.n);
  return tables[n]->at(key.r, key.s);
}

}  // namespace eopart
