#include "eopart/bijections.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace eopart {

namespace {

void require_proof_family(Family f) {
  if (f != Family::G && f != Family::H)
    throw std::invalid_argument("transformations are defined for G and H only");
}

int source_index(CaseKind kind) { return kind == CaseKind::Shift ? 2 : 1; }

// Amount subtracted from every surviving part.
Part step(const TransformCase& c) {
  return c.family == Family::G && c.kind == CaseKind::EvenMin ? 4 : 2;
}

Part even_min_threshold(const TransformCase& c, std::int64_t r, std::int64_t s) {
  return c.family == Family::H ? static_cast<Part>(2 * (r + s)) : 2;
}

bool fail(std::string* why, const char* condition) {
  if (why) *why = condition;
  return false;
}

std::vector<Part> shifted(std::vector<Part> parts, Part delta) {
  for (Part& p : parts) p += delta;
  return parts;
}

}  // namespace

const std::vector<TransformCase>& all_transform_cases() {
  static const std::vector<TransformCase> cases = {
      {Family::H, CaseKind::OddOne}, {Family::H, CaseKind::EvenMin},
      {Family::H, CaseKind::Shift},  {Family::G, CaseKind::OddOne},
      {Family::G, CaseKind::EvenMin}, {Family::G, CaseKind::Shift},
  };
  return cases;
}

std::string case_name(const TransformCase& c) {
  std::string out(family_name(c.family));
  switch (c.kind) {
    case CaseKind::OddOne: return out + "-OddOne";
    case CaseKind::EvenMin: return out + "-EvenMin";
    case CaseKind::Shift: return out + "-Shift";
  }
  return out;
}

TransformKey source_key(const TransformCase& c, std::int64_t r, std::int64_t s, std::int64_t n) {
  require_proof_family(c.family);
  return {source_index(c.kind), r, s, n};
}

TransformKey target_key(const TransformCase& c, const TransformKey& src) {
  require_proof_family(c.family);
  const std::int64_t len = src.r + src.s;
  switch (c.kind) {
    case CaseKind::OddOne: return {1, src.r, src.s - 1, src.n - 2 * len + 1};
    case CaseKind::EvenMin: return {1, src.r - 1, src.s, src.n - 4 * len + 2};
    case CaseKind::Shift: return {1, src.r, src.s, src.n - 2 * len};
  }
  return src;
}

bool in_domain(const TransformCase& c, const Partition& lambda, std::string* why) {
  require_proof_family(c.family);
  if (!is_member(c.family, lambda, FamilyIndex(source_index(c.kind))))
    return fail(why, "partition is not in the source class");
  const auto split = split_even_odd(lambda);
  const bool odd_one = split.smallest_odd() == 1;
  switch (c.kind) {
    case CaseKind::OddOne:
      if (!odd_one) return fail(why, "smallest odd part is not 1");
      return true;
    case CaseKind::EvenMin:
      if (odd_one) return fail(why, "smallest odd part is 1 (OddOne case applies)");
      if (split.smallest_even() != even_min_threshold(c, split.r(), split.s()))
        return fail(why, c.family == Family::H ? "smallest even part is not 2(r+s)"
                                               : "smallest even part is not 2");
      return true;
    case CaseKind::Shift:
      return true;
  }
  return false;
}

Partition forward(const TransformCase& c, const Partition& lambda) {
  std::string why;
  if (!in_domain(c, lambda, &why)) throw PreconditionError(case_name(c) + ": " + why);
  auto split = split_even_odd(lambda);
  if (c.kind == CaseKind::OddOne) split.odds.pop_back();
  if (c.kind == CaseKind::EvenMin) split.evens.pop_back();
  const Part delta = step(c);
  std::vector<Part> parts;
  for (const auto* side : {&split.evens, &split.odds}) {
    for (Part p : *side) {
      if (p - delta < 1) throw PreconditionError(case_name(c) + ": a part would become nonpositive");
      parts.push_back(p - delta);
    }
  }
  return Partition::from_multiset(std::move(parts));
}

Partition backward(const TransformCase& c, const Partition& mu, std::int64_t target_r,
                   std::int64_t target_s) {
  require_proof_family(c.family);
  const auto split = split_even_odd(mu);
  std::int64_t want_r = target_r;
  std::int64_t want_s = target_s;
  if (c.kind == CaseKind::OddOne) --want_s;
  if (c.kind == CaseKind::EvenMin) --want_r;
  if (split.r() != want_r || split.s() != want_s)
    throw PreconditionError(case_name(c) + ": part counts do not match the target key");
  if (!is_member(c.family, mu, FamilyIndex(1)))
    throw PreconditionError(case_name(c) + ": partition is not in the codomain class");

  std::vector<Part> parts = shifted({mu.parts().begin(), mu.parts().end()}, step(c));
  if (c.kind == CaseKind::OddOne) parts.push_back(1);
  if (c.kind == CaseKind::EvenMin) parts.push_back(even_min_threshold(c, target_r, target_s));
  auto lambda = Partition::from_multiset(std::move(parts));

  std::string why;
  if (!in_domain(c, lambda, &why))
    throw PreconditionError(case_name(c) + ": reconstruction leaves the domain: " + why);
  return lambda;
}

std::string_view verdict_name(AuditVerdict v) noexcept {
  switch (v) {
    case AuditVerdict::Bijective: return "bijective";
    case AuditVerdict::NotWellDefined: return "not-well-defined";
    case AuditVerdict::NotInjective: return "not-injective";
    case AuditVerdict::NotSurjective: return "not-surjective";
  }
  return "?";
}

TransformAudit audit(const TransformCase& c, std::int64_t r, std::int64_t s, std::int64_t n) {
  TransformAudit out{c, source_key(c, r, s, n), {}, {}, {}, {}, AuditVerdict::Bijective, {}};
  out.target = target_key(c, out.source);

  for (const Partition& p : members(c.family, FamilyIndex(out.source.i), n, r, s))
    if (in_domain(c, p)) out.domain.push_back(p);
  const auto& t = out.target;
  out.codomain = members(c.family, FamilyIndex(t.i), t.n, t.r, t.s);

  std::vector<Partition> ill_defined;
  std::map<Partition, std::vector<Partition>> preimages;
  for (const Partition& lambda : out.domain) {
    try {
      Partition mu = forward(c, lambda);
      const auto split = split_even_odd(mu);
      if (mu.weight() != t.n || split.r() != t.r || split.s() != t.s ||
          !is_member(c.family, mu, FamilyIndex(t.i))) {
        ill_defined.push_back(lambda);
      }
      preimages[mu].push_back(lambda);
      out.mapping.emplace_back(lambda, std::move(mu));
    } catch (const PreconditionError&) {
      ill_defined.push_back(lambda);
    }
  }
  if (!ill_defined.empty()) {
    out.verdict = AuditVerdict::NotWellDefined;
    out.witnesses = std::move(ill_defined);
    return out;
  }
  for (const auto& [image, sources] : preimages)
    if (sources.size() > 1) out.witnesses.insert(out.witnesses.end(), sources.begin(), sources.end());
  if (!out.witnesses.empty()) {
    out.verdict = AuditVerdict::NotInjective;
    return out;
  }
  for (const Partition& mu : out.codomain)
    if (!preimages.contains(mu)) out.witnesses.push_back(mu);
  if (!out.witnesses.empty()) out.verdict = AuditVerdict::NotSurjective;
  return out;
}

bool case_split_check(Family family, std::int64_t r, std::int64_t s, std::int64_t n) {
  require_proof_family(family);
  const auto class1 = members(family, FamilyIndex(1), n, r, s);
  const auto class2 = members(family, FamilyIndex(2), n, r, s);
  for (const Partition& p : class2)
    if (!std::binary_search(class1.begin(), class1.end(), p, std::greater<>())) return false;

  const TransformCase odd_one{family, CaseKind::OddOne};
  const TransformCase even_min{family, CaseKind::EvenMin};
  for (const Partition& p : class1) {
    const bool in_class2 = std::binary_search(class2.begin(), class2.end(), p, std::greater<>());
    const int fired = int{in_domain(odd_one, p)} + int{in_domain(even_min, p)};
    if (in_class2 ? fired != 0 : fired != 1) return false;
  }
  return true;
}

}  // namespace eopart
