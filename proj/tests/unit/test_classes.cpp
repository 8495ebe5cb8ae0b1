#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "eopart/classes.hpp"

using namespace eopart;

namespace {

const FamilyIndex one{1};
const FamilyIndex two{2};

std::vector<Partition> ps(std::initializer_list<std::vector<Part>> lists) {
  std::vector<Partition> out;
  for (const auto& l : lists) out.emplace_back(l);
  return out;
}

// First 21 values (n = 0..20), computed by an independent Python brute force.
// The three families agree, as the identities assert.
const std::vector<Count> kFamily1 = {1, 1, 1, 1, 2, 2, 2, 3, 4, 5, 5,
                                     6, 8, 9, 10, 12, 15, 17, 19, 22, 26};
const std::vector<Count> kFamily2 = {1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2,
                                     3, 4, 4, 4, 6, 7, 7, 8, 10, 12};

}  // namespace

TEST_CASE("family index") {
  CHECK(one.min_part() == 1);
  CHECK(two.min_part() == 3);
  CHECK_THROWS_AS(FamilyIndex(0), std::invalid_argument);
  CHECK_THROWS_AS(FamilyIndex(3), std::invalid_argument);
  CHECK(parse_family("Gprime") == Family::Gprime);
  CHECK_FALSE(parse_family("g").has_value());
}

TEST_CASE("Gollnitz-Gordon predicate") {
  CHECK(is_gg_member(Partition({5, 3, 1}), one));
  CHECK_FALSE(is_gg_member(Partition({5, 3, 1}), two));
  CHECK_FALSE(is_gg_member(Partition({6, 4}), one));
  CHECK(is_gg_member(Partition({8, 4}), one));
  CHECK_FALSE(is_gg_member(Partition({5, 4}), one));
  CHECK_FALSE(is_gg_member(Partition({3, 3}), one));
  CHECK(is_gg_member(Partition(), two));
}

TEST_CASE("mod 8 predicate") {
  CHECK(is_mod8_member(Partition({4, 4, 1}), one));
  CHECK(is_mod8_member(Partition({3, 3, 3}), two));
  CHECK_FALSE(is_mod8_member(Partition({2}), one));
  CHECK(is_mod8_member(Partition({12, 9}), one));
}

TEST_CASE("H predicate") {
  CHECK(is_h_member(Partition({5, 4}), one));
  CHECK_FALSE(is_h_member(Partition({7, 2}), one));
  CHECK_FALSE(is_h_member(Partition({4, 4, 1}), one));
  CHECK_FALSE(is_h_member(Partition({3, 3}), one));
  CHECK(is_h_member(Partition(), one));
  CHECK(is_h_member(Partition(), two));
  CHECK(is_h_member(Partition({6, 3}), two));
  CHECK_FALSE(is_h_member(Partition({5, 4}), two));
}

TEST_CASE("the n = 9 member lists") {
  CHECK(members(Family::G, one, 9) == ps({{9}, {8, 1}, {7, 2}, {6, 3}, {5, 3, 1}}));
  CHECK(members(Family::Gprime, one, 9) ==
        ps({{9}, {7, 1, 1}, {4, 4, 1}, {4, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1}}));
  CHECK(members(Family::G, two, 9) == ps({{9}, {6, 3}}));
  CHECK(members(Family::Gprime, two, 9) == ps({{5, 4}, {3, 3, 3}}));
  CHECK(members(Family::H, one, 9) == ps({{9}, {8, 1}, {6, 3}, {5, 4}, {5, 3, 1}}));
  CHECK(members(Family::H, two, 9) == ps({{9}, {6, 3}}));
  CHECK(members(Family::H, one, 9, 1, 1) == ps({{8, 1}, {6, 3}, {5, 4}}));
}

TEST_CASE("refined counts") {
  CHECK(count_refined(Family::H, {one, 1, 1, 9}) == 3);
  CHECK(count_refined(Family::G, {one, 1, 1, 9}) == 3);
  CHECK(count_refined(Family::H, {one, 0, 0, 0}) == 1);
  CHECK(count_refined(Family::G, {two, 0, 0, 0}) == 1);
  CHECK(count_refined(Family::H, {one, -1, 2, 9}) == 0);
  CHECK(count_refined(Family::H, {one, 1, 1, -4}) == 0);
  CHECK(count_refined(Family::G, {one, 0, 0, 5}) == 0);
  CHECK(count_refined(Family::H, {one, 5, 5, 9}) == 0);
  CHECK_THROWS_AS((void)count_refined(Family::Gprime, {one, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("total counts") {
  CHECK(count_total(Family::G, one, 9) == 5);
  CHECK(count_total(Family::Gprime, two, 9) == 2);
  CHECK(count_total(Family::H, one, 4) == 2);
  CHECK(count_total(Family::H, two, -1) == 0);
  for (Family f : {Family::G, Family::Gprime, Family::H}) {
    for (std::int64_t n = 0; n <= 20; ++n) {
      CAPTURE(n);
      CHECK(count_total(f, one, n) == kFamily1[static_cast<std::size_t>(n)]);
      CHECK(count_total(f, two, n) == kFamily2[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("refinement sums to the total and the refined table agrees") {
  for (Family f : {Family::G, Family::H}) {
    for (FamilyIndex i : {one, two}) {
      for (std::int64_t n = 0; n <= 16; ++n) {
        const RefinedTable table(f, i, n);
        Count sum = 0;
        for (std::int64_t r = 0; r <= n; ++r)
          for (std::int64_t s = 0; s <= n; ++s) {
            const Count direct = count_refined(f, {i, r, s, n});
            CHECK(table.at(r, s) == direct);
            sum += direct;
          }
        CHECK(sum == count_total(f, i, n));
        CHECK(table.total() == sum);
      }
    }
  }
}

TEST_CASE("refined H = G on small weights") {
  for (FamilyIndex i : {one, two})
    for (std::int64_t n = 0; n <= 18; ++n) {
      const RefinedTable h(Family::H, i, n);
      const RefinedTable g(Family::G, i, n);
      for (std::int64_t r = 0; r <= n; ++r)
        for (std::int64_t s = 0; s <= n; ++s) CHECK(h.at(r, s) == g.at(r, s));
    }
}

TEST_CASE("family 2 nests inside family 1") {
  for (Family f : {Family::G, Family::H})
    for (std::int64_t n = 0; n <= 16; ++n)
      for (const Partition& p : enumerate_partitions(n))
        if (is_member(f, p, two)) CHECK(is_member(f, p, one));
}

TEST_CASE("brute-force counter caches per weight and handles negative keys") {
  BruteForceCounter counter(Family::H);
  CHECK(counter({one, 1, 1, 9}) == 3);
  CHECK(counter({two, 1, 1, 9}) == 1);
  CHECK(counter({one, 1, 1, 5}) == 1);
  CHECK(counter({one, 0, -1, 5}) == 0);
  CHECK(counter({one, 0, 0, -2}) == 0);
  CHECK_THROWS_AS(BruteForceCounter(Family::Gprime), std::invalid_argument);
}
