#include <doctest.h>

#include <map>

#include "endograph/catalog.hpp"

using namespace endograph;

TEST_CASE("catalog covers the 28 isomorphism classes up to order 15") {
  auto groups = catalog_groups_up_to(15);
  REQUIRE(groups.size() == 28);

  std::map<int, int> per_order;
  for (const auto& g : groups) ++per_order[g.order()];
  std::vector<int> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1};
  for (int n = 1; n <= 15; ++n) CHECK(per_order[n] == expected[n - 1]);

  for (const auto& g : groups) validate_group_axioms(g);

  for (size_t i = 0; i < groups.size(); ++i)
    for (size_t j = i + 1; j < groups.size(); ++j)
      CHECK_FALSE(are_isomorphic_groups(groups[i], groups[j]));
}

TEST_CASE("catalog ordering is cyclic, abelian, then non-abelian per order") {
  auto groups = catalog_groups_up_to(8);
  std::vector<std::string> names;
  for (const auto& g : groups) names.push_back(g.descriptor().name);
  CHECK(names == std::vector<std::string>{
                     "Z1", "Z2", "Z3", "Z4", "Z2 x Z2", "Z5", "Z6", "S3", "Z7",
                     "Z8", "Z2 x Z4", "Z2 x Z2 x Z2", "D4", "Q8"});
}

TEST_CASE("order 12 classes") {
  std::vector<std::string> names;
  for (const auto& g : catalog_groups_up_to(12))
    if (g.order() == 12) names.push_back(g.descriptor().name);
  CHECK(names == std::vector<std::string>{"Z12", "Z2 x Z2 x Z3", "D6", "A4",
                                          "Dic3"});
}

TEST_CASE("dihedral groups") {
  auto d5 = make_dihedral(5);
  CHECK(d5.order() == 10);
  CHECK_FALSE(d5.is_abelian());
  validate_group_axioms(d5);
  int involutions = 0;
  for (ElementId x = 0; x < d5.order(); ++x)
    if (d5.element_order(x) == 2) ++involutions;
  CHECK(involutions == 5);  // the five reflections
  CHECK(center(d5).size() == 1);

  auto d4 = make_dihedral(4);
  CHECK(center(d4).size() == 2);

  CHECK_THROWS_AS(make_dihedral(2), UsageError);
  CHECK(are_isomorphic_groups(make_dihedral(3), make_symmetric(3)));
}

TEST_CASE("symmetric groups") {
  CHECK(make_symmetric(1).order() == 1);
  CHECK(make_symmetric(2).order() == 2);
  auto s4 = make_symmetric(4);
  CHECK(s4.order() == 24);
  CHECK_FALSE(s4.is_abelian());
  validate_group_axioms(s4);
  std::map<int, int> census;
  for (ElementId x = 0; x < 24; ++x) ++census[s4.element_order(x)];
  CHECK(census[1] == 1);
  CHECK(census[2] == 9);  // 6 transpositions + 3 double transpositions
  CHECK(census[3] == 8);
  CHECK(census[4] == 6);
}

TEST_CASE("alternating group A4") {
  auto a4 = make_alternating4();
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.is_abelian());
  validate_group_axioms(a4);
  std::map<int, int> census;
  for (ElementId x = 0; x < 12; ++x) ++census[a4.element_order(x)];
  CHECK(census[2] == 3);
  CHECK(census[3] == 8);
  CHECK(census.count(6) == 0);
}

TEST_CASE("dicyclic group of order 12") {
  auto dic = make_dicyclic3();
  CHECK(dic.order() == 12);
  CHECK_FALSE(dic.is_abelian());
  validate_group_axioms(dic);
  int involutions = 0;
  for (ElementId x = 0; x < 12; ++x)
    if (dic.element_order(x) == 2) ++involutions;
  CHECK(involutions == 1);  // unique involution distinguishes Dic3 from D6
  int order4 = 0;
  for (ElementId x = 0; x < 12; ++x)
    if (dic.element_order(x) == 4) ++order4;
  CHECK(order4 == 6);
}

TEST_CASE("abelian shape fleets") {
  auto small = abelian_shapes_up_to(4);
  REQUIRE(small.size() == 5);
  CHECK(small[0].order() == 1);
  CHECK(small[4].factors == std::vector<AbelianFactor>{{2, 1, 2}});

  // Class counts per order follow the partition numbers of the exponents.
  auto shapes = abelian_shapes_up_to(16);
  CHECK(shapes.size() == 25);
  std::map<long, int> per_order;
  for (const auto& s : shapes) ++per_order[s.order()];
  CHECK(per_order[8] == 3);
  CHECK(per_order[12] == 2);
  CHECK(per_order[16] == 5);

  for (const auto& s : shapes) {
    auto g = make_abelian(s);
    CHECK(g.order() == s.order());
    CHECK(g.is_abelian());
  }
}

TEST_CASE("catalog bounds") {
  CHECK(catalog_groups_up_to(1).size() == 1);
  CHECK_THROWS_AS(catalog_groups_up_to(16), UsageError);
  CHECK_THROWS_AS(catalog_groups_up_to(0), UsageError);
}
