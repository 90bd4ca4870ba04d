#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fplab/config.hpp"
#include "fplab/errors.hpp"
#include "fplab/oracle.hpp"
#include "support/generators.hpp"

namespace fplab {
namespace {

using testing::all_type_vectors;
using testing::random_pseudo_type_vector;
using testing::random_type_vector;

std::set<ProjPoint> point_set(const Configuration& c) {
  std::set<ProjPoint> s;
  for (const auto& p : c.points) s.insert(p.point);
  return s;
}

std::map<Rational, int> rows_by_height(const Configuration& c) {
  std::map<Rational, int> rows;
  for (const auto& p : c.points) ++rows[p.point.coords()[1]];
  return rows;
}

TEST(Rational, FormatAndParse) {
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("x"), ValidationError);
}

TEST(ProjPoint, Normalization) {
  EXPECT_EQ(ProjPoint(2L, 4L, 2L), ProjPoint(1L, 2L, 1L));
  EXPECT_EQ(ProjPoint(3L, -6L, 0L), ProjPoint(-1L, 2L, 0L));
  EXPECT_EQ(ProjPoint(Rational(1, 2), Rational(1, 3), Rational(1)).integer_coords()[0], Integer(3));
  EXPECT_THROW(ProjPoint(0L, 0L, 0L), ValidationError);
  EXPECT_EQ(ProjPoint(1L, 2L, 1L).to_string(), "[1/1:2/1:1/1]");
}

TEST(LineForm, IncidenceAndIntersection) {
  const ProjPoint p(0L, 0L, 1L), q(1L, 1L, 1L);
  const auto l = LineForm::through(p, q);
  EXPECT_TRUE(l.contains(p));
  EXPECT_TRUE(l.contains(q));
  EXPECT_FALSE(l.contains(ProjPoint(1L, 0L, 1L)));
  EXPECT_EQ(intersect(LineForm(1L, 0L, 0L), LineForm(0L, 1L, 0L)), ProjPoint(0L, 0L, 1L));
  EXPECT_TRUE(concurrent(LineForm(1L, 0L, 0L), LineForm(0L, 1L, 0L), LineForm(1L, 1L, 0L)));
}

TEST(StandardLinear, Examples) {
  const auto a = standard_linear_config({1});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.points[0].point, ProjPoint(0L, 0L, 1L));
  const auto b = standard_linear_config({2, 5, 6});
  EXPECT_EQ(b.size(), 13u);
  EXPECT_EQ(b.lines.size(), 3u);
  EXPECT_NO_THROW(b.validate());
  const auto rows = rows_by_height(standard_linear_config({1, 2, 4, 7}));
  EXPECT_EQ(rows.at(Rational(3)), 1);
  EXPECT_EQ(rows.at(Rational(0)), 7);
}

TEST(SpreadOut, RowsAtComplementHeights) {
  const auto rows = rows_by_height(spread_out_config({2, 4, 5}));
  EXPECT_EQ(rows, (std::map<Rational, int>{{Rational(3), 2}, {Rational(1), 4}, {Rational(0), 5}}));
  const auto big = rows_by_height(spread_out_config({1, 2, 4, 7}));
  EXPECT_EQ(big, (std::map<Rational, int>{{Rational(6), 1}, {Rational(5), 2}, {Rational(3), 4}, {Rational(0), 7}}));
  EXPECT_EQ(spread_out_config({1}).points[0].point, ProjPoint(0L, 0L, 1L));
}

TEST(StandardPseudo, Examples) {
  EXPECT_EQ(standard_pseudo_config({1, 2, 2, 3}).size(), 8u);
  EXPECT_EQ(standard_pseudo_config({1, 2, 2, 3}).lines.size(), 4u);
  const auto c = standard_pseudo_config({1, 1, 2, 2});
  ASSERT_EQ(c.size(), 6u);
  std::map<Rational, int> columns;
  for (const auto& p : c.points) ++columns[p.point.coords()[0]];
  std::vector<int> sizes;
  for (auto [_, n] : columns) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{2, 4}));
  EXPECT_EQ(standard_pseudo_config({1}).size(), 1u);
}

TEST(GenericPseudo, Examples) {
  EXPECT_EQ(hilbert_function(generic_pseudo_config({1, 1, 2, 2}, 1)).delta_h, OSequence({1, 2, 3}));
  for (std::uint64_t s = 0; s < 5; ++s) {
    EXPECT_EQ(hilbert_function(generic_pseudo_config({1, 2, 3}, s)).delta_h, OSequence({1, 2, 3}));
  }
  EXPECT_EQ(generic_pseudo_config({1}, 0).size(), 1u);
}

TEST(GenericPseudo, DeterministicPerSeed) {
  SeededRng rng(41);
  for (int k = 0; k < 40; ++k) {
    const auto t = random_pseudo_type_vector(rng, 6);
    const auto s = rng.next();
    EXPECT_EQ(generic_pseudo_config(t, s), generic_pseudo_config(t, s));
    EXPECT_EQ(generic_pseudo_config(t, s, true), generic_pseudo_config(t, s, true));
    EXPECT_EQ(lattice_pseudo_config(t, s), lattice_pseudo_config(t, s));
    EXPECT_EQ(lattice_pseudo_config(t, s, 0, true), lattice_pseudo_config(t, s, 0, true));
  }
  EXPECT_NE(generic_pseudo_config({2, 3}, 1), generic_pseudo_config({2, 3}, 2));
}

TEST(Generated, AlwaysValid) {
  SeededRng rng(43);
  for (int k = 0; k < 60; ++k) {
    const auto t = random_type_vector(rng, 7);
    const auto p = random_pseudo_type_vector(rng, 7);
    const auto s = rng.next();
    for (const auto& c : {standard_linear_config(t), spread_out_config(t), generic_linear_config(t, s),
                          generic_linear_config(t, s, true), ch_config(t, s), standard_pseudo_config(p),
                          generic_pseudo_config(p, s), generic_pseudo_config(p, s, true), lattice_pseudo_config(p, s),
                          lattice_pseudo_config(p, s, 0, true)}) {
      ASSERT_NO_THROW(c.validate()) << to_string(c.kind) << " " << t.to_string() << " " << p.to_string();
      ASSERT_NO_THROW(doubled(c).validate());
    }
  }
}

TEST(Validate, RejectsForeignIncidence) {
  Configuration c;
  c.kind = ConfigKind::StandardLinear;
  c.lines = {LineForm(0L, 1L, 0L), LineForm(1L, 0L, 0L)};
  c.points = {{ProjPoint(0L, 0L, 1L), 1, 0}, {ProjPoint(0L, 1L, 1L), 1, 1}};
  EXPECT_THROW(c.validate(), ValidationError);
  c.points = {{ProjPoint(1L, 0L, 1L), 1, 0}, {ProjPoint(0L, 1L, 1L), 1, 1}};
  EXPECT_NO_THROW(c.validate());
  c.points.push_back({ProjPoint(1L, 0L, 1L), 1, 0});
  EXPECT_THROW(c.validate(), ValidationError);
}

TEST(Doubled, Basics) {
  const auto d = doubled(standard_linear_config({1}));
  EXPECT_EQ(d.degree(), 3);
  EXPECT_FALSE(d.reduced());
  EXPECT_THROW(doubled(d), ValidationError);
  EXPECT_EQ(doubled(ct_config(4, 0)).degree(), 18);
}

TEST(Ct, Examples) {
  const auto c4 = ct_config(4, 0);
  EXPECT_EQ(c4.size(), 6u);
  EXPECT_EQ(hilbert_function(c4).delta_h, OSequence({1, 2, 3}));
  const auto c42 = ctr_config(4, 2, 0);
  EXPECT_EQ(c42.size(), 8u);
  EXPECT_EQ(hilbert_function(c42).delta_h, OSequence({1, 2, 3, 2}));
  EXPECT_EQ(ct_config(2, 0).size(), 1u);
  EXPECT_THROW(ct_config(1, 0), ValidationError);
  EXPECT_THROW(ctr_config(4, 5, 0), ValidationError);
}

TEST(Ct, NestedForSameSeed) {
  for (int t = 2; t <= 6; ++t) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const auto base = point_set(ct_config(t, s));
      const auto full = point_set(ctr_config(t, t, s));
      for (int r = 0; r <= t; ++r) {
        const auto mid = point_set(ctr_config(t, r, s));
        ASSERT_EQ(mid.size(), base.size() + static_cast<std::size_t>(r));
        ASSERT_TRUE(std::includes(mid.begin(), mid.end(), base.begin(), base.end()));
        ASSERT_TRUE(std::includes(full.begin(), full.end(), mid.begin(), mid.end()));
      }
    }
  }
}

TEST(Ch, Examples) {
  EXPECT_EQ(hilbert_function(ch_config({1, 2, 3}, 0)).delta_h, OSequence({1, 2, 3}));
  const auto c = ch_config({1, 2, 4}, 0);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(hilbert_function(c).delta_h, OSequence({1, 2, 3, 1}));
  EXPECT_EQ(ch_config({1}, 0).size(), 1u);
}

TEST(Ch, HilbertFunctionFollowsType) {
  SeededRng rng(47);
  for (int k = 0; k < 30; ++k) {
    const auto t = random_type_vector(rng, 6);
    ASSERT_EQ(hilbert_function(ch_config(t, rng.next())).delta_h, hf_from_type_vector(t)) << t.to_string();
  }
}

TEST(Cubic, PointsLieOnTheCurve) {
  const auto c = points_on_cubic(12, 3);
  ASSERT_EQ(c.size(), 12u);
  for (const auto& p : c.points) {
    const auto& x = p.point.coords();
    EXPECT_EQ(x[1] * x[1] * x[2], x[0] * x[0] * x[0] + 17 * x[2] * x[2] * x[2]) << p.point.to_string();
  }
  EXPECT_EQ(hilbert_function(points_on_cubic(1, 0)).delta_h, OSequence({1}));
  EXPECT_EQ(points_on_cubic(10, 5), points_on_cubic(10, 5));
}

TEST(Free, DistinctAndDeterministic) {
  const auto c = free_config(20, 9);
  EXPECT_EQ(point_set(c).size(), 20u);
  EXPECT_EQ(c, free_config(20, 9));
  EXPECT_EQ(hilbert_function(c).delta_h, OSequence({1, 2, 3, 4, 5, 5}));
}

TEST(Rng, UniformStaysInRange) {
  SeededRng rng(1);
  std::set<long> seen;
  for (int k = 0; k < 2000; ++k) {
    const long v = rng.uniform(-3, 3);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 3);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(ConfigKind, StringRoundTrip) {
  for (auto k : {ConfigKind::StandardLinear, ConfigKind::SpreadOut, ConfigKind::StandardPseudo,
                 ConfigKind::GenericPseudo, ConfigKind::Ct, ConfigKind::Ctr, ConfigKind::Ch, ConfigKind::Free}) {
    EXPECT_EQ(config_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(config_kind_from_string("nope"), ValidationError);
}

TEST(StandardAndSpreadOut, SameReducedHilbertFunction) {
  for (const auto& t : all_type_vectors(7)) {
    ASSERT_EQ(hilbert_function(standard_linear_config(t)), hilbert_function(spread_out_config(t))) << t.to_string();
  }
}

}  // namespace
}  // namespace fplab
