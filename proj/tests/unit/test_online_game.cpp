#include "trifree/graph.hpp"
#include "trifree/online_game.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace trifree;

namespace {

Interval iv(Rat lo, Rat hi) { return Interval(std::move(lo), std::move(hi)); }

// Overlap of closed intervals without containment, written from scratch.
bool crossing(const Interval& a, const Interval& b) {
  if (a.hi < b.lo || b.hi < a.lo) return false;
  const bool a_in_b = b.lo <= a.lo && a.hi <= b.hi;
  const bool b_in_a = a.lo <= b.lo && b.hi <= a.hi;
  return !a_in_b && !b_in_a;
}

void expect_valid_game(const GameResult& r, int k) {
  const auto& moves = r.transcript.moves();
  ASSERT_LE(moves.size(), std::size_t{1} << k);
  Graph g(moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(moves[i - 1].interval.lo, moves[i].interval.lo);
    }
    EXPECT_GT(moves[i].color, 0);
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      if (crossing(moves[i].interval, moves[j].interval)) {
        g.add_edge(i, j);
        EXPECT_NE(moves[i].color, moves[j].color);
      }
    }
  }
  EXPECT_TRUE(is_triangle_free(g));
  std::set<int> colors;
  for (const auto& m : moves) colors.insert(m.color);
  EXPECT_GE(static_cast<int>(colors.size()), k + 1);
  EXPECT_EQ(static_cast<int>(colors.size()), r.colors_used);
}

}  // namespace

TEST(OnlineGame, IntervalsAndOverlap) {
  EXPECT_THROW(iv(1, 1), std::invalid_argument);
  EXPECT_THROW(iv(2, 1), std::invalid_argument);
  EXPECT_TRUE(overlaps(iv(0, 2), iv(1, 3)));
  EXPECT_TRUE(overlaps(iv(0, 1), iv(1, 2)));  // closed: a shared endpoint counts
  EXPECT_FALSE(overlaps(iv(0, 3), iv(1, 2)));  // nested
  EXPECT_FALSE(overlaps(iv(0, 1), iv(2, 3)));
  EXPECT_FALSE(overlaps(iv(0, 1), iv(0, 1)));
}

TEST(OnlineGame, TranscriptEnforcesTheRules) {
  GameTranscript t;
  t.present(iv(0, 3));
  EXPECT_THROW(t.present(iv(0, 4)), IllegalMove);  // left endpoints must increase
  t.paint(0, 1);
  t.present(iv(1, 4));
  EXPECT_THROW(t.paint(1, 1), IllegalColor);
  EXPECT_THROW(t.paint(1, 0), IllegalColor);
  t.paint(1, 2);
  EXPECT_THROW(t.present(iv(2, 5)), IllegalMove);  // would close a triangle
  t.present(iv(Rat(5, 2), Rat(7, 2)));             // inside [1,4], overlaps [0,3]
  EXPECT_EQ(t.neighbor_colors(2), std::vector<int>{1});
  EXPECT_EQ(t.containing(2), std::vector<std::size_t>{1});
  t.paint(2, 2);
  EXPECT_TRUE(t.legal());
  EXPECT_EQ(t.colors_used(), 2);
  EXPECT_EQ(t.overlap_graph().edge_count(), 2u);
}

TEST(OnlineGame, FirstFitIsForcedToKPlusOneColors) {
  for (int k = 1; k <= 8; ++k) {
    FirstFitPainter painter;
    const GameResult r = run_game(k, painter);
    expect_valid_game(r, k);
    EXPECT_EQ(r.transcript.size(), std::size_t{1} << k) << k;
    EXPECT_EQ(r.colors_used, k + 1) << k;
  }
}

TEST(OnlineGame, FirstFitTranscriptForTwo) {
  FirstFitPainter painter;
  const GameResult r = run_game(2, painter);
  const std::vector<std::pair<Interval, int>> expected{
      {iv(Rat(1, 3), Rat(2, 3)), 1},
      {iv(Rat(41, 72), Rat(43, 72)), 1},
      {iv(Rat(85, 144), Rat(91, 144)), 2},
      {iv(Rat(359, 576), 1), 3},
  };
  ASSERT_EQ(r.transcript.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(r.transcript.moves()[i].interval, expected[i].first) << i;
    EXPECT_EQ(r.transcript.moves()[i].color, expected[i].second) << i;
  }
}

TEST(OnlineGame, CertificatesAreNestedChainsWithEnoughColors) {
  FirstFitPainter painter;
  const GameResult r = run_game(4, painter);
  ASSERT_FALSE(r.certificates.empty());
  for (const auto& c : r.certificates) {
    EXPECT_GE(static_cast<int>(c.colors.size()), c.level);
    for (std::size_t a = 0; a + 1 < c.chain.size(); ++a) {
      EXPECT_TRUE(r.transcript.moves()[c.chain[a]].interval.contains(r.transcript.moves()[c.chain[a + 1]].interval));
    }
  }
  EXPECT_EQ(r.certificates.back().level, 4);
}

TEST(OnlineGame, FreshColorPainterAlsoLoses) {
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> script(std::size_t{1} << k);
    for (std::size_t i = 0; i < script.size(); ++i) script[i] = static_cast<int>(i) + 1;
    ScriptedPainter painter(script);
    expect_valid_game(run_game(k, painter), k);
  }
}

TEST(OnlineGame, ScriptedPainterRunsOut) {
  ScriptedPainter painter({1});
  EXPECT_THROW(run_game(2, painter), std::out_of_range);
}

TEST(OnlineGame, PresenterIsDeterministic) {
  const Presenter p(2);
  const auto first = p.next({});
  ASSERT_FALSE(first.done);
  EXPECT_EQ(*first.next, iv(Rat(1, 3), Rat(2, 3)));
  const std::vector<int> colors{1, 1, 2, 3};
  EXPECT_TRUE(p.next(colors).done);
  const std::vector<int> three{1, 1, 2};
  EXPECT_EQ(*p.next(three).next, iv(Rat(359, 576), 1));
  const std::vector<int> bad{1, 1, 1};
  EXPECT_THROW(p.next(bad), IllegalColor);
}

TEST(OnlineGame, CanonicalColors) {
  GameTranscript t;
  t.present(iv(0, 3));
  t.paint(0, 1);
  t.present(iv(1, 4));
  // Overlaps color 1; the only canonical choice is a new color 2.
  EXPECT_EQ(canonical_colors(t, 5), std::vector<int>{2});
  EXPECT_TRUE(canonical_colors(t, 1).empty());
}

TEST(OnlineGame, MinimaxSmallCases) {
  for (int k = 1; k <= 2; ++k) {
    EXPECT_TRUE(minimax_verify(k, k)) << k;
    EXPECT_FALSE(minimax_verify(k, k + 1)) << k;
    EXPECT_EQ(minimax_value(k), k + 1) << k;
  }
  const MinimaxResult survivor = minimax_search(2, 3);
  EXPECT_FALSE(survivor.presenter_wins);
  EXPECT_TRUE(Presenter(2).next(survivor.surviving_colors).done);
}

TEST(OnlineGame, MinimaxPainterUsesTheOptimum) {
  MinimaxPainter painter(2);
  const GameResult r = run_game(2, painter);
  expect_valid_game(r, 2);
  EXPECT_EQ(r.colors_used, 3);
}

TEST(OnlineGame, ReplPainterReadsColors) {
  std::istringstream in("x\n1\n9 9\n1\n2\n1\n3\n");
  std::ostringstream out;
  ReplPainter painter(in, out);
  const GameResult r = run_game(2, painter);
  expect_valid_game(r, 2);
  EXPECT_NE(out.str().find("not a number: 'x'"), std::string::npos);
  EXPECT_NE(out.str().find("not a number: '9 9'"), std::string::npos);
  EXPECT_NE(out.str().find("illegal color 1"), std::string::npos);
}

TEST(OnlineGame, ReplPainterFailsOnEndOfInput) {
  std::istringstream in("1\n");
  std::ostringstream out;
  ReplPainter painter(in, out);
  EXPECT_THROW(run_game(2, painter), InputError);
  std::istringstream junk("a\nb\nc\n");
  ReplPainter impatient(junk, out, 2);
  EXPECT_THROW(run_game(1, impatient), InputError);
}
