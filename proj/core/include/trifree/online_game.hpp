#pragma once

#include "trifree/graph.hpp"
#include "trifree/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace trifree {

/// Closed interval [lo, hi] with lo < hi.
struct Interval {
  Rat lo;
  Rat hi;

  Interval() = default;
  /// Throws std::invalid_argument unless lo < hi.
  Interval(Rat lo, Rat hi);

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersect and neither contains the other.
bool overlaps(const Interval& a, const Interval& b);

/// Presenter broke a game rule (left endpoints or triangle-freeness).
class IllegalMove : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Painter chose a color that is not positive or clashes with a neighbour.
class IllegalColor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Move {
  Interval interval;
  int color = 0;  ///< 0 until painted
};

/// Ordered moves of one game with the rules enforced on every change.
class GameTranscript {
 public:
  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }

  /// Appends an unpainted interval. Throws IllegalMove if its left endpoint
  /// does not exceed every earlier one, or if it would close a triangle.
  std::size_t present(const Interval& interval);
  /// Throws IllegalColor unless the color is positive and differs from the
  /// colors of all overlap-neighbours.
  void paint(std::size_t index, int color);

  /// Earlier or later moves overlapping move `index`, sorted.
  const std::vector<std::size_t>& neighbors(std::size_t index) const { return adjacency_.at(index); }
  /// Neighbor colors of `index` that are already painted.
  std::vector<int> neighbor_colors(std::size_t index) const;
  /// Earlier moves whose interval contains move `index`.
  std::vector<std::size_t> containing(std::size_t index) const;
  int colors_used() const;
  int max_color() const;
  std::vector<int> colors() const;

  Graph overlap_graph() const;
  /// Full recheck of every rule over the whole transcript.
  bool legal() const;

 private:
  std::vector<Move> moves_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

class Painter {
 public:
  virtual ~Painter() = default;
  /// Color for the last (unpainted) move of t.
  virtual int choose(const GameTranscript& t) = 0;
};

/// Least color not used by an overlap-neighbour.
class FirstFitPainter : public Painter {
 public:
  int choose(const GameTranscript& t) override;
};

/// Plays a fixed color sequence; throws std::out_of_range when it runs out.
class ScriptedPainter : public Painter {
 public:
  explicit ScriptedPainter(std::vector<int> script) : script_(std::move(script)) {}
  int choose(const GameTranscript& t) override;
  std::size_t used() const { return next_; }

 private:
  std::vector<int> script_;
  std::size_t next_ = 0;
};

/// Raised by ReplPainter when input ends or keeps being invalid.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Terminal painter: prints the new interval, the intervals containing it
/// and its neighbours' colors, then reads a color. Bad input re-prompts.
class ReplPainter : public Painter {
 public:
  ReplPainter(std::istream& in, std::ostream& out, int max_attempts = 16)
      : in_(in), out_(out), max_attempts_(max_attempts) {}
  int choose(const GameTranscript& t) override;

 private:
  std::istream& in_;
  std::ostream& out_;
  int max_attempts_;
};

/// Painter minimizing the number of colors at the end of the game by
/// exhaustive search over canonical colors. Only practical for small k.
class MinimaxPainter : public Painter {
 public:
  explicit MinimaxPainter(int k) : k_(k) {}
  int choose(const GameTranscript& t) override;

 private:
  int k_;
};

/// The intervals I(x) at a recursion exit, with the colors on them.
struct ChainCertificate {
  int level = 0;
  Rat point;
  std::vector<std::size_t> chain;  ///< transcript indices, presentation order
  std::vector<int> colors;         ///< sorted distinct
};

struct GameResult {
  GameTranscript transcript;
  Rat point;  ///< x of the top-level strategy before the final interval
  std::vector<ChainCertificate> certificates;
  int colors_used = 0;
};

/// Plays the shortest strategy for k on R = [0, 1] against the painter.
/// Every move and certificate is checked; a failure throws IllegalMove.
GameResult run_game(int k, Painter& painter);

struct PresenterStep {
  bool done = false;
  std::optional<Interval> next;  ///< set unless done
  GameTranscript transcript;     ///< replayed moves so far
};

/// Presenter of the shortest strategy driven by the painter's colors so
/// far. Deterministic: the same colors give the same next interval.
class Presenter {
 public:
  explicit Presenter(int k);
  int k() const { return k_; }
  /// colors[i] is the color of the i-th presented interval. Throws
  /// IllegalColor if one of them is illegal.
  PresenterStep next(std::span<const int> colors) const;

 private:
  int k_;
};

/// Canonical colors for the new last move: legal values up to
/// min(max used + 1, budget).
std::vector<int> canonical_colors(const GameTranscript& t, int budget);

struct MinimaxResult {
  bool presenter_wins = false;  ///< no painter keeps within the budget
  std::uint64_t leaves = 0;  ///< finished games plus positions with no color left in budget
  std::vector<int> surviving_colors;  ///< a painter line within budget, if any
};

MinimaxResult minimax_search(int k, int budget);
/// True iff every painter (up to renaming colors) uses more than `budget`
/// colors against the shortest strategy for k.
bool minimax_verify(int k, int budget);

/// Smallest number of colors any painter can end with; exhaustive.
int minimax_value(int k, std::span<const int> prefix = {});

}  // namespace trifree
