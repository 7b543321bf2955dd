#include "trifree/online_game.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace trifree {

Interval::Interval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi");
}

bool overlaps(const Interval& a, const Interval& b) {
  const bool meet = a.lo <= b.hi && b.lo <= a.hi;
  return meet && !a.contains(b) && !b.contains(a);
}

std::size_t GameTranscript::present(const Interval& interval) {
  if (!moves_.empty()) {
    const Rat& last = moves_.back().interval.lo;
    if (!(interval.lo > last)) throw IllegalMove("left endpoints must increase");
  }
  std::vector<std::size_t> nbrs;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (overlaps(moves_[i].interval, interval)) nbrs.push_back(i);
  }
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    const auto& na = adjacency_[nbrs[a]];
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (std::binary_search(na.begin(), na.end(), nbrs[b])) {
        throw IllegalMove("interval closes a triangle with moves " + std::to_string(nbrs[a]) + " and " +
                          std::to_string(nbrs[b]));
      }
    }
  }
  const std::size_t index = moves_.size();
  for (std::size_t v : nbrs) adjacency_[v].push_back(index);
  moves_.push_back({interval, 0});
  adjacency_.push_back(std::move(nbrs));
  return index;
}

void GameTranscript::paint(std::size_t index, int color) {
  if (color <= 0) throw IllegalColor("colors are positive integers");
  for (std::size_t v : adjacency_.at(index)) {
    if (moves_[v].color == color) {
      throw IllegalColor("color " + std::to_string(color) + " is used by overlapping move " + std::to_string(v));
    }
  }
  moves_[index].color = color;
}

std::vector<int> GameTranscript::neighbor_colors(std::size_t index) const {
  std::vector<int> out;
  for (std::size_t v : adjacency_.at(index)) {
    if (moves_[v].color > 0) out.push_back(moves_[v].color);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> GameTranscript::containing(std::size_t index) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < index; ++i) {
    if (moves_[i].interval.contains(moves_[index].interval)) out.push_back(i);
  }
  return out;
}

std::vector<int> GameTranscript::colors() const {
  std::vector<int> out;
  for (const auto& m : moves_) {
    if (m.color > 0) out.push_back(m.color);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int GameTranscript::colors_used() const { return static_cast<int>(colors().size()); }

int GameTranscript::max_color() const {
  int best = 0;
  for (const auto& m : moves_) best = std::max(best, m.color);
  return best;
}

Graph GameTranscript::overlap_graph() const {
  Graph g(moves_.size());
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    g.set_label(i, "[" + moves_[i].interval.lo.str() + ", " + moves_[i].interval.hi.str() + "]");
    for (std::size_t j : adjacency_[i]) {
      if (i < j) g.add_edge(i, j);
    }
  }
  return g;
}

bool GameTranscript::legal() const {
  for (std::size_t i = 1; i < moves_.size(); ++i) {
    if (!(moves_[i].interval.lo > moves_[i - 1].interval.lo)) return false;
  }
  Graph g(moves_.size());
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    for (std::size_t j = i + 1; j < moves_.size(); ++j) {
      const bool o = overlaps(moves_[i].interval, moves_[j].interval);
      if (o) g.add_edge(i, j);
      if (o && moves_[i].color != 0 && moves_[i].color == moves_[j].color) return false;
    }
  }
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (g.neighbors(i) != adjacency_[i]) return false;
  }
  return is_triangle_free(g);
}

int FirstFitPainter::choose(const GameTranscript& t) {
  const auto used = t.neighbor_colors(t.size() - 1);
  int c = 1;
  for (int u : used) {
    if (u == c) ++c;
  }
  return c;
}

int ScriptedPainter::choose(const GameTranscript&) {
  if (next_ >= script_.size()) throw std::out_of_range("painter script exhausted");
  return script_[next_++];
}

int ReplPainter::choose(const GameTranscript& t) {
  const std::size_t index = t.size() - 1;
  const Move& m = t.moves()[index];
  for (int attempt = 0; attempt < max_attempts_; ++attempt) {
    out_ << "interval " << index << ": [" << m.interval.lo << ", " << m.interval.hi << "]\n";
    out_ << "  inside:";
    for (std::size_t c : t.containing(index)) out_ << ' ' << c;
    out_ << "\n  neighbours:";
    for (std::size_t v : t.neighbors(index)) out_ << ' ' << v << "=" << t.moves()[v].color;
    out_ << "\ncolor> " << std::flush;

    std::string line;
    if (!std::getline(in_, line)) throw InputError("input ended before the game finished");
    std::istringstream parse(line);
    int color = 0;
    std::string rest;
    if (!(parse >> color) || (parse >> rest)) {
      out_ << "not a number: '" << line << "'\n";
      continue;
    }
    const auto used = t.neighbor_colors(index);
    if (color <= 0 || std::binary_search(used.begin(), used.end(), color)) {
      out_ << "illegal color " << color << "\n";
      continue;
    }
    return color;
  }
  throw InputError("too many invalid colors");
}

namespace {

// Raised when a replayed painter has no color for the newest interval.
struct NeedColor {};

class Session {
 public:
  Session(GameTranscript& t, Painter& painter) : t_(t), painter_(painter) {}

  std::size_t present(const Interval& interval) {
    const std::size_t index = t_.present(interval);
    t_.paint(index, painter_.choose(t_));
    return index;
  }

  const GameTranscript& transcript() const { return t_; }
  std::vector<ChainCertificate>& certificates() { return certificates_; }

 private:
  GameTranscript& t_;
  Painter& painter_;
  std::vector<ChainCertificate> certificates_;
};

struct StrategyOutcome {
  std::vector<std::size_t> family;
  Rat x;
};

// Members of `family` meeting [x, inf).
std::vector<std::size_t> chain_at(const GameTranscript& t, const std::vector<std::size_t>& family, const Rat& x) {
  std::vector<std::size_t> out;
  for (std::size_t i : family) {
    if (t.moves()[i].interval.hi >= x) out.push_back(i);
  }
  return out;
}

std::vector<int> colors_on(const GameTranscript& t, const std::vector<std::size_t>& ids) {
  std::vector<int> out;
  for (std::size_t i : ids) out.push_back(t.moves()[i].color);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rat min_hi(const GameTranscript& t, const std::vector<std::size_t>& ids) {
  Rat best = t.moves()[ids.front()].interval.hi;
  for (std::size_t i : ids) best = std::min(best, t.moves()[i].interval.hi);
  return best;
}

Rat max_hi(const GameTranscript& t, const std::vector<std::size_t>& ids) {
  Rat best = t.moves()[ids.front()].interval.hi;
  for (std::size_t i : ids) best = std::max(best, t.moves()[i].interval.hi);
  return best;
}

Rat max_lo(const GameTranscript& t, const std::vector<std::size_t>& ids) {
  Rat best = t.moves()[ids.front()].interval.lo;
  for (std::size_t i : ids) best = std::max(best, t.moves()[i].interval.lo);
  return best;
}

void certify(Session& session, int level, const StrategyOutcome& out, const Interval& range) {
  const GameTranscript& t = session.transcript();
  ChainCertificate cert{level, out.x, chain_at(t, out.family, out.x), {}};
  cert.colors = colors_on(t, cert.chain);
  for (std::size_t i : out.family) {
    const Interval& iv = t.moves()[i].interval;
    if (!(range.lo < iv.lo && iv.hi < range.hi)) throw IllegalMove("interval leaves the interior of its range");
  }
  for (std::size_t a = 0; a < cert.chain.size(); ++a) {
    for (std::size_t b = a + 1; b < cert.chain.size(); ++b) {
      const Interval& ia = t.moves()[cert.chain[a]].interval;
      const Interval& ib = t.moves()[cert.chain[b]].interval;
      if (!ia.contains(ib) && !ib.contains(ia)) throw IllegalMove("certified family is not a nested chain");
    }
  }
  if (static_cast<int>(cert.colors.size()) < level) throw IllegalMove("chain certificate has too few colors");
  session.certificates().push_back(std::move(cert));
}

StrategyOutcome sigma(Session& session, int k, const Interval& range) {
  const GameTranscript& t = session.transcript();
  StrategyOutcome out;
  if (k == 1) {
    const Rat third = (range.hi - range.lo) / 3;
    const Interval mid(range.lo + third, range.hi - third);
    out.family.push_back(session.present(mid));
    out.x = midpoint(mid.lo, mid.hi);
    certify(session, 1, out, range);
    return out;
  }

  StrategyOutcome first = sigma(session, k - 1, range);
  const auto chain = chain_at(t, first.family, first.x);
  const Rat lo = std::max(first.x, max_lo(t, chain));
  const Rat hi = min_hi(t, chain);
  const Rat quarter = (hi - lo) / 4;
  const Interval sub(lo + quarter, hi - quarter);

  StrategyOutcome second = sigma(session, k - 1, sub);
  const auto chain2 = chain_at(t, second.family, second.x);
  out.family = first.family;
  out.family.insert(out.family.end(), second.family.begin(), second.family.end());

  if (colors_on(t, chain) != colors_on(t, chain2)) {
    out.x = second.x;
  } else {
    const Interval j(midpoint(second.x, min_hi(t, chain2)), midpoint(max_hi(t, chain2), hi));
    out.family.push_back(session.present(j));
    out.x = midpoint(max_hi(t, chain2), j.hi);
  }
  certify(session, k, out, range);
  return out;
}

// Shortest strategy: sigma on [0, 1], then one interval overlapping I(x).
Rat play(Session& session, int k) {
  if (k < 1) throw std::invalid_argument("game needs k >= 1");
  const Interval range(Rat(0), Rat(1));
  StrategyOutcome top = sigma(session, k, range);
  const GameTranscript& t = session.transcript();
  const auto chain = chain_at(t, top.family, top.x);
  session.present(Interval(midpoint(top.x, min_hi(t, chain)), range.hi));
  return top.x;
}

// Painter that replays a color prefix and then stops the game.
class PrefixPainter : public Painter {
 public:
  explicit PrefixPainter(std::span<const int> colors) : colors_(colors) {}
  int choose(const GameTranscript&) override {
    if (next_ >= colors_.size()) throw NeedColor{};
    return colors_[next_++];
  }

 private:
  std::span<const int> colors_;
  std::size_t next_ = 0;
};

}  // namespace

GameResult run_game(int k, Painter& painter) {
  GameResult result;
  Session session(result.transcript, painter);
  result.point = play(session, k);
  result.certificates = std::move(session.certificates());
  result.colors_used = result.transcript.colors_used();
  if (!result.transcript.legal()) throw IllegalMove("transcript fails the final legality check");
  if (k < 63 && result.transcript.size() > (std::size_t{1} << k)) throw IllegalMove("more than 2^k intervals");
  return result;
}

Presenter::Presenter(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("presenter needs k >= 1");
}

PresenterStep Presenter::next(std::span<const int> colors) const {
  PresenterStep step;
  PrefixPainter painter(colors);
  Session session(step.transcript, painter);
  try {
    play(session, k_);
    step.done = true;
  } catch (const NeedColor&) {
    step.next = step.transcript.moves().back().interval;
  }
  return step;
}

std::vector<int> canonical_colors(const GameTranscript& t, int budget) {
  const std::size_t index = t.size() - 1;
  int max_used = 0;
  for (std::size_t i = 0; i < index; ++i) max_used = std::max(max_used, t.moves()[i].color);
  const auto blocked = t.neighbor_colors(index);
  std::vector<int> out;
  for (int c = 1; c <= std::min(max_used + 1, budget); ++c) {
    if (!std::binary_search(blocked.begin(), blocked.end(), c)) out.push_back(c);
  }
  return out;
}

namespace {

// True iff some painter continuing `prefix` finishes within budget.
bool painter_survives(const Presenter& presenter, std::vector<int>& prefix, int budget, MinimaxResult& stats) {
  const PresenterStep step = presenter.next(prefix);
  if (step.done) {
    ++stats.leaves;
    return step.transcript.colors_used() <= budget;
  }
  const auto choices = canonical_colors(step.transcript, budget);
  // No legal color within budget: the painter is forced over it here.
  if (choices.empty()) ++stats.leaves;
  for (int c : choices) {
    prefix.push_back(c);
    if (painter_survives(presenter, prefix, budget, stats)) return true;
    prefix.pop_back();
  }
  return false;
}

int best_final(const Presenter& presenter, std::vector<int>& prefix, int bound) {
  const PresenterStep step = presenter.next(prefix);
  if (step.done) return step.transcript.colors_used();
  int best = bound;
  for (int c : canonical_colors(step.transcript, best)) {
    prefix.push_back(c);
    best = std::min(best, best_final(presenter, prefix, best));
    prefix.pop_back();
  }
  return best;
}

}  // namespace

MinimaxResult minimax_search(int k, int budget) {
  MinimaxResult result;
  const Presenter presenter(k);
  std::vector<int> prefix;
  const bool survives = painter_survives(presenter, prefix, budget, result);
  result.presenter_wins = !survives;
  if (survives) result.surviving_colors = prefix;
  return result;
}

bool minimax_verify(int k, int budget) { return minimax_search(k, budget).presenter_wins; }

int minimax_value(int k, std::span<const int> prefix) {
  const Presenter presenter(k);
  std::vector<int> line(prefix.begin(), prefix.end());
  // Any game of the shortest strategy has at most 2^k moves.
  const int bound = k < 30 ? (1 << k) + 1 : 1 << 30;
  return best_final(presenter, line, bound);
}

int MinimaxPainter::choose(const GameTranscript& t) {
  std::vector<int> prefix;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) prefix.push_back(t.moves()[i].color);
  const Presenter presenter(k_);
  int best_color = 0;
  int best = 0;
  // Canonical choices cover every outcome up to renaming; fall back to a
  // fresh color above everything visible otherwise.
  for (int c : canonical_colors(t, t.max_color() + 1)) {
    prefix.push_back(c);
    const int value = minimax_value(k_, prefix);
    prefix.pop_back();
    if (best_color == 0 || value < best) {
      best = value;
      best_color = c;
    }
  }
  return best_color;
}

}  // namespace trifree
