#include "trifree/dimacs.hpp"
#include "trifree/document.hpp"
#include "trifree/graph.hpp"
#include "trifree/json_io.hpp"
#include "trifree/svg.hpp"

#include <gtest/gtest.h>

using namespace trifree;

namespace {

FamilyDocument independent(int k) {
  BuildRequest r;
  r.k = k;
  return build_document(r);
}

FamilyDocument uniform(int k) {
  BuildRequest r;
  r.mode = FamilyMode::uniform;
  r.k = k;
  r.epsilon = Rat(1, 2);
  return build_document(r);
}

FamilyDocument encoded(int k) {
  BuildRequest r;
  r.mode = FamilyMode::encoded_frames;
  r.k = k;
  return build_document(r);
}

void expect_same(const FamilyDocument& a, const FamilyDocument& b) {
  EXPECT_EQ(a.mode, b.mode);
  EXPECT_EQ(a.shape, b.shape);
  EXPECT_EQ(a.k, b.k);
  EXPECT_EQ(a.epsilon, b.epsilon);
  EXPECT_EQ(a.augmented, b.augmented);
  ASSERT_EQ(a.copies.size(), b.copies.size());
  for (std::size_t i = 0; i < a.copies.size(); ++i) {
    EXPECT_EQ(a.copies[i].transform(), b.copies[i].transform()) << i;
    EXPECT_EQ(a.copies[i].lineage(), b.copies[i].lineage()) << i;
    EXPECT_EQ(a.copies[i].shape()->segments(), b.copies[i].shape()->segments()) << i;
  }
  EXPECT_EQ(a.probes, b.probes);
  ASSERT_EQ(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    EXPECT_EQ(a.params[i].m, b.params[i].m);
    EXPECT_EQ(a.params[i].outer_epsilon, b.params[i].outer_epsilon);
  }
  ASSERT_EQ(a.tree.has_value(), b.tree.has_value());
  if (a.tree) {
    ASSERT_EQ(a.tree->nodes.size(), b.tree->nodes.size());
    for (std::size_t i = 0; i < a.tree->nodes.size(); ++i) {
      const auto& x = a.tree->nodes[i];
      const auto& y = b.tree->nodes[i];
      EXPECT_EQ(x.interval, y.interval);
      EXPECT_EQ(x.parent, y.parent);
      EXPECT_EQ(x.prefix, y.prefix);
      EXPECT_EQ(x.children, y.children);
      EXPECT_EQ(x.y_lo, y.y_lo);
      EXPECT_EQ(x.y_hi, y.y_hi);
    }
  }
}

}  // namespace

TEST(Document, BuildSizes) {
  EXPECT_EQ(independent(3).copies.size(), 21u);
  EXPECT_EQ(independent(3).probes.size(), 8u);
  EXPECT_EQ(uniform(2).copies.size(), 5u);
  EXPECT_EQ(encoded(2).copies.size(), 5u);
  BuildRequest plain;
  plain.k = 3;
  plain.augment = false;
  EXPECT_EQ(build_document(plain).copies.size(), 13u);
}

TEST(Document, RejectsInconsistentRequests) {
  BuildRequest r;
  r.k = 2;
  r.epsilon = Rat(1, 2);
  EXPECT_THROW(build_document(r), std::invalid_argument);
  r.mode = FamilyMode::uniform;
  r.epsilon.reset();
  EXPECT_THROW(build_document(r), std::invalid_argument);
  r.epsilon = Rat(1, 2);
  r.shape = "cross";
  EXPECT_THROW(build_document(r), std::invalid_argument);
  r.mode = FamilyMode::encoded_frames;
  r.epsilon.reset();
  r.shape = "mirrored-l";
  EXPECT_THROW(build_document(r), std::invalid_argument);
  EXPECT_THROW(parse_mode("diagonal"), std::invalid_argument);
  EXPECT_EQ(parse_mode(to_string(FamilyMode::encoded_frames)), FamilyMode::encoded_frames);
}

TEST(Document, JsonRoundTripIsExact) {
  for (const FamilyDocument& doc : {independent(3), uniform(2), encoded(3)}) {
    const std::string text = family_to_json(doc);
    const FamilyDocument back = family_from_json(text);
    expect_same(doc, back);
    EXPECT_EQ(family_to_json(back), text);
  }
}

TEST(Document, JsonKeepsLargeRationals) {
  const FamilyDocument doc = uniform(3);
  const FamilyDocument back = family_from_json(family_to_json(doc));
  bool long_denominator = false;
  for (const auto& c : back.copies) long_denominator |= c.transform().tx().denominator().get_str().size() > 20;
  EXPECT_TRUE(long_denominator);
  expect_same(doc, back);
}

TEST(Document, VerifyPassesOnBuiltFamilies) {
  for (const FamilyDocument& doc : {independent(3), uniform(2), encoded(2)}) {
    const VerifyReport report = verify_document(doc);
    EXPECT_TRUE(report.ok()) << to_string(doc.mode);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
  const VerifyReport u = verify_document(uniform(2));
  ASSERT_NE(u.find("homothety"), nullptr);
  ASSERT_NE(u.find("contact-laws"), nullptr);
  EXPECT_EQ(verify_document(encoded(2)).find("sizes"), nullptr);
  EXPECT_NE(verify_document(encoded(2)).find("encoding-law"), nullptr);
}

TEST(Document, PerturbedTranslationIsCaught) {
  FamilyDocument doc = independent(3);
  const auto& old = doc.copies[5];
  const XYTransform& t = old.transform();
  doc.copies[5] = TransformedCopy(old.shape(), XYTransform(t.sx(), t.sy(), t.tx() + Rat(1, 1000), t.ty()),
                                  old.lineage());
  const VerifyReport report = verify_document(doc);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.find("rebuild")->passed);
  // Without the rebuild the geometric checks alone still notice.
  EXPECT_FALSE(verify_document(doc, {1, false}).ok());
}

TEST(Document, NonHomothetyIsCaught) {
  FamilyDocument doc = uniform(2);
  const auto& old = doc.copies[0];
  const XYTransform& t = old.transform();
  doc.copies[0] = TransformedCopy(old.shape(), XYTransform(t.sx(), t.sy() * Rat(2), t.tx(), t.ty()), old.lineage());
  const VerifyReport report = verify_document(doc, {1, false});
  EXPECT_FALSE(report.find("homothety")->passed);
}

TEST(Document, DroppedCopyIsCaught) {
  FamilyDocument doc = independent(2);
  doc.copies.pop_back();
  const VerifyReport report = verify_document(doc);
  EXPECT_FALSE(report.find("sizes")->passed);
}

TEST(Document, MalformedJsonIsAFormatError) {
  EXPECT_THROW(family_from_json("{"), FormatError);
  EXPECT_THROW(family_from_json("[]"), FormatError);
  std::string text = family_to_json(independent(1));
  const auto pos = text.find("\"sx\": \"1\"");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_THROW(family_from_json(std::string(text).replace(pos, 9, "\"sx\": \"1/0\"")), FormatError);
  EXPECT_THROW(family_from_json(std::string(text).replace(pos, 9, "\"sx\": 1")), FormatError);
  const auto mode = text.find("\"independent\"");
  EXPECT_THROW(family_from_json(std::string(text).replace(mode, 13, "\"sideways\"")), FormatError);
}

TEST(Dimacs, RoundTrip) {
  const Graph g = intersection_graph(independent(3).copies);
  const std::string text = to_dimacs(g, {"hello"});
  EXPECT_EQ(text.rfind("c hello\np edge 21 ", 0), 0u);
  EXPECT_EQ(parse_dimacs(text), g);
}

TEST(Dimacs, ReportsTheBadLine) {
  auto message = [](const std::string& text) {
    try {
      parse_dimacs(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("p edge 2 1\ne 1 3\n"), "line 2: vertex out of range");
  EXPECT_EQ(message("c x\ne 1 2\n"), "line 2: edge before the problem line");
  EXPECT_EQ(message("p edge 2 1\ne 1 1\n"), "line 2: self-loop");
  EXPECT_EQ(message("p col 2 1\n"), "line 1: expected 'p edge n m'");
  EXPECT_EQ(message("p edge 2 1\nx\n"), "line 2: unknown line type 'x'");
  EXPECT_EQ(message("p edge 2 1\ne 1 2 3\n"), "line 2: trailing token '3'");
  EXPECT_EQ(message("p edge 2 2\ne 1 2\n"), "problem line declares 2 edges, found 1");
  EXPECT_EQ(message(""), "missing problem line");
}

TEST(Svg, DeterministicAndComplete) {
  const FamilyDocument doc = independent(2);
  const std::string a = render_svg(doc);
  EXPECT_EQ(a, render_svg(family_from_json(family_to_json(doc))));
  EXPECT_EQ(a.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 ", 0), 0u);
  std::size_t polylines = 0;
  for (auto p = a.find("<polyline"); p != std::string::npos; p = a.find("<polyline", p + 1)) ++polylines;
  EXPECT_EQ(polylines, doc.copies.size());  // each frame's sides chain into one polyline
  EXPECT_NE(a.find("data-lineage=\"diagonal:1\""), std::string::npos);
  EXPECT_NE(a.find("#d62728"), std::string::npos);
  std::size_t rects = 0;
  for (auto p = a.find("<rect x="); p != std::string::npos; p = a.find("<rect x=", p + 1)) ++rects;
  EXPECT_EQ(rects, 2 * doc.probes.size());
  EXPECT_EQ(render_svg(doc, {800, false}).find("<rect x="), std::string::npos);
}

TEST(JsonOutputs, ColoringAndTranscript) {
  EXPECT_EQ(coloring_to_json({2, 1}), "{\n  \"0\": 2,\n  \"1\": 1\n}\n");
  FirstFitPainter painter;
  const std::string t = transcript_to_json(run_game(1, painter), 1, "firstfit");
  EXPECT_NE(t.find("\"lo\": \"1/3\""), std::string::npos);
  EXPECT_NE(t.find("\"painter\": \"firstfit\""), std::string::npos);
}
