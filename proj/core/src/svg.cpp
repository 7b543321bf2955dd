#include "trifree/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace trifree {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Frame {
  Rect box;
  double scale = 1;
  double margin = 0;
  double height = 0;

  double x(const Rat& v) const { return margin + (v - box.x_lo).to_double() * scale; }
  double y(const Rat& v) const { return height - margin - (v - box.y_lo).to_double() * scale; }
};

}  // namespace

std::string render_svg(const FamilyDocument& doc, const SvgOptions& options) {
  Frame f;
  f.box = family_bbox(doc.copies);
  if (options.probes) {
    for (const auto& p : doc.probes) {
      std::array<Rect, 3> rs{f.box, p.rect, p.root};
      f.box = bounding_box(std::span<const Rect>(rs));
    }
  }
  const double w = f.box.width().to_double();
  const double h = f.box.height().to_double();
  f.margin = options.width * 0.02;
  f.scale = (options.width - 2 * f.margin) / std::max(w, 1e-300);
  f.height = h * f.scale + 2 * f.margin;
  const double stroke = options.width / 1000;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(options.width) << ' ' << num(f.height)
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (options.probes) {
    out << "<g id=\"probes\" stroke-width=\"" << num(stroke / 2) << "\">\n";
    for (std::size_t i = 0; i < doc.probes.size(); ++i) {
      const Probe& p = doc.probes[i];
      auto rect = [&](const Rect& r, const char* attrs) {
        out << "<rect x=\"" << num(f.x(r.x_lo)) << "\" y=\"" << num(f.y(r.y_hi)) << "\" width=\""
            << num(r.width().to_double() * f.scale) << "\" height=\"" << num(r.height().to_double() * f.scale)
            << "\" " << attrs << "/>\n";
      };
      rect(p.root, "fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 2\"");
      rect(p.rect, "fill=\"#3a7bd5\" fill-opacity=\"0.15\" stroke=\"#3a7bd5\"");
    }
    out << "</g>\n";
  }
  out << "<g id=\"copies\" stroke-linecap=\"square\" stroke-width=\"" << num(stroke) << "\">\n";
  for (std::size_t i = 0; i < doc.copies.size(); ++i) {
    const auto& c = doc.copies[i];
    const bool diagonal = c.lineage().kind == LineageKind::diagonal;
    out << "<g data-copy=\"" << i << "\" data-lineage=\"" << c.lineage().str() << "\" stroke=\""
        << (diagonal ? "#d62728" : "#222") << "\">\n";
    // Consecutive segments sharing an endpoint become one polyline.
    std::vector<Point> run;
    auto flush = [&] {
      if (run.empty()) return;
      out << "<polyline fill=\"none\" points=\"";
      for (std::size_t k = 0; k < run.size(); ++k) {
        out << (k ? " " : "") << num(f.x(run[k].x)) << ',' << num(f.y(run[k].y));
      }
      out << "\"/>\n";
      run.clear();
    };
    for (const Seg& s : c.segments()) {
      const Point a = s.start();
      const Point b = s.end();
      if (!run.empty() && run.back() == a) {
        run.push_back(b);
      } else if (!run.empty() && run.back() == b) {
        run.push_back(a);
      } else {
        flush();
        run = {a, b};
      }
    }
    flush();
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace trifree
