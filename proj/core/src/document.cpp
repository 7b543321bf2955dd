#include "trifree/document.hpp"

#include "trifree/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace trifree {

std::string to_string(FamilyMode mode) {
  switch (mode) {
    case FamilyMode::independent:
      return "independent";
    case FamilyMode::uniform:
      return "uniform";
    case FamilyMode::encoded_frames:
      return "encoded-frames";
  }
  return "unknown";
}

FamilyMode parse_mode(std::string_view text) {
  if (text == "independent") return FamilyMode::independent;
  if (text == "uniform") return FamilyMode::uniform;
  if (text == "encoded-frames") return FamilyMode::encoded_frames;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "'");
}

std::shared_ptr<const RectilinearShape> document_shape(FamilyMode mode, std::string_view shape) {
  const CatalogEntry& entry = catalog_entry(shape);
  switch (mode) {
    case FamilyMode::independent:
      return entry.shape;
    case FamilyMode::uniform:
      if (!entry.anchored) throw std::invalid_argument("shape '" + std::string(shape) + "' is not anchored");
      return entry.anchored->shape;
    case FamilyMode::encoded_frames:
      if (shape != "frame") throw std::invalid_argument("encoded families use the frame shape");
      return entry.shape;
  }
  throw std::invalid_argument("unknown mode");
}

namespace {

struct Built {
  FamilyDocument doc;
  std::vector<ContactLawCheck> audits;
};

Built build_with_audits(const BuildRequest& request) {
  if (request.k < 1) throw std::invalid_argument("k must be at least 1");
  if (request.epsilon.has_value() != (request.mode == FamilyMode::uniform)) {
    throw std::invalid_argument("epsilon is required in uniform mode and only there");
  }
  Built out;
  FamilyDocument& doc = out.doc;
  doc.mode = request.mode;
  doc.shape = request.shape;
  doc.k = request.k;
  doc.epsilon = request.epsilon;
  doc.augmented = request.augment;
  document_shape(request.mode, request.shape);

  switch (request.mode) {
    case FamilyMode::independent: {
      ConstructionLevel level = build(request.k, catalog_entry(request.shape));
      doc.copies = request.augment ? augment(level) : level.family;
      doc.probes = level.probes;
      out.audits = std::move(level.audits);
      if (request.augment) {
        const auto extra = augmentation_audit(level, doc.copies);
        out.audits.insert(out.audits.end(), extra.begin(), extra.end());
      }
      break;
    }
    case FamilyMode::uniform: {
      UniformLevel level = build_uniform(request.k, *request.epsilon, catalog_entry(request.shape).anchored);
      doc.copies = request.augment ? augment_uniform(level) : level.family;
      doc.probes = level.probes;
      doc.params = level.params;
      out.audits = std::move(level.audits);
      if (request.augment) {
        const auto extra = uniform_augmentation_audit(level, doc.copies);
        out.audits.insert(out.audits.end(), extra.begin(), extra.end());
      }
      break;
    }
    case FamilyMode::encoded_frames: {
      StrategyTree tree = expand_tree(request.k, request.budget, request.tree_limit);
      doc.copies = encode(tree).copies;
      doc.tree = std::move(tree);
      doc.augmented = false;
      break;
    }
  }
  return out;
}

bool same_copies(std::span<const TransformedCopy> a, std::span<const TransformedCopy> b, std::string& detail) {
  if (a.size() != b.size()) {
    detail = "copy count " + std::to_string(a.size()) + " vs rebuilt " + std::to_string(b.size());
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].transform() == b[i].transform()) || !(a[i].lineage() == b[i].lineage())) {
      detail = "copy " + std::to_string(i) + " differs from the rebuilt family";
      return false;
    }
  }
  return true;
}

}  // namespace

FamilyDocument build_document(const BuildRequest& request) { return build_with_audits(request).doc; }

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify_document(const FamilyDocument& doc, const VerifyOptions& options) {
  VerifyReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  std::shared_ptr<const RectilinearShape> shape;
  try {
    shape = document_shape(doc.mode, doc.shape);
  } catch (const std::exception& e) {
    add("shape", false, e.what());
    return report;
  }
  bool shapes_ok = !doc.copies.empty();
  for (const auto& c : doc.copies) shapes_ok = shapes_ok && c.shape()->segments() == shape->segments();
  add("shape", shapes_ok, shapes_ok ? "" : "empty family or copies of another shape");

  const Graph g = intersection_graph(doc.copies, options.jobs);
  const auto triangle = find_triangle(g);
  add("triangle-free", !triangle.has_value(),
      triangle ? "copies " + std::to_string((*triangle)[0]) + ", " + std::to_string((*triangle)[1]) + ", " +
                     std::to_string((*triangle)[2])
               : "");

  if (doc.mode != FamilyMode::encoded_frames) {
    const SizeCounts counts = size_formulas(doc.k);
    const std::size_t s = counts.s.get_ui();
    const std::size_t p = counts.p.get_ui();
    const std::size_t expected = doc.augmented ? s + p : s;
    const bool sizes = doc.copies.size() == expected && doc.probes.size() == p;
    add("sizes", sizes,
        "copies " + std::to_string(doc.copies.size()) + " (expected " + std::to_string(expected) + "), probes " +
            std::to_string(doc.probes.size()) + " (expected " + std::to_string(p) + ")");

    if (sizes) {
      const auto base = std::span(doc.copies).first(s);
      ProbeCheckOptions probe_options;
      if (doc.mode == FamilyMode::uniform && doc.epsilon) probe_options = {true, *doc.epsilon};
      const auto violations = check_probes(base, doc.probes, probe_options);
      add("probes", violations.empty(),
          violations.empty() ? ""
                             : "probe " + std::to_string(violations.front().probe) + " " +
                                   to_string(violations.front().condition) + ": " + violations.front().detail);

      if (doc.augmented) {
        bool diag_ok = true;
        std::string detail;
        for (std::size_t j = 0; j < p && diag_ok; ++j) {
          const Rect region =
              doc.mode == FamilyMode::independent ? split_probe(doc.probes[j]).upper : doc.probes[j].rect;
          const auto expected_set = pierced_by(base, region);
          if (neighbors_in_family(doc.copies, s + j) != expected_set) {
            diag_ok = false;
            detail = "diagonal " + std::to_string(j) + " meets other copies than its probe's pierced set";
          }
        }
        add("diagonals", diag_ok, detail);
      }
    }

    if (doc.mode == FamilyMode::uniform) {
      const bool homothets = std::all_of(doc.copies.begin(), doc.copies.end(),
                                         [](const TransformedCopy& c) { return c.transform().is_homothety(); });
      add("homothety", homothets, homothets ? "" : "a copy has sx != sy");
    }
  } else {
    if (!doc.tree) {
      add("encoding-law", false, "document has no strategy tree");
    } else if (doc.tree->nodes.size() != doc.copies.size()) {
      add("encoding-law", false, "frame count differs from the tree's node count");
    } else {
      FrameFamily family;
      family.copies = doc.copies;
      const auto violations = check_encoding_law(*doc.tree, family);
      add("encoding-law", violations.empty(),
          violations.empty() ? ""
                             : "frames " + std::to_string(violations.front().a) + " and " +
                                   std::to_string(violations.front().b));
    }
  }

  if (options.rebuild) {
    BuildRequest request;
    request.mode = doc.mode;
    request.shape = doc.shape;
    request.k = doc.k;
    request.epsilon = doc.epsilon;
    request.augment = doc.augmented;
    if (doc.tree) request.budget = doc.tree->budget;
    request.tree_limit = std::max(kDefaultTreeLimit, doc.k);
    try {
      const Built rebuilt = build_with_audits(request);
      std::string detail;
      bool same = same_copies(doc.copies, rebuilt.doc.copies, detail);
      if (same && doc.probes != rebuilt.doc.probes) {
        same = false;
        detail = "probes differ from the rebuilt family";
      }
      add("rebuild", same, detail);
      if (doc.mode != FamilyMode::encoded_frames) {
        const auto bad = std::find_if(rebuilt.audits.begin(), rebuilt.audits.end(),
                                      [](const ContactLawCheck& a) { return !a.holds(); });
        add("contact-laws", bad == rebuilt.audits.end(),
            bad == rebuilt.audits.end()
                ? std::to_string(rebuilt.audits.size()) + " checks"
                : to_string(bad->law) + " at level " + std::to_string(bad->level));
      }
    } catch (const std::exception& e) {
      add("rebuild", false, e.what());
    }
  }
  return report;
}

}  // namespace trifree
