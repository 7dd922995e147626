#include <algorithm>

#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/satellite.hpp"
#include "brunnel/surface.hpp"

namespace brunnel {

std::string brunnian_status_name(BrunnianStatus s) {
  switch (s) {
    case BrunnianStatus::Brunnian:
      return "brunnian";
    case BrunnianStatus::Unknown:
      return "unknown";
    case BrunnianStatus::NotBrunnian:
      return "not-brunnian";
  }
  return "unknown";
}

BrunnianStatus parse_brunnian_status(const std::string& s) {
  for (auto v : {BrunnianStatus::Brunnian, BrunnianStatus::Unknown, BrunnianStatus::NotBrunnian}) {
    if (brunnian_status_name(v) == s) return v;
  }
  throw ValidationError("unknown Brunnian status '" + s + "'");
}

std::string step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Base:
      return "base";
    case StepKind::BingDoubleFirst:
      return "bing-double-first";
    case StepKind::Band:
      return "band";
    case StepKind::RimSurgery:
      return "rim-surgery";
    case StepKind::Adjoin:
      return "adjoin";
  }
  return "base";
}

HistoryStep base_step(const std::string& name, std::vector<SurfaceComponent> components, BrunnianStatus status,
                      std::optional<LinkDiagram> boundary, std::vector<std::string> assumptions) {
  HistoryStep s;
  s.kind = StepKind::Base;
  s.name = name;
  s.components = std::move(components);
  s.status = status;
  s.boundary = std::move(boundary);
  s.assumptions = std::move(assumptions);
  return s;
}

HistoryStep bing_double_step() {
  HistoryStep s;
  s.kind = StepKind::BingDoubleFirst;
  return s;
}

HistoryStep band_step(int i, int j) {
  HistoryStep s;
  s.kind = StepKind::Band;
  s.i = i;
  s.j = j;
  return s;
}

HistoryStep rim_surgery_step(const std::string& curve, const std::string& knot, int twist) {
  HistoryStep s;
  s.kind = StepKind::RimSurgery;
  s.curve = curve;
  s.knot = knot;
  s.twist = twist;
  return s;
}

HistoryStep adjoin_step(const SurfaceLinkDescriptor& other) {
  HistoryStep s;
  s.kind = StepKind::Adjoin;
  s.name = other.history().empty() ? "" : other.history().front().name;
  s.components = other.components();
  s.status = other.brunnian_status();
  s.boundary = other.boundary();
  s.assumptions = other.assumptions();
  return s;
}

namespace {

void check_index(const SurfaceLinkDescriptor& s, int i) {
  if (i < 0 || i >= s.component_count()) {
    throw PreconditionError("component index " + std::to_string(i) + " out of range (" +
                            std::to_string(s.component_count()) + " components)");
  }
}

}  // namespace

SurfaceLinkDescriptor SurfaceLinkDescriptor::then(const HistoryStep& step) const {
  SurfaceLinkDescriptor out = *this;
  const bool fresh = history_.empty();
  if (fresh != (step.kind == StepKind::Base)) {
    throw PreconditionError(fresh ? "history must start with a base step" : "base step after the start of history");
  }
  switch (step.kind) {
    case StepKind::Base: {
      if (step.components.empty()) throw ValidationError("base '" + step.name + "' has no components");
      if (step.boundary && step.boundary->component_count() != static_cast<int>(step.components.size())) {
        throw ValidationError("base '" + step.name + "' boundary has " +
                              std::to_string(step.boundary->component_count()) + " components, expected " +
                              std::to_string(step.components.size()));
      }
      for (const auto& c : step.components) {
        if (c.genus < 0) throw ValidationError("negative genus in base '" + step.name + "'");
        if (c.trivial_disk && !c.is_disk()) throw ValidationError("trivial disk flag on a surface of positive genus");
      }
      out.components_ = step.components;
      out.status_ = step.status;
      out.boundary_ = step.boundary;
      out.assumptions_ = step.assumptions;
      break;
    }
    case StepKind::BingDoubleFirst: {
      if (!components_.at(0).is_disk()) {
        throw PreconditionError("Bing doubling needs component 0 to be a disk (genus " +
                                std::to_string(components_[0].genus) + ")");
      }
      SurfaceComponent d;
      d.trivial_disk = true;
      out.components_.assign(2, d);
      out.components_.insert(out.components_.end(), components_.begin() + 1, components_.end());
      out.status_ = status_ == BrunnianStatus::Brunnian ? BrunnianStatus::Brunnian : BrunnianStatus::Unknown;
      if (boundary_) out.boundary_ = bing_double(*boundary_, 0);
      break;
    }
    case StepKind::Band: {
      check_index(*this, step.i);
      check_index(*this, step.j);
      if (step.i == step.j) throw PreconditionError("band needs two different components");
      const int lo = std::min(step.i, step.j), hi = std::max(step.i, step.j);
      const auto& a = components_[static_cast<std::size_t>(lo)];
      const auto& b = components_[static_cast<std::size_t>(hi)];
      SurfaceComponent m;
      m.genus = a.genus + b.genus;
      m.knotted_boundary = a.knotted_boundary || b.knotted_boundary;
      if (a.color == b.color) m.color = a.color;
      out.components_[static_cast<std::size_t>(lo)] = m;
      out.components_.erase(out.components_.begin() + hi);
      out.status_ = BrunnianStatus::Unknown;
      if (boundary_) out.boundary_ = band_sum(*boundary_, step.i, step.j);
      break;
    }
    case StepKind::RimSurgery: {
      if (!catalog_has(step.knot)) throw ValidationError("rim surgery knot '" + step.knot + "' is not in the catalog");
      if (step.curve.empty()) throw ValidationError("rim surgery needs a curve tag");
      out.assumptions_.push_back("curve " + step.curve + " bounds a framed disk in the complement of the surface");
      break;
    }
    case StepKind::Adjoin: {
      if (step.components.empty()) throw ValidationError("adjoin with no components");
      out.components_.insert(out.components_.end(), step.components.begin(), step.components.end());
      out.status_ = BrunnianStatus::Unknown;
      if (boundary_ && step.boundary) {
        out.boundary_ = split_union(*boundary_, *step.boundary);
      } else {
        out.boundary_.reset();
      }
      out.assumptions_.insert(out.assumptions_.end(), step.assumptions.begin(), step.assumptions.end());
      break;
    }
  }
  out.history_.push_back(step);
  return out;
}

SurfaceLinkDescriptor SurfaceLinkDescriptor::replay(const std::vector<HistoryStep>& history) {
  if (history.empty()) throw PreconditionError("empty history");
  SurfaceLinkDescriptor s;
  for (const auto& step : history) s = s.then(step);
  return s;
}

SurfaceLinkDescriptor bing_double_first(const SurfaceLinkDescriptor& s) { return s.then(bing_double_step()); }

SurfaceLinkDescriptor iterate_bing_double_first(const SurfaceLinkDescriptor& s, int n) {
  if (n < 0) throw PreconditionError("negative iteration count");
  SurfaceLinkDescriptor out = s;
  for (int i = 0; i < n; ++i) out = bing_double_first(out);
  return out;
}

SurfaceLinkDescriptor band_join(const SurfaceLinkDescriptor& s, int i, int j) { return s.then(band_step(i, j)); }

SurfaceLinkDescriptor rim_surgery(const SurfaceLinkDescriptor& s, const std::string& curve, const std::string& knot,
                                  int twist) {
  return s.then(rim_surgery_step(curve, knot, twist));
}

SurfaceLinkDescriptor adjoin(const SurfaceLinkDescriptor& s, const SurfaceLinkDescriptor& other) {
  return s.then(adjoin_step(other));
}

bool liftable(const SurfaceLinkDescriptor& s, int k) {
  if (k < 1) throw PreconditionError("cover degree must be positive");
  if (!s.boundary()) return true;
  IntMatrix lk = linking_matrix(*s.boundary());
  for (std::size_t i = 1; i < lk.size(); ++i) {
    if (lk[i][0] % k != 0) return false;
  }
  return true;
}

CoverResult covering_lift(const SurfaceLinkDescriptor& s, int k) {
  if (k < 1) throw PreconditionError("cover degree must be positive");
  if (s.history().empty() || s.history().back().kind != StepKind::BingDoubleFirst) {
    throw PreconditionError("covering lift needs a history ending in bing-double-first");
  }
  if (!liftable(s, k)) {
    throw ValidationError("liftability fails: some boundary component links component 0 a number of times not divisible by " +
                          std::to_string(k));
  }
  if (k != 2) throw UnsupportedError("covering lift is implemented for the 2-fold cover only");
  std::vector<HistoryStep> prefix(s.history().begin(), s.history().end() - 1);
  CoverResult out{SurfaceLinkDescriptor::replay(prefix), std::nullopt};
  if (const auto& b = out.descriptor.boundary()) {
    out.cover_boundary = band_sum(split_union(*b, *b), 0, b->component_count());
  }
  return out;
}

namespace {

SurfaceComponent knotted_disk() {
  SurfaceComponent c;
  c.knotted_boundary = true;
  return c;
}

}  // namespace

std::vector<std::string> base_names() { return {"disk", "nontrivial-disk", "trivial-disk", "D1", "D2", "disk-genus1", "genus1"}; }

SurfaceLinkDescriptor base_descriptor(const std::string& name) {
  SurfaceLinkDescriptor s;
  if (name == "disk" || name == "nontrivial-disk") {
    return s.then(base_step(name, {knotted_disk()}, BrunnianStatus::Brunnian, std::nullopt,
                            {"the disk boundary is a nontrivial knot"}));
  }
  if (name == "trivial-disk") {
    SurfaceComponent c;
    c.trivial_disk = true;
    return s.then(base_step(name, {c}, BrunnianStatus::Brunnian, LinkDiagram::unknot()));
  }
  if (name == "D1" || name == "D2") {
    return s.then(base_step(name, {knotted_disk()}, BrunnianStatus::Brunnian, catalog_diagram("slice-k"),
                            {"D1 and D2 share the boundary knot K", "D1 and D2 are topologically isotopic rel boundary",
                             "D1 and D2 are not smoothly isotopic rel boundary"}));
  }
  if (name == "disk-genus1") {
    SurfaceComponent g = knotted_disk();
    g.genus = 1;
    return s.then(base_step(name, {knotted_disk(), g}, BrunnianStatus::Brunnian, std::nullopt,
                            {"the 2-component base is Brunnian"}));
  }
  if (name == "genus1") {
    SurfaceComponent g = knotted_disk();
    g.genus = 1;
    return s.then(base_step(name, {g}, BrunnianStatus::Brunnian));
  }
  throw ValidationError("unknown base '" + name + "'");
}

}  // namespace brunnel
