#include <map>
#include <mutex>

#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/surface.hpp"

namespace brunnel {

OmegaValue OmegaValue::finite(int v) {
  if (v < 0) throw PreconditionError("Omega values are nonnegative");
  OmegaValue o;
  o.value_ = v;
  return o;
}

OmegaValue OmegaValue::bottom() {
  OmegaValue o;
  o.bottom_ = true;
  return o;
}

int OmegaValue::value() const {
  if (bottom_) throw PreconditionError("the bottom Omega value has no integer value");
  return value_;
}

std::string OmegaValue::to_string() const { return bottom_ ? "-inf" : std::to_string(value_); }

OmegaValue operator+(const OmegaValue& a, const OmegaValue& b) {
  if (a.is_bottom() || b.is_bottom()) return OmegaValue::bottom();
  return OmegaValue::finite(a.value() + b.value());
}

OmegaValue rim_surgery_omega(const OmegaValue& omega, int j_factor_count) {
  return omega + OmegaValue::finite(j_factor_count);
}

int knot_factor_count(const std::string& knot) {
  static std::mutex mu;
  static std::map<std::string, int> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(knot);
    if (it != cache.end()) return it->second;
  }
  int n = factor_count(alexander_of_knot(catalog_diagram(knot)));
  std::lock_guard<std::mutex> lock(mu);
  cache[knot] = n;
  return n;
}

OmegaValue omega_of(const SurfaceLinkDescriptor& s, const OmegaValue& base) {
  OmegaValue o = base;
  for (const auto& step : s.history()) {
    if (step.kind != StepKind::RimSurgery) continue;
    if (step.twist != 1) throw UnsupportedError("Omega is tracked through 1-twist rim surgery only");
    o = rim_surgery_omega(o, knot_factor_count(step.knot));
  }
  return o;
}

}  // namespace brunnel
