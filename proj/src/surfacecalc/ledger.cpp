#include "brunnel/alexpoly.hpp"
#include "brunnel/catalog.hpp"
#include "brunnel/errors.hpp"
#include "brunnel/surface.hpp"

namespace brunnel {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Same:
      return "same";
    case Verdict::DistinguishedByOmega:
      return "distinguished-by-omega";
    case Verdict::DistinguishedUpToUnits:
      return "distinguished-up-to-units";
    case Verdict::Undistinguished:
      return "undistinguished";
  }
  return "undistinguished";
}

namespace {

std::vector<HistoryStep> without_rim_surgery(const SurfaceLinkDescriptor& s) {
  std::vector<HistoryStep> out;
  for (const auto& step : s.history()) {
    if (step.kind != StepKind::RimSurgery) out.push_back(step);
  }
  return out;
}

}  // namespace

DistinctnessLedger distinctness_ledger(const std::vector<SurfaceLinkDescriptor>& family, const OmegaValue& base) {
  DistinctnessLedger out;
  if (family.empty()) return out;
  const auto common = without_rim_surgery(family.front());
  std::vector<LaurentPolynomial> delta;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (without_rim_surgery(family[i]) != common) {
      throw PreconditionError("family member " + std::to_string(i) + " differs from member 0 outside rim surgery");
    }
    LaurentPolynomial d = LaurentPolynomial::constant(1);
    std::string label;
    for (const auto& step : family[i].history()) {
      if (step.kind != StepKind::RimSurgery) continue;
      d = multiply(d, alexander_of_knot(catalog_diagram(step.knot)));
      label += (label.empty() ? "" : "+") + step.knot;
    }
    out.labels.push_back(label.empty() ? "none" : label);
    out.omega.push_back(omega_of(family[i], base));
    delta.push_back(d);
  }
  const std::size_t n = family.size();
  out.verdicts.assign(n, std::vector<Verdict>(n, Verdict::Same));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(out.omega[i] == out.omega[j])) {
        out.verdicts[i][j] = Verdict::DistinguishedByOmega;
      } else if (!equivalent_up_to_units(delta[i], delta[j])) {
        out.verdicts[i][j] = Verdict::DistinguishedUpToUnits;
      } else {
        out.verdicts[i][j] = Verdict::Undistinguished;
      }
    }
  }
  return out;
}

}  // namespace brunnel
