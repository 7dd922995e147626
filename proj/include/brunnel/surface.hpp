#pragma once

// Ordered surface-link descriptors: components, construction history,
// Brunnian bookkeeping, covering lifts, band joins and the Omega ledger.

#include <optional>
#include <string>
#include <vector>

#include "brunnel/diagram.hpp"
#include "json.hpp"

namespace brunnel {

struct SurfaceComponent {
  int genus = 0;
  // Trusted flag: bounds an unknotted disk (set by constructors only).
  bool trivial_disk = false;
  // Trusted flag: the boundary knot is nontrivial.
  bool knotted_boundary = false;
  std::optional<std::string> color;

  // Every component has exactly one boundary circle.
  bool is_disk() const { return genus == 0; }

  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

enum class BrunnianStatus { Brunnian, Unknown, NotBrunnian };
std::string brunnian_status_name(BrunnianStatus s);
BrunnianStatus parse_brunnian_status(const std::string& s);

enum class StepKind { Base, BingDoubleFirst, Band, RimSurgery, Adjoin };
std::string step_kind_name(StepKind k);

struct HistoryStep {
  StepKind kind = StepKind::Base;
  // Base and Adjoin: a name and the components they introduce.
  std::string name;
  std::vector<SurfaceComponent> components;
  BrunnianStatus status = BrunnianStatus::Unknown;
  std::optional<LinkDiagram> boundary;
  std::vector<std::string> assumptions;
  // Band.
  int i = 0;
  int j = 0;
  // RimSurgery.
  std::string curve;
  std::string knot;
  int twist = 1;

  friend bool operator==(const HistoryStep&, const HistoryStep&) = default;
};

class SurfaceLinkDescriptor {
 public:
  // Rebuilds the descriptor by replaying the steps; the first step must be
  // the only Base step.
  static SurfaceLinkDescriptor replay(const std::vector<HistoryStep>& history);

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<SurfaceComponent>& components() const { return components_; }
  const SurfaceComponent& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
  const std::vector<HistoryStep>& history() const { return history_; }
  const std::optional<LinkDiagram>& boundary() const { return boundary_; }
  BrunnianStatus brunnian_status() const { return status_; }
  // Trusted facts the construction relies on, in the order recorded.
  const std::vector<std::string>& assumptions() const { return assumptions_; }

  // Applies one step to a copy.
  SurfaceLinkDescriptor then(const HistoryStep& step) const;

  friend bool operator==(const SurfaceLinkDescriptor&, const SurfaceLinkDescriptor&) = default;

 private:
  std::vector<SurfaceComponent> components_;
  std::vector<HistoryStep> history_;
  std::optional<LinkDiagram> boundary_;
  BrunnianStatus status_ = BrunnianStatus::Unknown;
  std::vector<std::string> assumptions_;
};

HistoryStep base_step(const std::string& name, std::vector<SurfaceComponent> components, BrunnianStatus status,
                      std::optional<LinkDiagram> boundary = std::nullopt, std::vector<std::string> assumptions = {});
HistoryStep bing_double_step();
HistoryStep band_step(int i, int j);
HistoryStep rim_surgery_step(const std::string& curve, const std::string& knot, int twist = 1);
HistoryStep adjoin_step(const SurfaceLinkDescriptor& other);

// Named starting points: disk (nontrivial-disk), trivial-disk, D1, D2,
// disk-genus1, genus1.
SurfaceLinkDescriptor base_descriptor(const std::string& name);
std::vector<std::string> base_names();

// Requires component 0 to be a disk. Components 0 and 1 become trivial
// disks, the rest shift by one. Brunnian stays Brunnian, anything else
// becomes Unknown. A boundary diagram is Bing doubled on component 0.
SurfaceLinkDescriptor bing_double_first(const SurfaceLinkDescriptor& s);
SurfaceLinkDescriptor iterate_bing_double_first(const SurfaceLinkDescriptor& s, int n);

// Merges components i != j with a boundary band at index min(i, j); genus
// adds. The status becomes Unknown.
SurfaceLinkDescriptor band_join(const SurfaceLinkDescriptor& s, int i, int j);

SurfaceLinkDescriptor rim_surgery(const SurfaceLinkDescriptor& s, const std::string& curve, const std::string& knot,
                                  int twist = 1);

// Split union with the components of other appended. The status becomes
// Unknown.
SurfaceLinkDescriptor adjoin(const SurfaceLinkDescriptor& s, const SurfaceLinkDescriptor& other);

// Boundary-level liftability for the k-fold branched cover along component
// 0: every other boundary component links it a multiple of k times. True
// when no boundary diagram is attached (recorded as an assumption).
bool liftable(const SurfaceLinkDescriptor& s, int k);

struct CoverResult {
  SurfaceLinkDescriptor descriptor;
  // Two split copies of the previous boundary with their first components
  // band summed.
  std::optional<LinkDiagram> cover_boundary;
};

// Inverts a final BingDoubleFirst step (k = 2 only).
CoverResult covering_lift(const SurfaceLinkDescriptor& s, int k);

class OmegaValue {
 public:
  OmegaValue() = default;
  static OmegaValue finite(int v);
  static OmegaValue bottom();

  bool is_bottom() const { return bottom_; }
  int value() const;
  std::string to_string() const;

  friend OmegaValue operator+(const OmegaValue& a, const OmegaValue& b);
  friend bool operator==(const OmegaValue&, const OmegaValue&) = default;

 private:
  bool bottom_ = false;
  // 0 when bottom_ is set.
  int value_ = 0;
};

// Bottom stays bottom; finite values increase by the factor count.
OmegaValue rim_surgery_omega(const OmegaValue& omega, int j_factor_count);

// Factor count of the Alexander polynomial of a catalog knot.
int knot_factor_count(const std::string& knot);

// Omega of s from the Omega of its base, through its rim-surgery steps.
OmegaValue omega_of(const SurfaceLinkDescriptor& s, const OmegaValue& base);

enum class Verdict { Same, DistinguishedByOmega, DistinguishedUpToUnits, Undistinguished };
std::string verdict_name(Verdict v);

struct DistinctnessLedger {
  std::vector<std::string> labels;
  std::vector<OmegaValue> omega;
  std::vector<std::vector<Verdict>> verdicts;
};

// Family members must agree once rim-surgery steps are removed.
DistinctnessLedger distinctness_ledger(const std::vector<SurfaceLinkDescriptor>& family, const OmegaValue& base);

nlohmann::json component_to_json(const SurfaceComponent& c);
SurfaceComponent component_from_json(const nlohmann::json& j);
nlohmann::json descriptor_to_json(const SurfaceLinkDescriptor& s);
// Replays the stored history and checks it against the stored fields.
SurfaceLinkDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json ledger_to_json(const DistinctnessLedger& l);
nlohmann::json omega_to_json(const OmegaValue& o);

}  // namespace brunnel
