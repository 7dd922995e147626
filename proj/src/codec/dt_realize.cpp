#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <cstdlib>

#include "brunnel/codec.hpp"
#include "brunnel/errors.hpp"

namespace brunnel {

namespace {

using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                    boost::property<boost::vertex_index_t, int>,
                                    boost::property<boost::edge_index_t, int>>;
using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;

// Crossing k becomes a wheel: hub 5k and rim 5k+1..5k+4 (a, b, c, d). The
// odd-labelled strand enters at a and leaves at c, the even one enters at b
// and leaves at d, so the rim order around the hub tells which way the even
// strand crosses the odd one.
constexpr int kA = 1, kB = 2, kC = 3, kD = 4;

}  // namespace

LinkDiagram dt_to_diagram(const DtCode& code) {
  if (code.crossing_count == 0 || code.components.empty()) {
    throw PreconditionError("cannot reconstruct a diagram from an empty DT code");
  }
  if (code.components.size() != 1) throw UnsupportedError("DT reconstruction is implemented for knots only");
  const int n = code.crossing_count;
  const auto& entries = code.components[0];

  std::vector<int> crossing_of(static_cast<std::size_t>(2 * n));
  std::vector<char> over(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    int e = entries[static_cast<std::size_t>(k)];
    int odd_index = 2 * k;
    int even_index = std::abs(e) - 1;
    crossing_of[static_cast<std::size_t>(odd_index)] = k;
    crossing_of[static_cast<std::size_t>(even_index)] = k;
    over[static_cast<std::size_t>(odd_index)] = e > 0;
    over[static_cast<std::size_t>(even_index)] = e < 0;
  }

  Graph g(static_cast<std::size_t>(5 * n + 2 * n));
  auto add = [&](int u, int v) { boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g); };
  for (int k = 0; k < n; ++k) {
    int h = 5 * k;
    for (int r = 1; r <= 4; ++r) add(h, h + r);
    add(h + kA, h + kB);
    add(h + kB, h + kC);
    add(h + kC, h + kD);
    add(h + kD, h + kA);
  }
  for (int t = 0; t < 2 * n; ++t) {
    int u = (t + 1) % (2 * n);
    bool t_odd_label = t % 2 == 0;
    bool u_odd_label = u % 2 == 0;
    int out_port = 5 * crossing_of[static_cast<std::size_t>(t)] + (t_odd_label ? kC : kD);
    int in_port = 5 * crossing_of[static_cast<std::size_t>(u)] + (u_odd_label ? kA : kB);
    int mid = 5 * n + t;
    add(out_port, mid);
    add(mid, in_port);
  }
  {
    int i = 0;
    boost::graph_traits<Graph>::edge_iterator ei, ee;
    for (boost::tie(ei, ee) = boost::edges(g); ei != ee; ++ei) boost::put(boost::edge_index, g, *ei, i++);
  }

  std::vector<std::vector<EdgeDesc>> storage(boost::num_vertices(g));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                                    boost::boyer_myrvold_params::embedding = embedding);
  if (!planar) throw ValidationError("DT code is not realizable as a planar diagram");

  // Orientation of the rim around each hub: +1 for a, b, c, d in listed
  // cyclic order, -1 for a, d, c, b.
  std::vector<int> orient(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const int hub = 5 * k;
    std::vector<int> rim;
    for (const auto& e : storage[static_cast<std::size_t>(hub)]) {
      int s = static_cast<int>(boost::source(e, g));
      int t = static_cast<int>(boost::target(e, g));
      rim.push_back((s == hub ? t : s) - hub);
    }
    if (rim.size() != 4) throw Error("malformed crossing gadget");
    std::size_t ia = 0;
    while (rim[ia] != kA) ++ia;
    orient[static_cast<std::size_t>(k)] = rim[(ia + 1) % 4] == kB ? 1 : -1;
  }
  const int reflect = orient[0];

  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int h = orient[static_cast<std::size_t>(k)] * reflect;
    bool odd_over = entries[static_cast<std::size_t>(k)] > 0;
    signs[static_cast<std::size_t>(k)] = odd_over ? h : -h;
  }
  std::vector<Visit> comp;
  for (int t = 0; t < 2 * n; ++t) {
    comp.push_back(Visit{crossing_of[static_cast<std::size_t>(t)], over[static_cast<std::size_t>(t)] != 0});
  }
  LinkDiagram d(std::move(signs), {comp});
  d.validate_planar();
  return d;
}

}  // namespace brunnel
