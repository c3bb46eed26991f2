#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "surftrace/layout.hpp"
#include "surftrace/matchenum.hpp"
#include "surftrace/words.hpp"

namespace surftrace {

enum class EdgeKind : uint8_t { WInterval, WIntermediate, RInterval, RinvInterval, PiInterval, SigmaArc, TauArc };

// Directed edge u -> v of the trivalent graph. Vertices are interval endpoints.
struct SurfaceEdge {
  EdgeKind kind;
  int u, v;
  int label;  // generator, or -1 for connectors
};

enum class LoopType : uint8_t { W, R, Rinv, Mixed };

struct BoundaryLoop {
  LoopType type;
  std::vector<int> intervals;  // in traversal order
  std::vector<Letter> reading;  // letters read along the loop, unreduced
  int power = 0;  // |p| for R / Rinv loops reading a rotation of R^{+-p}; 0 otherwise
};

struct DecoratedSurface {
  int g = 0, k = 0, l = 0;
  MatchLayout layout;
  MatchingDatum datum;
  int num_vertices = 0;
  std::vector<SurfaceEdge> edges;
  std::vector<std::vector<int>> type1;  // disc boundaries as edge cycles
  std::vector<std::vector<int>> type2;
  std::vector<BoundaryLoop> loops;
  std::vector<int> loop_of_interval;
  int chi_graph = 0;
  int chi = 0;
  int components = 0;
  int genus = 0;
  bool orientable = false;
};

DecoratedSurface build_surface(const MatchingDatum& d, const Word& w);
DecoratedSurface build_surface(const MatchingDatum& d, const MatchLayout& layout);

enum class ArcClass : uint8_t { WR, RR, WW };

struct CollapsedArc {
  int label;
  int plus_interval, minus_interval;
  ArcClass cls;
  int side_disc[2];  // type-I discs on the sigma side and the tau side
};

struct CollapsedDisc {
  std::vector<int> arc_sides;  // arc indices, one per side met
  int w_segments = 0;
  int r_segments = 0;
};

struct CollapsedSurface {
  int g = 0, k = 0, l = 0;
  std::vector<BoundaryLoop> loops;
  std::vector<CollapsedArc> arcs;
  std::vector<CollapsedDisc> discs;
  int chi = 0;
  int n_wr = 0, n_rr = 0, n_ww = 0;
};

// Requires every type-II disc to be a rectangle; verifies P1-P4 and the arc census and throws
// InternalError on any failure.
CollapsedSurface collapse(const DecoratedSurface& s);

struct Piece {
  std::vector<int> discs;
  std::vector<int> wr_arcs;
  int e_count = 0;
  int he_count = 0;
  int chi = 0;
};

std::vector<Piece> piece_decomposition(const CollapsedSurface& s);
bool piece_inequality_holds(const Piece& p, int g);

int max_chi_over_matchstar(const Word& w, int k, int l, const MatchOptions& opts = {});

struct ChiCheckRecord {
  uint64_t index;
  int chi;
  int discs;
  std::vector<int> boundary_powers;  // signed: +p for R-loops, -p for R^{-1}-loops
};

struct ChiCheckReport {
  uint64_t count = 0;
  int max_chi = kDegNegInf;
  std::map<int, uint64_t> chi_histogram;
  uint64_t chi_bound_violations = 0;   // chi > -(k+l)
  uint64_t piece_violations = 0;
  uint64_t prepiece_census_violations = 0;
  uint64_t pieces = 0;
  std::vector<std::string> dumps;      // first few counterexamples
};

struct ChiCheckOptions {
  MatchOptions match;
  std::string dump_dir;  // empty: keep dumps in memory only
  size_t max_dumps = 8;
  std::function<void(const ChiCheckRecord&)> on_record;
};

// Builds and collapses every MATCH* surface and checks the chi bound and the piece inequality.
ChiCheckReport chi_check(const Word& w, int k, int l, const ChiCheckOptions& opts = {});

std::string datum_to_json(const MatchingDatum& d, const Word& w);

}  // namespace surftrace
