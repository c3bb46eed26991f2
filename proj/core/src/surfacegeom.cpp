#include "surftrace/surfacegeom.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "dsu.hpp"
#include "surftrace/errors.hpp"

namespace surftrace {

namespace {

bool is_connector(EdgeKind k) { return k == EdgeKind::WIntermediate || k == EdgeKind::PiInterval; }
bool is_arc(EdgeKind k) { return k == EdgeKind::SigmaArc || k == EdgeKind::TauArc; }

bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t n = a.size();
  for (size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
    if (ok) return true;
  }
  return false;
}

std::vector<Letter> power_letters(const Word& r, int p) {
  std::vector<Letter> out;
  for (int i = 0; i < p; ++i) out.insert(out.end(), r.letters().begin(), r.letters().end());
  return out;
}

struct Incidence {
  std::vector<int> intv, conn, arc;  // edge index per vertex
};

int other_end(const SurfaceEdge& e, int v) { return e.u == v ? e.v : e.u; }

// Alternates between the two edge classes starting with `first` at v0.
std::vector<int> walk_cycle(const std::vector<SurfaceEdge>& edges, const std::vector<int>& first,
                            const std::vector<int>& second, int v0, std::vector<char>& seen) {
  std::vector<int> cyc;
  int v = v0;
  do {
    seen[v] = 1;
    int e1 = first[v];
    cyc.push_back(e1);
    v = other_end(edges[e1], v);
    seen[v] = 1;
    int e2 = second[v];
    cyc.push_back(e2);
    v = other_end(edges[e2], v);
  } while (v != v0);
  return cyc;
}

// Orients the discs so shared arcs are traversed oppositely, then checks that every boundary loop
// inherits a single direction.
bool check_orientation(const DecoratedSurface& s) {
  const int ne = static_cast<int>(s.edges.size());
  std::vector<std::vector<std::pair<int, int>>> edge_disc(ne);  // (disc, traversal sign)
  std::vector<const std::vector<int>*> discs;
  for (const auto& c : s.type1) discs.push_back(&c);
  for (const auto& c : s.type2) discs.push_back(&c);
  for (size_t d = 0; d < discs.size(); ++d) {
    const auto& cyc = *discs[d];
    // vertex shared by consecutive edges fixes the traversal direction
    for (size_t i = 0; i < cyc.size(); ++i) {
      const auto& e = s.edges[cyc[i]];
      const auto& nx = s.edges[cyc[(i + 1) % cyc.size()]];
      int sign;
      if (e.v == nx.u || e.v == nx.v) sign = +1;
      else if (e.u == nx.u || e.u == nx.v) sign = -1;
      else return false;
      edge_disc[cyc[i]].emplace_back(static_cast<int>(d), sign);
    }
  }
  std::vector<int> orient(discs.size(), 0);
  for (size_t start = 0; start < discs.size(); ++start) {
    if (orient[start]) continue;
    orient[start] = 1;
    std::deque<int> q{static_cast<int>(start)};
    while (!q.empty()) {
      int d = q.front();
      q.pop_front();
      for (int e : *discs[d]) {
        const auto& inc = edge_disc[e];
        if (inc.size() != 2) continue;
        auto [d1, s1] = inc[0];
        auto [d2, s2] = inc[1];
        int od = d1 == d ? d2 : d1;
        int want = -(orient[d] * (d1 == d ? s1 : s2)) * (d1 == d ? s2 : s1);
        if (orient[od] == 0) {
          orient[od] = want;
          q.push_back(od);
        } else if (orient[od] != want) {
          return false;
        }
      }
    }
  }
  // Boundary edges: intervals and connectors lie in exactly one disc. Loops run u -> v.
  int global = 0;
  for (const auto& loop : s.loops) {
    for (int iv : loop.intervals) {
      int e = iv;  // interval edges are numbered by interval index
      const auto& inc = edge_disc[e];
      if (inc.size() != 1) return false;
      int induced = orient[inc[0].first] * inc[0].second;
      if (global == 0) global = induced;
      else if (global != induced) return false;
    }
  }
  return true;
}

std::string loop_type_name(LoopType t) {
  switch (t) {
    case LoopType::W: return "w";
    case LoopType::R: return "R";
    case LoopType::Rinv: return "Rinv";
    case LoopType::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace

std::string datum_to_json(const MatchingDatum& d, const Word& w) {
  auto perm_json = [](const Permutation& p) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < p.degree(); ++i) a.push_back(p(i) + 1);
    return a;
  };
  nlohmann::json j;
  j["g"] = d.g;
  j["k"] = d.k;
  j["l"] = d.l;
  j["word"] = w.to_string();
  for (const auto& s : d.sigma) j["sigma"].push_back(perm_json(s));
  for (const auto& s : d.tau) j["tau"].push_back(perm_json(s));
  for (const auto& s : d.pis) j["pis"].push_back(perm_json(s));
  return j.dump();
}

DecoratedSurface build_surface(const MatchingDatum& d, const Word& w) {
  return build_surface(d, make_layout(w, d.k, d.l));
}

DecoratedSurface build_surface(const MatchingDatum& d, const MatchLayout& lay) {
  const int F = static_cast<int>(lay.plus.size());
  if (d.k != lay.k || d.l != lay.l || static_cast<int>(d.sigma.size()) != F ||
      static_cast<int>(d.tau.size()) != F || static_cast<int>(d.pis.size()) != lay.num_pis())
    throw DomainError("matching datum does not fit the word");
  DecoratedSurface s;
  s.g = lay.g;
  s.k = lay.k;
  s.l = lay.l;
  s.layout = lay;
  s.datum = d;
  const int I = lay.num_intervals();
  s.num_vertices = 2 * I;

  for (int i = 0; i < I; ++i) {
    const auto& iv = lay.intervals[i];
    EdgeKind k = iv.kind == IntervalKind::W ? EdgeKind::WInterval
                 : iv.kind == IntervalKind::R ? EdgeKind::RInterval
                                              : EdgeKind::RinvInterval;
    s.edges.push_back({k, 2 * i, 2 * i + 1, iv.gen});
  }
  for (auto [a, b] : lay.w_links) s.edges.push_back({EdgeKind::WIntermediate, a, b, -1});
  for (int t = 0; t < lay.num_pis(); ++t) {
    const auto& pi = d.pis[t];
    if (pi.degree() != lay.k + lay.l) throw DomainError("junction permutation has a wrong degree");
    for (int m = 0; m < pi.degree(); ++m)
      s.edges.push_back({EdgeKind::PiInterval, lay.pi_cod[t][pi(m)], lay.pi_dom[t][m], -1});
  }
  for (int f = 0; f < F; ++f) {
    if (d.sigma[f].degree() != lay.m[f] || d.tau[f].degree() != lay.m[f])
      throw DomainError("matching datum has a wrong block size");
    for (int i = 0; i < lay.m[f]; ++i) {
      s.edges.push_back({EdgeKind::SigmaArc, MatchLayout::endpoint(lay.plus[f][i], 0),
                         MatchLayout::endpoint(lay.minus[f][d.sigma[f](i)], 1), f});
      s.edges.push_back({EdgeKind::TauArc, MatchLayout::endpoint(lay.plus[f][i], 1),
                         MatchLayout::endpoint(lay.minus[f][d.tau[f](i)], 0), f});
    }
  }

  const int V = s.num_vertices;
  Incidence inc{std::vector<int>(V, -1), std::vector<int>(V, -1), std::vector<int>(V, -1)};
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
    const auto& ed = s.edges[e];
    auto& slot = is_arc(ed.kind) ? inc.arc : is_connector(ed.kind) ? inc.conn : inc.intv;
    for (int v : {ed.u, ed.v}) {
      if (slot[v] != -1) throw InternalError("graph is not trivalent at an interval endpoint");
      slot[v] = e;
    }
  }
  s.chi_graph = V - static_cast<int>(s.edges.size());

  std::vector<char> seen(V, 0);
  for (int v = 0; v < V; ++v)
    if (!seen[v]) s.type1.push_back(walk_cycle(s.edges, inc.conn, inc.arc, v, seen));
  std::fill(seen.begin(), seen.end(), 0);
  for (int v = 0; v < V; ++v)
    if (!seen[v]) s.type2.push_back(walk_cycle(s.edges, inc.intv, inc.arc, v, seen));

  // Boundary loops: interval 0-end -> 1-end, then the connector to the next 0-end.
  Word rel = relator(s.g);
  s.loop_of_interval.assign(I, -1);
  for (int i0 = 0; i0 < I; ++i0) {
    if (s.loop_of_interval[i0] >= 0) continue;
    BoundaryLoop loop;
    int nw = 0, nr = 0, nri = 0;
    int i = i0;
    do {
      s.loop_of_interval[i] = static_cast<int>(s.loops.size());
      loop.intervals.push_back(i);
      const auto& iv = lay.intervals[i];
      loop.reading.push_back({iv.gen, iv.sign});
      (iv.kind == IntervalKind::W ? nw : iv.kind == IntervalKind::R ? nr : nri)++;
      const auto& c = s.edges[inc.conn[2 * i + 1]];
      if (c.u != 2 * i + 1 || c.v % 2 != 0) throw InternalError("connector does not run from a 1-end to a 0-end");
      i = c.v / 2;
    } while (i != i0);
    int L = static_cast<int>(loop.reading.size());
    if (nw == L) loop.type = LoopType::W;
    else if (nr == L) loop.type = LoopType::R;
    else if (nri == L) loop.type = LoopType::Rinv;
    else loop.type = LoopType::Mixed;
    if ((loop.type == LoopType::R || loop.type == LoopType::Rinv) && L % (4 * s.g) == 0) {
      int p = L / (4 * s.g);
      Word base = loop.type == LoopType::R ? rel : rel.inverse();
      if (is_rotation(power_letters(base, p), loop.reading)) loop.power = p;
    }
    s.loops.push_back(std::move(loop));
  }

  s.chi = s.chi_graph + static_cast<int>(s.type1.size() + s.type2.size());
  detail::Dsu dsu(V);
  for (const auto& e : s.edges) dsu.unite(e.u, e.v);
  s.components = dsu.components;
  int twice_genus = 2 * s.components - static_cast<int>(s.loops.size()) - s.chi;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw InternalError("Euler characteristic inconsistent with boundary count");
  s.genus = twice_genus / 2;
  s.orientable = check_orientation(s);
  return s;
}

CollapsedSurface collapse(const DecoratedSurface& s) {
  const MatchLayout& lay = s.layout;
  auto fail = [&](const std::string& what) {
    throw InternalError(what + "; datum " + datum_to_json(s.datum, lay.w));
  };
  CollapsedSurface c;
  c.g = s.g;
  c.k = s.k;
  c.l = s.l;
  c.loops = s.loops;
  if (!s.orientable) fail("surface is not orientable");

  std::vector<int> disc_of_edge(s.edges.size(), -1);
  for (size_t d = 0; d < s.type1.size(); ++d)
    for (int e : s.type1[d]) disc_of_edge[e] = static_cast<int>(d);

  for (const auto& rect : s.type2) {
    if (rect.size() != 4) throw DomainError("type-II disc is not a rectangle; collapse needs a MATCH* datum");
    int sig = -1, tau = -1;
    for (int e : rect) {
      if (s.edges[e].kind == EdgeKind::SigmaArc) sig = e;
      if (s.edges[e].kind == EdgeKind::TauArc) tau = e;
    }
    if (sig < 0 || tau < 0) throw DomainError("type-II rectangle lacks a sigma or tau side");
    const auto& se = s.edges[sig];
    const auto& te = s.edges[tau];
    CollapsedArc a;
    a.label = se.label;
    a.plus_interval = se.u / 2;
    a.minus_interval = se.v / 2;
    if (te.u / 2 != a.plus_interval || te.v / 2 != a.minus_interval) fail("rectangle sides join different intervals");
    a.side_disc[0] = disc_of_edge[sig];
    a.side_disc[1] = disc_of_edge[tau];
    LoopType lp = s.loops[s.loop_of_interval[a.plus_interval]].type;
    LoopType lm = s.loops[s.loop_of_interval[a.minus_interval]].type;
    int wcount = (lp == LoopType::W) + (lm == LoopType::W);
    a.cls = wcount == 2 ? ArcClass::WW : wcount == 1 ? ArcClass::WR : ArcClass::RR;
    if (a.cls == ArcClass::RR && lp != lm) fail("P4: an arc joins an R-loop to an R^-1-loop");
    (a.cls == ArcClass::WW ? c.n_ww : a.cls == ArcClass::WR ? c.n_wr : c.n_rr)++;
    c.arcs.push_back(a);
  }

  std::vector<int> arc_of_edge(s.edges.size(), -1);
  for (size_t r = 0; r < s.type2.size(); ++r)
    for (int e : s.type2[r])
      if (is_arc(s.edges[e].kind)) arc_of_edge[e] = static_cast<int>(r);

  for (const auto& cyc : s.type1) {
    CollapsedDisc d;
    for (int e : cyc) {
      EdgeKind k = s.edges[e].kind;
      if (is_arc(k)) d.arc_sides.push_back(arc_of_edge[e]);
      else if (k == EdgeKind::WIntermediate) ++d.w_segments;
      else if (k == EdgeKind::PiInterval) ++d.r_segments;
    }
    c.discs.push_back(std::move(d));
  }

  // P1-P3
  int w_loops = 0, pos = 0, neg = 0;
  for (const auto& loop : c.loops) {
    switch (loop.type) {
      case LoopType::W:
        ++w_loops;
        if (!is_rotation(lay.w.letters(), loop.reading)) fail("P1: w-loop does not read a rotation of w");
        break;
      case LoopType::R:
        if (loop.power <= 0) fail("P2: R-loop does not read a positive power of R");
        pos += loop.power;
        break;
      case LoopType::Rinv:
        if (loop.power <= 0) fail("P3: R^-1-loop does not read a negative power of R");
        neg += loop.power;
        break;
      case LoopType::Mixed:
        fail("boundary loop mixes " + loop_type_name(LoopType::R) + " and " + loop_type_name(LoopType::Rinv) +
             " intervals");
    }
  }
  if (w_loops != (lay.w.empty() ? 0 : 1)) fail("P1: expected exactly one w-loop");
  if (pos != c.k) fail("P2: positive powers do not sum to k");
  if (neg != c.l) fail("P3: negative powers do not sum to l");

  const int I = lay.num_intervals();
  // collapsed intervals are vertices; connectors and arcs are edges; type-I discs are faces
  c.chi = I - (I + static_cast<int>(c.arcs.size())) + static_cast<int>(c.discs.size());
  if (c.chi != s.chi) fail("collapse changed the Euler characteristic");
  if (2 * c.n_rr + c.n_wr != 4 * c.g * (c.k + c.l)) fail("arc census 2N_RR + N_WR != 4g(k+l)");
  return c;
}

std::vector<Piece> piece_decomposition(const CollapsedSurface& s) {
  const int D = static_cast<int>(s.discs.size());
  const int A = static_cast<int>(s.arcs.size());
  auto prepiece = [&](int d) { return s.discs[d].w_segments == 1; };
  // nodes: discs 0..D-1, arcs D..D+A-1
  detail::Dsu dsu(D + A);
  std::vector<char> member(D + A, 0);
  for (int a = 0; a < A; ++a) {
    if (s.arcs[a].cls != ArcClass::WR) continue;
    member[D + a] = 1;
    for (int side : s.arcs[a].side_disc)
      if (prepiece(side)) dsu.unite(side, D + a);
  }
  for (int d = 0; d < D; ++d)
    if (prepiece(d)) member[d] = 1;

  std::map<int, int> piece_of_root;
  std::vector<Piece> pieces;
  for (int x = 0; x < D + A; ++x) {
    if (!member[x]) continue;
    int r = dsu.find(x);
    auto [it, fresh] = piece_of_root.emplace(r, static_cast<int>(pieces.size()));
    if (fresh) pieces.emplace_back();
    Piece& p = pieces[it->second];
    if (x < D) p.discs.push_back(x);
    else p.wr_arcs.push_back(x - D);
  }
  for (auto& p : pieces) {
    int incidences = 0;
    for (int d : p.discs) {
      for (int a : s.discs[d].arc_sides) {
        if (s.arcs[a].cls == ArcClass::RR) ++p.he_count;
        if (s.arcs[a].cls == ArcClass::WR) ++incidences;
      }
    }
    p.e_count = static_cast<int>(p.wr_arcs.size());
    p.chi = static_cast<int>(p.discs.size()) + p.e_count - incidences;
  }
  return pieces;
}

bool piece_inequality_holds(const Piece& p, int g) {
  return p.e_count <= (2 * g - 1) * p.he_count + 2 * g * p.chi;
}

ChiCheckReport chi_check(const Word& w, int k, int l, const ChiCheckOptions& opts) {
  ChiCheckReport rep;
  MatchLayout lay = make_layout(w, k, l);
  const int threads = std::max(1, opts.match.threads);

  struct Outcome {
    int chi = 0;
    int discs = 0;
    std::vector<int> powers;
    bool prepiece_bad = false;
    int pieces = 0;
    int piece_bad = 0;
    std::string error;
  };
  auto process = [&](const MatchingDatum& d, Outcome& o) {
    try {
      DecoratedSurface s = build_surface(d, lay);
      CollapsedSurface c = collapse(s);
      o.chi = c.chi;
      o.discs = static_cast<int>(c.discs.size());
      for (const auto& loop : c.loops) {
        if (loop.type == LoopType::R) o.powers.push_back(loop.power);
        if (loop.type == LoopType::Rinv) o.powers.push_back(-loop.power);
      }
      for (const auto& disc : c.discs) {
        if (disc.w_segments != 1) continue;
        int wr = 0;
        for (int a : disc.arc_sides) wr += c.arcs[a].cls == ArcClass::WR;
        if (wr != 2) o.prepiece_bad = true;
      }
      auto pieces = piece_decomposition(c);
      o.pieces = static_cast<int>(pieces.size());
      for (const auto& p : pieces)
        if (!piece_inequality_holds(p, c.g)) ++o.piece_bad;
    } catch (const InternalError& e) {
      o.error = e.what();
    }
  };

  auto add_dump = [&](const std::string& kind, const MatchingDatum& d, uint64_t index) {
    if (rep.dumps.size() >= opts.max_dumps) return;
    nlohmann::json j;
    j["kind"] = kind;
    j["index"] = index;
    j["datum"] = nlohmann::json::parse(datum_to_json(d, w));
    std::string text = j.dump();
    rep.dumps.push_back(text);
    if (!opts.dump_dir.empty()) {
      std::ofstream out(opts.dump_dir + "/counterexample_" + std::to_string(index) + ".json");
      out << text << "\n";
    }
  };

  std::vector<MatchingDatum> batch;
  std::vector<Outcome> outcomes;
  auto flush = [&] {
    outcomes.assign(batch.size(), Outcome{});
    if (threads == 1 || batch.size() < 64) {
      for (size_t i = 0; i < batch.size(); ++i) process(batch[i], outcomes[i]);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (size_t i = t; i < batch.size(); i += threads) process(batch[i], outcomes[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (size_t i = 0; i < batch.size(); ++i) {
      const Outcome& o = outcomes[i];
      uint64_t index = rep.count++;
      if (!o.error.empty()) {
        add_dump("axiom", batch[i], index);
        throw InternalError(o.error);
      }
      rep.max_chi = std::max(rep.max_chi, o.chi);
      ++rep.chi_histogram[o.chi];
      rep.pieces += o.pieces;
      if (o.chi > -(k + l)) {
        ++rep.chi_bound_violations;
        add_dump("chi_bound", batch[i], index);
      }
      if (o.piece_bad) {
        rep.piece_violations += o.piece_bad;
        add_dump("piece_inequality", batch[i], index);
      }
      if (o.prepiece_bad) ++rep.prepiece_census_violations;
      if (opts.on_record) opts.on_record({index, o.chi, o.discs, o.powers});
    }
    batch.clear();
  };

  enumerate_match(
      w, k, l, true,
      [&](const MatchingDatum& d) {
        batch.push_back(d);
        if (batch.size() >= 4096) flush();
      },
      opts.match);
  flush();
  return rep;
}

int max_chi_over_matchstar(const Word& w, int k, int l, const MatchOptions& opts) {
  ChiCheckOptions co;
  co.match = opts;
  return chi_check(w, k, l, co).max_chi;
}

}  // namespace surftrace
