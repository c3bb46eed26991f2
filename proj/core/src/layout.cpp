#include "surftrace/layout.hpp"

#include "surftrace/errors.hpp"

namespace surftrace {

namespace {

constexpr int kA = 0, kB = 1, kC = 2, kD = 3;

IntervalFamily R(int gen, int sign) { return {IntervalKind::R, gen, sign}; }
IntervalFamily Ri(int gen, int sign) { return {IntervalKind::Rinv, gen, sign}; }

}  // namespace

const std::vector<PiWiring>& pi_wiring_table_g2() {
  static const std::vector<PiWiring> table = {
      {R(kB, +1), Ri(kA, -1), R(kA, +1), Ri(kB, -1)},
      {R(kA, -1), Ri(kB, -1), R(kB, +1), Ri(kA, +1)},
      {R(kB, -1), Ri(kA, +1), R(kA, -1), Ri(kB, +1)},
      {R(kC, +1), Ri(kB, +1), R(kB, -1), Ri(kC, -1)},
      {R(kD, +1), Ri(kC, -1), R(kC, +1), Ri(kD, -1)},
      {R(kC, -1), Ri(kD, -1), R(kD, +1), Ri(kC, +1)},
      {R(kD, -1), Ri(kC, +1), R(kC, -1), Ri(kD, +1)},
      {R(kA, +1), Ri(kD, +1), R(kD, -1), Ri(kA, -1)},
  };
  return table;
}

std::vector<PiWiring> pi_wiring_generic(int g) {
  Word rel = relator(g);
  int L = rel.size();
  auto r_fam = [&](int t) { return R(rel[t].gen, rel[t].sign); };
  auto rinv_fam = [&](int t) { return Ri(rel[t].gen, -rel[t].sign); };
  std::vector<PiWiring> out;
  for (int t = 0; t < L; ++t) {
    int u = (t + 1) % L;
    out.push_back({r_fam(u), rinv_fam(t), r_fam(t), rinv_fam(u)});
  }
  return out;
}

int MatchLayout::r_interval(int t, int c) const { return w.size() + t * k + c; }
int MatchLayout::rinv_interval(int t, int c) const { return w.size() + 4 * g * k + t * l + c; }

MatchLayout make_layout(const Word& w, int k, int l) {
  if (w.rank() % 2 != 0 || w.rank() < 4) throw DomainError("matching layout needs a surface word with g >= 2");
  if (k < 0 || l < 0) throw DomainError("k and l must be non-negative");
  MatchLayout lay;
  lay.g = w.genus();
  lay.k = k;
  lay.l = l;
  lay.w = w;
  int g = lay.g, rank = 2 * g, L = 4 * g;
  Word rel = relator(g);

  for (int j = 0; j < w.size(); ++j) lay.intervals.push_back({IntervalKind::W, w[j].gen, w[j].sign, j, 0});
  for (int t = 0; t < L; ++t)
    for (int c = 0; c < k; ++c) lay.intervals.push_back({IntervalKind::R, rel[t].gen, rel[t].sign, t, c});
  for (int t = 0; t < L; ++t)
    for (int c = 0; c < l; ++c) lay.intervals.push_back({IntervalKind::Rinv, rel[t].gen, -rel[t].sign, t, c});

  // Letter position of f^{s} in R_g.
  auto pos_in_r = [&](int gen, int sign) {
    for (int t = 0; t < L; ++t)
      if (rel[t].gen == gen && rel[t].sign == sign) return t;
    throw InternalError("letter missing from relator");
  };
  // Rinv intervals labelled f^{s} sit at the R position of f^{-s}.
  auto family_intervals = [&](const IntervalFamily& fam) {
    std::vector<int> ids;
    if (fam.kind == IntervalKind::R) {
      int t = pos_in_r(fam.gen, fam.sign);
      for (int c = 0; c < k; ++c) ids.push_back(lay.r_interval(t, c));
    } else {
      int t = pos_in_r(fam.gen, -fam.sign);
      for (int c = 0; c < l; ++c) ids.push_back(lay.rinv_interval(t, c));
    }
    return ids;
  };

  lay.p.assign(rank, 0);
  lay.plus.assign(rank, {});
  lay.minus.assign(rank, {});
  for (int f = 0; f < rank; ++f) {
    for (int s : {+1, -1}) {
      auto& block = (s > 0) ? lay.plus[f] : lay.minus[f];
      for (int id : family_intervals(R(f, s))) block.push_back(id);
      for (int id : family_intervals(Ri(f, s))) block.push_back(id);
      for (int j = 0; j < w.size(); ++j)
        if (w[j].gen == f && w[j].sign == s) block.push_back(j);
    }
    if (lay.plus[f].size() != lay.minus[f].size())
      throw DomainError("word is not balanced in generator " + std::to_string(f + 1));
    lay.p[f] = static_cast<int>(lay.plus[f].size()) - k - l;
  }
  lay.m.resize(rank);
  for (int f = 0; f < rank; ++f) lay.m[f] = k + l + lay.p[f];

  std::vector<PiWiring> wiring = (g == 2) ? pi_wiring_table_g2() : pi_wiring_generic(g);
  for (const auto& pw : wiring) {
    std::vector<int> dom, cod;
    for (int id : family_intervals(pw.dom_r)) dom.push_back(MatchLayout::endpoint(id, 0));
    for (int id : family_intervals(pw.dom_rinv)) dom.push_back(MatchLayout::endpoint(id, 0));
    for (int id : family_intervals(pw.cod_r)) cod.push_back(MatchLayout::endpoint(id, 1));
    for (int id : family_intervals(pw.cod_rinv)) cod.push_back(MatchLayout::endpoint(id, 1));
    lay.pi_dom.push_back(std::move(dom));
    lay.pi_cod.push_back(std::move(cod));
  }
  for (int j = 0; j < w.size(); ++j)
    lay.w_links.emplace_back(MatchLayout::endpoint(j, 1), MatchLayout::endpoint((j + 1) % w.size(), 0));
  return lay;
}

}  // namespace surftrace
