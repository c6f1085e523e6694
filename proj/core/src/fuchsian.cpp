#include "llab/fuchsian.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <unordered_set>

#include "llab/errors.hpp"
#include "pants.hpp"

namespace llab {

using pants::M2;

void FenchelNielsenCoords::validate() const {
  if (genus < 2) fail(Errc::InvalidArgument, "genus must be >= 2");
  size_t n = static_cast<size_t>(curve_count());
  if (lengths.size() != n || twists.size() != n)
    fail(Errc::InvalidArgument, "FN coordinate arrays must have 3g-3 entries");
  for (double l : lengths) {
    if (!(l > 0.0)) fail(Errc::InvalidArgument, "FN lengths must be positive");
    if (l < 1e-3 || l > 40.0)
      fail(Errc::NumericalDegeneracy, "FN length outside the double-precision comfort zone");
  }
}

MobiusMap FuchsianRep::letter(int l) const {
  const MobiusMap& g = generators[static_cast<size_t>(l / 2)];
  return (l & 1) ? g.inverse() : g;
}

std::string FuchsianRep::letter_name(int l) {
  static const char* low = "abcdefghijkl";
  char ch = low[l / 2];
  if (l & 1) ch = static_cast<char>(ch - 'a' + 'A');
  return std::string(1, ch);
}

MobiusMap FuchsianRep::word(const std::vector<int>& letters) const {
  MobiusMap m = MobiusMap::identity();
  for (int l : letters) m = m * letter(l);
  return m;
}

namespace {

MobiusMap to_mobius(const M2& m) { return MobiusMap::from_entries(m.a, m.b, m.c, m.d); }

M2 conj(const M2& j, const M2& m) { return j * m * j.inv(); }

struct HandleTorus {
  M2 a, b;    // one-holed torus generators, [a,b] = leg holonomy
  M2 leg;     // = X[2] of the pants
  M2 leg_frame;
  M2 cuff;    // = X[0], the handle curve
};

HandleTorus build_handle(double l_curve, double l_leg, double twist) {
  pants::Pants p = pants::build_pants(l_curve, l_curve, l_leg);
  M2 t = p.F[0] * pants::glue_twist(twist) * p.F[1].inv();
  HandleTorus h;
  h.a = t.inv();
  h.b = p.X[0];
  h.leg = p.X[2];
  h.leg_frame = p.F[2];
  h.cuff = p.X[0];
  return h;
}

double defect_of(const std::vector<M2>& gens) {
  M2 rel;
  for (size_t i = 0; i + 1 < gens.size(); i += 2) {
    rel = rel * gens[i] * gens[i + 1] * gens[i].inv() * gens[i + 1].inv();
  }
  MobiusMap r = to_mobius(rel);
  return psl_distance(r, MobiusMap::identity());
}

}  // namespace

FuchsianRep build_rep(const FenchelNielsenCoords& fn) {
  fn.validate();
  int g = fn.genus;
  const auto& L = fn.lengths;
  const auto& T = fn.twists;

  std::vector<M2> gens;           // a1,b1,...
  std::vector<M2> curves;         // per FN curve
  if (g == 2) {
    // Two handle tori glued along the waist (curve order: c1, c2, waist).
    HandleTorus h1 = build_handle(L[0], L[2], T[0]);
    HandleTorus h2 = build_handle(L[1], L[2], T[1]);
    M2 j = h1.leg_frame * pants::glue_twist(T[2]) * h2.leg_frame.inv();
    gens = {h1.a, h1.b, conj(j, h2.a), conj(j, h2.b)};
    curves = {h1.cuff, conj(j, h2.cuff), h1.leg};
  } else {
    // Handles on a connector chain. Curve order: c_1..c_g, legs l_1..l_g,
    // bridges b_1..b_{g-3}.
    std::vector<HandleTorus> handles;
    for (int i = 0; i < g; ++i)
      handles.push_back(build_handle(L[i], L[g + i], T[i]));

    int n_conn = g - 2;
    std::vector<pants::Pants> conn;
    std::vector<std::array<int, 3>> conn_curve;  // FN curve index per cuff
    for (int j = 0; j < n_conn; ++j) {
      std::array<int, 3> idx;
      if (n_conn == 1) {
        idx = {g + 0, g + 1, g + 2};
      } else if (j == 0) {
        idx = {g + 0, g + 1, 2 * g + 0};
      } else if (j == n_conn - 1) {
        idx = {2 * g + (j - 1), g + (j + 1), g + (j + 2)};
      } else {
        idx = {2 * g + (j - 1), g + (j + 1), 2 * g + j};
      }
      conn_curve.push_back(idx);
      conn.push_back(pants::build_pants(L[idx[0]], L[idx[1]], L[idx[2]]));
    }
    // Conjugators placing each connector: chain gluing along bridges.
    std::vector<M2> phi(static_cast<size_t>(n_conn));
    phi[0] = M2{};
    for (int j = 0; j + 1 < n_conn; ++j) {
      int bridge = conn_curve[static_cast<size_t>(j)][2];
      phi[static_cast<size_t>(j + 1)] =
          phi[static_cast<size_t>(j)] * conn[static_cast<size_t>(j)].F[2] *
          pants::glue_twist(T[bridge]) * conn[static_cast<size_t>(j + 1)].F[0].inv();
    }
    // Attach handle i to its connector cuff.
    auto leg_slot = [&](int i) -> std::pair<int, int> {  // (connector, cuff)
      if (i == 0) return {0, 0};
      if (i == 1) return {0, 1};
      if (i == g - 1) return {n_conn - 1, 2};
      return {i - 1, 1};
    };
    curves.assign(static_cast<size_t>(fn.curve_count()), M2{});
    std::vector<std::pair<M2, M2>> placed(static_cast<size_t>(g));
    for (int i = 0; i < g; ++i) {
      auto [cj, cuff] = leg_slot(i);
      const pants::Pants& c = conn[static_cast<size_t>(cj)];
      M2 ji = phi[static_cast<size_t>(cj)] * c.F[static_cast<size_t>(cuff)] *
              pants::glue_twist(T[g + i]) * handles[static_cast<size_t>(i)].leg_frame.inv();
      placed[static_cast<size_t>(i)] = {conj(ji, handles[static_cast<size_t>(i)].a),
                                        conj(ji, handles[static_cast<size_t>(i)].b)};
      curves[static_cast<size_t>(i)] = conj(ji, handles[static_cast<size_t>(i)].cuff);
      curves[static_cast<size_t>(g + i)] =
          conj(phi[static_cast<size_t>(cj)], c.X[static_cast<size_t>(cuff)]);
    }
    for (int j = 0; j + 1 < n_conn; ++j) {
      int bridge = conn_curve[static_cast<size_t>(j)][2];
      curves[static_cast<size_t>(bridge)] = conj(phi[static_cast<size_t>(j)], conn[static_cast<size_t>(j)].X[2]);
    }
    // The planar boundary relation orders handle commutators last-to-first;
    // curve_elements stay in FN coordinate order.
    for (int i = g - 1; i >= 0; --i) {
      gens.push_back(placed[static_cast<size_t>(i)].first);
      gens.push_back(placed[static_cast<size_t>(i)].second);
    }
  }

  FuchsianRep rep;
  rep.genus = g;
  rep.coords = fn;
  rep.relation_defect = defect_of(gens);
  for (const M2& m : gens) rep.generators.push_back(to_mobius(m));
  for (const M2& m : curves) rep.curve_elements.push_back(to_mobius(m));
  if (!(rep.relation_defect < 1e-8))
    fail(Errc::NumericalDegeneracy, "build_rep: surface relation defect too large");
  for (const MobiusMap& m : rep.generators)
    if (!m.is_hyperbolic()) fail(Errc::NumericalDegeneracy, "build_rep: non-hyperbolic generator");
  return rep;
}

namespace {

// Quantized PSL key for deduplication; entries are scale-normalized first.
struct MatKey {
  int64_t k[4];
  bool operator==(const MatKey& o) const {
    return k[0] == o.k[0] && k[1] == o.k[1] && k[2] == o.k[2] && k[3] == o.k[3];
  }
};
struct MatKeyHash {
  size_t operator()(const MatKey& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int64_t v : m.k) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

class MatSet {
 public:
  // Returns true when the element was new.
  bool insert(const MobiusMap& m) {
    double e[4] = {m.a, m.b, m.c, m.d};
    double scale = 0.0;
    for (double v : e) scale = std::max(scale, std::abs(v));
    MatKey key;
    bool boundary = false;
    for (int i = 0; i < 4; ++i) {
      double s = e[i] / scale * kGrid;
      key.k[i] = llround(s);
      if (std::abs(s - static_cast<double>(key.k[i])) > 0.5 - 1e-4) boundary = true;
    }
    if (set_.contains(key)) return false;
    if (boundary) {
      // Probe neighbor cells so rounding jitter cannot split one element
      // into two keys.
      MatKey probe = key;
      for (int mask = 0; mask < 81; ++mask) {
        int mm = mask;
        for (int i = 0; i < 4; ++i) {
          probe.k[i] = key.k[i] + (mm % 3) - 1;
          mm /= 3;
        }
        if (set_.contains(probe)) return false;
      }
    }
    set_.insert(key);
    return true;
  }
  size_t size() const { return set_.size(); }

 private:
  static constexpr double kGrid = 1e9;
  std::unordered_set<MatKey, MatKeyHash> set_;
};

}  // namespace

std::vector<GroupElement> enumerate_group(const FuchsianRep& rep, int max_word_length,
                                          size_t element_budget) {
  if (max_word_length > 12)
    fail(Errc::EnumerationBudget, "enumerate_group: max_word_length > 12");
  std::vector<GroupElement> out;
  MatSet seen;
  out.push_back({{}, MobiusMap::identity()});
  seen.insert(MobiusMap::identity());
  size_t level_begin = 0;
  for (int len = 1; len <= max_word_length; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      // Copy: out may reallocate while we append.
      GroupElement base = out[i];
      int last = base.letters.empty() ? -1 : base.letters.back();
      for (int l = 0; l < rep.alphabet_size(); ++l) {
        if (last >= 0 && l == FuchsianRep::inverse_letter(last)) continue;
        MobiusMap m = base.map * rep.letter(l);
        if (!seen.insert(m)) continue;
        if (out.size() >= element_budget)
          fail(Errc::EnumerationBudget, "enumerate_group: element budget exceeded");
        GroupElement e;
        e.letters = base.letters;
        e.letters.push_back(l);
        e.map = m;
        out.push_back(std::move(e));
      }
    }
    level_begin = level_end;
  }
  return out;
}

TeichPath TeichPath::twist_direction(const FenchelNielsenCoords& base, int curve, double h) {
  TeichPath p;
  p.base = base;
  p.d_lengths.assign(base.lengths.size(), 0.0);
  p.d_twists.assign(base.twists.size(), 0.0);
  p.d_twists[static_cast<size_t>(curve)] = 1.0;
  p.fd_step = h;
  return p;
}

TeichPath TeichPath::length_direction(const FenchelNielsenCoords& base, int curve, double h) {
  TeichPath p;
  p.base = base;
  p.d_lengths.assign(base.lengths.size(), 0.0);
  p.d_twists.assign(base.twists.size(), 0.0);
  p.d_lengths[static_cast<size_t>(curve)] = 1.0;
  p.fd_step = h;
  return p;
}

TeichPath TeichPath::reversed() const { return scaled(-1.0); }

TeichPath TeichPath::scaled(double factor) const {
  TeichPath p = *this;
  for (double& v : p.d_lengths) v *= factor;
  for (double& v : p.d_twists) v *= factor;
  return p;
}

bool TeichPath::is_constant() const {
  for (double v : d_lengths)
    if (v != 0.0) return false;
  for (double v : d_twists)
    if (v != 0.0) return false;
  return true;
}

FenchelNielsenCoords TeichPath::at(double t) const {
  FenchelNielsenCoords fn = base;
  for (size_t i = 0; i < fn.lengths.size(); ++i) fn.lengths[i] += t * d_lengths[i];
  for (size_t i = 0; i < fn.twists.size(); ++i) fn.twists[i] += t * d_twists[i];
  return fn;
}

}  // namespace llab
