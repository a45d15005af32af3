#include "qpc/scattering.hpp"

#include <algorithm>
#include <tuple>

#include "qpc/errors.hpp"

namespace qpc {

Rational pair(const Stability& kappa, const DimVector& gamma) {
  Rational s = 0;
  for (const auto& [v, n] : gamma.entries()) {
    if (n == 0) continue;
    auto it = kappa.find(v);
    if (it == kappa.end()) throw DimensionVectorError("stability vector has no entry for '" + v + "'");
    s += it->second * n;
  }
  return s;
}

std::string to_string(const Stability& kappa) {
  std::string s;
  for (const auto& [v, x] : kappa) s += (s.empty() ? "" : ",") + v + "=" + to_string(x);
  return "(" + s + ")";
}

bool Wall::contains(const Stability& y) const {
  if (pair(y, normal) != 0) return false;
  for (const auto& c : inequalities)
    if (pair(y, c) < 0) return false;
  return true;
}

void GComplex::validate() const {
  for (const auto& w : walls) {
    if (w.normal.is_zero()) throw PreconditionError("wall '" + w.label + "' has zero normal");
    for (const auto& [g, c] : w.element.terms()) {
      // g must be a positive multiple of the normal.
      long k = 0;
      bool ok = true;
      for (const auto& [v, n] : w.normal.entries()) {
        long m = g[v];
        if (n == 0) {
          ok = ok && m == 0;
          continue;
        }
        if (m % n != 0) ok = false;
        long r = m / n;
        if (k == 0) k = r;
        ok = ok && r == k;
      }
      if (!ok || k <= 0)
        throw PreconditionError("element of wall '" + w.label + "' is not supported on its normal ray");
    }
  }
}

namespace {

Stability lerp(const Stability& a, const Stability& b, const Rational& t) {
  Stability r;
  for (const auto& [v, x] : a) r[v] = x + (b.at(v) - x) * t;
  return r;
}

bool inside_interior(const Wall& w, const Stability& y) {
  for (const auto& c : w.inequalities)
    if (pair(y, c) == 0) return false;
  return true;
}

// Whether some point of [a, b] satisfies every inequality of the wall.
bool segment_meets(const Wall& w, const Stability& a, const Stability& b) {
  Rational lo = 0, hi = 1;
  for (const auto& c : w.inequalities) {
    Rational ca = pair(a, c), cb = pair(b, c), slope = cb - ca;
    if (slope == 0) {
      if (ca < 0) return false;
      continue;
    }
    Rational t = -ca / slope;  // root of ca + slope * t
    if (slope > 0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
  }
  return lo <= hi;
}

}  // namespace

std::vector<Crossing> crossings(const GComplex& d, const PathSpec& p) {
  if (p.points.size() < 2) throw PreconditionError("a path needs at least two points");
  for (std::size_t i = 0; i < p.points.size(); ++i)
    for (std::size_t w = 0; w < d.walls.size(); ++w)
      if (d.walls[w].contains(p.points[i]))
        throw GenericityError("path point " + to_string(p.points[i]) + " lies on wall '" +
                              d.walls[w].label + "'");

  std::vector<Crossing> out;
  for (std::size_t s = 0; s + 1 < p.points.size(); ++s) {
    const Stability &a = p.points[s], &b = p.points[s + 1];
    std::vector<std::tuple<Rational, std::size_t, int>> hits;
    for (std::size_t w = 0; w < d.walls.size(); ++w) {
      const Wall& wall = d.walls[w];
      Rational sa = pair(a, wall.normal), sb = pair(b, wall.normal);
      if ((sa > 0 && sb > 0) || (sa < 0 && sb < 0)) continue;
      if (sa == 0 && sb == 0) {
        if (segment_meets(wall, a, b))
          throw GenericityError("path runs inside the hyperplane of wall '" + wall.label + "'");
        continue;
      }
      Rational t = sa / (sa - sb);
      Stability x = lerp(a, b, t);
      if (!wall.contains(x)) continue;
      if (!inside_interior(wall, x))
        throw GenericityError("path meets the boundary of wall '" + wall.label + "' at " + to_string(x));
      // p(t)(gamma) decreasing gives +1.
      hits.emplace_back(t, w, sb < sa ? 1 : -1);
    }
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i + 1 < hits.size(); ++i)
      if (std::get<0>(hits[i]) == std::get<0>(hits[i + 1]))
        throw GenericityError("path crosses walls '" + d.walls[std::get<1>(hits[i])].label + "' and '" +
                              d.walls[std::get<1>(hits[i + 1])].label + "' at the same point");
    for (const auto& [t, w, sign] : hits) out.push_back({w, sign});
  }
  return out;
}

QTElement path_ordered_product(const GComplex& d, const PathSpec& p) {
  d.validate();
  const TorusContext& ctx = d.torus;
  QTElement f = QTElement::one(ctx.quiver);
  for (const auto& c : crossings(d, p)) {
    QTElement g = exp_truncated(ctx, d.walls[c.wall].element * Rational(c.sign));
    f = mul(ctx, g, f);
  }
  return f;
}

namespace {

Stability combine(const Stability& c, const Stability& u, const Stability& v, const Rational& su,
                  const Rational& sv) {
  Stability r = c;
  for (auto& [k, x] : r) {
    auto iu = u.find(k), iv = v.find(k);
    if (iu != u.end()) x += su * iu->second;
    if (iv != v.end()) x += sv * iv->second;
  }
  return r;
}

}  // namespace

std::vector<JointVerdict> check_joints(const GComplex& d, const std::vector<JointSample>& joints) {
  std::vector<JointVerdict> out;
  for (const auto& j : joints) {
    const Rational& r = j.radius;
    Stability start = combine(j.center, j.u, j.v, -r, -r);
    Stability end = combine(j.center, j.u, j.v, r, r);
    PathSpec p1{{start, combine(j.center, j.u, j.v, r, -r), end}};
    PathSpec p2{{start, combine(j.center, j.u, j.v, -r, r), end}};
    JointVerdict v;
    v.first = path_ordered_product(d, p1);
    v.second = path_ordered_product(d, p2);
    v.consistent = v.first == v.second;
    out.push_back(std::move(v));
  }
  return out;
}

bool consistency_check(const GComplex& d, const std::vector<JointSample>& joints) {
  for (const auto& v : check_joints(d, joints))
    if (!v.consistent) return false;
  return true;
}

Stability eta_embed(const Quiver& q, std::string_view a0, const Stability& kappa_hat,
                    const Rational& k) {
  ContractionShape sh = contraction_shape(q, a0);
  if (k == -1) throw DivisionError("eta_embed needs 1 + k != 0");
  auto it = kappa_hat.find(sh.plus);
  if (it == kappa_hat.end()) throw DimensionVectorError("stability vector has no entry for i0");
  Stability kappa;
  for (const auto& v : q.vertices()) {
    if (v == sh.plus || v == sh.minus) continue;
    auto jt = kappa_hat.find(v);
    if (jt == kappa_hat.end()) throw DimensionVectorError("stability vector has no entry for '" + v + "'");
    kappa[v] = jt->second;
  }
  if (kappa_hat.size() != q.vertices().size() - 1)
    throw DimensionVectorError("stability vector is not keyed by the contracted vertex set");
  kappa[sh.plus] = it->second / (1 + k);
  kappa[sh.minus] = k * it->second / (1 + k);
  return kappa;
}

}  // namespace qpc
