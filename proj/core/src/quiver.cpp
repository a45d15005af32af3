#include "qpc/quiver.hpp"

#include <algorithm>
#include <set>

#include "qpc/errors.hpp"

namespace qpc {

std::string star(std::string_view id) { return std::string(id) + std::string(kStar); }

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> vs;
  for (const auto& v : vertices_) {
    if (v.empty()) throw PreconditionError("empty vertex id");
    if (!vs.insert(v).second) throw PreconditionError("duplicate vertex '" + v + "'");
  }
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.id.empty()) throw PreconditionError("empty arrow id");
    if (!ids.insert(a.id).second) throw PreconditionError("duplicate arrow '" + a.id + "'");
    if (!vs.count(a.source) || !vs.count(a.target))
      throw LookupError("arrow '" + a.id + "' references an unknown vertex");
  }
}

bool Quiver::has_vertex(std::string_view v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

const Arrow* Quiver::find_arrow(std::string_view id) const {
  for (const auto& a : arrows_)
    if (a.id == id) return &a;
  return nullptr;
}

const Arrow& Quiver::arrow(std::string_view id) const {
  const Arrow* a = find_arrow(id);
  if (!a) throw LookupError("no arrow '" + std::string(id) + "'");
  return *a;
}

int Quiver::arrow_count(std::string_view i, std::string_view j) const {
  int n = 0;
  for (const auto& a : arrows_)
    if (a.source == i && a.target == j) ++n;
  return n;
}

std::vector<const Arrow*> Quiver::arrows_into(std::string_view v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.target == v) out.push_back(&a);
  return out;
}

std::vector<const Arrow*> Quiver::arrows_out_of(std::string_view v) const {
  std::vector<const Arrow*> out;
  for (const auto& a : arrows_)
    if (a.source == v) out.push_back(&a);
  return out;
}

bool Quiver::same_as(const Quiver& other) const {
  auto vs1 = vertices_, vs2 = other.vertices_;
  std::sort(vs1.begin(), vs1.end());
  std::sort(vs2.begin(), vs2.end());
  if (vs1 != vs2) return false;
  auto key = [](const Arrow& a) { return std::tie(a.id, a.source, a.target); };
  auto as1 = arrows_, as2 = other.arrows_;
  auto less = [&](const Arrow& x, const Arrow& y) { return key(x) < key(y); };
  std::sort(as1.begin(), as1.end(), less);
  std::sort(as2.begin(), as2.end(), less);
  return as1 == as2;
}

template <class Tag>
long VertexVector<Tag>::at(std::string_view v) const {
  auto it = entries_.find(std::string(v));
  if (it == entries_.end()) throw DimensionVectorError("no entry for vertex '" + std::string(v) + "'");
  return it->second;
}

template <class Tag>
VertexVector<Tag> VertexVector<Tag>::operator+(const VertexVector& o) const {
  std::map<std::string, long> m = entries_;
  for (const auto& [v, n] : o.entries_) m[v] += n;
  return VertexVector(std::move(m));
}

template <class Tag>
void VertexVector<Tag>::check_entry(const std::string& v, long n) {
  if (n < 0) throw DimensionVectorError("negative entry at vertex '" + v + "'");
}

template class VertexVector<DimTag>;
template class VertexVector<FrameTag>;

void check_keys(const Quiver& q, const std::map<std::string, long>& entries) {
  if (entries.size() != q.vertices().size())
    throw DimensionVectorError("vector is not keyed by the quiver's vertex set");
  for (const auto& v : q.vertices())
    if (!entries.count(v)) throw DimensionVectorError("vector has no entry for vertex '" + v + "'");
}

long euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  check_keys(q, g1.entries());
  check_keys(q, g2.entries());
  long chi = 0;
  for (const auto& a : q.arrows()) chi -= g1.at(a.source) * g2.at(a.target);
  for (const auto& v : q.vertices()) chi += g1.at(v) * g2.at(v);
  return chi;
}

long antisym_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  return euler_form(q, g1, g2) - euler_form(q, g2, g1);
}

Quiver double_quiver(const Quiver& q) {
  std::vector<Arrow> arrows = q.arrows();
  for (const auto& a : q.arrows()) arrows.push_back({star(a.id), a.target, a.source});
  return Quiver(q.vertices(), std::move(arrows));
}

ContractionShape contraction_shape(const Quiver& q, std::string_view a0) {
  const Arrow& a = q.arrow(a0);
  if (a.is_loop()) throw ContractionUndefined("cannot contract the loop '" + a.id + "'");
  return {a.id, a.source, a.target};
}

ContractedVectors contract_vectors(const Quiver& q, std::string_view a0, const DimVector& g,
                                   const FrameVector& w) {
  ContractionShape sh = contraction_shape(q, a0);
  check_keys(q, g.entries());
  check_keys(q, w.entries());
  if (g.at(sh.plus) != g.at(sh.minus))
    throw EqualRankError("dimension vector has different ranks at '" + sh.plus + "' and '" +
                         sh.minus + "'");
  std::map<std::string, long> gh = g.entries(), wh = w.entries();
  gh.erase(sh.minus);
  wh.erase(sh.minus);
  wh[sh.plus] = w.at(sh.plus) + w.at(sh.minus);
  return {DimVector(std::move(gh)), FrameVector(std::move(wh))};
}

}  // namespace qpc
