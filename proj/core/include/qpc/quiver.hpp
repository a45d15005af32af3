#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpc {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  bool is_loop() const { return source == target; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Suffix appended to an arrow id to name its reverse in a double quiver.
inline constexpr std::string_view kStar = "^*";
std::string star(std::string_view id);

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(std::string_view v) const;
  const Arrow* find_arrow(std::string_view id) const;
  const Arrow& arrow(std::string_view id) const;  // throws LookupError

  // a_ij, the number of arrows i -> j.
  int arrow_count(std::string_view i, std::string_view j) const;

  std::vector<const Arrow*> arrows_into(std::string_view v) const;
  std::vector<const Arrow*> arrows_out_of(std::string_view v) const;

  // Same vertices and arrow records, order ignored.
  bool same_as(const Quiver& other) const;
  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

template <class Tag>
class VertexVector {
 public:
  VertexVector() = default;
  explicit VertexVector(std::map<std::string, long> entries) : entries_(std::move(entries)) {
    for (const auto& [v, n] : entries_) check_entry(v, n);
  }
  VertexVector(std::initializer_list<std::pair<const std::string, long>> init)
      : VertexVector(std::map<std::string, long>(init)) {}

  static VertexVector zero(const Quiver& q) {
    std::map<std::string, long> m;
    for (const auto& v : q.vertices()) m[v] = 0;
    return VertexVector(std::move(m));
  }

  const std::map<std::string, long>& entries() const { return entries_; }
  long at(std::string_view v) const;
  long operator[](std::string_view v) const { return at(v); }
  void set(const std::string& v, long n) {
    check_entry(v, n);
    entries_[v] = n;
  }
  long total() const {
    long s = 0;
    for (const auto& [v, n] : entries_) s += n;
    return s;
  }
  bool is_zero() const { return total() == 0; }

  VertexVector operator+(const VertexVector& o) const;
  friend bool operator==(const VertexVector&, const VertexVector&) = default;
  friend auto operator<=>(const VertexVector&, const VertexVector&) = default;

 private:
  static void check_entry(const std::string& v, long n);
  std::map<std::string, long> entries_;
};

struct DimTag {};
struct FrameTag {};
using DimVector = VertexVector<DimTag>;
using FrameVector = VertexVector<FrameTag>;

// Throws DimensionVectorError unless keys are exactly Q's vertices.
void check_keys(const Quiver& q, const std::map<std::string, long>& entries);

long euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2);
long antisym_form(const Quiver& q, const DimVector& g1, const DimVector& g2);

Quiver double_quiver(const Quiver& q);

struct ContractedVectors {
  DimVector gamma;
  FrameVector omega;
};
ContractedVectors contract_vectors(const Quiver& q, std::string_view a0, const DimVector& g,
                                   const FrameVector& w);

// Q with vertex i_- removed and every arrow a != a0 rerouted with its hat name.
struct ContractionShape {
  std::string a0;
  std::string plus;   // i_+ = s(a0), becomes i_0
  std::string minus;  // i_- = t(a0), removed
};
ContractionShape contraction_shape(const Quiver& q, std::string_view a0);

}  // namespace qpc
