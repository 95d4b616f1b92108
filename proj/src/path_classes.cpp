#include "pathpart/nd.hpp"

#include <map>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

class ClassWalker {
 public:
  ClassWalker(const Graph& g, const NdClassification& cls, PathKind kind, bool with_edges)
      : g_(g), cls_(cls), kind_(kind), with_edges_(with_edges), d_(cls.size()), used_(d_, false) {
    if (kind == PathKind::kShortest) dist_ = all_pairs_distances(g);
  }

  std::vector<ClassPathVector> run() {
    for (std::uint32_t c = 0; c < d_; ++c) {
      seq_ = {c};
      verts_ = {cls_.classes[c][0]};
      used_[c] = true;
      record();
      extend();
      used_[c] = false;
    }
    return std::move(found_);
  }

 private:
  bool fits(Vertex w) const {
    Vertex back = verts_.back();
    if (!g_.has_edge(back, w)) return false;
    if (kind_ == PathKind::kInduced) {
      for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
        if (g_.adjacent(verts_[i], w)) return false;
      }
    } else if (kind_ == PathKind::kShortest) {
      auto dd = dist_.at(verts_.front(), w);
      if (!dd || *dd != verts_.size()) return false;
    }
    return true;
  }

  void extend() {
    const auto first = seq_.front();
    // Closing repeat: the start class shows up again as the last vertex.
    if (cls_.classes[first].size() >= 2) {
      Vertex w = cls_.classes[first][1];
      if (fits(w)) {
        seq_.push_back(first);
        verts_.push_back(w);
        record();
        seq_.pop_back();
        verts_.pop_back();
      }
    }
    for (std::uint32_t c = 0; c < d_; ++c) {
      if (used_[c]) continue;
      Vertex w = cls_.classes[c][0];
      if (!fits(w)) continue;
      used_[c] = true;
      seq_.push_back(c);
      verts_.push_back(w);
      record();
      extend();
      verts_.pop_back();
      seq_.pop_back();
      used_[c] = false;
    }
  }

  void record() {
    ClassPathVector v;
    v.kind = kind_;
    v.sequence = seq_;
    v.counts.assign(d_, 0);
    for (auto c : seq_) ++v.counts[c];
    v.edge_counts.assign(d_ * d_, 0);
    for (std::size_t i = 1; i < seq_.size(); ++i) {
      auto a = seq_[i - 1], b = seq_[i];
      if (!cls_.directed && a > b) std::swap(a, b);
      ++v.edge_counts[a * d_ + b];
    }
    auto key = v.counts;
    if (with_edges_) key.insert(key.end(), v.edge_counts.begin(), v.edge_counts.end());
    if (seen_.emplace(std::move(key), found_.size()).second) found_.push_back(std::move(v));
  }

  const Graph& g_;
  const NdClassification& cls_;
  PathKind kind_;
  bool with_edges_;
  std::size_t d_;
  DistanceMatrix dist_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> seq_;
  std::vector<Vertex> verts_;
  std::map<std::vector<std::uint32_t>, std::size_t> seen_;
  std::vector<ClassPathVector> found_;
};

}  // namespace

std::vector<ClassPathVector> enumerate_path_classes(const Graph& g, const NdClassification& cls,
                                                    PathKind kind, bool with_edge_counts) {
  if (kind == PathKind::kUnrestricted) {
    throw Error(ErrorCode::kUnsupportedInput, "path classes are defined for shortest and induced paths");
  }
  return ClassWalker(g, cls, kind, with_edge_counts).run();
}

}  // namespace pathpart
