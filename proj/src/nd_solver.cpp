#include "pathpart/nd.hpp"

#include <algorithm>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

// Searches concrete members for a list of class sequences so that the
// resulting paths cover every vertex and share no edge.
class EdgeDisjointRealizer {
 public:
  EdgeDisjointRealizer(const Graph& g, const NdClassification& cls,
                       std::vector<const ClassPathVector*> paths)
      : g_(g), cls_(cls), plan_(std::move(paths)), n_(g.order()) {
    used_.assign(n_ * n_, false);
    touch_.assign(n_, 0);
    slots_.assign(cls.size(), 0);
    for (auto* p : plan_) {
      for (auto c : p->sequence) ++slots_[c];
    }
    untouched_.resize(cls.size());
    for (std::uint32_t c = 0; c < cls.size(); ++c) untouched_[c] = cls.classes[c].size();
    out_.resize(plan_.size());
  }

  std::optional<std::vector<Path>> run() {
    for (std::uint32_t c = 0; c < cls_.size(); ++c) {
      if (slots_[c] < untouched_[c]) return std::nullopt;
    }
    if (place(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  static constexpr std::uint64_t kNodeLimit = 20'000'000;

  bool place(std::size_t i, std::size_t pos) {
    if (++nodes_ > kNodeLimit) {
      throw Error(ErrorCode::kBudgetExceeded, "edge-disjoint reconstruction node limit exceeded");
    }
    if (i == plan_.size()) {
      // The search unwinds on the way back, so keep a copy of the leaf.
      found_ = out_;
      return true;
    }
    const auto& seq = plan_[i]->sequence;
    if (pos == seq.size()) return place(i + 1, 0);
    const auto c = seq[pos];
    --slots_[c];
    bool tried_fresh = false;
    bool ok = false;
    for (Vertex w : cls_.classes[c]) {
      if (std::find(out_[i].begin(), out_[i].end(), w) != out_[i].end()) continue;
      if (touch_[w] == 0) {
        if (tried_fresh) continue;
        tried_fresh = true;
      } else if (slots_[c] < untouched_[c]) {
        // Reusing a covered member leaves too few slots for the rest.
        continue;
      }
      Vertex prev = pos ? out_[i].back() : w;
      if (pos && used_[prev * n_ + w]) continue;
      take(i, w, prev, pos > 0);
      ok = place(i, pos + 1);
      release(i, w, prev, pos > 0);
      if (ok) break;
    }
    ++slots_[c];
    return ok;
  }

  void take(std::size_t i, Vertex w, Vertex prev, bool edge) {
    if (touch_[w]++ == 0) --untouched_[cls_.class_of[w]];
    if (edge) set_edge(prev, w, true);
    out_[i].push_back(w);
  }

  void release(std::size_t i, Vertex w, Vertex prev, bool edge) {
    out_[i].pop_back();
    if (edge) set_edge(prev, w, false);
    if (--touch_[w] == 0) ++untouched_[cls_.class_of[w]];
  }

  void set_edge(Vertex a, Vertex b, bool value) {
    used_[a * n_ + b] = value;
    if (!g_.is_directed()) used_[b * n_ + a] = value;
  }

  const Graph& g_;
  const NdClassification& cls_;
  std::vector<const ClassPathVector*> plan_;
  std::size_t n_;
  std::vector<bool> used_;
  std::vector<std::uint32_t> touch_;
  std::vector<std::size_t> slots_;
  std::vector<std::size_t> untouched_;
  std::vector<Path> out_;
  std::vector<Path> found_;
  std::uint64_t nodes_ = 0;
};

NdClassification classes_for(const Graph& g) { return g.is_directed() ? dnd_classes(g) : nd_classes(g); }

std::vector<Path> solve_component(const Graph& g, Variant variant) {
  auto cls = classes_for(g);
  const bool ed = variant.mode == CoverMode::kEdgeDisjointCover;
  auto vectors = enumerate_path_classes(g, cls, variant.kind, ed);
  auto ilp = build_ilp(cls, vectors, variant);
  auto z = solve_ilp(ilp);
  if (!z) throw Error(ErrorCode::kInfeasible, "path-class program has no solution");
  if (!ed) return reconstruct(g, cls, *z, vectors, variant).paths;

  std::int64_t opt = 0;
  for (auto x : *z) opt += x;
  for (auto value = opt; value <= static_cast<std::int64_t>(g.order()); ++value) {
    std::optional<PathSystem> found;
    enumerate_ilp_solutions(ilp, value, [&](const std::vector<std::int64_t>& cand) {
      try {
        found = reconstruct(g, cls, cand, vectors, variant);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kReconstructionFailed) throw;
      }
      return !found.has_value();
    });
    if (found) return found->paths;
  }
  throw Error(ErrorCode::kReconstructionFailed, "no edge-disjoint realization up to n paths");
}

}  // namespace

IlpInstance build_ilp(const NdClassification& cls, const std::vector<ClassPathVector>& vectors,
                      Variant variant) {
  const auto d = cls.size();
  IlpInstance ilp;
  ilp.objective.assign(vectors.size(), 1);
  const RowOp class_op = variant.mode == CoverMode::kPartition ? RowOp::kEqual : RowOp::kGreaterEqual;
  for (std::uint32_t j = 0; j < d; ++j) {
    IlpRow row{{}, class_op, static_cast<std::int64_t>(cls.classes[j].size())};
    for (const auto& v : vectors) row.coeffs.push_back(v.counts[j]);
    ilp.rows.push_back(std::move(row));
  }
  if (variant.mode == CoverMode::kEdgeDisjointCover) {
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = cls.directed ? 0 : i; j < d; ++j) {
        IlpRow row{{}, RowOp::kLessEqual, static_cast<std::int64_t>(cls.edge_budget(i, j))};
        bool any = false;
        for (const auto& v : vectors) {
          auto t = v.edge_counts.empty() ? 0 : v.edge_counts[i * d + j];
          any = any || t > 0;
          row.coeffs.push_back(t);
        }
        if (any) ilp.rows.push_back(std::move(row));
      }
    }
  }
  return ilp;
}

PathSystem reconstruct(const Graph& g, const NdClassification& cls,
                       const std::vector<std::int64_t>& assignment,
                       const std::vector<ClassPathVector>& vectors, Variant variant) {
  PathSystem out{{}, variant};
  if (variant.mode == CoverMode::kEdgeDisjointCover) {
    std::vector<const ClassPathVector*> plan;
    for (std::size_t p = 0; p < vectors.size(); ++p) {
      for (std::int64_t r = 0; r < assignment[p]; ++r) {
        plan.push_back(&vectors[p]);
      }
    }
    auto paths = EdgeDisjointRealizer(g, cls, plan).run();
    if (!paths) throw Error(ErrorCode::kReconstructionFailed, "assignment has no edge-disjoint realization");
    out.paths = std::move(*paths);
    return out;
  }
  std::vector<std::size_t> next(cls.size(), 0);
  const bool partition = variant.mode == CoverMode::kPartition;
  for (std::size_t p = 0; p < vectors.size(); ++p) {
    for (std::int64_t r = 0; r < assignment[p]; ++r) {
      Path path;
      for (auto c : vectors[p].sequence) {
        const auto& members = cls.classes[c];
        if (partition && next[c] >= members.size()) {
          throw Error(ErrorCode::kReconstructionFailed, "assignment overuses a class");
        }
        path.push_back(members[next[c]++ % members.size()]);
      }
      out.paths.push_back(std::move(path));
    }
  }
  return out;
}

PathSystem solve_nd(const Graph& g, Variant variant) {
  if (variant.kind == PathKind::kUnrestricted) {
    throw Error(ErrorCode::kUnsupportedInput, "nd solver handles shortest and induced paths");
  }
  PathSystem result{{}, variant};
  for (const auto& comp : connected_components(g)) {
    Graph sub = g.induced_subgraph(comp);
    for (const auto& p : solve_component(sub, variant)) {
      Path q;
      for (Vertex v : p) q.push_back(comp[v]);
      result.paths.push_back(std::move(q));
    }
  }
  std::sort(result.paths.begin(), result.paths.end());
  if (!verify(g, result).valid()) {
    throw Error(ErrorCode::kReconstructionFailed, "reconstructed system failed verification");
  }
  return result;
}

std::vector<IlpInstance> nd_ilps(const Graph& g, Variant variant) {
  if (variant.kind == PathKind::kUnrestricted) {
    throw Error(ErrorCode::kUnsupportedInput, "nd solver handles shortest and induced paths");
  }
  std::vector<IlpInstance> out;
  for (const auto& comp : connected_components(g)) {
    Graph sub = g.induced_subgraph(comp);
    auto cls = classes_for(sub);
    auto vectors = enumerate_path_classes(sub, cls, variant.kind,
                                          variant.mode == CoverMode::kEdgeDisjointCover);
    out.push_back(build_ilp(cls, vectors, variant));
  }
  return out;
}

}  // namespace pathpart
