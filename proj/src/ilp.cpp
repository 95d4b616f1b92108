#include "pathpart/ilp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "pathpart/error.hpp"

namespace pathpart {
namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

class Brancher {
 public:
  explicit Brancher(const IlpInstance& ilp) : ilp_(ilp), n_(ilp.num_vars()) {
    for (auto c : ilp.objective) {
      if (c != 1) throw Error(ErrorCode::kUnsupportedInput, "ilp solver expects a unit objective");
    }
    for (const auto& row : ilp.rows) {
      if (row.coeffs.size() != n_) throw Error(ErrorCode::kUnsupportedInput, "ilp row width mismatch");
      for (auto a : row.coeffs) {
        if (a < 0) throw Error(ErrorCode::kUnsupportedInput, "negative ilp coefficient");
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::int64_t> weight(n_, 0);
    for (const auto& row : ilp.rows) {
      if (row.op == RowOp::kLessEqual) continue;
      for (std::size_t v = 0; v < n_; ++v) weight[v] += row.coeffs[v];
    }
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return weight[a] > weight[b]; });
    // suffix_max[r][i]: largest coefficient of row r among order_[i..].
    suffix_max_.assign(ilp.rows.size(), std::vector<std::int64_t>(n_ + 1, 0));
    for (std::size_t r = 0; r < ilp.rows.size(); ++r) {
      for (std::size_t i = n_; i-- > 0;) {
        suffix_max_[r][i] = std::max(suffix_max_[r][i + 1], ilp.rows[r].coeffs[order_[i]]);
      }
    }
    residual_.resize(ilp.rows.size());
    for (std::size_t r = 0; r < ilp.rows.size(); ++r) residual_[r] = ilp.rows[r].rhs;
    z_.assign(n_, 0);
  }

  // Minimum additional objective needed from order_[i..]; kUnbounded if the
  // covering rows cannot be met.
  std::int64_t lower_bound(std::size_t i) const {
    std::int64_t lb = 0;
    for (std::size_t r = 0; r < ilp_.rows.size(); ++r) {
      if (ilp_.rows[r].op == RowOp::kLessEqual) {
        if (residual_[r] < 0) return kUnbounded;
        continue;
      }
      if (residual_[r] <= 0) {
        if (residual_[r] < 0 && ilp_.rows[r].op == RowOp::kEqual) return kUnbounded;
        continue;
      }
      if (suffix_max_[r][i] == 0) return kUnbounded;
      lb = std::max(lb, ceil_div(residual_[r], suffix_max_[r][i]));
    }
    return lb;
  }

  bool satisfied() const {
    for (std::size_t r = 0; r < ilp_.rows.size(); ++r) {
      switch (ilp_.rows[r].op) {
        case RowOp::kEqual:
          if (residual_[r] != 0) return false;
          break;
        case RowOp::kGreaterEqual:
          if (residual_[r] > 0) return false;
          break;
        case RowOp::kLessEqual:
          if (residual_[r] < 0) return false;
          break;
      }
    }
    return true;
  }

  std::int64_t upper(std::size_t v, std::int64_t room) const {
    std::int64_t ub = room;
    std::int64_t cover_need = 0;
    bool capped = false;
    for (std::size_t r = 0; r < ilp_.rows.size(); ++r) {
      auto a = ilp_.rows[r].coeffs[v];
      if (a == 0) continue;
      if (ilp_.rows[r].op == RowOp::kGreaterEqual) {
        cover_need = std::max(cover_need, ceil_div(std::max<std::int64_t>(residual_[r], 0), a));
      } else {
        ub = std::min(ub, std::max<std::int64_t>(residual_[r], 0) / a);
        if (ilp_.rows[r].op == RowOp::kEqual) capped = true;
      }
    }
    if (!capped) ub = std::min(ub, cover_need);
    return ub;
  }

  void apply(std::size_t v, std::int64_t delta) {
    z_[v] += delta;
    for (std::size_t r = 0; r < ilp_.rows.size(); ++r) residual_[r] -= delta * ilp_.rows[r].coeffs[v];
  }

  // Optimisation: best_ holds the incumbent objective.
  void optimise(std::size_t i, std::int64_t obj) {
    if (satisfied()) {
      if (obj < best_) {
        best_ = obj;
        best_z_ = z_;
      }
      return;
    }
    if (i == n_) return;
    auto lb = lower_bound(i);
    if (lb >= kUnbounded || obj + lb >= best_) return;
    auto v = order_[i];
    auto ub = upper(v, best_ - 1 - obj);
    for (auto x = ub; x >= 0; --x) {
      apply(v, x);
      optimise(i + 1, obj + x);
      apply(v, -x);
    }
  }

  bool enumerate(std::size_t i, std::int64_t obj, std::int64_t target,
                 const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (i == n_) {
      if (obj == target && satisfied()) return visit(z_);
      return true;
    }
    auto lb = lower_bound(i);
    if (lb >= kUnbounded || obj + lb > target) return true;
    auto v = order_[i];
    auto ub = std::min(target - obj, upper_any(v, target - obj));
    for (auto x = ub; x >= 0; --x) {
      apply(v, x);
      bool go = enumerate(i + 1, obj + x, target, visit);
      apply(v, -x);
      if (!go) return false;
    }
    return true;
  }

  // Like upper() but without discarding over-covering values.
  std::int64_t upper_any(std::size_t v, std::int64_t room) const {
    std::int64_t ub = room;
    for (std::size_t r = 0; r < ilp_.rows.size(); ++r) {
      auto a = ilp_.rows[r].coeffs[v];
      if (a == 0 || ilp_.rows[r].op == RowOp::kGreaterEqual) continue;
      ub = std::min(ub, std::max<std::int64_t>(residual_[r], 0) / a);
    }
    return ub;
  }

  std::int64_t initial_cap() const {
    // Any feasible point has objective at most the sum of all rhs on
    // covering rows when every column covers something; fall back to a
    // large cap otherwise.
    std::int64_t cap = 1;
    for (const auto& row : ilp_.rows) {
      if (row.op != RowOp::kLessEqual) cap += std::max<std::int64_t>(row.rhs, 0);
    }
    return cap;
  }

  const IlpInstance& ilp_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::int64_t>> suffix_max_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int64_t> z_;
  std::int64_t best_ = kUnbounded;
  std::vector<std::int64_t> best_z_;
};

}  // namespace

std::string to_lp_text(const IlpInstance& ilp) {
  std::ostringstream out;
  out << "min";
  for (auto c : ilp.objective) out << ' ' << c;
  out << '\n';
  for (const auto& row : ilp.rows) {
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) out << (i ? " " : "") << row.coeffs[i];
    switch (row.op) {
      case RowOp::kEqual: out << " = "; break;
      case RowOp::kGreaterEqual: out << " >= "; break;
      case RowOp::kLessEqual: out << " <= "; break;
    }
    out << row.rhs << '\n';
  }
  return out.str();
}

std::optional<std::vector<std::int64_t>> solve_ilp(const IlpInstance& ilp) {
  Brancher b(ilp);
  b.best_ = b.initial_cap() + 1;
  b.optimise(0, 0);
  if (b.best_z_.empty() && !(ilp.num_vars() == 0 && b.satisfied())) return std::nullopt;
  if (b.best_z_.empty()) return std::vector<std::int64_t>{};
  return b.best_z_;
}

void enumerate_ilp_solutions(const IlpInstance& ilp, std::int64_t value,
                             const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  Brancher b(ilp);
  b.enumerate(0, 0, value, visit);
}

}  // namespace pathpart
