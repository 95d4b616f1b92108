#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pathpart {

enum class RowOp { kEqual, kGreaterEqual, kLessEqual };

struct IlpRow {
  std::vector<std::int64_t> coeffs;
  RowOp op = RowOp::kEqual;
  std::int64_t rhs = 0;
};

// minimise sum(objective[i] * z[i]) over non-negative integers z.
// Coefficients are non-negative; the solver requires a unit objective.
struct IlpInstance {
  std::vector<std::int64_t> objective;
  std::vector<IlpRow> rows;

  std::size_t num_vars() const { return objective.size(); }
};

// "min c1 c2 ..." followed by one "<coeffs> <op> <rhs>" line per row.
std::string to_lp_text(const IlpInstance& ilp);

// Depth-first branch and bound. nullopt when infeasible.
std::optional<std::vector<std::int64_t>> solve_ilp(const IlpInstance& ilp);

// Visits every feasible z whose objective equals `value`, in a fixed order.
// Stops when visit returns false.
void enumerate_ilp_solutions(const IlpInstance& ilp, std::int64_t value,
                             const std::function<bool(const std::vector<std::int64_t>&)>& visit);

}  // namespace pathpart
