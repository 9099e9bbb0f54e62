#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace drg {

/// Resumable position of a depth-first exact-cover search: the option chosen
/// at each level of the current branch, plus the work already spent.
struct ExactCoverCheckpoint {
  static constexpr int kVersion = 1;
  std::vector<std::uint32_t> path;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> forced;
  std::size_t num_items = 0;
  std::size_t num_options = 0;

  /// JSON document: {"format":"drg-exact-cover-checkpoint","version":1,...}.
  std::string to_json() const;
  static ExactCoverCheckpoint from_json(const std::string& text);
};

struct ExactCoverResult {
  enum class Status { kSolved, kNoSolution, kBudgetExhausted };
  Status status = Status::kNoSolution;
  std::vector<std::uint32_t> solution;  // option ids, ascending
  std::uint64_t nodes = 0;
  std::optional<ExactCoverCheckpoint> checkpoint;  // set on kBudgetExhausted
};

/// Algorithm X over dancing links. Every item is primary. Column choice is
/// minimum remaining options with ties to the lowest item index; options in
/// a column are tried in ascending option id.
class ExactCoverSolver {
 public:
  ExactCoverSolver(std::size_t num_items, const std::vector<std::vector<std::uint32_t>>& options);

  std::size_t num_items() const { return num_items_; }
  std::size_t num_options() const { return option_start_.size(); }

  /// Commits to an option before the search. Returns false when it clashes
  /// with an option already forced.
  bool force(std::uint32_t option);
  const std::vector<std::uint32_t>& forced() const { return forced_; }

  /// First solution in search order. `budget` bounds options tried; on
  /// exhaustion the result carries a checkpoint. `resume` continues a
  /// previous run on an identically constructed and forced solver.
  ExactCoverResult solve(std::uint64_t budget, const ExactCoverCheckpoint* resume = nullptr);

  /// Calls `visit` on every solution until it returns false or the budget is
  /// spent. Returns the number of options tried.
  std::uint64_t enumerate(std::uint64_t budget,
                          const std::function<bool(const std::vector<std::uint32_t>&)>& visit);

  /// Items of the first branching column after forcing, or nullopt when
  /// the matrix is already covered or some item has no option left.
  std::optional<std::vector<std::uint32_t>> top_level_options() const;

 private:
  std::uint32_t choose_item() const;
  void cover(std::uint32_t item);
  void uncover(std::uint32_t item);
  void select(std::uint32_t node);
  void deselect(std::uint32_t node);
  std::vector<std::uint32_t> current_solution() const;
  void replay(const ExactCoverCheckpoint& cp);

  template <class OnSolution>
  ExactCoverResult run(std::uint64_t budget, OnSolution&& on_solution);

  std::size_t num_items_;
  // Header nodes 1..num_items_ (0 is the root); option nodes after that.
  std::vector<std::uint32_t> left_, right_, up_, down_, top_, len_, option_of_;
  std::vector<std::uint32_t> option_start_;  // first node of each option
  std::vector<std::uint32_t> option_size_;
  std::vector<char> item_active_;
  std::vector<std::uint32_t> forced_;
  // Search state: chosen node per level.
  std::vector<std::uint32_t> path_;
  std::uint64_t nodes_ = 0;
};

/// Existence search with the top-level branches explored in parallel. The
/// returned solution is the one from the lowest-index successful branch, so
/// the result does not depend on thread count. The budget is shared.
ExactCoverResult solve_parallel(const ExactCoverSolver& base, std::uint64_t budget);

}  // namespace drg
