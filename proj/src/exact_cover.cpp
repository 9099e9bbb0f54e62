#include "drg/exact_cover.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>

#include "drg/error.hpp"
#include "json.hpp"

namespace drg {

std::string ExactCoverCheckpoint::to_json() const {
  nlohmann::json j;
  j["format"] = "drg-exact-cover-checkpoint";
  j["version"] = kVersion;
  j["num_items"] = num_items;
  j["num_options"] = num_options;
  j["forced"] = forced;
  j["path"] = path;
  j["nodes"] = nodes;
  return j.dump();
}

ExactCoverCheckpoint ExactCoverCheckpoint::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format") != "drg-exact-cover-checkpoint") throw Error("not an exact-cover checkpoint");
    if (j.at("version").get<int>() != kVersion)
      throw Error("unsupported checkpoint version " + j.at("version").dump());
    ExactCoverCheckpoint cp;
    cp.num_items = j.at("num_items").get<std::size_t>();
    cp.num_options = j.at("num_options").get<std::size_t>();
    cp.forced = j.at("forced").get<std::vector<std::uint32_t>>();
    cp.path = j.at("path").get<std::vector<std::uint32_t>>();
    cp.nodes = j.at("nodes").get<std::uint64_t>();
    return cp;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed checkpoint: ") + e.what());
  }
}

ExactCoverSolver::ExactCoverSolver(std::size_t num_items, const std::vector<std::vector<std::uint32_t>>& options)
    : num_items_(num_items) {
  const std::size_t headers = num_items + 1;
  std::size_t total = headers;
  for (const auto& o : options) total += o.size();
  left_.resize(headers);
  right_.resize(headers);
  up_.resize(total);
  down_.resize(total);
  top_.resize(total);
  len_.assign(headers, 0);
  option_of_.assign(total, std::numeric_limits<std::uint32_t>::max());
  item_active_.assign(headers, 1);
  for (std::uint32_t h = 0; h < headers; ++h) {
    left_[h] = h == 0 ? static_cast<std::uint32_t>(num_items) : h - 1;
    right_[h] = h == num_items ? 0 : h + 1;
    up_[h] = down_[h] = h;
    top_[h] = h;
  }
  std::uint32_t node = static_cast<std::uint32_t>(headers);
  for (std::uint32_t o = 0; o < options.size(); ++o) {
    option_start_.push_back(node);
    option_size_.push_back(static_cast<std::uint32_t>(options[o].size()));
    if (options[o].empty()) throw Error("exact cover option " + std::to_string(o) + " is empty");
    for (std::uint32_t item : options[o]) {
      if (item >= num_items) throw Error("exact cover item " + std::to_string(item) + " out of range");
      const std::uint32_t h = item + 1;
      top_[node] = h;
      option_of_[node] = o;
      up_[node] = up_[h];
      down_[node] = h;
      down_[up_[h]] = node;
      up_[h] = node;
      ++len_[h];
      ++node;
    }
  }
}

std::uint32_t ExactCoverSolver::choose_item() const {
  std::uint32_t best = right_[0];
  for (std::uint32_t h = right_[best]; h != 0; h = right_[h])
    if (len_[h] < len_[best]) best = h;
  return best;
}

void ExactCoverSolver::cover(std::uint32_t h) {
  item_active_[h] = 0;
  left_[right_[h]] = left_[h];
  right_[left_[h]] = right_[h];
  for (std::uint32_t r = down_[h]; r != h; r = down_[r]) {
    const std::uint32_t o = option_of_[r];
    const std::uint32_t start = option_start_[o], end = start + option_size_[o];
    for (std::uint32_t j = start; j < end; ++j) {
      if (j == r) continue;
      up_[down_[j]] = up_[j];
      down_[up_[j]] = down_[j];
      --len_[top_[j]];
    }
  }
}

void ExactCoverSolver::uncover(std::uint32_t h) {
  for (std::uint32_t r = up_[h]; r != h; r = up_[r]) {
    const std::uint32_t o = option_of_[r];
    const std::uint32_t start = option_start_[o], end = start + option_size_[o];
    for (std::uint32_t j = end; j-- > start;) {
      if (j == r) continue;
      ++len_[top_[j]];
      up_[down_[j]] = j;
      down_[up_[j]] = j;
    }
  }
  left_[right_[h]] = h;
  right_[left_[h]] = h;
  item_active_[h] = 1;
}

void ExactCoverSolver::select(std::uint32_t node) {
  const std::uint32_t o = option_of_[node];
  const std::uint32_t start = option_start_[o], end = start + option_size_[o];
  for (std::uint32_t j = start; j < end; ++j)
    if (j != node) cover(top_[j]);
}

void ExactCoverSolver::deselect(std::uint32_t node) {
  const std::uint32_t o = option_of_[node];
  const std::uint32_t start = option_start_[o], end = start + option_size_[o];
  for (std::uint32_t j = end; j-- > start;)
    if (j != node) uncover(top_[j]);
}

bool ExactCoverSolver::force(std::uint32_t option) {
  if (option >= num_options()) throw Error("forced option " + std::to_string(option) + " out of range");
  if (!path_.empty()) throw Error("cannot force an option during a search");
  const std::uint32_t start = option_start_[option], end = start + option_size_[option];
  for (std::uint32_t j = start; j < end; ++j)
    if (!item_active_[top_[j]]) return false;
  for (std::uint32_t j = start; j < end; ++j) cover(top_[j]);
  forced_.push_back(option);
  return true;
}

std::vector<std::uint32_t> ExactCoverSolver::current_solution() const {
  std::vector<std::uint32_t> sol = forced_;
  for (std::uint32_t node : path_) sol.push_back(option_of_[node]);
  std::sort(sol.begin(), sol.end());
  return sol;
}

std::optional<std::vector<std::uint32_t>> ExactCoverSolver::top_level_options() const {
  if (right_[0] == 0) return std::nullopt;
  const std::uint32_t h = choose_item();
  if (len_[h] == 0) return std::nullopt;
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = down_[h]; r != h; r = down_[r]) out.push_back(option_of_[r]);
  return out;
}

void ExactCoverSolver::replay(const ExactCoverCheckpoint& cp) {
  if (cp.num_items != num_items_ || cp.num_options != num_options())
    throw Error("checkpoint was taken on a different exact cover instance");
  auto forced = forced_;
  std::sort(forced.begin(), forced.end());
  auto cp_forced = cp.forced;
  std::sort(cp_forced.begin(), cp_forced.end());
  if (forced != cp_forced) throw Error("checkpoint forced options differ from this solver's");
  for (std::uint32_t option : cp.path) {
    const std::uint32_t h = choose_item();
    if (h == 0) throw Error("checkpoint path is longer than the search tree");
    std::uint32_t r = down_[h];
    while (r != h && option_of_[r] != option) r = down_[r];
    if (r == h) throw Error("checkpoint option " + std::to_string(option) + " is not on the search path");
    cover(h);
    path_.push_back(r);
    select(r);
  }
  nodes_ = cp.nodes;
}

template <class OnSolution>
ExactCoverResult ExactCoverSolver::run(std::uint64_t budget, OnSolution&& on_solution) {
  const std::uint64_t limit =
      budget > std::numeric_limits<std::uint64_t>::max() - nodes_ ? std::numeric_limits<std::uint64_t>::max()
                                                                   : nodes_ + budget;
  ExactCoverResult res;
  bool backtrack = false;
  for (;;) {
    if (!backtrack) {
      if (right_[0] == 0) {
        if (!on_solution(current_solution())) {
          res.status = ExactCoverResult::Status::kSolved;
          res.solution = current_solution();
          break;
        }
        backtrack = true;
        continue;
      }
      if (nodes_ >= limit) {
        res.status = ExactCoverResult::Status::kBudgetExhausted;
        ExactCoverCheckpoint cp;
        cp.num_items = num_items_;
        cp.num_options = num_options();
        cp.forced = forced_;
        for (std::uint32_t node : path_) cp.path.push_back(option_of_[node]);
        cp.nodes = nodes_;
        res.checkpoint = std::move(cp);
        break;
      }
      const std::uint32_t h = choose_item();
      if (len_[h] == 0) {
        backtrack = true;
        continue;
      }
      cover(h);
      const std::uint32_t r = down_[h];
      path_.push_back(r);
      select(r);
      ++nodes_;
      continue;
    }
    if (path_.empty()) {
      res.status = ExactCoverResult::Status::kNoSolution;
      break;
    }
    std::uint32_t r = path_.back();
    const std::uint32_t h = top_[r];
    deselect(r);
    r = down_[r];
    if (r == h) {
      uncover(h);
      path_.pop_back();
      continue;
    }
    path_.back() = r;
    select(r);
    ++nodes_;
    backtrack = false;
  }
  res.nodes = nodes_;
  // Unwind so the solver can be reused or re-forced.
  while (!path_.empty()) {
    const std::uint32_t r = path_.back();
    deselect(r);
    uncover(top_[r]);
    path_.pop_back();
  }
  return res;
}

ExactCoverResult ExactCoverSolver::solve(std::uint64_t budget, const ExactCoverCheckpoint* resume) {
  nodes_ = 0;
  if (resume) replay(*resume);
  return run(budget, [](const std::vector<std::uint32_t>&) { return false; });
}

std::uint64_t ExactCoverSolver::enumerate(std::uint64_t budget,
                                          const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
  nodes_ = 0;
  return run(budget, visit).nodes;
}

ExactCoverResult solve_parallel(const ExactCoverSolver& base, std::uint64_t budget) {
  const auto top = base.top_level_options();
  if (!top) {
    ExactCoverSolver s = base;
    return s.solve(budget);
  }
  const auto& branches = *top;
  const auto nb = static_cast<std::int64_t>(branches.size());
  constexpr std::uint64_t kSlice = 1 << 16;
  std::atomic<std::int64_t> winner{nb};
  std::atomic<std::uint64_t> spent{static_cast<std::uint64_t>(nb)};  // one node per top-level choice
  std::atomic<bool> out_of_budget{false};
  std::vector<ExactCoverResult> results(branches.size());
  std::vector<char> finished(branches.size(), 0);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < nb; ++j) {
    if (winner.load() < j || out_of_budget.load()) continue;
    ExactCoverSolver s = base;
    s.force(branches[static_cast<std::size_t>(j)]);
    std::optional<ExactCoverCheckpoint> cp;
    for (;;) {
      auto r = s.solve(kSlice, cp ? &*cp : nullptr);
      const std::uint64_t used = r.nodes - (cp ? cp->nodes : 0);
      const std::uint64_t total = spent.fetch_add(used) + used;
      if (r.status != ExactCoverResult::Status::kBudgetExhausted) {
        results[static_cast<std::size_t>(j)] = std::move(r);
        finished[static_cast<std::size_t>(j)] = 1;
        if (results[static_cast<std::size_t>(j)].status == ExactCoverResult::Status::kSolved) {
          std::int64_t cur = winner.load();
          while (j < cur && !winner.compare_exchange_weak(cur, j)) {
          }
        }
        break;
      }
      if (total >= budget) {
        out_of_budget = true;
        break;
      }
      if (winner.load() < j) break;
      cp = std::move(r.checkpoint);
    }
  }

  ExactCoverResult res;
  res.nodes = spent.load();
  const std::int64_t w = winner.load();
  // The winner is valid only if every lower branch ran to completion.
  bool lower_complete = true;
  for (std::int64_t j = 0; j < std::min(w, nb); ++j)
    if (!finished[static_cast<std::size_t>(j)]) lower_complete = false;
  if (w < nb && lower_complete) {
    res.status = ExactCoverResult::Status::kSolved;
    res.solution = results[static_cast<std::size_t>(w)].solution;
    return res;
  }
  const bool all_done = std::all_of(finished.begin(), finished.end(), [](char c) { return c != 0; });
  res.status = all_done ? ExactCoverResult::Status::kNoSolution : ExactCoverResult::Status::kBudgetExhausted;
  return res;
}

}  // namespace drg
