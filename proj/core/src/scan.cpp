#include "zsdl/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "zsdl/strong_resolving.hpp"
#include "zsdl/tree_structure.hpp"
#include "zsdl/zero_forcing.hpp"

namespace zsdl {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

GraphFacts::GraphFacts(Graph g) : g_(std::move(g)) {}

bool GraphFacts::connected() {
  if (!connected_) connected_ = g_.order() > 0 && is_connected(g_);
  return *connected_;
}

int GraphFacts::sigma() {
  if (!sigma_) sigma_ = leaf_count(g_);
  return *sigma_;
}

GraphClass GraphFacts::graph_class() {
  if (!class_) class_ = classify(g_);
  return *class_;
}

int GraphFacts::z() {
  if (!z_) z_ = zero_forcing_value(g_);
  return *z_;
}

int GraphFacts::sdim() {
  if (!sdim_) sdim_ = strong_metric_dimension_value(g_);
  return *sdim_;
}

int GraphFacts::dim() {
  if (!dim_) dim_ = metric_dimension(g_).value;
  return *dim_;
}

int GraphFacts::mmd_cover() {
  if (!mmd_cover_) mmd_cover_ = mmd_vertex_cover_lower_bound(mmd_graph(g_));
  return *mmd_cover_;
}

int GraphFacts::path_cover() {
  if (!path_cover_) path_cover_ = path_cover_number(g_).count;
  return *path_cover_;
}

const std::string& GraphFacts::graph6() {
  if (!graph6_) graph6_ = encode_graph6(g_);
  return *graph6_;
}

namespace {

bool extremal_better(const ExtremalRecord& a, const ExtremalRecord& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.graph6 < b.graph6;
}

/// Partial aggregate for one claim; merging is commutative and associative.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, ExtremalRecord> extremal;

  void observe(const NamedValue& v, const std::string& graph6) {
    ExtremalRecord candidate{v.name, v.value, graph6};
    auto [it, inserted] = extremal.try_emplace(v.name, candidate);
    if (!inserted && extremal_better(candidate, it->second)) it->second = candidate;
  }

  void trim_counterexamples() {
    std::sort(counterexamples.begin(), counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                return std::tie(a.graph6, a.base_graph6) < std::tie(b.graph6, b.base_graph6);
              });
    if (counterexamples.size() > kMaxListedCounterexamples) counterexamples.resize(kMaxListedCounterexamples);
  }

  void merge(Tally&& other) {
    checked += other.checked;
    skipped += other.skipped;
    failures += other.failures;
    for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
    trim_counterexamples();
    for (auto& [name, rec] : other.extremal) observe({name, rec.value}, rec.graph6);
  }
};

/// Shards [0, size) into chunks handed out to `jobs` workers. Each worker
/// folds into its own State; states are merged after all workers finish.
template <class State, class Work>
State parallel_fold(std::uint64_t size, int jobs, Work&& work) {
  constexpr std::uint64_t kChunk = 2048;
  jobs = std::max(1, jobs);
  std::atomic<std::uint64_t> next{0};
  std::vector<State> states(static_cast<std::size_t>(jobs));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](State& state) {
    try {
      while (true) {
        std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= size) break;
        std::uint64_t end = std::min(size, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) work(state, i);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = size;
    }
  };
  if (jobs == 1) {
    run(states.front());
  } else {
    std::vector<std::thread> workers;
    for (auto& s : states) workers.emplace_back(run, std::ref(s));
    for (auto& w : workers) w.join();
  }
  if (failure) std::rethrow_exception(failure);
  State total = std::move(states.front());
  for (std::size_t i = 1; i < states.size(); ++i) total.merge(std::move(states[i]));
  return total;
}

struct ScanState {
  std::vector<Tally> tallies;
  // T+e members arrive grouped by tree; keep the last base tree's facts.
  std::optional<GraphFacts> base;

  void merge(ScanState&& other) {
    if (tallies.empty()) {
      tallies = std::move(other.tallies);
      return;
    }
    for (std::size_t i = 0; i < other.tallies.size(); ++i) tallies[i].merge(std::move(other.tallies[i]));
  }
};

}  // namespace

std::vector<ScanReport> run_claims(std::span<const std::string> claim_ids, const FamilySpec& family,
                                   const ScanOptions& options) {
  std::vector<const Claim*> claims;
  for (const auto& id : claim_ids) claims.push_back(&find_claim(id));
  auto members = make_enumeration(family, options.limits);
  auto started = std::chrono::steady_clock::now();

  auto total = parallel_fold<ScanState>(members->size(), options.jobs, [&](ScanState& state, std::uint64_t index) {
    if (state.tallies.empty()) state.tallies.resize(claims.size());
    auto item = members->at(index);
    if (!item) return;
    GraphFacts facts(item->graph);
    GraphFacts* base = nullptr;
    if (item->base) {
      if (!state.base || state.base->graph() != *item->base) state.base.emplace(*item->base);
      base = &*state.base;
    }
    for (std::size_t c = 0; c < claims.size(); ++c) {
      Tally& tally = state.tallies[c];
      ClaimOutcome outcome = claims[c]->check(*item, facts, base);
      if (outcome.status == ClaimOutcome::Status::NotApplicable) {
        ++tally.skipped;
        continue;
      }
      ++tally.checked;
      for (const auto& obs : outcome.observations) tally.observe(obs, facts.graph6());
      if (outcome.status == ClaimOutcome::Status::Fails) {
        ++tally.failures;
        Counterexample cx{facts.graph6(), std::nullopt, std::move(outcome.values)};
        if (base) cx.base_graph6 = base->graph6();
        tally.counterexamples.push_back(std::move(cx));
        if (tally.counterexamples.size() > 4 * kMaxListedCounterexamples) tally.trim_counterexamples();
      }
    }
  });
  total.tallies.resize(claims.size());

  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::vector<ScanReport> reports;
  for (std::size_t c = 0; c < claims.size(); ++c) {
    Tally& t = total.tallies[c];
    t.trim_counterexamples();
    ScanReport r;
    r.claim_id = claims[c]->id;
    r.reference = claims[c]->reference;
    r.family = family.to_string();
    r.graphs_checked = t.checked;
    r.graphs_skipped = t.skipped;
    r.counterexample_count = t.failures;
    r.counterexamples = std::move(t.counterexamples);
    for (auto& [name, rec] : t.extremal) r.extremal.push_back(rec);
    r.wall_seconds = seconds;
    reports.push_back(std::move(r));
  }
  return reports;
}

ScanReport run_claim(std::string_view claim_id, const FamilySpec& family, const ScanOptions& options) {
  std::string id(claim_id);
  return std::move(run_claims(std::span<const std::string>(&id, 1), family, options).front());
}

namespace {

bool ratio_better(const RatioRecord& a, const RatioRecord& b) {
  if (a.ratio != b.ratio) return a.ratio > b.ratio;
  return a.graph6 < b.graph6;
}

struct RatioState {
  RatioSummary summary;
  std::size_t top_k = 0;

  void keep_top() {
    std::sort(summary.top.begin(), summary.top.end(), ratio_better);
    // labeled families repeat graphs; equal graph6 means equal ratio, so duplicates are adjacent
    auto last = std::unique(summary.top.begin(), summary.top.end(),
                            [](const RatioRecord& a, const RatioRecord& b) { return a.graph6 == b.graph6; });
    summary.top.erase(last, summary.top.end());
    if (summary.top.size() > top_k) summary.top.resize(top_k);
  }

  void merge(RatioState&& other) {
    summary.checked += other.summary.checked;
    summary.skipped_trees += other.summary.skipped_trees;
    summary.skipped_disconnected += other.summary.skipped_disconnected;
    summary.negative += other.summary.negative;
    summary.zero += other.summary.zero;
    summary.positive += other.summary.positive;
    for (auto& r : other.summary.top) summary.top.push_back(std::move(r));
    top_k = std::max(top_k, other.top_k);
    keep_top();
  }
};

}  // namespace

RatioSummary ratio_explore(const FamilySpec& family, int top_k, const ScanOptions& options) {
  if (top_k < 0) throw std::invalid_argument("top-k must be >= 0");
  auto members = make_enumeration(family, options.limits);
  auto total = parallel_fold<RatioState>(members->size(), options.jobs, [&](RatioState& state, std::uint64_t index) {
    state.top_k = static_cast<std::size_t>(top_k);
    auto item = members->at(index);
    if (!item) return;
    GraphFacts f(item->graph);
    if (!f.connected()) {
      ++state.summary.skipped_disconnected;
      return;
    }
    int r = f.graph_class().cycle_rank;
    if (r == 0) {
      ++state.summary.skipped_trees;
      return;
    }
    RatioRecord rec{f.graph6(), f.z(), f.sdim(), r, Rational(f.z() - f.sdim(), r)};
    ++state.summary.checked;
    if (rec.ratio < Rational(0)) ++state.summary.negative;
    else if (rec.ratio == Rational(0)) ++state.summary.zero;
    else ++state.summary.positive;
    state.summary.top.push_back(std::move(rec));
    if (state.summary.top.size() > 4 * state.top_k + 64) state.keep_top();
  });
  total.top_k = static_cast<std::size_t>(top_k);
  total.keep_top();
  return std::move(total.summary);
}

}  // namespace zsdl
