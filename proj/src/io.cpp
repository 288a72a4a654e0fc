// Copyright 2026 The intervalcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "intervalcover/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <random>
#include <set>

#include "json.hpp"

namespace intervalcover {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

std::string describe(const std::string& path, std::optional<std::size_t> line, const std::string& message) {
  std::string out = path.empty() ? std::string("<root>") : path;
  if (line) out += " (line " + std::to_string(*line) + ")";
  return out + ": " + message;
}

// Maps the JSON path of every value ("jobs[2].e") to the line it starts on.
// Only run on text nlohmann already accepted, so it can assume validity.
class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    skip_ws();
    value("");
  }

  std::optional<std::size_t> find(std::string path) const {
    while (true) {
      if (auto it = lines_.find(path); it != lines_.end()) return it->second;
      if (path.empty()) return std::nullopt;
      const std::size_t cut = path.find_last_of(".[");
      path = cut == std::string::npos ? std::string() : path.substr(0, cut);
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string string_token() {
    std::string out;
    ++pos_;  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) out += text_[pos_++];
    }
    ++pos_;  // closing quote
    return out;
  }

  void value(const std::string& path) {
    if (pos_ >= text_.size()) return;
    lines_.emplace(path, line_);
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++pos_;  // ':'
        skip_ws();
        value(path.empty() ? key : path + "." + key);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      skip_ws();
      std::size_t index = 0;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        value(path + "[" + std::to_string(index++) + "]");
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        skip_ws();
      }
      ++pos_;
    } else if (c == '"') {
      string_token();
    } else {
      while (pos_ < text_.size() && std::string_view(",]} \t\r\n").find(text_[pos_]) == std::string_view::npos) ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::size_t> lines_;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    try {
      root_ = json::parse(text);
    } catch (const json::parse_error& err) {
      std::size_t line = 1;
      const std::size_t upto = std::min<std::size_t>(err.byte, text.size());
      for (std::size_t i = 0; i + 1 < upto; ++i) line += text[i] == '\n' ? 1 : 0;
      throw ParseError("", line, std::string("malformed JSON: ") + err.what());
    }
    index_.emplace(text);
  }

  const json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ParseError(path, index_->find(path), message);
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }
  static std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

  void expect_object(const json& node, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!node.is_object()) fail(path, "expected an object");
    for (const auto& item : node.items()) {
      const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
      if (!known) fail(join(path, item.key()), "unknown field");
    }
  }

  const json& array(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(join(path, key), "missing required field");
    const json& node = obj.at(key);
    if (!node.is_array()) fail(join(path, key), "expected an array");
    return node;
  }

  std::int64_t integer(const json& node, const std::string& path) const {
    if (!node.is_number_integer()) fail(path, "expected an integer");
    if (node.is_number_unsigned() && node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      fail(path, "integer out of range");
    }
    return node.get<std::int64_t>();
  }

  std::int64_t integer(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(join(path, key), "missing required field");
    return integer(obj.at(key), join(path, key));
  }

  std::optional<std::int64_t> optional_integer(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) return std::nullopt;
    return integer(obj.at(key), join(path, key));
  }

  void version(const json& obj) const {
    if (integer(obj, "", "version") != 1) fail("version", "unsupported version (expected 1)");
  }

 private:
  std::string_view text_;
  json root_;
  std::optional<LineIndex> index_;
};

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json cost_json(Cost cost) {
  return cost.is_finite() ? ordered_json(cost.value()) : ordered_json("infeasible");
}

}  // namespace

ParseError::ParseError(std::string path, std::optional<std::size_t> line, const std::string& message)
    : InvalidInput(describe(path, line, message)), path_(std::move(path)), line_(line) {}

const char* to_string(Problem problem) {
  switch (problem) {
    case Problem::kPartial: return "partial";
    case Problem::kPrize: return "prize";
    case Problem::kLspc: return "lspc";
    case Problem::kFullCover: return "fullcover";
  }
  return "unknown";
}

std::optional<Problem> problem_from_name(std::string_view name) {
  for (Problem p : {Problem::kPartial, Problem::kPrize, Problem::kLspc, Problem::kFullCover}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

Instance parse_instance(std::string_view text) {
  const Reader in(text);
  const json& root = in.root();
  in.expect_object(root, "", {"version", "T", "k", "jobs", "resources"});
  in.version(root);

  Instance inst;
  const std::int64_t T = in.integer(root, "", "T");
  if (T < 1 || T > kDefaultMaxTimeline) in.fail("T", "T must lie in [1, " + std::to_string(kDefaultMaxTimeline) + "]");
  inst.T = static_cast<Timeslot>(T);

  auto interval = [&](const json& obj, const std::string& path, Timeslot& s, Timeslot& e) {
    const std::int64_t start = in.integer(obj, path, "s");
    const std::int64_t end = in.integer(obj, path, "e");
    if (start < 1 || start > T) in.fail(Reader::join(path, "s"), "s outside [1, T]");
    if (end < 1 || end > T) in.fail(Reader::join(path, "e"), "e outside [1, T]");
    if (end < start) in.fail(Reader::join(path, "e"), "e < s");
    s = static_cast<Timeslot>(start);
    e = static_cast<Timeslot>(end);
  };

  const json& jobs = in.array(root, "", "jobs");
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const std::string path = Reader::at("jobs", i);
    in.expect_object(jobs[i], path, {"s", "e", "penalty"});
    Job job;
    job.id = static_cast<int>(i);
    interval(jobs[i], path, job.s, job.e);
    job.penalty = in.optional_integer(jobs[i], path, "penalty");
    if (job.penalty && *job.penalty < 0) in.fail(Reader::join(path, "penalty"), "penalty must be >= 0");
    inst.jobs.push_back(job);
  }

  const json& resources = in.array(root, "", "resources");
  for (std::size_t i = 0; i < resources.size(); ++i) {
    const std::string path = Reader::at("resources", i);
    in.expect_object(resources[i], path, {"s", "e", "w", "c"});
    Resource r;
    r.id = static_cast<int>(i);
    interval(resources[i], path, r.s, r.e);
    r.w = in.integer(resources[i], path, "w");
    r.c = in.integer(resources[i], path, "c");
    if (r.w < 1) in.fail(Reader::join(path, "w"), "capacity must be >= 1");
    if (r.c < 0) in.fail(Reader::join(path, "c"), "cost must be >= 0");
    inst.resources.push_back(r);
  }

  inst.k = in.optional_integer(root, "", "k");
  if (inst.k && (*inst.k < 0 || *inst.k > static_cast<std::int64_t>(inst.jobs.size()))) {
    in.fail("k", "k must lie in [0, number of jobs]");
  }
  inst.validate();
  return inst;
}

std::string emit_instance(const Instance& inst) {
  ordered_json doc;
  doc["version"] = 1;
  doc["T"] = inst.T;
  if (inst.k) doc["k"] = *inst.k;
  doc["jobs"] = ordered_json::array();
  for (const Job& j : inst.jobs) {
    ordered_json job{{"s", j.s}, {"e", j.e}};
    if (j.penalty) job["penalty"] = *j.penalty;
    doc["jobs"].push_back(job);
  }
  doc["resources"] = ordered_json::array();
  for (const Resource& r : inst.resources) {
    doc["resources"].push_back(ordered_json{{"s", r.s}, {"e", r.e}, {"w", r.w}, {"c", r.c}});
  }
  return dump(doc);
}

LspcInstance parse_lspc(std::string_view text) {
  const Reader in(text);
  const json& root = in.root();
  in.expect_object(root, "", {"version", "demands", "shorts", "longs", "k"});
  in.version(root);

  LspcInstance inst;
  const json& demands = in.array(root, "", "demands");
  if (demands.empty() || demands.size() > static_cast<std::size_t>(kDefaultMaxTimeline)) {
    in.fail("demands", "need between 1 and the maximum timeline length of demands");
  }
  inst.T = static_cast<Timeslot>(demands.size());
  for (std::size_t t = 0; t < demands.size(); ++t) {
    const std::int64_t d = in.integer(demands[t], Reader::at("demands", t));
    if (d < 0) in.fail(Reader::at("demands", t), "demand must be >= 0");
    inst.demand.push_back(d);
  }

  auto capacity_cost = [&](const json& obj, const std::string& path, std::int64_t& w, std::int64_t& c) {
    w = in.integer(obj, path, "w");
    c = in.integer(obj, path, "c");
    if (w < 1) in.fail(Reader::join(path, "w"), "capacity must be >= 1");
    if (c < 0) in.fail(Reader::join(path, "c"), "cost must be >= 0");
  };

  const json& shorts = in.array(root, "", "shorts");
  for (std::size_t i = 0; i < shorts.size(); ++i) {
    const std::string path = Reader::at("shorts", i);
    in.expect_object(shorts[i], path, {"t", "w", "c"});
    ShortResource r;
    r.id = static_cast<int>(i);
    const std::int64_t t = in.integer(shorts[i], path, "t");
    if (t < 1 || t > inst.T) in.fail(Reader::join(path, "t"), "t outside [1, T]");
    r.t = static_cast<Timeslot>(t);
    capacity_cost(shorts[i], path, r.w, r.c);
    inst.shorts.push_back(r);
  }

  const json& longs = in.array(root, "", "longs");
  for (std::size_t i = 0; i < longs.size(); ++i) {
    const std::string path = Reader::at("longs", i);
    in.expect_object(longs[i], path, {"s", "e", "w", "c"});
    LongResource r;
    r.id = static_cast<int>(i);
    const std::int64_t s = in.integer(longs[i], path, "s");
    const std::int64_t e = in.integer(longs[i], path, "e");
    if (s < 1 || s > inst.T) in.fail(Reader::join(path, "s"), "s outside [1, T]");
    if (e < 1 || e > inst.T) in.fail(Reader::join(path, "e"), "e outside [1, T]");
    if (e < s) in.fail(Reader::join(path, "e"), "e < s");
    r.s = static_cast<Timeslot>(s);
    r.e = static_cast<Timeslot>(e);
    capacity_cost(longs[i], path, r.w, r.c);
    inst.longs.push_back(r);
  }

  inst.k = in.integer(root, "", "k");
  if (inst.k < 0) in.fail("k", "k must be >= 0");
  inst.validate();
  return inst;
}

std::string emit_lspc(const LspcInstance& inst) {
  ordered_json doc;
  doc["version"] = 1;
  doc["k"] = inst.k;
  doc["demands"] = inst.demand;
  doc["shorts"] = ordered_json::array();
  for (const ShortResource& r : inst.shorts) doc["shorts"].push_back(ordered_json{{"t", r.t}, {"w", r.w}, {"c", r.c}});
  doc["longs"] = ordered_json::array();
  for (const LongResource& r : inst.longs) {
    doc["longs"].push_back(ordered_json{{"s", r.s}, {"e", r.e}, {"w", r.w}, {"c", r.c}});
  }
  return dump(doc);
}

SolutionFile parse_solution(std::string_view text) {
  const Reader in(text);
  const json& root = in.root();
  if (!root.is_object()) in.fail("", "expected an object");
  if (!root.contains("problem") || !root.at("problem").is_string()) in.fail("problem", "missing problem tag");
  const auto problem = problem_from_name(root.at("problem").get<std::string>());
  if (!problem) in.fail("problem", "unknown problem tag");

  SolutionFile sol;
  sol.problem = *problem;
  if (sol.problem == Problem::kLspc) {
    in.expect_object(root, "", {"version", "problem", "algorithm", "cost", "longs", "shorts", "coverage"});
  } else {
    in.expect_object(root, "", {"version", "problem", "algorithm", "cost", "resources", "covered"});
  }
  in.version(root);

  if (root.contains("algorithm")) {
    if (!root.at("algorithm").is_string()) in.fail("algorithm", "expected a string");
    sol.algorithm = root.at("algorithm").get<std::string>();
  }
  if (!root.contains("cost")) in.fail("cost", "missing required field");
  const json& cost = root.at("cost");
  if (cost.is_string() && cost.get<std::string>() == "infeasible") {
    sol.cost = Cost::infeasible();
  } else {
    const std::int64_t value = in.integer(cost, "cost");
    if (value < 0) in.fail("cost", "cost must be >= 0");
    sol.cost = Cost(value);
  }

  auto counts = [&](const char* key) {
    const json& items = in.array(root, "", key);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string path = Reader::at(key, i);
      in.expect_object(items[i], path, {"id", "count"});
      const std::int64_t id = in.integer(items[i], path, "id");
      const std::int64_t count = in.integer(items[i], path, "count");
      if (id < 0 || id > INT32_MAX) in.fail(Reader::join(path, "id"), "id out of range");
      if (count < 1) in.fail(Reader::join(path, "count"), "count must be >= 1");
      if (sol.resources.count(static_cast<int>(id)) != 0) in.fail(Reader::join(path, "id"), "duplicate id");
      sol.resources.set(static_cast<int>(id), count);
    }
  };
  auto ids = [&](const char* key, std::vector<int>& out) {
    const json& items = in.array(root, "", key);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::int64_t id = in.integer(items[i], Reader::at(key, i));
      if (id < 0 || id > INT32_MAX) in.fail(Reader::at(key, i), "id out of range");
      out.push_back(static_cast<int>(id));
    }
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) in.fail(key, "duplicate id");
    out = sorted;
  };

  if (sol.problem == Problem::kLspc) {
    counts("longs");
    ids("shorts", sol.shorts);
    const json& coverage = in.array(root, "", "coverage");
    for (std::size_t t = 0; t < coverage.size(); ++t) sol.coverage.push_back(in.integer(coverage[t], Reader::at("coverage", t)));
  } else {
    counts("resources");
    ids("covered", sol.covered);
  }
  return sol;
}

std::string emit_solution(const SolutionFile& sol) {
  ordered_json doc;
  doc["version"] = 1;
  doc["problem"] = to_string(sol.problem);
  if (sol.algorithm) doc["algorithm"] = *sol.algorithm;
  doc["cost"] = cost_json(sol.cost);
  ordered_json counts = ordered_json::array();
  for (const auto& [id, count] : sol.resources.counts()) counts.push_back(ordered_json{{"id", id}, {"count", count}});
  if (sol.problem == Problem::kLspc) {
    doc["longs"] = counts;
    doc["shorts"] = sol.shorts;
    doc["coverage"] = sol.coverage;
  } else {
    doc["resources"] = counts;
    doc["covered"] = sol.covered;
  }
  return dump(doc);
}

SolutionFile to_solution_file(Problem problem, const CoverResult& result) {
  SolutionFile file;
  file.problem = problem;
  file.cost = result.cost;
  file.resources = result.solution.multiset;
  file.covered = result.solution.covered;
  return file;
}

SolutionFile to_solution_file(const LspcSolution& sol) {
  SolutionFile file;
  file.problem = Problem::kLspc;
  file.cost = sol.cost;
  file.resources = sol.longs;
  file.shorts = sol.shorts;
  file.coverage = sol.coverage;
  return file;
}

PartialSolution to_partial_solution(const SolutionFile& file) {
  PartialSolution sol;
  sol.multiset = file.resources;
  sol.covered = file.covered;
  return sol;
}

LspcSolution to_lspc_solution(const SolutionFile& file) {
  LspcSolution sol;
  sol.longs = file.resources;
  sol.shorts = file.shorts;
  sol.coverage = file.coverage;
  sol.cost = file.cost;
  return sol;
}

const char* to_string(GenerateProfile profile) {
  switch (profile) {
    case GenerateProfile::kSingleMountain: return "single-mountain";
    case GenerateProfile::kMountainRange: return "mountain-range";
    case GenerateProfile::kUniformRandom: return "uniform-random";
    case GenerateProfile::kLspcRandom: return "lspc-random";
  }
  return "unknown";
}

std::optional<GenerateProfile> generate_profile_from_name(std::string_view name) {
  for (GenerateProfile p : {GenerateProfile::kSingleMountain, GenerateProfile::kMountainRange,
                            GenerateProfile::kUniformRandom, GenerateProfile::kLspcRandom}) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

namespace {

// mt19937_64 output is fixed by the standard; the reduction to a range is
// done here so that files are identical across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::int64_t operator()(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

void check_params(const GenerateParams& params) {
  if (params.jobs < 0 || params.resources < 0 || params.shorts < 0 || params.longs < 0) {
    throw InvalidInput("generator sizes must be >= 0");
  }
  if (params.T < 1 || params.T > kDefaultMaxTimeline) throw InvalidInput("generator T must lie in [1, max timeline]");
  if (params.max_w < 1 || params.max_c < 1 || params.max_penalty < 0 || params.max_demand < 0) {
    throw InvalidInput("generator needs max_w >= 1, max_c >= 1, max_penalty >= 0, max_demand >= 0");
  }
}

Job job_around(Draw& draw, int id, Timeslot lo, Timeslot peak, Timeslot hi) {
  Job j;
  j.id = id;
  j.s = static_cast<Timeslot>(draw(lo, peak));
  j.e = static_cast<Timeslot>(draw(peak, hi));
  return j;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, GenerateProfile profile, const GenerateParams& params) {
  if (profile == GenerateProfile::kLspcRandom) throw InvalidInput("lspc-random generates LSPC instances");
  check_params(params);
  Draw draw(seed);
  Instance inst;
  inst.T = params.T;
  const Timeslot T = params.T;

  switch (profile) {
    case GenerateProfile::kSingleMountain: {
      const auto peak = static_cast<Timeslot>(draw(1, T));
      for (int i = 0; i < params.jobs; ++i) inst.jobs.push_back(job_around(draw, i, 1, peak, T));
      break;
    }
    case GenerateProfile::kMountainRange: {
      // Disjoint blocks, one mountain per block.
      const int blocks = static_cast<int>(std::min<std::int64_t>(draw(2, 3), T));
      std::vector<std::pair<Timeslot, Timeslot>> bounds;
      for (int b = 0; b < blocks; ++b) {
        const auto lo = static_cast<Timeslot>(1 + static_cast<std::int64_t>(b) * T / blocks);
        const auto hi = static_cast<Timeslot>(static_cast<std::int64_t>(b + 1) * T / blocks);
        bounds.emplace_back(lo, hi);
      }
      std::vector<Timeslot> peaks;
      for (const auto& [lo, hi] : bounds) peaks.push_back(static_cast<Timeslot>(draw(lo, hi)));
      for (int i = 0; i < params.jobs; ++i) {
        const auto b = static_cast<std::size_t>(draw(0, blocks - 1));
        inst.jobs.push_back(job_around(draw, i, bounds[b].first, peaks[b], bounds[b].second));
      }
      break;
    }
    case GenerateProfile::kUniformRandom: {
      for (int i = 0; i < params.jobs; ++i) {
        Job j;
        j.id = i;
        Timeslot a = static_cast<Timeslot>(draw(1, T));
        Timeslot b = static_cast<Timeslot>(draw(1, T));
        j.s = std::min(a, b);
        j.e = std::max(a, b);
        inst.jobs.push_back(j);
      }
      break;
    }
    case GenerateProfile::kLspcRandom: break;
  }

  for (int i = 0; i < params.resources; ++i) {
    Resource r;
    r.id = i;
    const auto a = static_cast<Timeslot>(draw(1, T));
    const auto b = static_cast<Timeslot>(draw(1, T));
    r.s = std::min(a, b);
    r.e = std::max(a, b);
    r.w = draw(1, params.max_w);
    r.c = draw(1, params.max_c);
    inst.resources.push_back(r);
  }
  std::vector<bool> reached(static_cast<std::size_t>(T), false);
  for (const Resource& r : inst.resources) {
    for (Timeslot t = r.s; t <= r.e; ++t) reached[static_cast<std::size_t>(t - 1)] = true;
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    Resource backbone;
    backbone.id = static_cast<int>(inst.resources.size());
    backbone.s = 1;
    backbone.e = T;
    backbone.w = draw(1, params.max_w);
    backbone.c = draw(1, params.max_c);
    inst.resources.push_back(backbone);
  }

  if (params.penalties) {
    for (Job& j : inst.jobs) j.penalty = draw(0, params.max_penalty);
  }
  const auto n = static_cast<std::int64_t>(inst.jobs.size());
  inst.k = params.k ? std::min(*params.k, n) : draw(0, n);
  inst.validate();
  return inst;
}

LspcInstance generate_lspc(std::uint64_t seed, const GenerateParams& params) {
  check_params(params);
  Draw draw(seed);
  LspcInstance inst;
  inst.T = params.T;
  for (Timeslot t = 1; t <= params.T; ++t) inst.demand.push_back(draw(0, params.max_demand));
  for (int i = 0; i < params.shorts; ++i) {
    ShortResource r;
    r.id = i;
    r.t = static_cast<Timeslot>(draw(1, params.T));
    r.w = draw(1, params.max_w);
    r.c = draw(1, params.max_c);
    inst.shorts.push_back(r);
  }
  for (int i = 0; i < params.longs; ++i) {
    LongResource r;
    r.id = i;
    const auto a = static_cast<Timeslot>(draw(1, params.T));
    const auto b = static_cast<Timeslot>(draw(1, params.T));
    r.s = std::min(a, b);
    r.e = std::max(a, b);
    r.w = draw(1, params.max_w);
    r.c = draw(1, params.max_c);
    inst.longs.push_back(r);
  }
  const std::int64_t total = inst.total_demand();
  inst.k = params.k ? std::min(*params.k, total) : draw(0, total);
  inst.validate();
  return inst;
}

std::string generate(std::uint64_t seed, GenerateProfile profile, const GenerateParams& params) {
  if (profile == GenerateProfile::kLspcRandom) return emit_lspc(generate_lspc(seed, params));
  return emit_instance(generate_instance(seed, profile, params));
}

}  // namespace intervalcover
