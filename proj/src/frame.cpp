#include "glpwb/frame.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace glpwb {

namespace {

void close_transitively(std::vector<Elem>& succ) {
  const int n = static_cast<int>(succ.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Elem reach = succ[static_cast<std::size_t>(a)];
      for (int b = 0; b < n; ++b)
        if (reach >> b & 1) reach |= succ[static_cast<std::size_t>(b)];
      if (reach != succ[static_cast<std::size_t>(a)]) {
        succ[static_cast<std::size_t>(a)] = reach;
        changed = true;
      }
    }
  }
}

}  // namespace

Frame Frame::from_edges(int worlds, const std::vector<std::pair<int, int>>& edges) {
  if (worlds < 1 || worlds > kMaxWorlds)
    throw std::invalid_argument("frame size must be between 1 and 16, got " +
                                std::to_string(worlds));
  std::vector<Elem> succ(static_cast<std::size_t>(worlds), 0);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= worlds || b < 0 || b >= worlds)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b)
      throw std::invalid_argument("reflexive pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") rejected");
    succ[static_cast<std::size_t>(a)] |= Elem{1} << b;
  }
  close_transitively(succ);
  for (int w = 0; w < worlds; ++w)
    if (succ[static_cast<std::size_t>(w)] >> w & 1)
      throw std::invalid_argument("edge set has a cycle through world " + std::to_string(w));
  Frame f;
  f.n_ = worlds;
  f.succ_ = std::move(succ);
  return f;
}

Frame Frame::unchecked(int worlds, std::vector<Elem> succ) {
  Frame f;
  f.n_ = worlds;
  f.succ_ = std::move(succ);
  return f;
}

std::vector<std::pair<int, int>> Frame::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (succ_[static_cast<std::size_t>(a)] >> b & 1) out.emplace_back(a, b);
  return out;
}

Elem Frame::box(Elem x) const {
  if (x & ~full()) throw std::invalid_argument("element does not belong to this frame");
  Elem r = 0;
  for (int w = 0; w < n_; ++w)
    if ((succ_[static_cast<std::size_t>(w)] & ~x) == 0) r |= Elem{1} << w;
  return r;
}

Elem Frame::dia(Elem x) const { return full() & ~box(full() & ~x); }

Frame random_frame(std::uint64_t seed, int n) {
  if (n < 1 || n > Frame::kMaxWorlds)
    throw std::invalid_argument("frame size must be between 1 and 16, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  // Random topological order, then each order-respecting edge with odds 1/2.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  std::vector<Elem> succ(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1)
        succ[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] |=
            Elem{1} << order[static_cast<std::size_t>(j)];
  close_transitively(succ);
  return Frame::unchecked(n, std::move(succ));
}

std::vector<Frame> enumerate_frames(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("frame enumeration supported for n <= 4");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  std::vector<Frame> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    std::vector<Elem> succ(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (bits >> k & 1) succ[static_cast<std::size_t>(pairs[k].first)] |= Elem{1} << pairs[k].second;
    // Keep exactly the transitive ones (irreflexive by construction).
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a) {
      for (int b = 0; b < n && transitive; ++b)
        if (succ[static_cast<std::size_t>(a)] >> b & 1)
          if (succ[static_cast<std::size_t>(b)] & ~succ[static_cast<std::size_t>(a)])
            transitive = false;
    }
    if (transitive) out.push_back(Frame::unchecked(n, std::move(succ)));
  }
  return out;
}

Frame load_frame_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad frame file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("worlds") || !j.contains("edges"))
    throw std::invalid_argument("frame file needs \"worlds\" and \"edges\"");
  const int worlds = j.at("worlds").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("frame edges must be [i,j] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Frame::from_edges(worlds, edges);
}

Frame load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open frame file: " + path);
  return load_frame_json(in);
}

std::string frame_to_json(const Frame& f) {
  nlohmann::ordered_json j;
  j["worlds"] = f.worlds();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [a, b] : f.edges()) arr.push_back({a, b});
  j["edges"] = std::move(arr);
  return j.dump();
}

GlLawReport check_gl_laws(const Frame& f, std::uint64_t samples, std::uint64_t seed) {
  GlLawReport report;
  const int n = f.worlds();
  const Elem full = f.full();
  auto check_pair = [&](Elem x, Elem y) {
    ++report.checked;
    const Elem imp_xy = (full & ~x) | y;
    if (f.box(imp_xy) & f.box(x) & ~f.box(y))
      report.violations.push_back({"k", x, y});
    if (f.box(x) & ~f.box(f.box(x))) report.violations.push_back({"four", x, y});
    const Elem lob_body = (full & ~f.box(x)) | x;
    if (f.box(lob_body) & ~f.box(x)) report.violations.push_back({"loeb", x, y});
    if (x == full && f.box(x) != full) report.violations.push_back({"necessitation", x, y});
  };
  if (n <= 6) {
    for (Elem x = 0; x <= full; ++x)
      for (Elem y = 0; y <= full; ++y) check_pair(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i)
      check_pair(static_cast<Elem>(rng()) & full, static_cast<Elem>(rng()) & full);
    check_pair(full, full);
  }
  return report;
}

}  // namespace glpwb
