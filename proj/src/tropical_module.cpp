#include "tropos/tropical_module.hpp"

#include <algorithm>
#include <set>

#include "tropos/error.hpp"

namespace tropos {

namespace {

// Values of f at sorted offsets along edge e (offsets include both ends).
std::vector<Rational> sample_edge(const PLFunction& f, std::size_t e, const std::vector<Rational>& offsets) {
  auto ks = f.knots(e);
  std::vector<Rational> out;
  out.reserve(offsets.size());
  std::size_t i = 0;
  for (const Rational& t : offsets) {
    while (i + 1 < ks.size() && ks[i + 1].offset < t) ++i;
    if (ks[i].offset == t) {
      out.push_back(ks[i].value);
    } else if (i + 1 < ks.size() && ks[i + 1].offset == t) {
      out.push_back(ks[i + 1].value);
    } else {
      const auto& a = ks[i];
      const auto& b = ks[i + 1];
      out.push_back(a.value + (b.value - a.value) * (t - a.offset) / (b.offset - a.offset));
    }
  }
  return out;
}

std::vector<Rational> with_ends(const std::vector<Rational>& interior, const Rational& length) {
  std::vector<Rational> out;
  out.reserve(interior.size() + 2);
  out.emplace_back(0);
  out.insert(out.end(), interior.begin(), interior.end());
  out.push_back(length);
  return out;
}

std::vector<Rational> with_midpoints(const std::vector<Rational>& pts) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out.push_back((pts[i - 1] + pts[i]) / 2);
    out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

Rational inner(const PLFunction& f, const PLFunction& g) {
  require_same_graph(f.graph(), g.graph());
  const MetricGraph& graph = *f.graph();
  const PLFunction* both[] = {&f, &g};
  auto offsets = common_offsets(both, false);
  std::optional<Rational> best;
  auto consider = [&](const Rational& x) {
    if (!best || x < *best) best = x;
  };
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) consider(f.vertex_value(v) - g.vertex_value(v));
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    auto fv = sample_edge(f, e, offsets[e]);
    auto gv = sample_edge(g, e, offsets[e]);
    for (std::size_t i = 0; i < fv.size(); ++i) consider(fv[i] - gv[i]);
  }
  return best.value_or(Rational(0));
}

PLFunction project(const PLFunction& f, const PLFunction& g) { return g.shifted(inner(f, g)); }

PLFunction span_envelope(const PLFunction& f, std::span<const PLFunction> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "span of an empty generator list");
  PLFunction acc = project(f, generators.front());
  for (std::size_t i = 1; i < generators.size(); ++i) acc = trop_max(acc, project(f, generators[i]));
  return acc;
}

bool in_span(const PLFunction& f, std::span<const PLFunction> generators) {
  return span_envelope(f, generators) == f;
}

bool verify_tropical_dependence(std::span<const PLFunction> fns, std::span<const Rational> coeffs) {
  if (fns.size() < 2 || fns.size() != coeffs.size()) {
    throw Error(ErrorCode::InvalidArgument, "dependence needs at least two functions and one coefficient each");
  }
  std::vector<PLFunction> shifted;
  for (std::size_t i = 0; i < fns.size(); ++i) shifted.push_back(fns[i].shifted(coeffs[i]));
  std::vector<const PLFunction*> ptrs;
  for (const auto& h : shifted) ptrs.push_back(&h);
  auto offsets = common_offsets(ptrs, true);
  const MetricGraph& g = *fns.front().graph();

  auto tied = [](const std::vector<Rational>& values) {
    const Rational& low = *std::min_element(values.begin(), values.end());
    return std::count(values.begin(), values.end(), low) >= 2;
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<Rational> values;
    for (const auto& h : shifted) values.push_back(h.vertex_value(v));
    if (!tied(values)) return false;
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    // between refinement points no two functions cross, so midpoints
    // witness the behaviour on each open segment
    auto pts = with_midpoints(with_ends(offsets[e], g.edge(e).length));
    std::vector<std::vector<Rational>> samples;
    for (const auto& h : shifted) samples.push_back(sample_edge(h, e, pts));
    for (std::size_t p = 0; p < pts.size(); ++p) {
      std::vector<Rational> values;
      for (const auto& s : samples) values.push_back(s[p]);
      if (!tied(values)) return false;
    }
  }
  return true;
}

namespace {

class DependenceFinder {
 public:
  DependenceFinder(std::span<const PLFunction> fns, const DependenceSearch& options)
      : fns_(fns.begin(), fns.end()), budget_(options.budget) {
    std::vector<const PLFunction*> ptrs;
    for (const auto& f : fns_) ptrs.push_back(&f);
    knots_ = common_offsets(ptrs, false);
    for (const auto& f : fns_) {
      low_.push_back(f.min_value());
      high_.push_back(f.max_value());
    }
  }

  std::optional<std::vector<Rational>> run() {
    std::vector<Rational> zero(fns_.size(), Rational(0));
    spend();
    if (verify_tropical_dependence(fns_, zero)) return zero;
    for (std::size_t root = 0; root < fns_.size(); ++root) {
      std::vector<std::optional<Rational>> a(fns_.size());
      a[root] = Rational(0);
      if (auto found = search(a)) return found;
    }
    return std::nullopt;
  }

 private:
  void spend() {
    if (++spent_ > budget_) {
      throw Error(ErrorCode::BudgetExceeded, "dependence search exceeded its budget of " + std::to_string(budget_));
    }
  }

  // Completes the assignment by pushing every unassigned function above
  // the envelope of the assigned ones.
  std::optional<std::vector<Rational>> close(const std::vector<std::optional<Rational>>& a) {
    std::size_t active = 0;
    Rational top;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      ++active;
      Rational t = high_[i] + *a[i];
      if (first || t > top) top = t;
      first = false;
    }
    if (active < 2) return std::nullopt;
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < a.size(); ++i) coeffs.push_back(a[i] ? *a[i] : Rational(top - low_[i] + 1));
    spend();
    if (verify_tropical_dependence(fns_, coeffs)) return coeffs;
    return std::nullopt;
  }

  std::optional<std::vector<Rational>> search(std::vector<std::optional<Rational>>& a) {
    if (!seen_.insert(a).second) return std::nullopt;
    if (auto done = close(a)) return done;

    // lower envelope of the assigned functions
    std::optional<PLFunction> env;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      PLFunction h = fns_[i].shifted(*a[i]);
      env = env ? trop_min(*env, h) : h;
    }
    std::vector<Point> points;
    const MetricGraph& g = *fns_.front().graph();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) points.push_back(Point::vertex(v));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      std::set<Rational> offs(knots_[e].begin(), knots_[e].end());
      for (const auto& k : env->interior(e)) offs.insert(k.offset);
      for (const Rational& t : offs) points.push_back(Point::on_edge(e, t));
    }

    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j]) continue;
      std::set<Rational> candidates;
      // a tie with the envelope at some point where j becomes minimal
      for (const Point& p : points) candidates.insert(env->value_at(p) - fns_[j].value_at(p));
      for (const Rational& c : candidates) {
        spend();
        a[j] = c;
        if (auto found = search(a)) return found;
        a[j].reset();
      }
    }
    return std::nullopt;
  }

  std::vector<PLFunction> fns_;
  std::size_t budget_;
  std::size_t spent_ = 0;
  std::vector<std::vector<Rational>> knots_;
  std::vector<Rational> low_, high_;
  std::set<std::vector<std::optional<Rational>>> seen_;
};

}  // namespace

std::optional<std::vector<Rational>> find_tropical_dependence(std::span<const PLFunction> fns,
                                                              const DependenceSearch& options) {
  if (fns.size() < 2) throw Error(ErrorCode::InvalidArgument, "dependence needs at least two functions");
  for (const auto& f : fns) require_same_graph(fns.front().graph(), f.graph());
  DependenceFinder finder(fns, options);
  auto found = finder.run();
  if (found) {
    // report coefficients relative to the first function
    Rational base = (*found)[0];
    for (auto& c : *found) c -= base;
  }
  return found;
}

}  // namespace tropos
