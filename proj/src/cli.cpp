#include "tropos/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <thread>

#include "tropos/catalog.hpp"
#include "tropos/error.hpp"
#include "tropos/json_io.hpp"
#include "tropos/tropical_module.hpp"

namespace tropos {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_file;
  std::string catalog;
  std::string divisor;
  std::string base;
  std::string format = "json";
  int subdiv = 1;
  int jobs = 1;
  std::size_t state_cap = 0;
  std::string function_file;
  std::string generators_file;
  std::string functions_file;
  std::string coeffs_file;
  std::size_t budget = DependenceSearch{}.budget;
  std::string catalog_name;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

GraphPtr load_graph(const Options& o) {
  if (o.graph_file.empty() == o.catalog.empty()) throw UsageError("give exactly one of --graph and --catalog");
  if (!o.catalog.empty()) return catalog_graph(o.catalog);
  return graph_from_json(read_json_file(o.graph_file));
}

Divisor load_divisor(const Options& o, const GraphPtr& g) {
  if (o.divisor.empty()) throw UsageError("--divisor is required");
  if (o.divisor == "K") return canonical_divisor(g);
  if (o.divisor == "0") return Divisor(g);
  return divisor_from_json(g, read_json_file(o.divisor));
}

std::vector<PLFunction> load_functions(const std::string& path, const GraphPtr& g) {
  Json j = read_json_file(path);
  if (!j.is_array()) throw Error(ErrorCode::ParseError, path + ": expected an array of functions");
  std::vector<PLFunction> out;
  for (const Json& f : j) out.push_back(function_from_json(g, f));
  return out;
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  if (o.state_cap > 0) e.state_cap = o.state_cap;
  return e;
}

// Evaluates pred on 0..n-1 with up to `jobs` threads; result order is fixed.
std::vector<bool> parallel_flags(std::size_t n, int jobs, const std::function<bool(std::size_t)>& pred) {
  std::vector<char> flags(n, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        flags[i] = pred(i);
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return {flags.begin(), flags.end()};
}

void render_text(const Json& j, std::ostream& out, int indent) {
  std::string pad(indent * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_structured() && !v.empty()) {
        out << pad << "-\n";
        render_text(v, out, indent + 1);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.format == "text") render_text(j, out, 0);
  else out << j.dump(2) << "\n";
}

Json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", std::string(code)}, {"message", message}}}};
}

void add_graph_options(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph_file, "graph JSON file");
  sub->add_option("--catalog", o.catalog, "built-in graph name");
}

void add_divisor_options(CLI::App* sub, Options& o) {
  add_graph_options(sub, o);
  sub->add_option("--divisor", o.divisor, "divisor JSON file, K or 0");
  sub->add_option("--subdiv", o.subdiv, "grid subdivision")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Divisors, linear systems and realizability on metric graphs", "tropos"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--state-cap", o.state_cap, "enumeration state cap (overrides TROPOS_STATE_CAP)");
  app.fallthrough();

  auto* info = app.add_subcommand("info", "genus and size of a graph");
  add_graph_options(info, o);
  auto* reduce_cmd = app.add_subcommand("reduce", "v-reduced representative");
  add_divisor_options(reduce_cmd, o);
  reduce_cmd->add_option("--base", o.base, "base vertex id (default: first vertex)");
  auto* rank_cmd = app.add_subcommand("rank", "rank of a divisor on the grid");
  add_divisor_options(rank_cmd, o);

  auto* linsys = app.add_subcommand("linsys", "complete linear system on the grid");
  linsys->require_subcommand(1);
  auto* enumerate = linsys->add_subcommand("enumerate", "every grid element of |D|");
  add_divisor_options(enumerate, o);
  auto* extremals = linsys->add_subcommand("extremals", "extremal grid elements of |D|");
  add_divisor_options(extremals, o);

  auto* span = app.add_subcommand("span", "tropical span membership");
  span->require_subcommand(1);
  auto* span_check = span->add_subcommand("check", "is the function in the span of the generators");
  add_graph_options(span_check, o);
  span_check->add_option("--function", o.function_file, "function JSON file")->required();
  span_check->add_option("--generators", o.generators_file, "JSON array of functions")->required();

  auto* cells = app.add_subcommand("cells", "cells of |D| met by the grid");
  add_divisor_options(cells, o);
  auto* realizable = app.add_subcommand("realizable", "realizability of a canonical divisor");
  add_graph_options(realizable, o);
  realizable->add_option("--divisor", o.divisor, "divisor JSON file or K");

  auto* depend = app.add_subcommand("depend", "tropical dependence");
  depend->require_subcommand(1);
  auto* verify = depend->add_subcommand("verify", "check given coefficients");
  add_graph_options(verify, o);
  verify->add_option("--functions", o.functions_file, "JSON array of functions")->required();
  verify->add_option("--coeffs", o.coeffs_file, "JSON array of rationals")->required();
  auto* find = depend->add_subcommand("find", "search for coefficients");
  add_graph_options(find, o);
  find->add_option("--functions", o.functions_file, "JSON array of functions")->required();
  find->add_option("--budget", o.budget, "candidate assignments examined");

  auto* catalog = app.add_subcommand("catalog", "built-in graphs");
  catalog->add_option("name", o.catalog_name, "print this graph");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) {
      GraphPtr g = load_graph(o);
      emit({{"genus", genus(*g)},
            {"weightedGenus", weighted_genus(*g)},
            {"canonicalDegree", canonical_divisor(g).degree()},
            {"vertices", g->vertex_count()},
            {"edges", g->edge_count()},
            {"connected", g->is_connected()}},
           o, out);
      return 0;
    }
    if (reduce_cmd->parsed()) {
      GraphPtr g = load_graph(o);
      Divisor d = load_divisor(o, g);
      std::size_t base = 0;
      if (!o.base.empty()) {
        auto v = g->find_vertex(o.base);
        if (!v) throw Error(ErrorCode::UnknownId, "unknown vertex '" + o.base + "'");
        base = *v;
      }
      GridModel grid = unit_model(g, o.subdiv);
      Divisor on_grid = d.to_fine(grid.grid);
      if (!on_grid.supported_on_vertices()) {
        throw Error(ErrorCode::NotOnGrid, "divisor is not supported on the subdivision-" + std::to_string(o.subdiv) + " grid");
      }
      std::size_t grid_base = grid.grid.vertex_image[base];
      emit(reduction_to_json(grid, grid_base, reduce(grid.graph(), on_grid, grid_base)), o, out);
      return 0;
    }
    if (rank_cmd->parsed()) {
      GraphPtr g = load_graph(o);
      RankResult r = rank(g, load_divisor(o, g), o.subdiv);
      emit({{"rank", r.rank}, {"subdivision", r.subdivision}}, o, out);
      return 0;
    }
    if (enumerate->parsed() || extremals->parsed()) {
      GraphPtr g = load_graph(o);
      LinearSystem system = enumerate_linear_system(g, load_divisor(o, g), o.subdiv, enumeration_options(o));
      std::vector<std::size_t> indices;
      if (enumerate->parsed()) {
        for (std::size_t i = 0; i < system.elements.size(); ++i) indices.push_back(i);
      } else {
        auto flags = parallel_flags(system.elements.size(), o.jobs, [&](std::size_t i) {
          return is_extremal_on_model(*system.grid.graph(), system.elements[i].grid_divisor);
        });
        for (std::size_t i = 0; i < flags.size(); ++i) {
          if (flags[i]) indices.push_back(i);
        }
      }
      emit(linear_system_to_json(system, indices), o, out);
      return 0;
    }
    if (span_check->parsed()) {
      GraphPtr g = load_graph(o);
      Json f = read_json_file(o.function_file);
      PLFunction target = function_from_json(g, f);
      auto gens = load_functions(o.generators_file, g);
      emit({{"inSpan", in_span(target, gens)}}, o, out);
      return 0;
    }
    if (cells->parsed()) {
      GraphPtr g = load_graph(o);
      emit(cell_survey_to_json(maximal_cells(g, load_divisor(o, g), o.subdiv, enumeration_options(o))), o, out);
      return 0;
    }
    if (realizable->parsed()) {
      GraphPtr g = load_graph(o);
      Divisor d = load_divisor(o, g);
      try {
        RealizabilityReport report = is_realizable_canonical(d);
        emit(realizability_to_json(report), o, out);
        return report.realizable ? 0 : 1;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInCanonicalSystem) throw;
        emit(error_json(error_name(e.code()), e.what()), o, out);
        return 2;
      }
    }
    if (verify->parsed()) {
      GraphPtr g = load_graph(o);
      auto fns = load_functions(o.functions_file, g);
      Json cj = read_json_file(o.coeffs_file);
      if (!cj.is_array()) throw Error(ErrorCode::ParseError, o.coeffs_file + ": expected an array of rationals");
      std::vector<Rational> coeffs;
      for (const Json& c : cj) coeffs.push_back(rational_from_json(c));
      emit({{"dependent", verify_tropical_dependence(fns, coeffs)}}, o, out);
      return 0;
    }
    if (find->parsed()) {
      GraphPtr g = load_graph(o);
      auto fns = load_functions(o.functions_file, g);
      auto found = find_tropical_dependence(fns, DependenceSearch{o.budget});
      Json coeffs = nullptr;
      if (found) {
        coeffs = Json::array();
        for (const Rational& c : *found) coeffs.push_back(rational_to_json(c));
      }
      emit({{"found", found.has_value()}, {"coefficients", coeffs}}, o, out);
      return 0;
    }
    if (catalog->parsed()) {
      if (o.catalog_name.empty()) emit({{"graphs", catalog_names()}}, o, out);
      else emit(graph_to_json(*catalog_graph(o.catalog_name)), o, out);
      return 0;
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    emit(error_json(error_name(e.code()), e.what()), o, out);
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace tropos
