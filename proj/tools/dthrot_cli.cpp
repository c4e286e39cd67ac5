#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dthrot/dthrot.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string message;
};

void check(dthrot_status status) {
  if (status != DTHROT_OK)
    throw Failure{std::string(dthrot_status_name(status)) + ": " + dthrot_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dthrot_string_free(s);
  return out;
}

struct DigraphDeleter {
  void operator()(dthrot_digraph* g) const { dthrot_digraph_free(g); }
};
struct GraphDeleter {
  void operator()(dthrot_graph* g) const { dthrot_graph_free(g); }
};
using DigraphPtr = std::unique_ptr<dthrot_digraph, DigraphDeleter>;
using GraphPtr = std::unique_ptr<dthrot_graph, GraphDeleter>;

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Input {
  std::string family;
  std::string graph;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "family spec, e.g. altpath:9");
    auto* g = cmd->add_option("--graph", graph, "inline graph: compact form, edge list or JSON");
    auto* p = cmd->add_option("--file", file, "graph file, - for stdin");
    f->excludes(g, p);
    g->excludes(p);
  }

  DigraphPtr digraph() const {
    dthrot_digraph* g = nullptr;
    if (!family.empty())
      check(dthrot_digraph_from_family(family.c_str(), &g));
    else
      check(dthrot_digraph_parse(text().c_str(), &g));
    return DigraphPtr(g);
  }

  GraphPtr graph_undirected() const {
    dthrot_graph* g = nullptr;
    if (!family.empty())
      check(dthrot_graph_from_family(family.c_str(), &g));
    else
      check(dthrot_graph_parse(text().c_str(), &g));
    return GraphPtr(g);
  }

 private:
  std::string text() const {
    if (!graph.empty()) return graph;
    if (!file.empty()) return read_source(file);
    throw Failure{"one of --family, --graph or --file is required"};
  }
};

struct Shards {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

Shards parse_shards(const std::string& text) {
  if (text.empty()) return {};
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    Shards s{std::stoull(text.substr(0, slash), &used), 0};
    if (used != slash) throw std::invalid_argument(text);
    s.count = std::stoull(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1 || s.count == 0 || s.index >= s.count) throw std::invalid_argument(text);
    return s;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--shards", "expected i/j with 0 <= i < j, got \"" + text + "\"");
  }
}

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--set", "bad vertex \"" + item + "\"");
    }
  }
  return out;
}

// ------------------------------------------------------------------ output

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit(const Json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump() << '\n';
    return;
  }
  if (!doc.is_object()) {
    std::cout << scalar_text(doc) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [key, value] : doc.items()) std::cout << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "failures" && value.is_array() && !value.empty()) {
      std::cout << "failures:\n";
      for (const Json& f : value)
        std::cout << "  " << scalar_text(f.value("instance", Json(""))) << "  " << scalar_text(f.value("relation", Json("")))
                  << "  " << scalar_text(f.value("observed", Json(""))) << '\n';
      continue;
    }
    std::cout << key << ": " << scalar_text(value) << '\n';
  }
}

Json parse_output(char* raw) { return Json::parse(take(raw)); }

int suite_exit(const Json& report) { return report.value("passed", true) ? kExitOk : kExitFailed; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing, propagation time and throttling on digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(dthrot_version()));

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: DTHROT_THREADS or 1)")->check(CLI::NonNegativeNumber);

  // compute
  auto* compute = app.add_subcommand("compute", "compute a parameter of one digraph");
  std::string what;
  compute->add_option("what", what, "th | pt | ptk | z | ptmin | witness")
      ->required()
      ->check(CLI::IsMember({"th", "pt", "ptk", "z", "ptmin", "witness"}));
  Input compute_in;
  compute_in.attach(compute);
  std::string set_text;
  int k = -1;
  int t = -1;
  compute->add_option("--set", set_text, "initial blue set for pt, e.g. 0,3");
  compute->add_option("--k", k, "set size for ptk");
  compute->add_option("--t", t, "throttling bound for witness (default th)");

  // generate
  auto* gen = app.add_subcommand("generate", "print a family member as an edge list");
  std::string gen_spec;
  bool gen_json = false;
  gen->add_option("spec", gen_spec, "family spec")->required();
  gen->add_flag("--json", gen_json, "print JSON instead");

  // oti
  auto* oti = app.add_subcommand("oti", "orientation throttling interval of an undirected graph");
  Input oti_in;
  oti_in.attach(oti);
  std::string oti_shards;
  bool pair = false;
  oti->add_option("--shards", oti_shards, "run shard i of j");
  oti->add_flag("--pair-transposes", pair, "evaluate one orientation per transpose pair");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "suite name (see `suites`)")->required();
  std::string scope;
  std::string census_n, range, random_scope, family_scope;
  std::uint64_t seed = 1;
  auto* s1 = verify->add_option("--scope", scope, "census:N | range:A..B | random:N:COUNT | family:SPEC");
  auto* s2 = verify->add_option("--census", census_n, "all digraphs on N vertices");
  auto* s3 = verify->add_option("--range", range, "A..B");
  auto* s4 = verify->add_option("--random", random_scope, "N:COUNT");
  auto* s5 = verify->add_option("--family", family_scope, "family spec");
  for (auto* a : {s1, s2, s3, s4, s5})
    for (auto* b : {s1, s2, s3, s4, s5})
      if (a != b) a->excludes(b);
  verify->add_option("--seed", seed, "seed for random scopes and sampling");

  auto* suites = app.add_subcommand("suites", "list suite names");

  // conjecture
  auto* conj = app.add_subcommand("conjecture", "max th over orientations of paths vs the alternating path");
  int n_max = 0;
  std::string conj_shards;
  conj->add_option("--nmax", n_max, "largest path order")->required();
  conj->add_option("--shards", conj_shards, "run shard i of j; merge the outputs");

  // census
  auto* census = app.add_subcommand("census", "distribution of th or Z over all digraphs on n vertices");
  int census_order = 0;
  std::string stat = "th";
  bool oriented = false;
  std::string census_shards;
  census->add_option("--n", census_order, "order")->required();
  census->add_option("--stat", stat, "th | z")->check(CLI::IsMember({"th", "z"}));
  census->add_flag("--oriented", oriented, "only oriented graphs (no double arcs)");
  census->add_option("--shards", census_shards, "run shard i of j");

  // merge
  auto* merge = app.add_subcommand("merge", "merge shard outputs of oti, census or conjecture");
  std::vector<std::string> merge_files;
  merge->add_option("files", merge_files, "shard JSON files, - for stdin")->required();

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "evaluate an alternating path closed form");
  std::string form;
  long long form_n = 0;
  closed->add_option("name", form, "alt_odd | alt_even | alt_even_ub | alt_even_lb | floor_2sqrt")->required();
  closed->add_option("n", form_n, "order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const DigraphPtr g = compute_in.digraph();
      Json out;
      if (what == "th") {
        int th = 0;
        char* cert = nullptr;
        check(dthrot_throttling_number(g.get(), &th, &cert));
        out = parse_output(cert);
      } else if (what == "pt") {
        if (compute->count("--set") == 0) throw CLI::RequiredError("--set");
        const std::vector<int> set = parse_set(set_text);
        char* tl = nullptr;
        check(dthrot_timeline(g.get(), set.data(), set.size(), &tl));
        out = parse_output(tl);
      } else if (what == "ptk") {
        if (compute->count("--k") == 0) throw CLI::RequiredError("--k");
        int value = 0;
        check(dthrot_pt_k(g.get(), k, &value));
        out = {{"k", k}, {"pt_k", value}};
      } else if (what == "z") {
        int value = 0;
        check(dthrot_zero_forcing_number(g.get(), &value));
        out = {{"z", value}};
      } else if (what == "ptmin") {
        int value = 0;
        check(dthrot_pt_min(g.get(), &value));
        out = {{"pt_min", value}};
      } else {
        int bound = t;
        if (compute->count("--t") == 0) check(dthrot_throttling_number(g.get(), &bound, nullptr));
        char* w = nullptr;
        check(dthrot_witness(g.get(), bound, &w));
        out = parse_output(w);
      }
      emit(out, format);
      return kExitOk;
    }

    if (gen->parsed()) {
      char* text = nullptr;
      check(dthrot_generate(gen_spec.c_str(), gen_json ? 1 : 0, &text));
      const std::string s = take(text);
      std::cout << s;
      if (gen_json) std::cout << '\n';
      return kExitOk;
    }

    if (oti->parsed()) {
      const Shards sh = parse_shards(oti_shards);
      const GraphPtr g = oti_in.graph_undirected();
      char* out = nullptr;
      check(dthrot_oti(g.get(), sh.index, sh.count, threads, pair ? 1 : 0, &out));
      emit(parse_output(out), format);
      return kExitOk;
    }

    if (verify->parsed()) {
      std::string sc = scope;
      if (!census_n.empty()) sc = "census:" + census_n;
      if (!range.empty()) sc = "range:" + range;
      if (!random_scope.empty()) sc = "random:" + random_scope;
      if (!family_scope.empty()) sc = "family:" + family_scope;
      if (sc.empty()) throw CLI::RequiredError("--scope, --census, --range, --random or --family");
      int passed = 0;
      char* out = nullptr;
      check(dthrot_run_suite(suite.c_str(), sc.c_str(), seed, threads, &passed, &out));
      const Json report = parse_output(out);
      emit(report, format);
      return passed ? kExitOk : kExitFailed;
    }

    if (suites->parsed()) {
      char* out = nullptr;
      check(dthrot_suite_names(&out));
      const Json names = parse_output(out);
      if (format == "json") {
        std::cout << names.dump() << '\n';
      } else {
        for (const Json& n : names) std::cout << n.get<std::string>() << '\n';
      }
      return kExitOk;
    }

    if (conj->parsed()) {
      char* out = nullptr;
      if (!conj_shards.empty()) {
        const Shards sh = parse_shards(conj_shards);
        check(dthrot_conjecture_shard(n_max, sh.index, sh.count, threads, &out));
        emit(parse_output(out), format);
        return kExitOk;
      }
      int passed = 0;
      check(dthrot_conjecture(n_max, threads, &passed, &out));
      emit(parse_output(out), format);
      return passed ? kExitOk : kExitFailed;
    }

    if (census->parsed()) {
      const Shards sh = parse_shards(census_shards);
      char* out = nullptr;
      check(dthrot_census(census_order, stat.c_str(), oriented ? 1 : 0, sh.index, sh.count, threads, &out));
      emit(parse_output(out), format);
      return kExitOk;
    }

    if (merge->parsed()) {
      Json docs = Json::array();
      for (const std::string& path : merge_files) {
        try {
          docs.push_back(Json::parse(read_source(path)));
        } catch (const Json::exception& e) {
          throw Failure{path + ": " + e.what()};
        }
      }
      char* out = nullptr;
      check(dthrot_merge(docs.dump().c_str(), &out));
      const Json merged = parse_output(out);
      emit(merged, format);
      return suite_exit(merged);
    }

    if (closed->parsed()) {
      long long value = 0;
      check(dthrot_closed_form(form.c_str(), form_n, &value));
      emit(Json{{"form", form}, {"n", form_n}, {"value", value}}, format);
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed library output: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
