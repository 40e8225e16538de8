#include "ocpoly/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <optional>

#include "ocpoly/descent.hpp"
#include "ocpoly/equivalence.hpp"
#include "ocpoly/error.hpp"
#include "ocpoly/geometry.hpp"
#include "ocpoly/poset_file.hpp"
#include "ocpoly/verify.hpp"

namespace ocpoly {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  int dilations = 3;
  std::int64_t cap = 0;
  std::string first, second;
  int n = 0;
  std::string suite;
};

// Left-aligned columns separated by two spaces.
class Table {
 public:
  Table& row(std::vector<std::string> cells) {
    rows_.push_back(std::move(cells));
    return *this;
  }

  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], r[c].size());
      }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(to_string(x));
  return a;
}

Json vertices_json(const VertexSet& v) {
  Json a = Json::array();
  for (const auto& p : v.vertices) a.push_back(point_json(p));
  return a;
}

Json halfspace_json(const Halfspace& h) {
  Json j;
  j["coefficients"] = point_json(h.coefficients);
  j["bound"] = to_string(h.bound);
  j["source"] = tag_name(h.tag);
  j["text"] = format_halfspace(h);
  return j;
}

Json edges_json(const std::vector<Cover>& edges) {
  Json a = Json::array();
  for (const auto& c : edges) a.push_back(Json::array({c.lower, c.upper}));
  return a;
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

std::string elements_text(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "}";
}

std::string edges_text(const std::vector<Cover>& edges) {
  std::string s = "{";
  for (std::size_t i = 0; i < edges.size(); ++i)
    s += (i ? ", " : "") + std::to_string(edges[i].lower) + std::to_string(edges[i].upper);
  return s + "}";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o_.cap > 0) limits_.equivalence_budget = o_.cap;
  }

  bool json() const { return o_.format == "json"; }

  void emit(const Json& j, const Table& t) {
    if (json())
      out_ << j.dump(2) << '\n';
    else
      t.print(out_);
  }

  PosetFile load(const std::string& path) const {
    if (path.empty()) throw UsageError("this command needs --input <file>");
    return read_poset_file(path, limits_);
  }

  HalfspaceSystem system() const { return hrep_order_chain(load(o_.input).partition); }

  void halfspace_listing(const char* key, const std::vector<Halfspace>& hs, int d) {
    Json j;
    j["d"] = d;
    j[std::string(key) + "_count"] = hs.size();
    Json list = Json::array();
    Table t;
    t.row({"inequality", "source"});
    for (const auto& h : hs) {
      list.push_back(halfspace_json(h));
      t.row({format_halfspace(h), tag_name(h.tag)});
    }
    j[key] = std::move(list);
    emit(j, t);
  }

  void hrep() {
    auto s = system();
    halfspace_listing("halfspaces", s.halfspaces, s.dimension);
  }

  void vertices() {
    auto s = system();
    auto v = enumerate_vertices(s, limits_);
    Json j;
    j["d"] = s.dimension;
    j["vertex_count"] = v.size();
    j["vertices"] = vertices_json(v);
    Table t;
    std::vector<std::string> head;
    for (int i = 1; i <= s.dimension; ++i) head.push_back("x" + std::to_string(i));
    t.row(head);
    for (const auto& p : v.vertices) {
      std::vector<std::string> r;
      for (const auto& x : p) r.push_back(to_compact_string(x));
      t.row(r);
    }
    emit(j, t);
  }

  void facets() {
    auto p = Polytope::build(system(), limits_);
    Json j;
    j["d"] = p.system.dimension;
    j["facets"] = p.facets.size();
    Json list = Json::array();
    Table t;
    t.row({"facet", "source"});
    for (const auto& h : p.facets) {
      list.push_back(halfspace_json(h));
      t.row({format_halfspace(h), tag_name(h.tag)});
    }
    j["halfspaces"] = std::move(list);
    emit(j, t);
  }

  void integral() {
    auto s = system();
    auto v = enumerate_vertices(s, limits_);
    auto witness = non_integral_witness(v);
    Json j;
    j["d"] = s.dimension;
    j["integral"] = !witness.has_value();
    j["witness"] = witness ? point_json(*witness) : Json(nullptr);
    Table t;
    t.row({"integral", yes_no(!witness)});
    if (witness) t.row({"witness", format_point(*witness)});
    emit(j, t);
  }

  void volume() {
    auto p = Polytope::build(system(), limits_);
    const int d = p.system.dimension;
    Rational v = p.volume(limits_);
    Rational normalized = v * factorial(d);
    Json j;
    j["d"] = d;
    j["volume"] = to_string(v);
    j["normalized_volume"] = to_string(normalized);
    Table t;
    t.row({"volume", to_compact_string(v)}).row({"normalized", to_compact_string(normalized)});
    emit(j, t);
  }

  void invariants() {
    auto p = Polytope::build(system(), limits_);
    const int d = p.system.dimension;
    auto f = fingerprint(p, o_.dilations, limits_);
    const bool integral = is_integral(p.vertices);
    Json j;
    j["d"] = d;
    j["dimension"] = f.dimension;
    j["vertex_count"] = f.vertex_count;
    j["vertices"] = vertices_json(p.vertices);
    j["facets"] = f.facet_count;
    j["volume"] = to_string(f.volume);
    j["normalized_volume"] = to_string(f.volume * factorial(d));
    j["integral"] = integral;
    Json counts = Json::object();
    Table t;
    t.row({"d", std::to_string(d)})
        .row({"dimension", std::to_string(f.dimension)})
        .row({"vertices", std::to_string(f.vertex_count)})
        .row({"facets", std::to_string(f.facet_count)})
        .row({"volume", to_compact_string(f.volume)})
        .row({"normalized volume", to_compact_string(f.volume * factorial(d))})
        .row({"integral", yes_no(integral)});
    for (std::size_t k = 0; k < f.lattice_counts.size(); ++k) {
      counts[std::to_string(k + 1)] = f.lattice_counts[k];
      t.row({"lattice points t=" + std::to_string(k + 1), std::to_string(f.lattice_counts[k])});
    }
    j["lattice_counts"] = std::move(counts);
    emit(j, t);
  }

  static Json fingerprint_json(const Fingerprint& f) {
    Json j;
    j["dimension"] = f.dimension;
    j["vertex_count"] = f.vertex_count;
    j["facets"] = f.facet_count;
    j["volume"] = to_string(f.volume);
    Json counts = Json::object();
    for (std::size_t k = 0; k < f.lattice_counts.size(); ++k) counts[std::to_string(k + 1)] = f.lattice_counts[k];
    j["lattice_counts"] = std::move(counts);
    return j;
  }

  void equiv() {
    auto a = hrep_order_chain(load(o_.first).partition);
    auto b = hrep_order_chain(load(o_.second).partition);
    auto cert = equivalent_exhaustive(a, b, limits_);
    Json j;
    j["verdict"] = verdict_name(cert.verdict);
    j["reason"] = cert.reason;
    j["candidates_tried"] = cert.candidates_tried;
    Table t;
    t.row({"verdict", verdict_name(cert.verdict)}).row({"reason", cert.reason});
    t.row({"candidates tried", std::to_string(cert.candidates_tried)});
    if (cert.map) {
      Json m = Json::array();
      for (std::size_t r = 0; r < cert.map->matrix().size(); ++r) {
        Json row = Json::array();
        std::string text;
        for (const auto& x : cert.map->matrix()[r]) {
          row.push_back(integer_json(x));
          text += (text.empty() ? "" : " ") + to_string(x);
        }
        m.push_back(std::move(row));
        t.row({r == 0 ? "matrix" : "", text});
      }
      Json w = Json::array();
      std::string text;
      for (const auto& x : cert.map->shift()) {
        w.push_back(integer_json(x));
        text += (text.empty() ? "" : " ") + to_string(x);
      }
      t.row({"shift", text});
      j["map"] = {{"matrix", std::move(m)}, {"shift", std::move(w)}};
    } else {
      j["map"] = nullptr;
    }
    if (a.dimension == b.dimension) {
      j["fingerprints"] = {{"first", fingerprint_json(fingerprint(a, o_.dilations, limits_))},
                           {"second", fingerprint_json(fingerprint(b, o_.dilations, limits_))}};
    }
    emit(j, t);
  }

  void search_partitions() {
    auto file = load(o_.input);
    const int d = file.poset.size();
    Rational best = -1;
    std::vector<EdgePartition> argmaxes;
    std::size_t count = 0;
    for_each_partition(file.poset, [&](const EdgePartition& l) {
      ++count;
      Rational v = Polytope::build(hrep_order_chain(l), limits_).volume(limits_);
      if (v > best) {
        best = v;
        argmaxes.clear();
      }
      if (v == best) argmaxes.push_back(l);
    }, limits_);
    Json j;
    j["d"] = d;
    j["partition_count"] = count;
    j["max_volume"] = to_string(best);
    j["normalized_max_volume"] = to_string(best * factorial(d));
    Json list = Json::array();
    Table t;
    t.row({"partitions", std::to_string(count)}).row({"max volume", to_compact_string(best)});
    for (std::size_t k = 0; k < argmaxes.size(); ++k) {
      list.push_back(edges_json(argmaxes[k].order_edges()));
      t.row({k == 0 ? "argmax oE" : "", edges_text(argmaxes[k].order_edges())});
    }
    j["argmax_order_edges"] = std::move(list);
    emit(j, t);
  }

  void descent_max() {
    auto m = max_beta_over_F(o_.n, limits_);
    const auto predicted = predicted_beta_maximizers(o_.n);
    bool attained = true;
    for (const auto& s : predicted)
      attained = attained && std::find(m.argmaxes.begin(), m.argmaxes.end(), s) != m.argmaxes.end();
    Json j;
    j["n"] = o_.n;
    j["family_size"] = family_F(o_.n, limits_).size();
    j["max_beta"] = integer_json(m.value);
    Json list = Json::array();
    Table t;
    t.row({"n", std::to_string(o_.n)}).row({"max beta", to_string(m.value)});
    t.row({"predicted maximizers attain", yes_no(attained)});
    t.row({"argmax S", "runs"});
    for (const auto& s : m.argmaxes) {
      auto r = runs(s);
      list.push_back({{"set", s.elements}, {"runs", r.parts}});
      t.row({elements_text(s.elements), elements_text(r.parts)});
    }
    j["argmaxes"] = std::move(list);
    j["predicted_attained"] = attained;
    emit(j, t);
  }

  bool verify() {
    std::vector<SuiteReport> reports;
    if (o_.suite == "all")
      for (const auto& slug : suite_slugs()) reports.push_back(run_suite(slug, limits_));
    else
      reports.push_back(run_suite(o_.suite, limits_));
    bool all_passed = true;
    Json suites = Json::array();
    Table t;
    for (const auto& rep : reports) {
      Json list = Json::array();
      std::size_t passed = 0;
      for (const auto& a : rep.assertions) {
        passed += a.passed ? 1 : 0;
        list.push_back({{"description", a.description},
                        {"claim", a.claim},
                        {"passed", a.passed},
                        {"detail", a.detail}});
        t.row({a.passed ? "PASS" : "FAIL", rep.slug, a.description, a.detail});
      }
      all_passed = all_passed && rep.passed();
      suites.push_back({{"suite", rep.slug}, {"passed", rep.passed()}, {"assertions", std::move(list)}});
      t.row({rep.passed() ? "PASS" : "FAIL", rep.slug,
             std::to_string(passed) + "/" + std::to_string(rep.assertions.size()) + " assertions passed"});
    }
    Json j;
    if (reports.size() == 1) {
      j = std::move(suites[0]);
    } else {
      j["passed"] = all_passed;
      j["suites"] = std::move(suites);
    }
    emit(j, t);
    return all_passed;
  }

 private:
  const Options& o_;
  std::ostream& out_;
  Limits limits_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Order, chain and order-chain polytopes of finite posets", "ocpoly"};
  app.require_subcommand(1);
  app.add_option("--input", o.input, "Poset file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--dilations", o.dilations, "Lattice counts for t = 1..T")->check(CLI::Range(1, 10));
  app.add_option("--cap", o.cap, "Budget of candidate maps for equiv")->check(CLI::PositiveNumber);

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help)->fallthrough(); };
  auto* hrep = sub("hrep", "Defining inequalities of OC(P)");
  auto* vertices = sub("vertices", "Vertices, lexicographically sorted");
  auto* facets = sub("facets", "Irredundant facet inequalities");
  auto* integral = sub("integral", "Integrality with a non-integral witness vertex");
  auto* volume = sub("volume", "Exact and normalized volume");
  auto* invariants = sub("invariants", "Fingerprint: vertices, facets, volume, lattice counts");
  auto* equiv = sub("equiv", "Unimodular equivalence of two OC polytopes");
  equiv->add_option("first", o.first, "First poset file")->required();
  equiv->add_option("second", o.second, "Second poset file")->required();
  auto* search = sub("search-partitions", "Edge partitions maximizing the volume");
  auto* descent = sub("descent-max", "Maximum of beta over F(n)");
  descent->add_option("n", o.n, "Permutation length")->required()->check(CLI::Range(2, 64));
  auto* verify = sub("verify", "Run a verification suite");
  std::vector<std::string> slugs = suite_slugs();
  slugs.push_back("all");
  verify->add_option("suite", o.suite, "Suite slug or 'all'")->required()->check(CLI::IsMember(slugs));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage_error;
  }

  try {
    Runner r(o, out);
    if (hrep->parsed()) r.hrep();
    if (vertices->parsed()) r.vertices();
    if (facets->parsed()) r.facets();
    if (integral->parsed()) r.integral();
    if (volume->parsed()) r.volume();
    if (invariants->parsed()) r.invariants();
    if (equiv->parsed()) r.equiv();
    if (search->parsed()) r.search_partitions();
    if (descent->parsed()) r.descent_max();
    if (verify->parsed() && !r.verify()) return exit_domain_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage_error;
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
    return exit_domain_error;
  }
  return exit_ok;
}

}  // namespace ocpoly
