#include "ckrgap/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ckrgap {

namespace {

constexpr const char* kInstanceFormat = "ckrgap-instance";
constexpr const char* kLabelingFormat = "ckrgap-labeling";

std::vector<std::pair<EdgeId, Rational>> listed_edges(const WeightMap& w, bool include_zero) {
  std::vector<std::pair<EdgeId, Rational>> out;
  if (!include_zero) {
    out.assign(w.entries().begin(), w.entries().end());
    return out;
  }
  for (EdgeId e = 0; e < w.graph().edge_count(); ++e) out.emplace_back(e, w.weight(e));
  return out;
}

Rational weight_from_text(const std::string& text) {
  if (text.find('/') == std::string::npos && text.find('.') != std::string::npos) {
    invalid_parameter("edge weights must be exact integers or p/q fractions");
  }
  Rational r = parse_rational(text);
  if (r < 0) invalid_parameter("edge weights must be non-negative");
  return r;
}

int node_count_to_n(int k, std::size_t nodes) {
  for (int n = 1;; ++n) {
    Rational count = binomial(n + k - 1, k - 1);
    if (count == static_cast<long>(nodes)) return n;
    if (count > static_cast<long>(nodes)) invalid_parameter("node count matches no Delta_{k,n}");
  }
}

void check_terminal(const SimplexGraph& g, long node, long terminal) {
  if (terminal < 1 || terminal > g.k()) invalid_parameter("terminal id out of range");
  if (node < 0 || static_cast<std::size_t>(node) >= g.node_count() || g.terminal(static_cast<int>(terminal)) != node) {
    invalid_parameter("terminal s_" + std::to_string(terminal) + " is not at its unit point");
  }
}

EdgeId edge_between(const SimplexGraph& g, long u, long v) {
  auto in_range = [&](long x) { return x >= 0 && static_cast<std::size_t>(x) < g.node_count(); };
  if (!in_range(u) || !in_range(v)) invalid_parameter("edge endpoint out of range");
  auto id = g.find_edge(static_cast<NodeId>(u), static_cast<NodeId>(v));
  if (!id) invalid_parameter("listed pair is not an edge of Delta_{k,n}");
  return *id;
}

InstanceFile parse_json_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
    if (doc.at("format") != kInstanceFormat) invalid_parameter("not a ckrgap instance file");
    if (doc.at("version") != 1) invalid_parameter("unsupported instance format version");
    const int k = doc.at("k").get<int>();
    const int n = doc.at("n").get<int>();
    auto g = SimplexGraph::get(k, n);

    const auto& nodes = doc.at("nodes");
    if (nodes.size() != g->node_count()) invalid_parameter("node table size does not match k and n");
    for (NodeId v = 0; v < g->node_count(); ++v) {
      auto coords = nodes.at(v).get<std::vector<int>>();
      auto expect = g->coords(v);
      if (!std::equal(coords.begin(), coords.end(), expect.begin(), expect.end())) {
        invalid_parameter("node " + std::to_string(v) + " breaks the colex order contract");
      }
    }
    const auto& terminals = doc.at("terminals");
    if (terminals.size() != static_cast<std::size_t>(k)) invalid_parameter("expected k terminals");
    for (int i = 1; i <= k; ++i) check_terminal(*g, terminals.at(static_cast<std::size_t>(i - 1)).get<long>(), i);

    std::vector<WeightMap::Entry> entries;
    for (const auto& e : doc.at("edges")) {
      if (e.size() != 3) invalid_parameter("edge rows are [u, v, \"p/q\"]");
      entries.emplace_back(edge_between(*g, e.at(0).get<long>(), e.at(1).get<long>()),
                           weight_from_text(e.at(2).get<std::string>()));
    }

    InstanceMeta meta;
    if (doc.contains("c")) meta.c = parse_rational(doc.at("c").get<std::string>());
    if (doc.contains("lambda")) {
      const auto& l = doc.at("lambda");
      if (l.size() != 4) invalid_parameter("lambda needs four entries");
      std::array<Rational, 4> lambda;
      for (std::size_t i = 0; i < 4; ++i) lambda[i] = parse_rational(l.at(i).get<std::string>());
      meta.lambda = lambda;
    }
    return InstanceFile{WeightMap(g, doc.at("tag").get<std::string>(), std::move(entries)), meta};
  } catch (const Json::exception& ex) {
    invalid_parameter(std::string("malformed instance JSON: ") + ex.what());
  }
}

InstanceFile parse_dimacs_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, tag = "unnamed";
  std::optional<int> k, n;
  InstanceMeta meta;
  long declared_nodes = -1, declared_edges = -1;
  GraphPtr g;
  std::vector<std::pair<long, long>> terminals;
  std::vector<std::tuple<long, long, std::string>> raw_edges;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "c") {
      std::string key;
      ls >> key;
      if (key == "tag") {
        ls >> tag;
      } else if (key == "k") {
        int v;
        if (ls >> v) k = v;
      } else if (key == "n") {
        int v;
        if (ls >> v) n = v;
      } else if (key == "c") {
        std::string v;
        ls >> v;
        meta.c = parse_rational(v);
      } else if (key == "lambda") {
        std::array<Rational, 4> lambda;
        for (auto& l : lambda) {
          std::string v;
          if (!(ls >> v)) invalid_parameter("lambda comment needs four values");
          l = parse_rational(v);
        }
        meta.lambda = lambda;
      }
    } else if (kind == "p") {
      std::string problem;
      int kk = 0;
      if (!(ls >> problem >> declared_nodes >> declared_edges >> kk) || problem != "mwc") {
        invalid_parameter("problem line must read 'p mwc <nodes> <edges> <k>'");
      }
      if (k && *k != kk) invalid_parameter("k comment disagrees with the problem line");
      k = kk;
    } else if (kind == "t") {
      long node, terminal;
      if (!(ls >> node >> terminal)) invalid_parameter("terminal line must read 't <node> <terminal>'");
      terminals.emplace_back(node - 1, terminal);
    } else if (kind == "e") {
      long u, v;
      std::string w;
      if (!(ls >> u >> v >> w)) invalid_parameter("edge line must read 'e <u> <v> <p/q>'");
      raw_edges.emplace_back(u - 1, v - 1, w);
    } else {
      invalid_parameter("unknown line type '" + kind + "'");
    }
  }
  if (!k || declared_nodes < 0) invalid_parameter("missing problem line");
  const int derived_n = node_count_to_n(*k, static_cast<std::size_t>(declared_nodes));
  if (n && *n != derived_n) invalid_parameter("n comment disagrees with the node count");
  g = SimplexGraph::get(*k, derived_n);
  if (static_cast<long>(raw_edges.size()) != declared_edges) invalid_parameter("edge count disagrees with the problem line");
  if (terminals.size() != static_cast<std::size_t>(*k)) invalid_parameter("expected k terminal lines");
  for (auto [node, terminal] : terminals) check_terminal(*g, node, terminal);

  std::vector<WeightMap::Entry> entries;
  for (const auto& [u, v, w] : raw_edges) entries.emplace_back(edge_between(*g, u, v), weight_from_text(w));
  return InstanceFile{WeightMap(g, tag, std::move(entries)), meta};
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "dimacs") return Format::Dimacs;
  return std::nullopt;
}

std::string emit_instance(const WeightMap& w, const InstanceMeta& meta, Format format, bool include_zero) {
  const auto& g = w.graph();
  const auto edges = listed_edges(w, include_zero);
  std::ostringstream out;
  if (format == Format::Dimacs) {
    out << "c " << kInstanceFormat << " 1\n";
    out << "c tag " << w.tag() << "\n";
    out << "c k " << g.k() << "\n";
    out << "c n " << g.n() << "\n";
    if (meta.c) out << "c c " << to_fraction_string(*meta.c) << "\n";
    if (meta.lambda) {
      out << "c lambda";
      for (const auto& l : *meta.lambda) out << ' ' << to_fraction_string(l);
      out << "\n";
    }
    out << "p mwc " << g.node_count() << ' ' << edges.size() << ' ' << g.k() << "\n";
    for (int i = 1; i <= g.k(); ++i) out << "t " << g.terminal(i) + 1 << ' ' << i << "\n";
    for (const auto& [e, weight] : edges) {
      const Edge& edge = g.edge(e);
      out << "e " << edge.u + 1 << ' ' << edge.v + 1 << ' ' << to_fraction_string(weight) << "\n";
    }
    return out.str();
  }

  // Hand-laid JSON so that tables stay one row per line.
  out << "{\n";
  out << "  \"format\": \"" << kInstanceFormat << "\",\n";
  out << "  \"version\": 1,\n";
  out << "  \"tag\": " << Json(w.tag()).dump() << ",\n";
  out << "  \"k\": " << g.k() << ",\n";
  out << "  \"n\": " << g.n() << ",\n";
  if (meta.c) out << "  \"c\": \"" << to_fraction_string(*meta.c) << "\",\n";
  if (meta.lambda) {
    out << "  \"lambda\": [";
    for (std::size_t i = 0; i < 4; ++i) out << (i ? ", " : "") << '"' << to_fraction_string((*meta.lambda)[i]) << '"';
    out << "],\n";
  }
  out << "  \"nodes\": [\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "    " << Json(std::vector<int>(g.coords(v).begin(), g.coords(v).end())).dump()
        << (v + 1 < g.node_count() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"terminals\": [";
  for (int i = 1; i <= g.k(); ++i) out << (i > 1 ? ", " : "") << g.terminal(i);
  out << "],\n";
  out << "  \"edges\": [";
  for (std::size_t s = 0; s < edges.size(); ++s) {
    const Edge& edge = g.edge(edges[s].first);
    out << (s ? ",\n    " : "\n    ") << '[' << edge.u << ", " << edge.v << ", \"" << to_fraction_string(edges[s].second)
        << "\"]";
  }
  out << (edges.empty() ? "]\n" : "\n  ]\n");
  out << "}\n";
  return out.str();
}

InstanceFile parse_instance(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) invalid_parameter("empty instance file");
  return text[first] == '{' ? parse_json_instance(text) : parse_dimacs_instance(text);
}

std::string emit_labeling(const CutLabeling& p) {
  Json doc;
  doc["format"] = kLabelingFormat;
  doc["version"] = 1;
  doc["k"] = p.graph().k();
  doc["n"] = p.graph().n();
  doc["labels"] = std::vector<int>(p.labels().begin(), p.labels().end());
  return doc.dump() + "\n";
}

CutLabeling parse_labeling(std::string_view text) {
  try {
    Json doc = Json::parse(text);
    if (doc.at("format") != kLabelingFormat) invalid_parameter("not a ckrgap labeling file");
    if (doc.at("version") != 1) invalid_parameter("unsupported labeling format version");
    auto g = SimplexGraph::get(doc.at("k").get<int>(), doc.at("n").get<int>());
    std::vector<Label> labels;
    for (const auto& l : doc.at("labels")) {
      const int v = l.get<int>();
      if (v < 1 || v > 255) invalid_parameter("label out of range");
      labels.push_back(static_cast<Label>(v));
    }
    return CutLabeling(g, std::move(labels));
  } catch (const Json::exception& ex) {
    invalid_parameter(std::string("malformed labeling JSON: ") + ex.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid_parameter("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) invalid_parameter("cannot write " + path);
  out << content;
}

Json rational_json(const Rational& value) {
  return Json{{"exact", to_fraction_string(value)}, {"decimal", to_decimal_string(value)}};
}

RunReport::RunReport(std::string command) {
  doc_["command"] = std::move(command);
  doc_["parameters"] = Json::object();
  doc_["results"] = Json::array();
  doc_["checks"] = Json::array();
  doc_["regime"] = Json::object();
}

void RunReport::parameter(const std::string& key, Json value) { doc_["parameters"][key] = std::move(value); }

void RunReport::result(const std::string& name, const Rational& value, const std::string& provenance) {
  Json entry = rational_json(value);
  doc_["results"].push_back(Json{{"name", name}, {"exact", entry["exact"]}, {"decimal", entry["decimal"]},
                                 {"provenance", provenance}});
}

void RunReport::result(const std::string& name, Json value, const std::string& provenance) {
  doc_["results"].push_back(Json{{"name", name}, {"value", std::move(value)}, {"provenance", provenance}});
}

void RunReport::regime(const std::string& key, const std::string& status) { doc_["regime"][key] = status; }

void RunReport::check(const CheckOutcome& c) {
  Json entry{{"id", c.id},           {"anchor", c.anchor},         {"expected", c.expected},
             {"computed", c.computed}, {"tolerance", c.tolerance}, {"provenance", c.provenance},
             {"pass", c.pass}};
  if (!c.error.empty()) entry["error"] = c.error;
  doc_["checks"].push_back(std::move(entry));
  if (!c.pass) ++failed_;
}

void RunReport::timing_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << ms;
  doc_["timing_ms"] = std::stod(s.str());
}

std::string RunReport::to_json(bool with_timing) const {
  Json copy = doc_;
  if (!with_timing) copy.erase("timing_ms");
  return copy.dump(2) + "\n";
}

std::string RunReport::to_table() const {
  std::ostringstream out;
  out << "command: " << doc_["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : doc_["parameters"].items()) out << "  " << key << " = " << value.dump() << "\n";
  if (!doc_["results"].empty()) {
    std::size_t width = 4;
    for (const auto& r : doc_["results"]) width = std::max(width, r["name"].get<std::string>().size());
    out << "\n" << std::left << std::setw(static_cast<int>(width)) << "name"
        << "  " << std::setw(14) << "decimal" << "  " << std::setw(18) << "provenance" << "exact\n";
    for (const auto& r : doc_["results"]) {
      out << std::setw(static_cast<int>(width)) << r["name"].get<std::string>() << "  ";
      if (r.contains("exact")) {
        out << std::setw(14) << r["decimal"].get<std::string>() << "  " << std::setw(18)
            << r["provenance"].get<std::string>() << r["exact"].get<std::string>() << "\n";
      } else {
        out << std::setw(14) << "-" << "  " << std::setw(18) << r["provenance"].get<std::string>()
            << r["value"].dump() << "\n";
      }
    }
  }
  if (!doc_["checks"].empty()) {
    out << "\n";
    for (const auto& c : doc_["checks"]) {
      out << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["id"].get<std::string>() << "  "
          << c["anchor"].get<std::string>() << "\n      expected " << c["expected"].get<std::string>()
          << "  computed " << c["computed"].get<std::string>();
      if (!c["tolerance"].get<std::string>().empty()) out << "  tolerance " << c["tolerance"].get<std::string>();
      if (c.contains("error")) out << "  error " << c["error"].get<std::string>();
      out << "\n";
    }
  }
  for (const auto& [key, value] : doc_["regime"].items()) out << "regime " << key << ": " << value.get<std::string>() << "\n";
  if (doc_.contains("timing_ms")) out << "time: " << doc_["timing_ms"].dump() << " ms\n";
  return out.str();
}

}  // namespace ckrgap
