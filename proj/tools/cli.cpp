#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "srginv/edge_invariants.hpp"
#include "srginv/error.hpp"
#include "srginv/graph.hpp"
#include "srginv/pipeline.hpp"
#include "srginv/report.hpp"
#include "srginv/vertex_invariants.hpp"

namespace srginv::cli {

using nlohmann::json;

namespace {

struct Config {
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string mode = "trace";
  std::string powers;
  std::string ladder = "default";
  std::string out = "json";
  bool modulus = false;
  unsigned jobs = 0;
  bool all_stages = false;
  bool allow_non_srg = false;
  bool no_early_exit = false;
};

InputFormat parse_format(const std::string& s) {
  if (s == "auto") return InputFormat::automatic;
  if (s == "graph6") return InputFormat::graph6;
  if (s == "rows") return InputFormat::rows;
  throw Error("unknown format '" + s + "'");
}

InvariantMode parse_mode(const std::string& s) {
  if (s == "trace") return InvariantMode::trace;
  if (s == "sortdiag" || s == "sorted_diag") return InvariantMode::sorted_diag;
  throw Error("unknown mode '" + s + "'");
}

Arithmetic arithmetic_of(const Config& c) {
  return c.modulus ? Arithmetic::modular : Arithmetic::exact;
}

unsigned jobs_of(const Config& c) {
  if (c.jobs > 0) return c.jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<unsigned> parse_powers(const std::string& text, std::vector<unsigned> fallback,
                                   unsigned minimum) {
  if (text.empty()) return fallback;
  std::vector<unsigned> powers;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value > 1000000)
      throw Error("bad power '" + item + "'");
    powers.push_back(static_cast<unsigned>(value));
  }
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i] < minimum)
      throw Error("powers must be >= " + std::to_string(minimum));
    if (i > 0 && powers[i] <= powers[i - 1]) throw Error("powers must be ascending");
  }
  return powers;
}

struct Input {
  std::string name;
  std::vector<Graph> graphs;
};

std::vector<Input> read_inputs(const Config& c, std::istream& in) {
  const auto format = parse_format(c.format);
  std::vector<Input> inputs;
  if (c.inputs.empty() || (c.inputs.size() == 1 && c.inputs[0] == "-")) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    inputs.push_back({"<stdin>", parse_graphs(text, format)});
    return inputs;
  }
  for (const auto& path : c.inputs) inputs.push_back({path, read_graphs(path, format)});
  return inputs;
}

json params_json(const std::optional<SrgParams>& p) {
  if (!p) return nullptr;
  json j = {{"label", p->label()}, {"v", p->v}, {"k", p->k}};
  j["lambda"] = p->lambda ? json(*p->lambda) : json(nullptr);
  j["mu"] = p->mu ? json(*p->mu) : json(nullptr);
  return j;
}

std::optional<SrgParams> try_params(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  return check_srg(g).params;
}

int cmd_check_srg(const Config& c, std::istream& in, std::ostream& out) {
  bool all = true;
  json results = json::array();
  std::ostringstream table;
  for (const auto& input : read_inputs(c, in)) {
    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
      const Graph& g = input.graphs[i];
      SrgCheck check;
      if (g.order() < 2) {
        check.reason = "fewer than 2 vertices";
      } else {
        check = check_srg(g);
      }
      all = all && static_cast<bool>(check);
      json entry = {{"input", input.name}, {"index", i}, {"srg", static_cast<bool>(check)}};
      table << input.name << " #" << i << ": ";
      if (check) {
        entry["params"] = params_json(check.params);
        if (check.params->lambda && check.params->mu) {
          try {
            const auto [r, s] = srg_eigenvalues(*check.params);
            entry["eigenvalues"] = {r.value, s.value};
          } catch (const Error&) {
            entry["eigenvalues"] = nullptr;
          }
        }
        table << check.params->label() << "\n";
      } else {
        entry["reason"] = check.reason;
        table << "not an SRG (" << check.reason << ")\n";
      }
      results.push_back(std::move(entry));
    }
  }
  if (c.out == "json") {
    out << results.dump(2) << "\n";
  } else {
    out << table.str();
  }
  return all ? 0 : 1;
}

int cmd_vertex_inv(const Config& c, std::istream& in, std::ostream& out) {
  const auto mode = parse_mode(c.mode);
  const auto powers = parse_powers(c.powers, {3}, 1);
  const auto arithmetic = arithmetic_of(c);
  json graphs = json::array();
  std::set<std::vector<InvariantVector>> distinct;
  std::ostringstream table;
  for (const auto& input : read_inputs(c, in)) {
    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
      const Graph& g = input.graphs[i];
      const auto sigs = vertex_signatures(g, powers, mode, arithmetic);
      const auto gsig = graph_signature(sigs);
      const auto partition = partition_vertices(sigs);
      distinct.insert(gsig.rows);
      json per_vertex = json::array();
      for (const auto& s : sigs) per_vertex.push_back(s.values);
      graphs.push_back({{"input", input.name},
                        {"index", i},
                        {"params", params_json(try_params(g))},
                        {"signatures", per_vertex},
                        {"graph_signature", gsig.rows},
                        {"partition", partition.blocks}});
      table << input.name << " #" << i << ": " << partition.blocks.size() << " block(s)";
      if (!gsig.rows.empty()) {
        table << ", first row [";
        for (std::size_t k = 0; k < gsig.rows.front().size(); ++k)
          table << (k ? "," : "") << gsig.rows.front()[k];
        table << "]";
      }
      table << "\n";
    }
  }
  if (c.out == "json") {
    out << json{{"mode", mode == InvariantMode::trace ? "trace" : "sorted_diag"},
                {"powers", powers},
                {"mod_reduced", c.modulus},
                {"distinct_signatures", distinct.size()},
                {"graphs", graphs}}
               .dump(2)
        << "\n";
  } else {
    out << table.str() << distinct.size() << " distinct signature(s)\n";
  }
  return 0;
}

int cmd_edge_inv(const Config& c, std::istream& in, std::ostream& out) {
  const auto mode = parse_mode(c.mode);
  const auto powers = parse_powers(c.powers, {2, 3, 4, 5}, 2);
  const auto arithmetic = arithmetic_of(c);
  const std::size_t width = value_width(arithmetic);
  json graphs = json::array();
  std::ostringstream table;
  for (const auto& input : read_inputs(c, in)) {
    for (std::size_t i = 0; i < input.graphs.size(); ++i) {
      const Graph& g = input.graphs[i];
      const BarMatrix bar(g);
      json per_power = json::array();
      table << input.name << " #" << i << ":";
      for (unsigned p : powers) {
        json entry = {{"power", p}};
        if (mode == InvariantMode::trace) {
          const auto trace = bar_power_diag(g, p, mode, arithmetic);
          entry["trace"] = trace;
          table << " p=" << p << " trace=" << trace[0];
        } else {
          const auto diag = bar_power_diagonal(bar, p, arithmetic);
          json edges = json::array();
          for (std::size_t e = 0; e < bar.size(); ++e) {
            const auto [a, b] = bar.index()[e];
            if (a > b) continue;  // both orientations carry the same value
            json triple = {a, b};
            for (std::size_t r = 0; r < width; ++r) triple.push_back(diag[e * width + r]);
            edges.push_back(std::move(triple));
          }
          const auto blocks = edge_partition(g, p, arithmetic);
          json block_json = json::array();
          for (const auto& blk : blocks) {
            json members = json::array();
            for (const auto& e : blk.edges)
              if (e.tail < e.head) members.push_back({e.tail, e.head});
            block_json.push_back({{"value", blk.value}, {"edges", members}});
          }
          entry["edges"] = edges;
          entry["blocks"] = block_json;
          table << " p=" << p << " blocks=" << blocks.size();
        }
        per_power.push_back(std::move(entry));
      }
      table << "\n";
      graphs.push_back({{"input", input.name},
                        {"index", i},
                        {"directed_edges", bar.size()},
                        {"powers", per_power}});
    }
  }
  if (c.out == "json") {
    out << json{{"mode", mode == InvariantMode::trace ? "trace" : "sorted_diag"},
                {"mod_reduced", c.modulus},
                {"graphs", graphs}}
               .dump(2)
        << "\n";
  } else {
    out << table.str();
  }
  return 0;
}

int cmd_compare(const Config& c, std::istream& in, std::ostream& out) {
  if (c.inputs.size() != 2) throw Error("compare needs exactly two input files");
  const auto inputs = read_inputs(c, in);
  for (const auto& input : inputs)
    if (input.graphs.empty()) throw Error(input.name + " contains no graph");
  const auto ladder = load_ladder(c.ladder);
  const auto verdict =
      compare_pair(inputs[0].graphs.front(), inputs[1].graphs.front(), ladder, arithmetic_of(c));
  if (c.out == "json") {
    json j = {{"distinguished", verdict.distinguished}, {"mod_reduced", c.modulus}};
    if (verdict.distinguished) {
      j["stage"] = verdict.stage + 1;
      j["stage_label"] = verdict.stage_label;
      j["stage_kind"] = to_json(ladder.stages[verdict.stage])["kind"];
    }
    out << j.dump(2) << "\n";
  } else if (verdict.distinguished) {
    out << "distinguished: stage " << verdict.stage + 1 << " (" << verdict.stage_label << ")\n";
  } else {
    out << "indistinguishable by ladder\n";
  }
  return verdict.distinguished ? 0 : 2;
}

int cmd_report(const Config& c, std::ostream& out) {
  if (c.inputs.size() != 1) throw Error("report needs exactly one dataset path");
  const auto ladder = load_ladder(c.ladder);
  const auto dataset = load_dataset(c.inputs[0], parse_format(c.format), c.allow_non_srg);
  PipelineOptions options;
  options.arithmetic = arithmetic_of(c);
  options.jobs = jobs_of(c);
  options.early_exit = !c.no_early_exit;
  const auto report = dataset_report(dataset, ladder, options);
  if (c.out == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_table(report, c.all_stages);
  }
  return report.totals.unresolved_pairs == 0 ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Neighborhood and edge-pair invariants for strongly regular graphs", "srginv"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool positional_many) {
    if (positional_many) sub->add_option("inputs", c.inputs, "Input files (stdin when omitted)");
    sub->add_option("--format", c.format, "Input format")
        ->check(CLI::IsMember({"auto", "graph6", "rows"}));
    sub->add_option("--out", c.out, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--modulus", c.modulus, "Dual-prime modular arithmetic (values mod-reduced)");
    sub->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)");
  };

  auto* check = app.add_subcommand("check-srg", "Verify SRG conditions and print parameters");
  add_common(check, true);

  auto* vinv = app.add_subcommand("vertex-inv", "Per-vertex neighborhood power invariants");
  add_common(vinv, true);
  vinv->add_option("--mode", c.mode, "trace|sortdiag")
      ->check(CLI::IsMember({"trace", "sortdiag", "sorted_diag"}));
  vinv->add_option("--powers", c.powers, "Ascending powers, e.g. 3,4");

  auto* einv = app.add_subcommand("edge-inv", "Edge-pair matrix power invariants");
  add_common(einv, true);
  einv->add_option("--mode", c.mode, "trace|sortdiag")
      ->check(CLI::IsMember({"trace", "sortdiag", "sorted_diag"}));
  einv->add_option("--powers", c.powers, "Ascending powers >= 2, e.g. 2,3,4,5");

  auto* cmp = app.add_subcommand("compare", "Run the ladder on the first graph of two files");
  add_common(cmp, false);
  cmp->add_option("files", c.inputs, "Two input files")->expected(2)->required();
  cmp->add_option("--ladder", c.ladder, "default or a JSON ladder file");

  auto* rep = app.add_subcommand("report", "Class counts per parameter family");
  add_common(rep, false);
  rep->add_option("dataset", c.inputs, "Dataset file or directory")->expected(1)->required();
  rep->add_option("--ladder", c.ladder, "default or a JSON ladder file");
  rep->add_flag("--all-stages", c.all_stages, "Print every stage, not only changes");
  rep->add_flag("--allow-non-srg", c.allow_non_srg, "Process graphs failing the SRG check");
  rep->add_flag("--no-early-exit", c.no_early_exit, "Evaluate every stage");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*check) return cmd_check_srg(c, in, out);
    if (*vinv) return cmd_vertex_inv(c, in, out);
    if (*einv) return cmd_edge_inv(c, in, out);
    if (*cmp) return cmd_compare(c, in, out);
    if (*rep) return cmd_report(c, out);
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << " (retry with --modulus)\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace srginv::cli
