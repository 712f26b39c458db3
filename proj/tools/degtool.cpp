// Command-line front end: llt / macdonald / deg subcommands.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "deg/fixtures.hpp"
#include "deg/llt.hpp"
#include "deg/macdonald.hpp"
#include "deg/serialize.hpp"
#include "deg/transform.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNotSchurPositive = 2;
constexpr int kExitTransformFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

deg::TupleShape shapes_for(const std::string& literal, int k) {
  deg::TupleShape parsed = deg::parse_tuple_shape(literal);
  if (k <= parsed.k()) return parsed;
  // pad with empty components up to k
  std::vector<deg::SkewShape> comps = parsed.components();
  while (static_cast<int>(comps.size()) < k) comps.emplace_back();
  return deg::TupleShape(std::move(comps));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual equivalence graph engine"};
  app.require_subcommand(1);

  // ---- llt
  auto* llt = app.add_subcommand("llt", "Schur expansion of an LLT polynomial");
  std::string llt_shapes, llt_method = "oracle", llt_format = "text";
  int llt_k = 0, llt_bound = 10;
  bool llt_serial = false;
  llt->add_option("--shapes", llt_shapes, "tuple literal, e.g. \"2;1,1\"")->required();
  llt->add_option("--k", llt_k, "number of components (pads with empties)");
  llt->add_option("--method", llt_method)->check(CLI::IsMember({"oracle", "transform", "both"}));
  llt->add_option("--format", llt_format)->check(CLI::IsMember({"text", "json"}));
  llt->add_option("--max-size", llt_bound, "total-size guardrail (default 10)");
  llt->add_flag("--serial", llt_serial, "disable the parallel kernels");

  // ---- macdonald
  auto* mac = app.add_subcommand("macdonald", "Kostka-Macdonald coefficient table");
  std::string mac_mu, mac_format = "text";
  int mac_bound = 7;
  bool mac_serial = false;
  mac->add_option("--mu", mac_mu, "partition, e.g. \"2,2\"")->required();
  mac->add_option("--format", mac_format)->check(CLI::IsMember({"text", "json"}));
  mac->add_option("--max-size", mac_bound, "size guardrail (default 7)");
  mac->add_flag("--serial", mac_serial);

  // ---- deg
  auto* dg = app.add_subcommand("deg", "build, check and transform graphs");
  dg->require_subcommand(1);
  std::string deg_partition, deg_in, deg_out, deg_log, deg_dot, deg_fixture;
  bool deg_words = false;

  auto* dbuild = dg->add_subcommand("build", "standard graph of a partition");
  dbuild->add_option("--partition", deg_partition)->required();
  dbuild->add_option("--out", deg_out, "write graph JSON");
  dbuild->add_option("--export-dot", deg_dot, "write DOT");
  dbuild->add_flag("--words", deg_words, "label DOT vertices with words");

  auto* dcheck = dg->add_subcommand("check", "axiom report for a graph");
  dcheck->add_option("--in", deg_in)->required();

  auto* dtrans = dg->add_subcommand("transform", "rewire into a dual equivalence graph");
  dtrans->add_option("--in", deg_in)->required();
  dtrans->add_option("--out", deg_out);
  dtrans->add_option("--log", deg_log, "write the event log");

  auto* dcomp = dg->add_subcommand("components", "connected components and shapes");
  dcomp->add_option("--in", deg_in)->required();

  auto* ddot = dg->add_subcommand("export-dot", "DOT for a graph JSON");
  ddot->add_option("--in", deg_in)->required();
  ddot->add_option("--out", deg_out);
  ddot->add_flag("--words", deg_words);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (llt->parsed()) {
      deg::TupleShape shape = shapes_for(llt_shapes, llt_k);
      if (shape.total_size() > llt_bound) {
        std::cerr << "total size " << shape.total_size() << " exceeds --max-size "
                  << llt_bound << "\n";
        return kExitUsage;
      }
      deg::Exec exec = llt_serial ? deg::Exec::Serial : deg::Exec::Parallel;
      int bound = llt_bound;
      auto run = [&](deg::LltMethod m) {
        return deg::llt_schur(shape, m, exec, bound);
      };
      deg::LltSchurResult res;
      if (llt_method == "oracle") {
        res = run(deg::LltMethod::Oracle);
      } else if (llt_method == "transform") {
        res = run(deg::LltMethod::Transform);
        if (res.transform_fell_back) {
          std::cerr << "transform failed; oracle fallback disabled for --method transform\n";
          return kExitTransformFailed;
        }
      } else {
        res = run(deg::LltMethod::Transform);
        auto oracle = run(deg::LltMethod::Oracle);
        if (res.transform_fell_back || !(res.poly == oracle.poly)) {
          std::cerr << "method disagreement: transform " << res.poly.to_string()
                    << " vs oracle " << oracle.poly.to_string() << "\n";
          return kExitTransformFailed;
        }
      }
      if (llt_format == "json") std::cout << deg::schur_to_json(res.poly);
      else std::cout << res.poly.to_string() << "\n";
      return 0;
    }

    if (mac->parsed()) {
      deg::Partition mu = deg::parse_partition(mac_mu);
      if (mu.size() > mac_bound) {
        std::cerr << "|mu| exceeds --max-size " << mac_bound << "\n";
        return kExitUsage;
      }
      deg::Exec exec = mac_serial ? deg::Exec::Serial : deg::Exec::Parallel;
      deg::SchurPoly table = deg::kostka_macdonald(mu, exec, mac_bound);
      if (mac_format == "json") {
        std::cout << deg::schur_to_json(table);
      } else {
        for (const auto& [lambda, c] : table.terms())
          std::cout << "K[" << lambda.to_string() << "] = " << c.to_string() << "\n";
      }
      return 0;
    }

    if (dbuild->parsed()) {
      deg::ColoredGraph g = deg::build_standard_deg(deg::parse_partition(deg_partition));
      if (!deg_out.empty()) write_file(deg_out, deg::graph_to_json(g));
      if (!deg_dot.empty()) write_file(deg_dot, deg::graph_to_dot(g, deg_words));
      if (deg_out.empty() && deg_dot.empty()) std::cout << deg::graph_to_json(g);
      return 0;
    }
    if (dcheck->parsed()) {
      deg::ColoredGraph g = deg::graph_from_json(read_file(deg_in));
      deg::AxiomReport rep = deg::check_axioms(g);
      std::cout << rep.summary();
      return 0;
    }
    if (dtrans->parsed()) {
      deg::ColoredGraph g = deg::graph_from_json(read_file(deg_in));
      deg::TransformResult res = deg::transform_to_deg(g);
      if (!deg_out.empty()) write_file(deg_out, deg::graph_to_json(res.graph));
      else std::cout << deg::graph_to_json(res.graph);
      if (!deg_log.empty()) write_file(deg_log, deg::log_to_json(res.log));
      return 0;
    }
    if (dcomp->parsed()) {
      deg::ColoredGraph g = deg::graph_from_json(read_file(deg_in));
      auto comps = g.components(g.all_colors());
      for (size_t j = 0; j < comps.size(); ++j) {
        auto shape = deg::component_shape(g, comps[j]);
        std::cout << "component " << j << ": " << comps[j].size() << " vertices, shape ";
        std::cout << (shape.has_value() ? shape->to_string() : std::string("none"));
        std::cout << "\n";
      }
      return 0;
    }
    if (ddot->parsed()) {
      deg::ColoredGraph g = deg::graph_from_json(read_file(deg_in));
      if (!deg_out.empty()) write_file(deg_out, deg::graph_to_dot(g, deg_words));
      else std::cout << deg::graph_to_dot(g, deg_words);
      return 0;
    }
  } catch (const deg::NotSchurPositive& e) {
    std::cerr << "not Schur positive: " << e.what() << "\n";
    return kExitNotSchurPositive;
  } catch (const deg::TransformFailed& e) {
    std::cerr << "transform failed: " << e.what() << "\n";
    return kExitTransformFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
