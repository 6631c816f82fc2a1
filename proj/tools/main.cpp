#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "dissection/cache.hpp"
#include "dissection/json_io.hpp"
#include "dissection/morphism.hpp"
#include "dissection/primitives.hpp"
#include "dissection/suites.hpp"

namespace {

using namespace dissection;

struct XSpec {
  bool symbolic = true;
  Rational value;
};

Element maybe_specialize(const Element& e, const XSpec& xs) {
  return xs.symbolic ? e : specialize(e, xs.value);
}

void emit_element(const Element& e, const std::string& format,
                  const std::string& basis) {
  if (format == "json")
    std::cout << element_to_json(e, basis).dump(2) << "\n";
  else
    std::cout << e.str() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{
      "Exact computations in the parameterized Hopf algebra of dissection "
      "diagrams, its graded dual, and the rooted-tree morphism."};
  app.require_subcommand(1);

  std::string format = "text";
  std::string cache_dir;
  if (const char* env = std::getenv("DISSECTION_CACHE")) cache_dir = env;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format (text|json|csv)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--cache-dir", cache_dir,
                    "Result cache directory (or env DISSECTION_CACHE)");
  };

  std::string x_text;
  bool symbolic = false;
  auto add_x = [&](CLI::App* cmd) {
    cmd->add_option("--x", x_text, "Evaluate at an exact rational, e.g. -1 "
                                   "or 5/7");
    cmd->add_flag("--symbolic", symbolic,
                  "Keep coefficients symbolic in x (default)");
  };
  auto parse_x = [&]() {
    XSpec xs;
    if (!x_text.empty() && !symbolic) {
      xs.symbolic = false;
      xs.value = parse_rational(x_text);
    }
    return xs;
  };

  // enumerate
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List or count dissection diagrams");
  int degree = -1, max_degree = -1;
  bool count_only = false, force = false;
  enumerate_cmd->add_option("--degree", degree, "Single degree");
  enumerate_cmd->add_option("--max-degree", max_degree, "Range 0..N");
  enumerate_cmd->add_flag("--count-only", count_only, "Print counts only");
  enumerate_cmd->add_flag("--force", force, "Lift the practical degree bound");
  add_common(enumerate_cmd);

  // element commands
  std::string diagram_text, left_text, right_text, tree_text;
  auto* coproduct_cmd =
      app.add_subcommand("coproduct", "Coproduct of a diagram");
  coproduct_cmd->add_option("--diagram", diagram_text, "Diagram, D{n: u-v,...}")
      ->required();
  add_x(coproduct_cmd);
  add_common(coproduct_cmd);

  auto* antipode_cmd = app.add_subcommand("antipode", "Antipode of a diagram");
  antipode_cmd->add_option("--diagram", diagram_text, "Diagram")->required();
  add_x(antipode_cmd);
  add_common(antipode_cmd);

  auto* prelie_cmd = app.add_subcommand(
      "prelie", "Pre-Lie product Z_left o Z_right in the graded dual");
  prelie_cmd->add_option("--left", left_text, "Left diagram")->required();
  prelie_cmd->add_option("--right", right_text, "Right diagram")->required();
  add_x(prelie_cmd);
  add_common(prelie_cmd);

  auto* bracket_cmd =
      app.add_subcommand("bracket", "Lie bracket [Z_left, Z_right]");
  bracket_cmd->add_option("--left", left_text, "Left diagram")->required();
  bracket_cmd->add_option("--right", right_text, "Right diagram")->required();
  add_x(bracket_cmd);
  add_common(bracket_cmd);

  auto* phi_cmd = app.add_subcommand(
      "phi", "Image of a rooted tree or forest in the graded dual");
  phi_cmd->add_option("--tree", tree_text,
                      "Tree [..] or whitespace-separated forest")
      ->required();
  add_x(phi_cmd);
  add_common(phi_cmd);

  // prim-dims
  auto* prim_cmd = app.add_subcommand(
      "prim-dims", "Primitive-space dimensions against the cofree reference");
  std::vector<std::string> x_values;
  prim_cmd->add_option("--degree", degree, "Single degree");
  prim_cmd->add_option("--max-degree", max_degree,
                       "Degrees 1..N (default 4)");
  prim_cmd->add_option("--x", x_values,
                       "Rational sample points (default -3..3)");
  prim_cmd->add_flag("--force", force, "Allow degrees above 5");
  add_common(prim_cmd);

  // check
  auto* check_cmd =
      app.add_subcommand("check", "Run a named verification suite");
  std::string suite = "all";
  bool corrupt = false;
  check_cmd->add_option("--suite", suite,
                        "hopf-axioms|prelie|og|morphism|counting|bases|all");
  check_cmd->add_flag("--corrupt-convention", corrupt,
                      "Negative control: flip the vertex sweep order");
  add_common(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ResultCache cache(cache_dir);

  try {
    if (enumerate_cmd->parsed()) {
      if (degree < 0 && max_degree < 0) {
        std::cerr << "enumerate: need --degree or --max-degree\n";
        return 2;
      }
      int lo = degree >= 0 ? degree : 0;
      int hi = degree >= 0 ? degree : max_degree;
      if (hi > 8 && !force) {
        std::cerr << "enumerate: degree " << hi
                  << " above the practical bound 8 (use --force)\n";
        return 2;
      }
      for (int n = lo; n <= hi; ++n) {
        const auto& all = enumerate_diagrams(n);
        if (count_only) {
          if (lo == hi)
            std::cout << all.size() << "\n";
          else
            std::cout << n << "," << all.size() << "\n";
        } else if (format == "json") {
          Json j = Json::array();
          for (const Diagram& d : all) j.push_back(format_diagram(d));
          std::cout << j.dump(2) << "\n";
        } else {
          for (const Diagram& d : all) std::cout << format_diagram(d) << "\n";
        }
      }
      return 0;
    }

    if (coproduct_cmd->parsed()) {
      XSpec xs = parse_x();
      TensorElement t = coproduct(parse_diagram(diagram_text));
      if (!xs.symbolic) t = specialize(t, xs.value);
      if (format == "json")
        std::cout << tensor_to_json(t).dump(2) << "\n";
      else
        std::cout << t.str() << "\n";
      return 0;
    }

    if (antipode_cmd->parsed()) {
      XSpec xs = parse_x();
      emit_element(maybe_specialize(antipode(parse_diagram(diagram_text)), xs),
                   format, "");
      return 0;
    }

    if (prelie_cmd->parsed() || bracket_cmd->parsed()) {
      XSpec xs = parse_x();
      Diagram l = parse_diagram(left_text), r = parse_diagram(right_text);
      LinComb<Diagram> value = prelie_cmd->parsed()
                                   ? prelie_circ_diagrams(l, r)
                                   : lie_bracket(l, r);
      emit_element(maybe_specialize(element_from_lincomb(value), xs), format,
                   "dual");
      return 0;
    }

    if (phi_cmd->parsed()) {
      XSpec xs = parse_x();
      std::string key = "phi|" + format_forest(parse_forest(tree_text));
      Element e;
      if (auto hit = cache.get(key)) {
        e = element_from_json(*hit);
      } else {
        e = element_from_sym(phi_forest(parse_forest(tree_text)));
        cache.put(key, element_to_json(e, "dual"));
      }
      emit_element(maybe_specialize(e, xs), format, "dual");
      return 0;
    }

    if (prim_cmd->parsed()) {
      int hi = degree >= 0 ? degree : (max_degree >= 0 ? max_degree : 4);
      int lo = degree >= 0 ? degree : 1;
      if (hi > 5 && !force) {
        std::cerr << "prim-dims: degree " << hi
                  << " above the guarded bound 5 (use --force)\n";
        return 2;
      }
      if (x_values.empty())
        for (int v = -3; v <= 3; ++v) x_values.push_back(std::to_string(v));
      if (format != "json") std::cout << "degree,x,dimension,cofree_reference,match\n";
      Json rows = Json::array();
      for (int n = lo; n <= hi; ++n)
        for (const std::string& xv : x_values) {
          Rational x = parse_rational(xv);
          std::string key = "prim-dims|" + std::to_string(n) + "|" +
                            rational_str(x);
          int dim;
          if (auto hit = cache.get(key)) {
            dim = hit->get<int>();
          } else {
            dim = primitive_dimension(n, x);
            cache.put(key, dim);
          }
          Integer ref = cofree_reference(n);
          bool match = ref == dim;
          if (format == "json")
            rows.push_back({{"degree", n},
                            {"x", rational_str(x)},
                            {"dimension", dim},
                            {"cofree_reference", ref.get_str()},
                            {"match", match}});
          else
            std::cout << n << "," << rational_str(x) << "," << dim << ","
                      << ref.get_str() << "," << (match ? "yes" : "no")
                      << "\n";
        }
      if (format == "json") std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (check_cmd->parsed()) {
      if (corrupt) testing::flip_ccw_convention = true;
      bool all_pass = true;
      for (const CheckResult& r : run_suite(suite)) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " — " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
