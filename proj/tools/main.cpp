#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellfib/collision.hpp"
#include "ellfib/kodaira.hpp"
#include "ellfib/scenario.hpp"
#include "ellfib/serialize.hpp"
#include "ellfib/weierstrass.hpp"

namespace {

using namespace ellfib;
using nlohmann::json;

std::string fmt(const Rational& r) { return rational_to_string(r); }

int parse_order(const std::string& s) {
  if (s == "inf") return kOrderInfinity;
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("vanishing order must be a non-negative integer or 'inf': " + s);
  }
}

const char* j_class_name(JClass c) {
  switch (c) {
    case JClass::Zero: return "zero";
    case JClass::One: return "one";
    case JClass::Regular: return "regular";
    case JClass::Pole: return "pole";
  }
  return "?";
}

void run_classify_orders(const std::string& orders, bool as_json) {
  std::vector<std::string> parts;
  std::stringstream ss(orders);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3)
    throw ParseError("--orders expects o_a,o_b,o_delta");
  FiberType t = classify_from_orders(parse_order(parts[0]), parse_order(parts[1]),
                                     parse_order(parts[2]));
  if (as_json)
    std::cout << json{{"fiber_type", to_string(t)}}.dump() << "\n";
  else
    std::cout << to_string(t) << "\n";
}

void run_classify_type(const std::string& name, bool as_json) {
  FiberType t = parse_fiber_type(name);
  JBehavior jb = j_behavior_of(t);
  if (as_json) {
    json out{{"fiber_type", to_string(t)},
             {"a", fmt(coefficient_a(t))},
             {"euler_characteristic", euler_characteristic(t)},
             {"monodromy", to_json(monodromy_of(t))},
             {"j_class", j_class_name(jb.cls)},
             {"j_pole_order", pole_order(t)}};
    std::cout << out.dump() << "\n";
    return;
  }
  SL2Matrix m = monodromy_of(t);
  std::cout << "type: " << to_string(t) << "\n"
            << "a: " << fmt(coefficient_a(t)) << "\n"
            << "euler characteristic: " << euler_characteristic(t) << "\n"
            << "monodromy: [[" << m.a << "," << m.b << "],[" << m.c << "," << m.d
            << "]]\n"
            << "J: " << j_class_name(jb.cls);
  if (jb.cls == JClass::Pole) std::cout << " (order " << jb.pole_order << ")";
  std::cout << "\n";
}

void run_collide(const std::string& left, const std::string& right, int n1, int n2,
                 int ngamma, bool as_json) {
  std::optional<int> ng;
  if (ngamma > 0) ng = ngamma;
  CollisionInput input(parse_fiber_type(left), parse_fiber_type(right), n1, n2, ng);
  CollisionOutcome out = collide(input);
  bool section = input.n_left == 1 && input.n_right == 1 &&
                 (!input.n_gamma || *input.n_gamma == 1);
  if (as_json) {
    json j = to_json(out);
    if (section)
      j["verdict"] =
          classify_collision(input) == CollisionClass::Bad ? "Bad" : "Good";
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "β = " << fmt(out.beta) << ", Γ: " << to_string(out.gamma_type)
            << ", α = " << fmt(out.alpha) << ", δ = " << fmt(out.delta);
  if (section)
    std::cout << ", verdict: "
              << (classify_collision(input) == CollisionClass::Bad ? "Bad" : "Good");
  std::cout << "\n";
}

void print_tree(const ResolutionNode& node, int depth) {
  std::cout << std::string(2 * depth, ' ') << to_string(node.input.left) << " x "
            << to_string(node.input.right) << " -> Γ: "
            << to_string(node.outcome.gamma_type)
            << " (β = " << fmt(node.outcome.beta)
            << ", α = " << fmt(node.outcome.alpha) << ") "
            << (node.good ? "Good" : "Bad") << "\n";
  for (const auto& c : node.children) print_tree(c, depth + 1);
}

void run_resolve(const std::string& left, const std::string& right, bool as_json) {
  CollisionInput input(parse_fiber_type(left), parse_fiber_type(right));
  ResolutionNode tree = resolve(input);
  int count = blowup_count(input);
  if (as_json) {
    json j = to_json(tree);
    j["blowup_count"] = count;
    std::cout << j.dump() << "\n";
    return;
  }
  print_tree(tree, 0);
  std::cout << "blow-ups: " << count << "\n";
}

std::string beta_cell(const FiberType& l, const FiberType& r) {
  CollisionOutcome out = collide(CollisionInput(l, r));
  return fmt(out.beta) + "(" + to_string(out.gamma_type) + ")";
}

void print_grid(const std::string& title, const std::vector<FiberType>& types,
                json* out) {
  if (out) {
    json rows = json::object();
    for (const auto& l : types) {
      json row = json::object();
      for (const auto& r : types) {
        CollisionOutcome o = collide(CollisionInput(l, r));
        row[to_string(r)] = {{"beta", fmt(o.beta)},
                             {"gamma", to_string(o.gamma_type)}};
      }
      rows[to_string(l)] = row;
    }
    (*out)[title] = rows;
    return;
  }
  std::cout << title << " (beta(Gamma)):\n";
  const int w = 12;
  std::cout << std::string(6, ' ');
  for (const auto& r : types) {
    std::string label = to_string(r);
    std::cout << label << std::string(w - label.size(), ' ');
  }
  std::cout << "\n";
  for (const auto& l : types) {
    std::string label = to_string(l);
    std::cout << label << std::string(6 - label.size(), ' ');
    for (const auto& r : types) {
      std::string cell = beta_cell(l, r);
      std::cout << cell << std::string(w - cell.size(), ' ');
    }
    std::cout << "\n";
  }
  std::cout << "\n";
}

void run_tables_beta(bool as_json) {
  std::vector<FiberType> j1{FiberType::III(), FiberType::IStar(0),
                            FiberType::IIIStar()};
  std::vector<FiberType> j0{FiberType::II(), FiberType::IV(), FiberType::IStar(0),
                            FiberType::IVStar(), FiberType::IIStar()};
  if (as_json) {
    json out = json::object();
    print_grid("J=1", j1, &out);
    print_grid("J=0", j0, &out);
    std::cout << out.dump() << "\n";
    return;
  }
  print_grid("J = 1 collisions", j1, nullptr);
  print_grid("J = 0 collisions", j0, nullptr);
}

std::string miranda_cell(const FiberType& l, const FiberType& r) {
  CollisionInput input(l, r);
  CollisionOutcome out = collide(input);
  bool good = classify_collision(input) == CollisionClass::Good;
  return std::string(good ? "* " : "x ") + to_string(out.gamma_type);
}

void miranda_block(const std::vector<FiberType>& rows,
                   const std::vector<FiberType>& cols, bool triangular,
                   json* out, const std::string& title) {
  if (out) {
    json block = json::object();
    for (const auto& l : rows) {
      json row = json::object();
      for (const auto& r : cols) {
        if (triangular && coefficient_a(l) < coefficient_a(r)) continue;
        CollisionInput input(l, r);
        CollisionOutcome o = collide(input);
        row[to_string(r)] = {
            {"gamma", to_string(o.gamma_type)},
            {"good", classify_collision(input) == CollisionClass::Good}};
      }
      block[to_string(l)] = row;
    }
    (*out)[title] = block;
    return;
  }
  const int w = 10;
  std::cout << std::string(6, ' ');
  for (const auto& r : cols) {
    std::string label = to_string(r);
    std::cout << label << std::string(w - label.size(), ' ');
  }
  std::cout << "\n";
  for (const auto& l : rows) {
    std::string label = to_string(l);
    std::cout << label << std::string(6 - label.size(), ' ');
    for (const auto& r : cols) {
      std::string cell;
      if (!triangular || coefficient_a(l) >= coefficient_a(r))
        cell = miranda_cell(l, r);
      std::cout << cell << std::string(w - cell.size(), ' ');
    }
    std::cout << "\n";
  }
  std::cout << "\n";
}

void run_tables_markers(bool as_json) {
  std::vector<FiberType> j0_rows{FiberType::IIStar(), FiberType::IVStar(),
                                 FiberType::IStar(0), FiberType::IV(),
                                 FiberType::II()};
  std::vector<FiberType> j0_cols{FiberType::II(), FiberType::IV(),
                                 FiberType::IStar(0), FiberType::IVStar(),
                                 FiberType::IIStar()};
  std::vector<FiberType> j1_rows{FiberType::IIIStar(), FiberType::IStar(0),
                                 FiberType::III()};
  std::vector<FiberType> j1_cols{FiberType::III(), FiberType::IStar(0),
                                 FiberType::IIIStar()};
  std::vector<FiberType> par_rows{FiberType::IStar(1), FiberType::I(1)};
  std::vector<FiberType> par_cols{FiberType::I(2), FiberType::IStar(2)};
  if (as_json) {
    json out = json::object();
    miranda_block(j0_rows, j0_cols, true, &out, "J=0");
    miranda_block(j1_rows, j1_cols, true, &out, "J=1");
    miranda_block(par_rows, par_cols, false, &out, "parabolic");
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "Collision table (* good, x bad; entry = fiber on the "
               "exceptional divisor):\n\n";
  std::cout << "J = 0 family:\n";
  miranda_block(j0_rows, j0_cols, true, nullptr, "");
  std::cout << "J = 1 family:\n";
  miranda_block(j1_rows, j1_cols, true, nullptr, "");
  std::cout << "parabolic families (representatives b = 1, c = 2):\n";
  miranda_block(par_rows, par_cols, false, nullptr, "");
}

std::string order_text(int ord) {
  return ord == kOrderInfinity ? "inf" : std::to_string(ord);
}

void run_weierstrass(const std::string& a_text, const std::string& b_text,
                     int max_blowups, bool as_json) {
  BivariatePoly a = parse_poly(a_text);
  BivariatePoly b = parse_poly(b_text);
  BaseResolution res = analyze(a, b, max_blowups);
  std::vector<CollisionVerdict> verdicts = collision_report(res);
  if (as_json) {
    json j = to_json(res);
    json cols = json::array();
    for (const auto& v : verdicts) cols.push_back(to_json(v));
    j["collisions"] = cols;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "blow-ups: " << res.steps.size() << "\n"
            << "SNC: " << (res.snc ? "true" : "false") << "\n";
  std::cout << "divisors:\n";
  for (const auto& d : res.divisors) {
    std::cout << "  " << d.name << ": orders (" << order_text(d.ord_a) << ","
              << order_text(d.ord_b) << "," << d.ord_delta << "), type "
              << to_string(d.fiber_type) << ", lambda "
              << fmt(d.lambda_coefficient) << "\n";
  }
  if (!res.steps.empty()) {
    std::cout << "steps:\n";
    for (const auto& s : res.steps) {
      std::cout << "  " << s.index << ": " << s.exceptional << " over {";
      bool first = true;
      for (const auto& [name, m] : s.center_multiplicities) {
        if (!first) std::cout << ", ";
        first = false;
        std::cout << name << ":" << m;
      }
      std::cout << "}, lambda " << fmt(s.computed_lambda)
                << ", pullback identity "
                << (s.pullback_identity ? "ok" : "FAILED") << "\n";
    }
  }
  if (!verdicts.empty()) {
    std::cout << "collisions:\n";
    for (const auto& v : verdicts) {
      std::cout << "  " << v.record.left << " x " << v.record.right << " ("
                << to_string(v.record.left_type) << " x "
                << to_string(v.record.right_type) << "): beta "
                << fmt(v.outcome.beta) << ", "
                << (v.classification == CollisionClass::Good ? "Good" : "Bad")
                << "\n";
    }
  }
}

void run_scenario(const std::string& path, bool as_json) {
  Scenario sc = load_scenario(path);
  ScenarioResult result = evaluate_scenario(sc);
  if (as_json) {
    std::cout << to_json(result).dump() << "\n";
    return;
  }
  std::cout << "lambda:";
  for (const auto& [name, c] : result.lambda.coeff)
    std::cout << " " << fmt(c) << "*" << name;
  if (result.lambda.coeff.empty()) std::cout << " 0";
  std::cout << "\n";
  for (const auto& b : result.blowdowns) {
    std::cout << b.gamma << ": delta = " << fmt(b.delta) << ", log-extremal: "
              << (b.log_extremal ? "true" : "false")
              << ", verdict: " << to_string(b.verdict) << "\n";
  }
  std::cout << "mmp: "
            << (result.mmp.status == MmpStatus::Minimal ? "Minimal" : "Blocked");
  if (!result.mmp.steps.empty()) {
    std::cout << "; contracted:";
    for (const auto& s : result.mmp.steps) std::cout << " " << s.contracted;
  }
  if (!result.mmp.blocked.empty()) {
    std::cout << "; blocked:";
    for (const auto& g : result.mmp.blocked) std::cout << " " << g;
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular-fiber and collision calculus for elliptic threefolds"};
  app.require_subcommand(1);
  bool global_json = false;
  app.add_flag("--json", global_json, "emit JSON reports");

  auto* classify = app.add_subcommand("classify-fiber", "classify a Kodaira fiber");
  classify->fallthrough();
  std::string orders, type_name;
  auto* orders_opt = classify->add_option("--orders", orders, "o_a,o_b,o_delta");
  auto* type_opt = classify->add_option("--type", type_name, "fiber type name");
  orders_opt->excludes(type_opt);

  auto* collide_cmd = app.add_subcommand("collide", "collide two fiber types");
  collide_cmd->fallthrough();
  std::string col_left, col_right;
  int n1 = 1, n2 = 1, ngamma = 0;
  collide_cmd->add_option("left", col_left, "left fiber type")->required();
  collide_cmd->add_option("right", col_right, "right fiber type")->required();
  collide_cmd->add_option("--n1", n1, "left fiber multiplicity");
  collide_cmd->add_option("--n2", n2, "right fiber multiplicity");
  collide_cmd->add_option("--ngamma", ngamma, "multiplicity over the exceptional divisor");

  auto* resolve_cmd = app.add_subcommand("resolve", "resolve a collision by blow-ups");
  resolve_cmd->fallthrough();
  std::string res_left, res_right;
  resolve_cmd->add_option("left", res_left, "left fiber type")->required();
  resolve_cmd->add_option("right", res_right, "right fiber type")->required();

  auto* tables_cmd = app.add_subcommand("tables", "print collision tables");
  tables_cmd->fallthrough();
  bool want_beta = false, want_markers = false;
  auto* cor_flag = tables_cmd->add_flag("--beta", want_beta, "beta tables");
  auto* mir_flag =
      tables_cmd->add_flag("--markers", want_markers, "collision table with markers");
  cor_flag->excludes(mir_flag);

  auto* w_cmd = app.add_subcommand("weierstrass", "analyze a Weierstrass model");
  w_cmd->fallthrough();
  std::string a_text, b_text;
  int max_blowups = 24;
  w_cmd->add_option("--a", a_text, "a(s,t)")->required();
  w_cmd->add_option("--b", b_text, "b(s,t)")->required();
  w_cmd->add_option("--max-blowups", max_blowups, "blow-up budget");

  auto* sc_cmd = app.add_subcommand("scenario", "evaluate a scenario file");
  sc_cmd->fallthrough();
  std::string scenario_path;
  sc_cmd->add_option("file", scenario_path, "scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      if (orders_opt->count())
        run_classify_orders(orders, global_json);
      else if (type_opt->count())
        run_classify_type(type_name, global_json);
      else
        throw ParseError("classify-fiber needs --orders or --type");
    } else if (collide_cmd->parsed()) {
      run_collide(col_left, col_right, n1, n2, ngamma, global_json);
    } else if (resolve_cmd->parsed()) {
      run_resolve(res_left, res_right, global_json);
    } else if (tables_cmd->parsed()) {
      if (want_beta)
        run_tables_beta(global_json);
      else if (want_markers)
        run_tables_markers(global_json);
      else
        throw ParseError("tables needs --beta or --markers");
    } else if (w_cmd->parsed()) {
      run_weierstrass(a_text, b_text, max_blowups, global_json);
    } else if (sc_cmd->parsed()) {
      run_scenario(scenario_path, global_json);
    }
  } catch (const ellfib::DomainError& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
