#include "fet/json_io.hpp"

#include <fstream>

namespace fet {

using nlohmann::json;

json spectrum_to_json(const FourierSpectrum& s) {
  json out = json::object();
  for (std::uint64_t mask = 0; mask < s.size(); ++mask) {
    if (s.coeff(mask) != 0) out[std::to_string(mask)] = s.coeff(mask);
  }
  return out;
}

json assignment_to_json(const PartialAssignment& a) {
  json fixed = json::object();
  for (int j = 0; j < a.n; ++j) {
    if (a.fixed_mask >> j & 1) {
      fixed[std::to_string(j + 1)] = (a.value_bits >> j & 1) ? -1 : 1;
    }
  }
  return json{{"fixed", fixed}};
}

PartialAssignment assignment_from_json(int n, const json& j) {
  const json& fixed = j.contains("fixed") ? j.at("fixed") : j;
  std::uint64_t mask = 0, values = 0;
  for (auto it = fixed.begin(); it != fixed.end(); ++it) {
    int coord = std::stoi(it.key());
    if (coord < 1 || coord > n) throw BadParams("coordinate out of range: " + it.key());
    int v = it.value().get<int>();
    if (v != 1 && v != -1) throw BadParams("assignment values must be -1 or +1");
    mask |= std::uint64_t(1) << (coord - 1);
    if (v == -1) values |= std::uint64_t(1) << (coord - 1);
  }
  return PartialAssignment(n, mask, values);
}

json affine_to_json(const AffineConstraintSystem& s) {
  json rows = json::array();
  for (const auto& row : s.rows()) {
    rows.push_back(json{{"mask", row.mask}, {"sign", row.sign}});
  }
  return json{{"rows", rows}};
}

AffineConstraintSystem affine_from_json(int n, const json& j) {
  std::vector<ParityConstraint> rows;
  for (const auto& row : j.at("rows")) {
    rows.push_back({row.at("mask").get<std::uint64_t>(), row.at("sign").get<int>()});
  }
  return AffineConstraintSystem(n, rows);
}

json partition_to_json(const SubcubePartition& p) {
  json cells = json::array();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    json cell = assignment_to_json(p.cells[i]);
    cell["value"] = p.cell_values[i];
    cells.push_back(cell);
  }
  return json{{"n", p.n}, {"cells", cells}};
}

json partition_to_json(const AffinePartition& p) {
  json cells = json::array();
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    json cell = affine_to_json(p.cells[i]);
    cell["value"] = p.cell_values[i];
    cells.push_back(cell);
  }
  return json{{"n", p.n}, {"cells", cells}};
}

AnyPartition partition_from_json(const json& j) {
  int n = j.at("n").get<int>();
  const json& cells = j.at("cells");
  bool any_affine = false;
  for (const auto& cell : cells) {
    if (cell.contains("rows")) any_affine = true;
  }
  if (any_affine) {
    AffinePartition p;
    p.n = n;
    for (const auto& cell : cells) {
      if (cell.contains("rows")) {
        p.cells.push_back(affine_from_json(n, cell));
      } else {
        p.cells.push_back(
            AffineConstraintSystem::from_subcube(assignment_from_json(n, cell)));
      }
      p.cell_values.push_back(cell.at("value").get<int>());
    }
    return p;
  }
  SubcubePartition p;
  p.n = n;
  for (const auto& cell : cells) {
    p.cells.push_back(assignment_from_json(n, cell));
    p.cell_values.push_back(cell.at("value").get<int>());
  }
  return p;
}

json form_to_json(const BlockMultilinearForm& f) {
  json blocks = json::array();
  for (const auto& block : f.blocks()) {
    json b = json::array();
    for (int var : block) b.push_back(var + 1);
    blocks.push_back(b);
  }
  json terms = json::array();
  for (const auto& [mask, c] : f.poly().terms()) {
    json vars = json::array();
    for (int v = 0; v < f.total_vars(); ++v) {
      if (mask >> v & 1) vars.push_back(v + 1);
    }
    terms.push_back(json{{"vars", vars}, {"coeff", c}});
  }
  return json{{"n", f.block_size()}, {"d", f.block_count()},
              {"blocks", blocks}, {"terms", terms}};
}

BlockMultilinearForm form_from_json(const json& j) {
  int block_size = j.at("n").get<int>();
  int d = j.at("d").get<int>();
  int total = block_size * d;
  if (total < 1 || total > caps::kMaxVars) throw BadParams("form size out of range");
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j.at("blocks")) {
    std::vector<int> block;
    for (const auto& v : b) {
      int var = v.get<int>();
      if (var < 1 || var > total) throw BadParams("block variable out of range");
      block.push_back(var - 1);
    }
    blocks.push_back(block);
  }
  SparsePolynomial poly(total);
  for (const auto& term : j.at("terms")) {
    std::uint64_t mask = 0;
    for (const auto& v : term.at("vars")) {
      int var = v.get<int>();
      if (var < 1 || var > total) throw BadParams("term variable out of range");
      mask |= std::uint64_t(1) << (var - 1);
    }
    poly.add_coeff(mask, term.at("coeff").get<double>());
  }
  return BlockMultilinearForm(std::move(blocks), std::move(poly));
}

json lp_result_to_json(const LpResult& r, bool include_dual) {
  json terms = json::object();
  for (const auto& [mask, c] : r.minimizer.terms()) {
    terms[std::to_string(mask)] = c;
  }
  json out{{"optimum", r.optimum}, {"terms", terms}, {"gap", r.duality_gap}};
  if (include_dual) {
    out["dual_objective"] = r.dual.objective;
    out["dual_feasible"] = r.dual.feasible;
    out["dual_values"] = r.dual.values;
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), e.byte);
  }
  return j;
}

}  // namespace fet
