#include "coxeter/coxeter_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coxeter/errors.hpp"

namespace coxeter {

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<int> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 0 || entries_.size() != static_cast<std::size_t>(rank_) * rank_)
    throw UsageError("Coxeter matrix: entry count does not match rank");
}

void CoxeterMatrix::check_well_formed() const {
  for (int i = 0; i < rank_; ++i) {
    if (at(i, i) != 1)
      throw BadDiagonalError("m(s" + std::to_string(i + 1) + ",s" +
                             std::to_string(i + 1) + ") must be 1, got " +
                             std::to_string(at(i, i)));
    for (int j = i + 1; j < rank_; ++j) {
      if (at(i, j) != at(j, i))
        throw NonSymmetricError("m(s" + std::to_string(i + 1) + ",s" +
                                std::to_string(j + 1) + ") != m(s" +
                                std::to_string(j + 1) + ",s" +
                                std::to_string(i + 1) + ")");
      const int v = at(i, j);
      if (v == 1 || (v < 0 && v != -1))
        throw UsageError("m(s" + std::to_string(i + 1) + ",s" +
                         std::to_string(j + 1) +
                         ") must be >= 2, or 0/-1 for infinity");
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rank") || !j.contains("m"))
    throw UsageError("matrix file must be {\"rank\": n, \"m\": [[...]]}");
  const int rank = j["rank"].get<int>();
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(rank) * rank);
  const auto& rows = j["m"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != rank)
    throw UsageError("matrix \"m\" must have `rank` rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      throw UsageError("matrix \"m\" rows must each have `rank` entries");
    for (const auto& v : row) entries.push_back(v.get<int>());
  }
  return CoxeterMatrix(rank, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string CoxeterMatrix::to_json_text() const {
  nlohmann::ordered_json j;
  j["rank"] = rank_;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < rank_; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 0; k < rank_; ++k) row.push_back(at(i, k));
    rows.push_back(row);
  }
  j["m"] = rows;
  return j.dump();
}

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::string describe_nodes(const std::vector<int>& nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ",";
    out += "s" + std::to_string(nodes[i] + 1);
  }
  return out + "}";
}

[[noreturn]] void reject(const std::vector<int>& nodes,
                         const std::string& why) {
  throw NotFiniteTypeError("sub-diagram on " + describe_nodes(nodes) +
                           " is not of finite type: " + why);
}

}  // namespace

std::uint64_t IrreducibleFactor::order() const {
  switch (family) {
    case 'A':
      return factorial(rank + 1);
    case 'B':
      return (std::uint64_t{1} << rank) * factorial(rank);
    case 'D':
      return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
    case 'F':
      return 1152;
    case 'H':
      return rank == 3 ? 120 : 14400;
    case 'I':
      return 2ull * static_cast<std::uint64_t>(dihedral_m);
    default:
      return 0;
  }
}

std::string IrreducibleFactor::name() const {
  if (family == 'I') return "I2(" + std::to_string(dihedral_m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::uint64_t FiniteType::order() const {
  std::uint64_t r = 1;
  for (const auto& f : factors) r *= f.order();
  return r;
}

std::string FiniteType::name() const {
  if (factors.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += factors[i].name();
  }
  return out;
}

namespace {

// Classify one connected component given the full matrix.
IrreducibleFactor classify_component(const CoxeterMatrix& m,
                                     const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  IrreducibleFactor f;
  f.rank = k;

  if (k == 1) {
    f.family = 'A';
    f.nodes = comp;
    return f;
  }

  struct EdgeInfo {
    int a, b, label;
  };
  std::vector<EdgeInfo> edges;
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      if (m.is_infinite_bond(comp[i], comp[j]))
        reject(comp, "contains an infinite bond");
      const int label = m.at(comp[i], comp[j]);
      if (label >= 3) {
        edges.push_back({i, j, label});
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }

  if (static_cast<int>(edges.size()) != k - 1)
    reject(comp, "diagram contains a cycle");
  for (int i = 0; i < k; ++i)
    if (adj[i].size() >= 4) reject(comp, "node of degree 4");

  std::vector<int> branch_nodes;
  for (int i = 0; i < k; ++i)
    if (adj[i].size() == 3) branch_nodes.push_back(i);
  if (branch_nodes.size() >= 2) reject(comp, "two branch nodes");

  std::vector<int> big_edges;  // indices into edges with label > 3
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (edges[e].label > 3) big_edges.push_back(static_cast<int>(e));
  if (big_edges.size() >= 2) reject(comp, "two bonds with label > 3");
  if (!big_edges.empty() && !branch_nodes.empty())
    reject(comp, "branch node together with a bond of label > 3");

  // Walk the path from `start` (local indices).
  auto walk_path = [&](int start) {
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < k) {
      int nxt = -1;
      for (int nb : adj[cur])
        if (nb != prev) nxt = nb;
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return order;
  };
  auto to_global = [&](const std::vector<int>& locals) {
    std::vector<int> out;
    out.reserve(locals.size());
    for (int l : locals) out.push_back(comp[l]);
    return out;
  };

  if (branch_nodes.empty()) {
    // Path diagram.
    std::vector<int> leaves;
    for (int i = 0; i < k; ++i)
      if (adj[i].size() == 1) leaves.push_back(i);

    if (big_edges.empty()) {
      f.family = 'A';
      const int start =
          comp[leaves[0]] < comp[leaves[1]] ? leaves[0] : leaves[1];
      f.nodes = to_global(walk_path(start));
      return f;
    }

    const EdgeInfo& big = edges[static_cast<std::size_t>(big_edges[0])];
    const bool a_leaf = adj[big.a].size() == 1;
    const bool b_leaf = adj[big.b].size() == 1;
    if (big.label == 4) {
      if (k == 2) {
        f.family = 'B';
        f.nodes = comp;
        return f;
      }
      if (a_leaf || b_leaf) {
        f.family = 'B';
        f.nodes = to_global(walk_path(a_leaf ? big.a : big.b));
        return f;
      }
      if (k == 4) {
        // 3-4-3 path
        f.family = 'F';
        const int start =
            comp[leaves[0]] < comp[leaves[1]] ? leaves[0] : leaves[1];
        f.nodes = to_global(walk_path(start));
        return f;
      }
      reject(comp, "interior bond of label 4 on a path of rank " +
                       std::to_string(k));
    }
    if (big.label == 5) {
      if (k == 2) {
        f.family = 'I';
        f.dihedral_m = 5;
        f.nodes = comp;
        return f;
      }
      if ((k == 3 || k == 4) && (a_leaf || b_leaf)) {
        f.family = 'H';
        f.nodes = to_global(walk_path(a_leaf ? big.a : big.b));
        return f;
      }
      reject(comp, "bond of label 5 outside H3/H4");
    }
    // label >= 6
    if (k == 2) {
      f.family = 'I';
      f.dihedral_m = big.label;
      f.nodes = comp;
      return f;
    }
    reject(comp, "bond of label " + std::to_string(big.label) +
                     " on a diagram of rank " + std::to_string(k));
  }

  // One branch node, all labels 3: D or E.
  const int fork = branch_nodes[0];
  std::vector<std::pair<int, std::vector<int>>> branches;  // (length, walk)
  for (int nb : adj[fork]) {
    std::vector<int> br{nb};
    int prev = fork, cur = nb;
    while (adj[cur].size() == 2) {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      br.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    branches.push_back({static_cast<int>(br.size()), br});
  }
  std::sort(branches.begin(), branches.end(),
            [&](const auto& x, const auto& y) {
              if (x.first != y.first) return x.first < y.first;
              return comp[x.second[0]] < comp[y.second[0]];
            });
  const int b0 = branches[0].first, b1 = branches[1].first,
            b2 = branches[2].first;

  if (b0 == 1 && b1 == 1) {
    // D_{b2+3}: two short leaves, fork, then the long branch.
    f.family = 'D';
    std::vector<int> locals;
    int l0 = branches[0].second[0], l1 = branches[1].second[0];
    if (comp[l0] > comp[l1]) std::swap(l0, l1);
    locals.push_back(l0);
    locals.push_back(l1);
    locals.push_back(fork);
    for (int v : branches[2].second) locals.push_back(v);
    f.nodes = to_global(locals);
    return f;
  }
  if (b0 == 1 && b1 == 2 && (b2 >= 2 && b2 <= 4)) {
    f.family = 'E';
    f.rank = k;
    // Node order is immaterial for E (matrix realization); keep ascending.
    f.nodes = comp;
    return f;
  }
  reject(comp, "branch lengths (" + std::to_string(b0) + "," +
                   std::to_string(b1) + "," + std::to_string(b2) +
                   ") match no finite diagram");
}

}  // namespace

FiniteType classify(const CoxeterMatrix& m) {
  m.check_well_formed();
  const int n = m.rank();
  FiniteType type;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    // Connected component via DFS; infinite bonds still connect nodes so the
    // rejection names the right sub-diagram.
    std::vector<int> comp, stack{i};
    seen[static_cast<std::size_t>(i)] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < n; ++u) {
        if (u == v || seen[static_cast<std::size_t>(u)]) continue;
        if (m.at(v, u) >= 3 || m.is_infinite_bond(v, u)) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    type.factors.push_back(classify_component(m, comp));
  }
  std::sort(type.factors.begin(), type.factors.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
              return a.nodes.front() < b.nodes.front();
            });
  return type;
}

namespace {

IrreducibleFactor parse_factor_label(const std::string& tok) {
  auto bad = [&]() -> IrreducibleFactor {
    throw UsageError("unknown type label: \"" + tok + "\"");
  };
  if (tok.size() < 2) return bad();
  IrreducibleFactor f;
  f.family = tok[0];
  if (tok.rfind("I2(", 0) == 0 && tok.back() == ')') {
    f.family = 'I';
    f.rank = 2;
    try {
      f.dihedral_m = std::stoi(tok.substr(3, tok.size() - 4));
    } catch (...) {
      return bad();
    }
    if (f.dihedral_m < 2) throw UsageError("I2(m) needs m >= 2: " + tok);
    return f;
  }
  int rank = 0;
  try {
    std::size_t pos = 0;
    rank = std::stoi(tok.substr(1), &pos);
    if (pos + 1 != tok.size()) return bad();
  } catch (...) {
    return bad();
  }
  f.rank = rank;
  switch (f.family) {
    case 'A':
      if (rank < 0) return bad();
      break;
    case 'B':
    case 'C':
      f.family = 'B';
      if (rank < 2) throw UsageError("B/C needs rank >= 2: " + tok);
      break;
    case 'D':
      if (rank < 4) throw UsageError("D needs rank >= 4: " + tok);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw UsageError("E needs rank 6..8: " + tok);
      break;
    case 'F':
      if (rank != 4) throw UsageError("F needs rank 4: " + tok);
      break;
    case 'H':
      if (rank != 3 && rank != 4) throw UsageError("H needs rank 3 or 4: " + tok);
      break;
    default:
      return bad();
  }
  return f;
}

}  // namespace

CoxeterMatrix matrix_from_type_label(const std::string& label) {
  std::vector<IrreducibleFactor> factors;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    const std::size_t nxt = label.find('x', pos);
    const std::string tok =
        label.substr(pos, nxt == std::string::npos ? nxt : nxt - pos);
    if (tok.empty()) throw UsageError("empty factor in type label: " + label);
    factors.push_back(parse_factor_label(tok));
    if (nxt == std::string::npos) break;
    pos = nxt + 1;
  }

  int rank = 0;
  for (const auto& f : factors) rank += f.rank;
  std::vector<int> entries(static_cast<std::size_t>(rank) * rank, 2);
  for (int i = 0; i < rank; ++i)
    entries[static_cast<std::size_t>(i) * rank + i] = 1;
  auto set = [&](int i, int j, int v) {
    entries[static_cast<std::size_t>(i) * rank + j] = v;
    entries[static_cast<std::size_t>(j) * rank + i] = v;
  };

  int base = 0;
  for (const auto& f : factors) {
    const int r = f.rank;
    switch (f.family) {
      case 'A':
        for (int i = 0; i + 1 < r; ++i) set(base + i, base + i + 1, 3);
        break;
      case 'B':
        set(base, base + 1, 4);
        for (int i = 1; i + 1 < r; ++i) set(base + i, base + i + 1, 3);
        break;
      case 'D':
        set(base, base + 2, 3);
        set(base + 1, base + 2, 3);
        for (int i = 2; i + 1 < r; ++i) set(base + i, base + i + 1, 3);
        break;
      case 'E':
        // Bourbaki: path 1-3-4-5-..., with node 2 attached to node 4.
        set(base + 0, base + 2, 3);
        set(base + 1, base + 3, 3);
        for (int i = 2; i + 1 < r; ++i) set(base + i, base + i + 1, 3);
        break;
      case 'F':
        set(base + 0, base + 1, 3);
        set(base + 1, base + 2, 4);
        set(base + 2, base + 3, 3);
        break;
      case 'H':
        set(base, base + 1, 5);
        for (int i = 1; i + 1 < r; ++i) set(base + i, base + i + 1, 3);
        break;
      case 'I':
        set(base, base + 1, f.dihedral_m);
        break;
      default:
        break;
    }
    base += r;
  }
  return CoxeterMatrix(rank, std::move(entries));
}

}  // namespace coxeter
