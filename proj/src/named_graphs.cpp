#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "drgcay/field.hpp"
#include "drgcay/graph.hpp"

namespace drgcay {

namespace {

std::string subset_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Index of the pair {a, b} among the lexicographically ordered 2-subsets of {0..n-1}.
int pair_index(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

}  // namespace

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete(n): n must be positive");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int n) {
  if (n < 1) throw std::invalid_argument("complete_bipartite(n): n must be positive");
  Graph g(2 * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, n + v);
  return g;
}

Graph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle(m): m must be at least 3");
  Graph g(m);
  for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph cube_graph(int d) {
  if (d < 1 || d > 16) throw std::invalid_argument("cube(d): d must be in 1..16");
  const int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

Graph folded_cube(int d) {
  if (d < 3 || d > 17) throw std::invalid_argument("folded_cube(d): d must be in 3..17");
  Graph g = cube_graph(d - 1);
  const int mask = (1 << (d - 1)) - 1;
  for (int v = 0; v <= mask; ++v) {
    if (v < (v ^ mask)) g.add_edge(v, v ^ mask);
  }
  return g;
}

Graph kneser_graph(int n, int m) {
  if (m < 1 || n < 2 * m + 1) throw std::invalid_argument("kneser(n,m): requires m >= 1 and n >= 2m+1");
  const auto sets = combinations(n, m);
  const int count = static_cast<int>(sets.size());
  Graph g(count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      bool disjoint = true;
      for (int x : sets[i]) {
        if (std::find(sets[j].begin(), sets[j].end(), x) != sets[j].end()) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) g.add_edge(i, j);
    }
  }
  std::vector<std::string> labels;
  for (const auto& s : sets) labels.push_back(subset_label(s));
  g.set_labels(std::move(labels));
  return g;
}

Graph triangular_graph(int n) {
  if (n < 2) throw std::invalid_argument("triangular(n): n must be at least 2");
  Graph g = line_graph(complete_graph(n));
  return g;
}

Graph lattice_graph(int n) {
  if (n < 1) throw std::invalid_argument("lattice(n): n must be positive");
  Graph g(n * n);
  for (int a = 0; a < n * n; ++a) {
    for (int b = a + 1; b < n * n; ++b) {
      if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
    }
  }
  return g;
}

Graph cocktail_party(int n) {
  if (n < 1) throw std::invalid_argument("cocktail_party(n): n must be positive");
  Graph g(2 * n);
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if ((u ^ 1) != v) g.add_edge(u, v);
  return g;
}

Graph pg_incidence(int q) {
  const auto pk = prime_power(q);
  if (!pk || q > 8) throw std::invalid_argument("pg_incidence(q): q must be a prime power <= 8");
  FiniteField f(pk->first, pk->second);
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == f.one()) points.push_back({x, y, z});
      }
  const int np = static_cast<int>(points.size());
  Graph g(2 * np);
  std::vector<std::string> labels;
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      const auto& p = points[i];
      const auto& l = points[j];
      const int dot = f.add(f.add(f.mul(p[0], l[0]), f.mul(p[1], l[1])), f.mul(p[2], l[2]));
      if (dot == 0) g.add_edge(i, np + j);
    }
  }
  for (int side = 0; side < 2; ++side)
    for (const auto& p : points)
      labels.push_back(std::string(side ? "L" : "P") + "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                       "," + std::to_string(p[2]) + ")");
  g.set_labels(std::move(labels));
  return g;
}

Graph heawood_graph() { return pg_incidence(2); }

Graph tutte_coxeter_graph() {
  const auto duads = combinations(6, 2);
  std::vector<std::vector<int>> synthemes;
  for (const auto& triple : combinations(15, 3)) {
    std::vector<int> cover;
    for (int d : triple) {
      cover.push_back(duads[d][0]);
      cover.push_back(duads[d][1]);
    }
    std::sort(cover.begin(), cover.end());
    if (std::adjacent_find(cover.begin(), cover.end()) == cover.end()) synthemes.push_back(triple);
  }
  Graph g(30);
  std::vector<std::string> labels;
  for (const auto& d : duads) labels.push_back("D" + subset_label(d));
  for (int s = 0; s < static_cast<int>(synthemes.size()); ++s) {
    std::string label = "S{";
    for (std::size_t i = 0; i < synthemes[s].size(); ++i) {
      const int d = synthemes[s][i];
      g.add_edge(d, 15 + s);
      label += (i ? "," : "") + std::to_string(duads[d][0]) + std::to_string(duads[d][1]);
    }
    labels.push_back(label + "}");
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph hoffman_singleton_graph() {
  Graph g(50);
  auto p = [](int h, int j) { return 5 * h + ((j % 5) + 5) % 5; };
  auto q = [](int i, int j) { return 25 + 5 * i + ((j % 5) + 5) % 5; };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      g.add_edge(p(h, j), p(h, j + 1));
      g.add_edge(q(h, j), q(h, j + 2));
      for (int i = 0; i < 5; ++i) g.add_edge(p(h, j), q(i, h * i + j));
    }
  }
  return g;
}

Graph shrikhande_graph() {
  Graph g(16);
  const int steps[3][2] = {{0, 1}, {1, 0}, {1, 3}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (const auto& s : steps) {
        g.add_edge(4 * i + j, 4 * ((i + s[0]) % 4) + (j + s[1]) % 4);
      }
    }
  }
  return g;
}

Graph petersen_graph() { return kneser_graph(5, 2); }

std::vector<int> chang_switching_set(int which) {
  std::vector<std::pair<int, int>> edges;
  switch (which) {
    case 1:
      edges = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
      break;
    case 2:
      edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}};
      break;
    case 3:
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}};
      break;
    default:
      throw std::invalid_argument("chang(i): i must be 1, 2 or 3");
  }
  std::vector<int> w;
  for (const auto& [a, b] : edges) w.push_back(pair_index(8, a, b));
  std::sort(w.begin(), w.end());
  return w;
}

Graph chang_graph(int which) {
  return seidel_switch(triangular_graph(8), chang_switching_set(which));
}

namespace {

class NamedGraphParser {
 public:
  explicit NamedGraphParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input in graph name", pos_);
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) throw ParseError("expected a graph name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) throw ParseError("expected a number", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<int> numbers() {
    std::vector<int> out;
    if (!peek('(')) return out;
    expect('(');
    out.push_back(number());
    while (peek(',')) {
      ++pos_;
      out.push_back(number());
    }
    expect(')');
    return out;
  }

  Graph expr() {
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name == "line" || name == "complement") {
      expect('(');
      Graph inner = expr();
      expect(')');
      return name == "line" ? line_graph(inner) : complement(inner);
    }
    const std::size_t args_at = pos_;
    const auto args = numbers();
    auto need = [&](std::size_t count) {
      if (args.size() != count) {
        throw ParseError(name + " expects " + std::to_string(count) + " argument(s)", args_at);
      }
    };
    try {
      if (name == "complete") return need(1), complete_graph(args[0]);
      if (name == "complete_bipartite") {
        if (args.size() == 2 && args[0] != args[1]) throw ParseError("complete_bipartite(n,n) needs equal parts", args_at);
        if (args.empty() || args.size() > 2) need(1);
        return complete_bipartite(args[0]);
      }
      if (name == "cycle") return need(1), cycle_graph(args[0]);
      if (name == "cube") return need(1), cube_graph(args[0]);
      if (name == "folded_cube") return need(1), folded_cube(args[0]);
      if (name == "kneser") return need(2), kneser_graph(args[0], args[1]);
      if (name == "triangular") return need(1), triangular_graph(args[0]);
      if (name == "lattice") return need(1), lattice_graph(args[0]);
      if (name == "cocktail_party") return need(1), cocktail_party(args[0]);
      if (name == "pg_incidence") return need(1), pg_incidence(args[0]);
      if (name == "chang") return need(1), chang_graph(args[0]);
      if (name == "heawood") return need(0), heawood_graph();
      if (name == "tutte_coxeter") return need(0), tutte_coxeter_graph();
      if (name == "hoffman_singleton") return need(0), hoffman_singleton_graph();
      if (name == "shrikhande") return need(0), shrikhande_graph();
      if (name == "petersen") return need(0), petersen_graph();
      if (name == "clebsch") return need(0), complement(folded_cube(5));
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
    throw ParseError("unknown graph name '" + name + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph named_graph(std::string_view spec) { return NamedGraphParser(spec).parse(); }

}  // namespace drgcay
