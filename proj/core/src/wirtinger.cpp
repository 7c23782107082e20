#include "lf/wirtinger.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lf/error.hpp"

namespace lf {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& a : w) {
    if (!out.empty() && out.back().gen == a.gen && out.back().exp == -a.exp) {
      out.pop_back();
    } else {
      out.push_back(a);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& a : out) a.exp = -a.exp;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << w[i].gen;
    if (w[i].exp < 0) out << "^-1";
  }
  return out.str();
}

Presentation build_presentation(const Diagram& d) {
  Presentation p;
  p.generator_count = d.arc_count;
  for (const auto& n : d.nodes) {
    Word w;
    if (n.kind == NodeKind::Graph) {
      for (const auto& end : n.rotation) w.push_back({d.edges[end.edge].arc, end.at_tail ? 1 : -1});
    } else {
      const CrossingInfo& c = n.crossing;
      const int y = d.edges[c.over_in].arc;
      w = {{d.edges[c.under_out].arc, -1}, {y, -c.sign}, {d.edges[c.under_in].arc, 1}, {y, c.sign}};
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

SpanningTree build_spanning_tree(const Diagram& d) {
  const int n = d.node_count();
  SpanningTree t{std::vector<int>(n, -1)};
  auto other_end = [&](int e, int node) { return d.edges[e].tail == node ? d.edges[e].head : d.edges[e].tail; };
  for (int i = 1; i < n; ++i) {
    const DiagramNode& node = d.nodes[i];
    if (node.kind == NodeKind::Crossing) {
      const int e = node.crossing.under_in;
      if (other_end(e, i) >= i) throw Error(ErrorCode::NotDescendingScene, "crossing " + node.name + " has no left under-edge");
      t.tree_edge[i] = e;
      continue;
    }
    int best = -1, best_k = -1;
    for (const auto& end : node.rotation) {
      const int k = other_end(end.edge, i);
      if (k < i && (k > best_k || (k == best_k && end.edge < best))) {
        best = end.edge;
        best_k = k;
      }
    }
    if (best < 0) throw Error(ErrorCode::NotDescendingScene, "node " + node.name + " has no edge to its left");
    t.tree_edge[i] = best;
  }
  // The tree must span: n - 1 edges without a cycle.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 1; i < n; ++i) {
    const int a = find(d.edges[t.tree_edge[i]].tail), b = find(d.edges[t.tree_edge[i]].head);
    if (a == b) throw Error(ErrorCode::AssertionViolated, "tree edges form a cycle");
    parent[a] = b;
  }
  return t;
}

namespace {

std::size_t occurrences(const Word& w, int gen) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](const Letter& a) { return a.gen == gen; }));
}

Word substitute(const Word& w, int gen, const Word& value, const Word& value_inv) {
  Word out;
  for (const Letter& a : w) {
    if (a.gen != gen) {
      out.push_back(a);
    } else {
      const Word& v = a.exp > 0 ? value : value_inv;
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

[[noreturn]] void assertion(const std::string& why) { throw Error(ErrorCode::AssertionViolated, why); }

}  // namespace

FreeCertificate eliminate(const Presentation& p, const Diagram& d, const SpanningTree& t, bool reduce_each_step) {
  const int n = static_cast<int>(p.relators.size());
  if (n != d.node_count() || static_cast<int>(t.tree_edge.size()) != n) assertion("presentation, diagram and tree disagree");
  FreeCertificate cert;
  std::vector<bool> eliminated(p.generator_count, false);
  Word w1 = n > 0 ? p.relators[0] : Word{};
  for (int i = 1; i < n; ++i) {
    const int x = d.edges[t.tree_edge[i]].arc;
    const Word& wi = p.relators[i];
    if (eliminated[x]) assertion("generator x" + std::to_string(x) + " eliminated twice");
    if (occurrences(wi, x) != 1) assertion("generator x" + std::to_string(x) + " does not occur exactly once in its relator");
    for (int j = i + 1; j < n; ++j) {
      if (occurrences(p.relators[j], x) != 0) {
        assertion("generator x" + std::to_string(x) + " occurs in a later relator at " + d.nodes[j].name);
      }
    }
    const auto pos = std::find_if(wi.begin(), wi.end(), [&](const Letter& a) { return a.gen == x; });
    const Word a(wi.begin(), pos), b(pos + 1, wi.end());
    Word value = pos->exp > 0 ? concat(inverse(a), inverse(b)) : concat(b, a);
    if (reduce_each_step) value = free_reduce(value);
    const Word value_inv = inverse(value);
    w1 = substitute(w1, x, value, value_inv);
    if (reduce_each_step) w1 = free_reduce(w1);
    eliminated[x] = true;
    cert.trace.push_back({i, d.nodes[i].name, x, value, w1.size()});
  }
  if (!free_reduce(w1).empty()) assertion("first relator does not reduce to the empty word");
  for (int g = 0; g < p.generator_count; ++g)
    if (!eliminated[g]) cert.surviving.push_back(g);
  cert.rank = static_cast<int>(cert.surviving.size());
  return cert;
}

bool replay_elimination(const Presentation& p, const FreeCertificate& cert) {
  std::map<int, const Word*> value;
  for (const auto& step : cert.trace) value[step.generator] = &step.value;
  std::map<int, Word> memo;
  std::function<Word(int)> expand = [&](int gen) -> Word {
    const auto v = value.find(gen);
    if (v == value.end()) return {{gen, 1}};
    if (const auto m = memo.find(gen); m != memo.end()) return m->second;
    Word out;
    for (const Letter& a : *v->second) {
      const Word sub = expand(a.gen);
      const Word piece = a.exp > 0 ? sub : inverse(sub);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    out = free_reduce(out);
    memo[gen] = out;
    return out;
  };
  for (const Word& r : p.relators) {
    Word full;
    for (const Letter& a : r) {
      const Word sub = expand(a.gen);
      const Word piece = a.exp > 0 ? sub : inverse(sub);
      full.insert(full.end(), piece.begin(), piece.end());
    }
    if (!free_reduce(full).empty()) return false;
  }
  return true;
}

std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m) {
  std::vector<mpz_class> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero magnitude in the remaining block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (sgn(m[r][c]) != 0 && (pr == rows || abs(m[r][c]) < abs(m[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(m[r][t]) == 0) continue;
        const mpz_class q = m[r][t] / m[t][t];
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        clean = clean && sgn(m[r][t]) == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(m[t][c]) == 0) continue;
        const mpz_class q = m[t][c] / m[t][t];
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        clean = clean && sgn(m[t][c]) == 0;
      }
      if (!clean) continue;
      // Divisibility: fold a row with a non-multiple into the pivot row.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols && divides; ++c)
          if (sgn(m[r][c] % m[t][t]) != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            divides = false;
          }
      if (divides) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

Abelianization abelianization(const Presentation& p) {
  std::vector<std::vector<mpz_class>> m(p.relators.size(), std::vector<mpz_class>(p.generator_count, 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& a : p.relators[r]) m[r][a.gen] += a.exp;
  const auto diag = smith_diagonal(std::move(m));
  Abelianization out;
  out.free_rank = p.generator_count - static_cast<int>(diag.size());
  for (const auto& d : diag)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

}  // namespace lf
