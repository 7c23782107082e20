#include "lf/tricolor.hpp"

namespace lf {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

}  // namespace

std::vector<std::vector<int>> tricoloring_equations(const Diagram& d) {
  std::vector<std::vector<int>> rows;
  for (const auto& n : d.nodes) {
    if (n.kind == NodeKind::Crossing) {
      std::vector<int> row(d.arc_count, 0);
      row[d.edges[n.crossing.over_in].arc] += 2;
      row[d.edges[n.crossing.under_in].arc] -= 1;
      row[d.edges[n.crossing.under_out].arc] -= 1;
      for (int& v : row) v = mod3(v);
      rows.push_back(std::move(row));
    } else {
      for (std::size_t k = 1; k < n.rotation.size(); ++k) {
        std::vector<int> row(d.arc_count, 0);
        row[d.edges[n.rotation[k - 1].edge].arc] += 1;
        row[d.edges[n.rotation[k].edge].arc] -= 1;
        for (int& v : row) v = mod3(v);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

bool is_tricoloring(const Diagram& d, const std::vector<int>& colours) {
  for (const auto& row : tricoloring_equations(d)) {
    int s = 0;
    for (std::size_t a = 0; a < row.size(); ++a) s += row[a] * colours[a];
    if (mod3(s) != 0) return false;
  }
  return true;
}

ColoringSpace count_tricolorings(const Diagram& d) {
  auto rows = tricoloring_equations(d);
  const int n = d.arc_count;
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    // Scale pivot to 1 (the inverse of 2 mod 3 is 2).
    if (rows[rank][c] == 2)
      for (int& v : rows[rank]) v = mod3(2 * v);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int k = 0; k < n; ++k) rows[r][k] = mod3(rows[r][k] - f * rows[rank][k]);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  ColoringSpace space;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<int> v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = mod3(-rows[r][f]);
    space.basis.push_back(std::move(v));
  }
  space.dimension = static_cast<int>(space.basis.size());
  mpz_ui_pow_ui(space.count.get_mpz_t(), 3, static_cast<unsigned long>(space.dimension));
  return space;
}

}  // namespace lf
