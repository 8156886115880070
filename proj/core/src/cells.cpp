#include "cellkit/cells.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cellkit/product_engine.hpp"
#include "cellkit/sweep.hpp"

namespace cellkit {

const char* to_string(CellKind kind) {
  switch (kind) {
    case CellKind::left: return "left";
    case CellKind::right: return "right";
    case CellKind::twosided: return "twosided";
    case CellKind::h: return "h";
  }
  return "?";
}

namespace {

std::vector<std::uint32_t> strong_components(std::size_t n, const std::vector<std::vector<ElementId>>& adj) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
  Graph g(n);
  for (std::size_t x = 0; x < n; ++x)
    for (ElementId y : adj[x]) boost::add_edge(x, y, g);
  std::vector<std::uint32_t> comp(n);
  boost::strong_components(g, boost::make_iterator_property_map(comp.begin(), boost::get(boost::vertex_index, g)));
  return comp;
}

}  // namespace

std::vector<CellDecomposition::Bits> CellDecomposition::closure(std::size_t n,
                                                                const std::vector<std::vector<ElementId>>& adj) {
  std::vector<Bits> reach(n, Bits(n));
  std::vector<ElementId> stack;
  for (std::size_t x = 0; x < n; ++x) {
    Bits& r = reach[x];
    r.set(x);
    stack.assign(1, static_cast<ElementId>(x));
    while (!stack.empty()) {
      ElementId u = stack.back();
      stack.pop_back();
      for (ElementId v : adj[u])
        if (!r.test(v)) {
          r.set(v);
          stack.push_back(v);
        }
    }
  }
  return reach;
}

void CellDecomposition::assign_cells(CellKind kind, const std::vector<std::uint32_t>& component) {
  // Renumber components by their smallest member (elements are scanned in
  // canonical order, so first appearance is the ShortLex-minimal member).
  std::map<std::uint32_t, CellId> renumber;
  auto& ids = ids_[static_cast<int>(kind)];
  auto& members = members_[static_cast<int>(kind)];
  ids.assign(n_, 0);
  members.clear();
  for (ElementId w = 0; w < n_; ++w) {
    auto [it, fresh] = renumber.try_emplace(component[w], static_cast<CellId>(members.size()));
    if (fresh) members.emplace_back();
    ids[w] = it->second;
    members[it->second].push_back(w);
  }
}

CellDecomposition::CellDecomposition(const KLTable& table, const ASource& a_source)
    : system_(table.system_ptr()), n_(table.system().order()) {
  const CoxeterSystem& W = *system_;
  std::vector<std::vector<ElementId>> left(n_), right(n_), both(n_);
  for (ElementId x = 0; x < n_; ++x)
    for (Generator s = 0; s < W.rank(); ++s) {
      if (W.is_left_descent(s, x)) continue;  // C_s C_x = (v+v^-1) C_x
      left[x].push_back(W.left_multiply(s, x));
      for (const MuEdge& e : table.mu_below(x))
        if (W.is_left_descent(s, e.z)) left[x].push_back(e.z);
    }
  for (ElementId x = 0; x < n_; ++x) {
    std::sort(left[x].begin(), left[x].end());
    left[x].erase(std::unique(left[x].begin(), left[x].end()), left[x].end());
    for (ElementId y : left[x]) left_edges_.emplace_back(x, y);
  }
  for (ElementId x = 0; x < n_; ++x)
    for (ElementId y : left[W.inverse(x)]) right[x].push_back(W.inverse(y));
  for (ElementId x = 0; x < n_; ++x) {
    both[x] = left[x];
    both[x].insert(both[x].end(), right[x].begin(), right[x].end());
  }
  reach_left_ = closure(n_, left);
  reach_right_ = closure(n_, right);
  reach_twosided_ = closure(n_, both);

  assign_cells(CellKind::left, strong_components(n_, left));
  assign_cells(CellKind::right, strong_components(n_, right));
  assign_cells(CellKind::twosided, strong_components(n_, both));
  std::vector<std::uint32_t> hkey(n_);
  std::map<std::pair<CellId, CellId>, std::uint32_t> pairs;
  for (ElementId w = 0; w < n_; ++w)
    hkey[w] = pairs.try_emplace({left_cell(w), right_cell(w)}, static_cast<std::uint32_t>(pairs.size())).first->second;
  assign_cells(CellKind::h, hkey);

  a_ = a_source(*this);
  if (a_.size() != n_) throw std::logic_error("a-value source returned the wrong number of values");

  // Duflo: the lowest power of v in p(e,w) equals a(w).
  duflo_.assign(n_, false);
  for (ElementId w = 0; w < n_; ++w) {
    LaurentPoly p = table.p(W.identity_id(), w);
    if (p.is_zero() || *p.min_degree() != a_[w]) continue;
    if (p.coefficient(a_[w]) != 1)
      throw std::logic_error("Duflo criterion met with coefficient != 1 at " + W.word(w));
    duflo_[w] = true;
  }
  left_duflo_.assign(cells(CellKind::left).size(), static_cast<ElementId>(-1));
  right_duflo_.assign(cells(CellKind::right).size(), static_cast<ElementId>(-1));
  for (ElementId w = 0; w < n_; ++w) {
    if (!duflo_[w]) continue;
    for (auto [table_ref, id] : {std::pair{&left_duflo_, left_cell(w)}, std::pair{&right_duflo_, right_cell(w)}}) {
      if ((*table_ref)[id] != static_cast<ElementId>(-1))
        throw std::logic_error("two Duflo elements in one cell: " + W.word((*table_ref)[id]) + ", " + W.word(w));
      (*table_ref)[id] = w;
    }
  }
  for (const auto* t : {&left_duflo_, &right_duflo_})
    for (ElementId d : *t)
      if (d == static_cast<ElementId>(-1)) throw std::logic_error("a cell without Duflo element");
}

bool CellDecomposition::h_cell_max(ElementId y) const {
  std::size_t best = 0;
  for (ElementId w : members(CellKind::twosided, twosided_cell(y)))
    best = std::max(best, members(CellKind::h, h_cell(w)).size());
  return members(CellKind::h, h_cell(y)).size() == best;
}

std::vector<int> a_values_full(const ProductEngine& engine, int threads) {
  return run_sweep(engine, threads).a_values();
}

std::vector<int> a_values_fast(const ProductEngine& engine, const CellDecomposition& cells) {
  std::vector<int> a(cells.order(), -1);
  for (const auto& J : cells.cells(CellKind::twosided)) {
    const ElementId x = J.front();
    const auto id = cells.twosided_cell(x);
    int best = -1;
    engine.products_with_fixed_left(x, [&](ElementId w, const ProductVector& p) {
      if (cells.twosided_cell(w) != id) return;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (cells.twosided_cell(p.element(i)) == id) best = std::max(best, p.poly(i).degree());
    });
    for (ElementId z : J) a[z] = best;
  }
  return a;
}

std::string render_cell_grid(const CellDecomposition& cells, const std::function<std::string(ElementId)>& annotate) {
  const CoxeterSystem& W = cells.system();
  std::ostringstream out;
  for (const auto& J : cells.cells(CellKind::twosided)) {
    std::vector<CellDecomposition::CellId> rows;
    for (ElementId w : J) rows.push_back(cells.left_cell(w));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::vector<CellDecomposition::CellId> cols;
    for (auto L : rows) cols.push_back(cells.right_cell(W.inverse(cells.members(CellKind::left, L).front())));

    std::vector<std::vector<std::vector<std::string>>> grid(rows.size(),
                                                            std::vector<std::vector<std::string>>(cols.size()));
    std::size_t width = 1;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<ElementId> h;
        for (ElementId w : cells.members(CellKind::left, rows[i]))
          if (cells.right_cell(w) == cols[j]) h.push_back(w);
        std::stable_partition(h.begin(), h.end(), [&](ElementId w) { return cells.is_duflo(w); });
        for (ElementId w : h) {
          grid[i][j].push_back(W.word(w) + (annotate ? annotate(w) : std::string()));
          width = std::max(width, grid[i][j].back().size());
        }
      }
    out << "\ntwo-sided cell " << cells.twosided_cell(J.front()) << " (a = " << cells.a_value(J.front()) << ", "
        << J.size() << " elements)\n";
    std::string rule = "+";
    for (std::size_t j = 0; j < cols.size(); ++j) rule += std::string(width + 2, '-') + "+";
    out << rule << '\n';
    for (const auto& row : grid) {
      std::size_t lines = 1;
      for (const auto& c : row) lines = std::max(lines, c.size());
      for (std::size_t k = 0; k < lines; ++k) {
        out << '|';
        for (const auto& c : row) {
          std::string s = k < c.size() ? c[k] : "";
          out << ' ' << s << std::string(width - s.size(), ' ') << " |";
        }
        out << '\n';
      }
      out << rule << '\n';
    }
  }
  return out.str();
}

}  // namespace cellkit
