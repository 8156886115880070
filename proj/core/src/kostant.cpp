#include "cellkit/kostant.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "cellkit/errors.hpp"
#include "cellkit/homology.hpp"

namespace cellkit {

namespace {

using IndexSet = std::function<std::vector<ElementId>(ElementId y)>;

// For each target y: is x -> [theta_x L_y] injective on index(y)? Digests
// decide distinctness; equal digests are confirmed on exact characters.
std::vector<char> injectivity(const Context& ctx, const std::vector<ElementId>& targets, const IndexSet& index) {
  const SweepResult& sweep = ctx.sweep();
  std::vector<char> result(targets.size(), 1);
  // (target slot, group of x with equal digests)
  std::vector<std::pair<std::size_t, std::vector<ElementId>>> suspects;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const ElementId y = targets[k];
    std::map<CharacterDigest, std::vector<ElementId>> groups;
    for (ElementId x : index(y)) groups[sweep.digest(x, y)].push_back(x);
    for (auto& [d, xs] : groups)
      if (xs.size() > 1) suspects.emplace_back(k, std::move(xs));
  }
  if (suspects.empty()) return result;

  std::map<ElementId, std::set<ElementId>> needed;  // x -> targets
  for (const auto& [k, xs] : suspects)
    for (ElementId x : xs) needed[x].insert(targets[k]);
  std::map<std::pair<ElementId, ElementId>, std::map<ElementId, LaurentPoly>> exact;
  for (const auto& [x, ys] : needed) {
    auto row = characters_for_x(ctx, x);
    for (ElementId y : ys) exact[{x, y}] = std::move(row[y]);
  }
  for (const auto& [k, xs] : suspects) {
    const ElementId y = targets[k];
    std::set<std::map<ElementId, LaurentPoly>> seen;
    for (ElementId x : xs)
      if (!seen.insert(exact.at({x, y})).second) result[k] = 0;
  }
  return result;
}

}  // namespace

KostantAnalysis::KostantAnalysis(const Context& ctx) : ctx_(ctx) {}

void KostantAnalysis::compute_kh() const {
  std::call_once(kh_once_, [&] {
    const CoxeterSystem& W = ctx_.system();
    const CellDecomposition& cells = ctx_.cells();
    std::vector<ElementId> all(W.order());
    for (ElementId y = 0; y < W.order(); ++y) all[y] = y;
    kh_ = injectivity(ctx_, all, [&](ElementId y) {
      std::vector<ElementId> xs;
      for (ElementId x = 0; x < W.order(); ++x)
        if (cells.leq_L(W.inverse(x), y)) xs.push_back(x);
      return xs;
    });
  });
}

bool KostantAnalysis::kh_bracket(ElementId y) const {
  compute_kh();
  return kh_[y] != 0;
}

void KostantAnalysis::compute_km_star() const {
  std::call_once(km_star_once_, [&] {
    const CoxeterSystem& W = ctx_.system();
    const CellDecomposition& cells = ctx_.cells();
    const SweepResult& sweep = ctx_.sweep();
    const GammaTable& gammas = ctx_.gammas();
    const std::size_t n = W.order();
    // top[y*n + u]: coefficient of v^a(u) in h_{y,u,y}
    std::vector<Coefficient> top(n * n, 0);
    for (ElementId y = 0; y < n; ++y)
      ctx_.engine().products_with_fixed_left(y, [&](ElementId u, const ProductVector& p) {
        top[y * n + u] = p.view_of(y).coefficient(cells.a_value(u));
      });
    auto lower_bound = [&](ElementId x, ElementId y) {
      const int a = cells.a_value(x);
      Coefficient sum = 0;
      for (auto [w, g] : gammas.t_multiply(x, W.inverse(x))) {
        const Degree b = sweep.b(w, y);
        Coefficient hom = 0;
        if (b && *b == a)
          hom = top[y * n + W.inverse(w)];
        else if (cells.is_duflo(w))
          hom = 1;
        sum += g * hom;
      }
      return sum;
    };
    const ElementId w0 = W.longest_id();
    km_star_.assign(n, 1);
    for (ElementId y = 0; y < n; ++y)
      for (ElementId x = 0; x < n && km_star_[y]; ++x) {
        if (!cells.leq_L(W.inverse(x), y)) continue;
        const ElementId xd = W.multiply(W.inverse(y), w0), yd = W.multiply(w0, W.inverse(x));
        if (lower_bound(x, y) >= 2 || lower_bound(xd, yd) >= 2) km_star_[y] = 0;
      }
  });
}

bool KostantAnalysis::km_star(ElementId y) const {
  compute_km_star();
  return km_star_[y] != 0;
}

bool KostantAnalysis::km_proxy(ElementId y) const {
  return total(ctx_.gammas().t_multiply(y, ctx_.system().inverse(y))) == 1;
}

ConjecturalResult KostantAnalysis::conjectural_kostant(ElementId y) const {
  const ElementId d = ctx_.cells().duflo_of_left_cell(y);
  return {km_proxy(y) && kh_bracket(d), kKostantConditionalOn};
}

bool KostantAnalysis::kh_literal(ElementId d) const {
  std::call_once(literal_once_, [&] {
    const CoxeterSystem& W = ctx_.system();
    const CellDecomposition& cells = ctx_.cells();
    std::vector<ElementId> duflos;
    for (ElementId w = 0; w < W.order(); ++w)
      if (cells.is_duflo(w)) duflos.push_back(w);
    // h_{z,x,d} is the character of theta_{x^-1} L_d; x <=_R d.
    auto flags = injectivity(ctx_, duflos, [&](ElementId y) {
      std::vector<ElementId> xs;
      for (ElementId x = 0; x < W.order(); ++x)
        if (cells.leq_R(x, y)) xs.push_back(W.inverse(x));
      return xs;
    });
    literal_.assign(W.order(), 0);
    for (std::size_t k = 0; k < duflos.size(); ++k) literal_[duflos[k]] = flags[k];
  });
  if (!ctx_.cells().is_duflo(d)) throw UsageError(ctx_.system().word(d) + " is not a Duflo element");
  return literal_[d] != 0;
}

KostantClass KostantAnalysis::classify(ElementId y) const {
  if (conjectural_kostant(y).value) return KostantClass::k;
  if (km_star(y) && !kh_bracket(y)) return KostantClass::km_not_kh;
  return KostantClass::none;
}

bool kh_bracket(const Context& ctx, ElementId y) { return KostantAnalysis(ctx).kh_bracket(y); }
bool km_proxy(const Context& ctx, ElementId y) { return KostantAnalysis(ctx).km_proxy(y); }
bool km_star(const Context& ctx, ElementId y) { return KostantAnalysis(ctx).km_star(y); }
ConjecturalResult conjectural_kostant(const Context& ctx, ElementId y) {
  return KostantAnalysis(ctx).conjectural_kostant(y);
}

KostantReport cell_report(const Context& ctx) {
  const CoxeterSystem& W = ctx.system();
  const CellDecomposition& cells = ctx.cells();
  KostantAnalysis analysis(ctx);
  KostantReport report;
  report.cartan_type = std::string(1, to_char(W.cartan_type()));
  report.rank = W.rank();
  for (ElementId y = 0; y < W.order(); ++y) {
    KostantRecord r{};
    r.element = y;
    r.word = W.word(y);
    r.duflo = cells.is_duflo(y);
    r.kh_bracket = analysis.kh_bracket(y);
    r.km_proxy = analysis.km_proxy(y);
    r.km_star = analysis.km_star(y);
    r.k_conjectural = analysis.conjectural_kostant(y).value;
    r.klass = analysis.classify(y);
    r.left_cell = cells.left_cell(y);
    r.right_cell = cells.right_cell(y);
    r.twosided_cell = cells.twosided_cell(y);
    r.h_cell = cells.h_cell(y);
    r.a = cells.a_value(y);
    r.stabilizer_size = stabilizer(cells, ctx.gammas(), y).size();
    r.h_cell_max = cells.h_cell_max(y);
    report.elements.push_back(std::move(r));
  }
  for (ElementId d = 0; d < W.order(); ++d) {
    if (!cells.is_duflo(d)) continue;
    bool lit = analysis.kh_literal(d);
    if (lit != analysis.kh_bracket(d)) report.discrepancies.push_back({d, analysis.kh_bracket(d), lit});
  }
  return report;
}

namespace {

const char* class_marker(KostantClass c) {
  switch (c) {
    case KostantClass::k: return "#";
    case KostantClass::km_not_kh: return "+";
    case KostantClass::none: return "";
  }
  return "";
}

}  // namespace

std::string render_pretty(const Context& ctx, const KostantReport& report) {
  std::ostringstream out;
  out << "Cells of " << report.cartan_type << report.rank << ": rows are left cells, columns are right cells.\n";
  out << "Diagonal H-cells list their Duflo element first.\n";
  out << render_cell_grid(ctx.cells(), [&](ElementId w) { return class_marker(report.elements[w].klass); });
  out << "\nLegend: '#' k_conjectural (km_proxy and kh_bracket of the Duflo element); "
         "'+' km_star without kh_bracket; unmarked: neither.\n";
  out << "kh_bracket compares graded characters of theta_x L_y; km_proxy tests t_y t_{y^-1} = t_d "
         "in the asymptotic ring; km_star rules out certified decompositions of every theta_x L_y.\n";
  out << "Conditional on: " << report.conditional_on << ".\n";
  return out.str();
}

std::string render_json(const KostantReport& report) {
  nlohmann::ordered_json doc;
  doc["cartan_type"] = report.cartan_type;
  doc["rank"] = report.rank;
  doc["conditional_on"] = report.conditional_on;
  auto& elems = doc["elements"] = nlohmann::ordered_json::array();
  for (const auto& r : report.elements) {
    nlohmann::ordered_json e;
    e["word"] = r.word;
    e["duflo"] = r.duflo;
    e["kh_bracket"] = r.kh_bracket;
    e["km_proxy"] = r.km_proxy;
    e["km_star"] = r.km_star;
    e["k_conjectural"] = r.k_conjectural;
    e["class"] = static_cast<int>(r.klass);
    e["left_cell"] = r.left_cell;
    e["right_cell"] = r.right_cell;
    e["twosided_cell"] = r.twosided_cell;
    e["h_cell"] = r.h_cell;
    e["a"] = r.a;
    e["stabilizer_size"] = r.stabilizer_size;
    elems.push_back(std::move(e));
  }
  auto& disc = doc["literal_form_discrepancies"] = nlohmann::ordered_json::array();
  for (const auto& d : report.discrepancies)
    disc.push_back({{"duflo", report.elements[d.duflo].word}, {"kh_bracket", d.with_inverse}, {"literal", d.literal}});
  return doc.dump(2) + "\n";
}

std::string render_tsv(const KostantReport& report) {
  std::ostringstream out;
  out << "word\tduflo\tkh_bracket\tkm_proxy\tkm_star\tk_conjectural\tclass\tleft_cell\tright_cell\ttwosided_cell\th_cell\ta\t"
         "stabilizer_size\n";
  auto b = [](bool v) { return v ? "true" : "false"; };
  for (const auto& r : report.elements)
    out << r.word << '\t' << b(r.duflo) << '\t' << b(r.kh_bracket) << '\t' << b(r.km_proxy) << '\t' << b(r.km_star)
        << '\t' << b(r.k_conjectural) << '\t' << static_cast<int>(r.klass) << '\t' << r.left_cell << '\t' << r.right_cell
        << '\t' << r.twosided_cell << '\t' << r.h_cell << '\t' << r.a << '\t' << r.stabilizer_size << '\n';
  return out.str();
}

}  // namespace cellkit
