#include "cellkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "cellkit/errors.hpp"
#include "cellkit/homology.hpp"
#include "cellkit/kl_cache.hpp"
#include "cellkit/kostant.hpp"

namespace cellkit::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kTsvColumns =
    "TSV columns (kostant --format tsv): word duflo kh_bracket km_proxy km_star k_conjectural class left_cell "
    "right_cell twosided_cell h_cell a stabilizer_size";

struct Common {
  std::string type;
  int rank = 0;
  std::string cache_dir;
  int threads = 1;
  bool fast = false;
  bool progress = false;
};

void add_common(CLI::App& sub, Common& c) {
  sub.add_option("--type", c.type, "Cartan type (A, B, C, D or G)")->required();
  sub.add_option("--rank", c.rank, "rank")->required()->check(CLI::PositiveNumber);
  sub.add_option("--cache-dir", c.cache_dir, "directory of the KL polynomial cache")->envname("CELLKIT_CACHE_DIR");
  sub.add_option("--threads", c.threads, "worker threads for the product sweep")->check(CLI::PositiveNumber);
  sub.add_flag("--fast", c.fast, "a-function from one product row per two-sided cell");
  sub.add_flag("--progress", c.progress, "progress messages on stderr");
}

std::unique_ptr<Context> make_context(const Common& c, std::ostream& err) {
  ContextOptions opts;
  opts.threads = c.threads;
  opts.a_mode = c.fast ? AMode::fast : AMode::full;
  if (!c.cache_dir.empty()) opts.cache_dir = c.cache_dir;
  if (c.progress) opts.progress = [&err](std::string_view m) { err << "[cellkit] " << m << '\n' << std::flush; };
  return std::make_unique<Context>(parse_cartan_type(c.type), c.rank, std::move(opts));
}

std::string summands_string(const CoxeterSystem& W, const std::vector<CellSummand>& parts) {
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " + ";
    s += "theta_" + W.word(p.z) + " L_" + W.word(p.d);
    if (p.multiplicity != 1) s += "^{+" + std::to_string(p.multiplicity) + "}";
  }
  return s;
}

// Per-degree composition factors, "word^{⊕m}" for m > 1.
std::string degree_lines(const CoxeterSystem& W, const TranslatedSimpleChar& c) {
  std::ostringstream out;
  for (const auto& [deg, factors] : c.by_degree()) {
    out << deg << ": ";
    bool first = true;
    for (auto [z, m] : factors) {
      out << (first ? "" : ", ") << W.word(z);
      if (m != 1) out << "^{⊕" << m << "}";
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

json poly_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back(json::array({t.exponent, std::to_string(t.coeff)}));
  return terms;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig cells, asymptotic ring and translated simple modules of finite Weyl groups",
               "cellkit"};
  app.require_subcommand(1);
  app.footer(kTsvColumns);

  Common common;
  std::string format, element, x_word, y_word, w_word, parabolic, cache_action;
  bool recompute = false;

  auto* enumerate = app.add_subcommand("enumerate", "list the elements with length and descent sets");
  add_common(*enumerate, common);
  enumerate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* klpoly = app.add_subcommand("klpoly", "Kazhdan-Lusztig polynomial p_{y,w}");
  add_common(*klpoly, common);
  klpoly->add_option("--y", y_word, "lower element")->required();
  klpoly->add_option("--w", w_word, "upper element")->required();
  klpoly->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* hprod = app.add_subcommand("hprod", "structure constants h_{x,y,z} of C_x C_y");
  add_common(*hprod, common);
  hprod->add_option("--x", x_word, "left factor")->required();
  hprod->add_option("--y", y_word, "right factor")->required();
  hprod->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* cells_cmd = app.add_subcommand("cells", "left, right, two-sided and H-cells");
  add_common(*cells_cmd, common);
  cells_cmd->add_option("--format", format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  auto* afunction = app.add_subcommand("afunction", "Lusztig's a-function");
  add_common(*afunction, common);
  afunction->add_option("--element", element, "single element (default: all)");
  afunction->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* gamma = app.add_subcommand("gamma", "t_x t_y in the asymptotic ring as JSON");
  add_common(*gamma, common);
  gamma->add_option("--x", x_word, "left factor")->required();
  gamma->add_option("--y", y_word, "right factor")->required();

  auto* translate = app.add_subcommand("translate", "graded composition factors of theta_x L_y");
  add_common(*translate, common);
  translate->add_option("--x", x_word, "projective functor index")->required();
  translate->add_option("--y", y_word, "simple module index")->required();
  translate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* projdim = app.add_subcommand("projdim", "projective dimension of theta_x L_y or of a singular simple module");
  add_common(*projdim, common);
  projdim->add_option("--x", x_word, "projective functor index");
  projdim->add_option("--y", y_word, "simple module index");
  projdim->add_option("--parabolic", parabolic, "generators of the singular block, e.g. 12");
  projdim->add_option("--w", w_word, "coset representative for --parabolic");

  auto* kostant = app.add_subcommand("kostant", "character-level Kostant classifiers");
  add_common(*kostant, common);
  kostant->add_option("--element", element, "single element (default: all)");
  kostant->add_option("--format", format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));

  auto* report = app.add_subcommand("report", "all comparison tables for one group");
  add_common(*report, common);

  auto* cache = app.add_subcommand("cache", "KL polynomial cache maintenance");
  add_common(*cache, common);
  cache->add_option("action", cache_action, "warm, inspect or verify")
      ->required()
      ->check(CLI::IsMember({"warm", "inspect", "verify"}));
  cache->add_flag("--recompute", recompute, "verify: also compare against a fresh computation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    auto ctx = make_context(common, err);
    const CoxeterSystem& W = ctx->system();
    auto fmt = [&](const char* fallback) { return format.empty() ? std::string(fallback) : format; };

    if (*enumerate) {
      json arr = json::array();
      for (ElementId w = 0; w < W.order(); ++w) {
        if (fmt("text") == "text") {
          out << W.word(w) << '\t' << W.length(w) << '\n';
        } else {
          arr.push_back({{"word", W.word(w)},
                         {"length", W.length(w)},
                         {"left_descents", generator_set_string(W.left_descents(w))},
                         {"right_descents", generator_set_string(W.right_descents(w))}});
        }
      }
      if (fmt("text") == "json") out << arr.dump(2) << '\n';
    } else if (*klpoly) {
      const ElementId y = W.parse_id(y_word), w = W.parse_id(w_word);
      const LaurentPoly p = ctx->kl().p(y, w);
      if (fmt("text") == "text")
        out << p.to_string() << '\n';
      else
        out << json{{"y", W.word(y)}, {"w", W.word(w)}, {"p", p.to_string()}, {"terms", poly_json(p)}}.dump(2) << '\n';
    } else if (*hprod) {
      const auto h = ctx->engine().product(W.parse_id(x_word), W.parse_id(y_word));
      if (fmt("text") == "text") {
        for (const auto& [z, p] : h) out << W.word(z) << '\t' << p.to_string() << '\n';
      } else {
        json m = json::object();
        for (const auto& [z, p] : h) m[W.word(z)] = p.to_string();
        out << m.dump(2) << '\n';
      }
    } else if (*cells_cmd) {
      const CellDecomposition& cells = ctx->cells();
      if (fmt("json") == "pretty") {
        out << "Cells of " << W.name() << ": rows are left cells, columns are right cells.\n";
        out << render_cell_grid(cells, [&](ElementId w) { return cells.is_duflo(w) ? std::string("*") : std::string(); });
        out << "\n'*' marks Duflo elements.\n";
      } else {
        json doc;
        json list = json::array();
        for (CellKind kind : {CellKind::left, CellKind::right, CellKind::twosided, CellKind::h})
          for (std::size_t id = 0; id < cells.cells(kind).size(); ++id) {
            json members = json::array();
            for (ElementId w : cells.cells(kind)[id]) members.push_back(W.word(w));
            list.push_back({{"id", id}, {"kind", to_string(kind)}, {"members", members}});
          }
        doc["cells"] = list;
        json a = json::object();
        json duflo = json::array();
        for (ElementId w = 0; w < W.order(); ++w) {
          a[W.word(w)] = cells.a_value(w);
          if (cells.is_duflo(w)) duflo.push_back(W.word(w));
        }
        doc["a"] = a;
        doc["duflo"] = duflo;
        out << doc.dump(2) << '\n';
      }
    } else if (*afunction) {
      const CellDecomposition& cells = ctx->cells();
      if (!element.empty()) {
        const int a = cells.a_value(W.parse_id(element));
        if (fmt("text") == "text")
          out << a << '\n';
        else
          out << json{{W.word(W.parse_id(element)), a}}.dump(2) << '\n';
      } else if (fmt("text") == "text") {
        for (ElementId w = 0; w < W.order(); ++w) out << W.word(w) << '\t' << cells.a_value(w) << '\n';
      } else {
        json a = json::object();
        for (ElementId w = 0; w < W.order(); ++w) a[W.word(w)] = cells.a_value(w);
        out << a.dump(2) << '\n';
      }
    } else if (*gamma) {
      json m = json::object();
      for (auto [z, c] : ctx->gammas().t_multiply(W.parse_id(x_word), W.parse_id(y_word))) m[W.word(z)] = c;
      out << m.dump(2) << '\n';
    } else if (*translate) {
      const ElementId x = W.parse_id(x_word), y = W.parse_id(y_word);
      const TranslatedSimpleChar c = translated_simple_char(*ctx, x, y);
      if (fmt("text") == "text") {
        out << "degree: composition factors in this degree\n";
        if (c.is_zero()) out << "(zero module)\n";
        out << degree_lines(W, c);
      } else {
        json degrees = json::object();
        for (const auto& [deg, factors] : c.by_degree()) {
          json list = json::array();
          for (auto [z, m] : factors) list.push_back({{"word", W.word(z)}, {"multiplicity", m}});
          degrees[std::to_string(deg)] = list;
        }
        json doc{{"x", W.word(x)}, {"y", W.word(y)}, {"a_x", ctx->cells().a_value(x)}, {"b", degree_string(c.b)}};
        doc["proj_dim"] = c.proj_dim ? json(*c.proj_dim) : json(nullptr);
        doc["degrees"] = degrees;
        out << doc.dump(2) << '\n';
      }
    } else if (*projdim) {
      if (!parabolic.empty()) {
        if (w_word.empty()) throw UsageError("--parabolic requires --w");
        out << singular_projdim(*ctx, W.parse_generators(parabolic), W.parse_id(w_word)) << '\n';
      } else {
        if (x_word.empty() || y_word.empty()) throw UsageError("projdim requires --x and --y (or --parabolic and --w)");
        out << proj_dim(*ctx, W.parse_id(x_word), W.parse_id(y_word)) << '\n';
      }
    } else if (*kostant) {
      KostantReport rep = cell_report(*ctx);
      if (!element.empty()) {
        const ElementId y = W.parse_id(element);
        KostantRecord r = rep.elements[y];
        rep.elements.assign(1, r);
        rep.discrepancies.clear();
        if (fmt("json") == "pretty") {
          out << r.word << ": class " << static_cast<int>(r.klass) << ", kh_bracket " << r.kh_bracket << ", km_proxy "
              << r.km_proxy << ", km_star " << r.km_star << ", k_conjectural " << r.k_conjectural << ", duflo "
              << r.duflo << "\nConditional on: " << rep.conditional_on << ".\n";
          return kOk;
        }
      }
      const std::string f = fmt("json");
      if (f == "json")
        out << render_json(rep);
      else if (f == "tsv")
        out << render_tsv(rep);
      else
        out << render_pretty(*ctx, rep);
    } else if (*report) {
      const KostantReport rep = cell_report(*ctx);
      out << render_pretty(*ctx, rep);
      out << "\nPer element: y, class, K (conjectural), KM(y,y^-1) proxy, KM(*,y), Kh proxy, theta_{y^-1} L_y\n";
      for (const auto& r : rep.elements)
        out << r.word << '\t' << static_cast<int>(r.klass) << '\t' << r.k_conjectural << '\t' << r.km_proxy << '\t'
            << r.km_star << '\t' << r.kh_bracket << '\t'
            << summands_string(W, cell_summands(*ctx, W.inverse(r.element), r.element)) << '\n';
      out << "\nDuflo elements whose left cells fail k_conjectural:";
      for (const auto& r : rep.elements)
        if (r.duflo && !r.k_conjectural) out << ' ' << r.word;
      out << "\nLiteral-index discrepancies of the injectivity condition:";
      if (rep.discrepancies.empty()) out << " none";
      for (const auto& d : rep.discrepancies)
        out << ' ' << rep.elements[d.duflo].word << "(" << d.with_inverse << "/" << d.literal << ")";
      out << '\n';
    } else if (*cache) {
      if (common.cache_dir.empty()) throw UsageError("cache requires --cache-dir or CELLKIT_CACHE_DIR");
      const auto file = kl_cache_path(common.cache_dir, W.cartan_type(), W.rank());
      if (cache_action == "warm") {
        std::filesystem::create_directories(common.cache_dir);
        KLTable table(ctx->system_ptr());
        table.precompute_all();
        save_kl_cache(table, file);
        out << "wrote " << file.string() << '\n';
      } else if (cache_action == "inspect") {
        if (!std::filesystem::exists(file)) throw CacheError("no cache file " + file.string());
        const CacheInfo info = inspect_kl_cache(file);
        out << json{{"file", file.string()},
                    {"format_version", info.format_version},
                    {"cartan_type", info.cartan_type},
                    {"rank", info.rank},
                    {"normalization", info.normalization},
                    {"order", info.order},
                    {"records", info.records},
                    {"checksum", info.stored_checksum},
                    {"checksum_ok", info.checksum_ok()}}
                   .dump(2)
            << '\n';
      } else {
        if (!std::filesystem::exists(file)) throw CacheError("no cache file " + file.string());
        auto loaded = load_kl_cache(ctx->system_ptr(), file);
        if (recompute) {
          KLTable fresh(ctx->system_ptr());
          for (ElementId w = 0; w < W.order(); ++w)
            for (ElementId y = 0; y <= w; ++y)
              if (fresh.p(y, w) != loaded->p(y, w))
                throw CacheError("cache entry p(" + W.word(y) + "," + W.word(w) + ") differs from a fresh computation");
        }
        out << "ok " << file.string() << '\n';
      }
    }
    return kOk;
  } catch (const CacheError& e) {
    err << "cache error: " << e.what() << "\nre-create the cache with `cellkit cache warm`.\n";
    return kCacheError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace cellkit::cli
