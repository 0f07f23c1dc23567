#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "waring/chartab.hpp"
#include "waring/kernels.hpp"
#include "waring/numth.hpp"
#include "waring/scenario.hpp"
#include "waring/symbols.hpp"
#include "waring/words.hpp"
#include "waring/workspace.hpp"

using namespace waring;
using nlohmann::json;

namespace {

struct Globals {
  std::string format = "jsonl";
  std::string cache_dir;
  unsigned threads = 1;
  uint64_t cap = kDefaultCap;
  bool timings = true;
};

// One JSON object per line, or the object's scalar fields as TSV columns.
void emit(const Globals& g, const json& row, bool& header_done) {
  if (g.format == "jsonl") {
    std::cout << row.dump() << "\n";
    return;
  }
  if (!header_done) {
    bool first = true;
    for (auto it = row.begin(); it != row.end(); ++it) {
      std::cout << (first ? "" : "\t") << it.key();
      first = false;
    }
    std::cout << "\n";
    header_done = true;
  }
  bool first = true;
  for (auto it = row.begin(); it != row.end(); ++it) {
    std::cout << (first ? "" : "\t") << (it->is_string() ? it->get<std::string>() : it->dump());
    first = false;
  }
  std::cout << "\n";
}

json class_row(const ClassDecomposition& D, uint32_t c) {
  const auto& k = D.cls(c);
  return {{"class", c},
          {"order", k.order},
          {"size", k.size},
          {"centralizer", k.centralizer_order},
          {"inverse", D.inverse_class(c)},
          {"rep", D.group().format(k.rep)}};
}

CoverTarget parse_target(const std::string& s) {
  if (s == "all") return CoverTarget::All;
  if (s == "noncentral") return CoverTarget::NonCentral;
  if (s == "nonidentity") return CoverTarget::NonIdentity;
  throw CLI::ValidationError("--target", "expected all, noncentral or nonidentity");
}

std::string width_text(const WidthReport& w) { return w.width ? std::to_string(*w.width) : "infinite"; }

json width_row(const std::string& group, const json& params, const WidthReport& w) {
  json miss = json::array();
  for (const auto& m : w.missing) miss.push_back(m);
  return {{"group", group}, {"word", params}, {"width", width_text(w)}, {"stabilized_size", w.stabilized_size},
          {"missing", miss}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waring: class algebra, character tables and word widths of small finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "jsonl or tsv")->check(CLI::IsMember({"jsonl", "tsv"}));
  app.add_option("--cache-dir", g.cache_dir, "character table cache (default: $WARING_CACHE_DIR)");
  app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
  app.add_option("--cap", g.cap, "largest group order to enumerate");
  app.add_flag("!--no-timings", g.timings, "omit timings from scenario reports");

  std::string spec;
  auto* group = app.add_subcommand("group", "order, center and generators");
  group->add_option("spec", spec, "e.g. A5, SL(2,5), SU(4,2), PSp(4,3)")->required();

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  classes->add_option("spec", spec)->required();

  auto* chartab = app.add_subcommand("chartab", "character table");
  chartab->add_option("spec", spec)->required();

  std::vector<std::string> xs{"any"}, ys{"any"};
  std::string target = "noncentral";
  bool same_class = false, inverse_pair = false, only_covering = false;
  auto* cover = app.add_subcommand("cover", "search class pairs whose product covers a target");
  cover->add_option("spec", spec)->required();
  cover->add_option("-x", xs, "constraints on x: any, prime, squarefree, order=m, rss, two-primes, noncentral");
  cover->add_option("-y", ys, "constraints on y");
  cover->add_option("--target", target, "all, noncentral or nonidentity");
  cover->add_flag("--same-class", same_class);
  cover->add_flag("--inverse-pair", inverse_pair);
  cover->add_flag("--covering", only_covering, "print covering pairs only");

  uint64_t m = 0, p = 0;
  std::string wtarget = "all";
  bool scan = false;
  auto* width = app.add_subcommand("width", "width of a power word or of the p-elements");
  width->add_option("spec", spec)->required();
  auto* mopt = width->add_option("-m", m, "power word x^m");
  auto* popt = width->add_option("-p", p, "p-elements");
  width->add_option("--target", wtarget);
  width->add_flag("--scan", scan, "all powers 1..exp-1");
  mopt->excludes(popt);

  uint64_t k = 1, l = 1;
  auto* waring = app.add_subcommand("waring", "does x^k y^l cover the group");
  waring->add_option("spec", spec)->required();
  waring->add_option("k", k)->required()->check(CLI::PositiveNumber);
  waring->add_option("l", l)->required()->check(CLI::PositiveNumber);

  uint64_t q = 0;
  unsigned n = 0;
  auto* ppdcmd = app.add_subcommand("ppd", "largest primitive prime divisor of q^n - 1");
  ppdcmd->add_option("q", q)->required();
  ppdcmd->add_option("n", n)->required();

  std::string symtext;
  uint64_t symq = 2;
  auto* symbol = app.add_subcommand("symbol", "rank, hooks and unipotent degree of a symbol");
  symbol->add_option("symbol", symtext, "e.g. \"({3},{1})\"")->required();
  symbol->add_option("-q", symq, "field size");

  auto* scenario = app.add_subcommand("scenario", "built-in verification scenarios");
  scenario->require_subcommand(1);
  scenario->fallthrough();
  std::string scen;
  auto* srun = scenario->add_subcommand("run", "run a named scenario, \"all\", or a JSON config file");
  srun->add_option("name", scen)->required();
  auto* slist = scenario->add_subcommand("list", "list scenarios");

  CLI11_PARSE(app, argc, argv);

  if (g.threads == 0) g.threads = std::max(1u, std::thread::hardware_concurrency());
  if (g.cache_dir.empty()) g.cache_dir = cache_dir_from_env();
  Workspace ws(WorkspaceOptions{g.cap, g.threads, g.cache_dir});
  bool header = false;

  try {
    if (*group) {
      auto G = ws.group(spec);
      json gens = json::array();
      for (uint32_t x : G->generators()) gens.push_back(G->format(x));
      const OrderSplit o = closed_form_order(G->spec());
      emit(g,
           {{"group", G->name()},
            {"order", G->order()},
            {"closed_form_order", o.order.str()},
            {"center", G->center().size()},
            {"exponent", G->exponent()},
            {"generators", gens},
            {"isa", std::string(kernels::isa_name(kernels::active_isa()))}},
           header);
    } else if (*classes) {
      auto D = ws.classes(spec);
      for (uint32_t c = 0; c < D->count(); ++c) emit(g, class_row(*D, c), header);
    } else if (*chartab) {
      auto T = ws.table(spec);
      const auto& D = *T->classes;
      for (uint32_t chi = 0; chi < T->size(); ++chi) {
        json vals = json::array();
        for (uint32_t c = 0; c < D.count(); ++c) vals.push_back(T->value(chi, c).str());
        emit(g, {{"character", chi}, {"degree", T->degrees[chi]}, {"zeta_order", T->e}, {"values", vals}}, header);
      }
    } else if (*cover) {
      auto A = ws.algebra(spec);
      PairSearch s;
      for (const auto& t : xs) s.x.push_back(ClassConstraint::parse(t));
      for (const auto& t : ys) s.y.push_back(ClassConstraint::parse(t));
      s.target = parse_target(target);
      s.same_class = same_class;
      s.inverse_pair = inverse_pair;
      auto r = search_covering_pair(*A, s, g.threads);
      for (const auto& rec : only_covering ? r.covering : r.scanned)
        emit(g,
             {{"group", spec},
              {"x", rec.i},
              {"y", rec.j},
              {"order_x", rec.order_i},
              {"order_y", rec.order_j},
              {"covers", rec.covers},
              {"exact", rec.exact},
              {"missing", rec.missing}},
             header);
    } else if (*width) {
      auto A = ws.algebra(spec);
      const CoverTarget t = parse_target(wtarget);
      if (scan) {
        auto rep = power_width_scan(*A, g.threads);
        for (const auto& en : rep.entries)
          emit(g, {{"group", spec}, {"exponents", en.exponents}, {"image", en.image}, {"width", width_text(en.width)}},
               header);
      } else if (*popt) {
        emit(g, width_row(spec, {{"p", p}}, p_element_width(*A, p, t)), header);
      } else if (*mopt) {
        emit(g, width_row(spec, {{"m", m}}, power_word_width(*A, m, t)), header);
      } else {
        throw CLI::ValidationError("width", "give -m, -p or --scan");
      }
    } else if (*waring) {
      auto r = waring_pair_check(*ws.algebra(spec), k, l);
      emit(g, {{"group", spec}, {"k", k}, {"l", l}, {"covers", r.covers}, {"missing", r.missing}}, header);
    } else if (*ppdcmd) {
      auto r = ppd(q, n);
      emit(g, {{"q", q}, {"n", n}, {"ppd", r ? json(*r) : json("none")}}, header);
    } else if (*symbol) {
      Symbol S = Symbol::parse(symtext);
      auto h = hooks_and_cohooks(S);
      emit(g,
           {{"symbol", S.str()},
            {"X", S.X},
            {"Y", S.Y},
            {"rank", symbol_rank(S)},
            {"q", symq},
            {"degree", unipotent_degree(S, symq).str()},
            {"a", h.a_stat},
            {"b", h.b_stat},
            {"hooks", h.hooks},
            {"cohooks", h.cohooks}},
           header);
    } else if (*slist) {
      for (const auto& s : scenario_catalog()) emit(g, {{"name", s.name}, {"summary", s.summary}}, header);
    } else if (*srun) {
      const ReportFormat f = parse_format(g.format);
      write_header(std::cout, f);
      auto sink = [&](const CheckRecord& r) {
        write_record(std::cout, f, r, g.timings);
        std::cout.flush();
      };
      std::vector<ScenarioSummary> sums;
      if (scen == "all") {
        for (const auto& s : scenario_catalog()) sums.push_back(run_scenario(s.name, ws, sink));
      } else if (scen.size() > 5 && scen.substr(scen.size() - 5) == ".json") {
        std::ifstream in(scen);
        if (!in) throw std::invalid_argument("cannot open config " + scen);
        json cfg;
        try {
          cfg = json::parse(in);
        } catch (const json::exception& e) {
          throw std::invalid_argument(std::string("malformed config: ") + e.what());
        }
        sums.push_back(run_config(cfg, ws, sink));
      } else {
        sums.push_back(run_scenario(scen, ws, sink));
      }
      bool ok = true;
      for (const auto& s : sums) {
        std::cerr << s.name << ": " << s.passed << " passed, " << s.failed << " failed";
        if (g.timings) std::cerr << " (" << s.seconds << " s)";
        std::cerr << "\n";
        ok = ok && s.ok();
      }
      return ok ? 0 : 1;
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
