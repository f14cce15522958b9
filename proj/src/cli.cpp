#include "lrb/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lrb/band.hpp"
#include "lrb/embedder.hpp"
#include "lrb/harness.hpp"
#include "lrb/io.hpp"
#include "lrb/local_order.hpp"
#include "lrb/qvar.hpp"

namespace lrb {

namespace {

using nlohmann::json;

struct Loaded {
  BandDocument doc;
  RealizedTable rt;
};

int load_band_file(const std::string& path, bool adjoin, Loaded& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = parse_band_document(buf.str());
  if (std::holds_alternative<std::vector<ParseError>>(parsed)) {
    for (const auto& e : std::get<std::vector<ParseError>>(parsed))
      err << path << ':' << e.line << ':' << e.col << ": " << e.message << '\n';
    return 2;
  }
  out.doc = std::get<BandDocument>(std::move(parsed));
  if (adjoin) out.doc.identity = "auto";
  auto realized = realize(out.doc);
  if (std::holds_alternative<std::vector<ParseError>>(realized)) {
    for (const auto& e : std::get<std::vector<ParseError>>(realized))
      err << path << ": " << e.message << '\n';
    return 2;
  }
  out.rt = std::get<RealizedTable>(std::move(realized));
  return 0;
}

const char* law_name(AxiomViolation::Law law) {
  switch (law) {
    case AxiomViolation::Law::Entry: return "entry";
    case AxiomViolation::Law::Identity: return "identity";
    case AxiomViolation::Law::Idempotency: return "idempotency";
    case AxiomViolation::Law::LeftRegularity: return "left-regularity";
    case AxiomViolation::Law::Associativity: return "associativity";
  }
  return "?";
}

json violations_json(const std::vector<AxiomViolation>& vs, const std::vector<std::string>& labels) {
  json arr = json::array();
  auto name = [&](int i) { return i < 0 ? json() : json(labels[static_cast<std::size_t>(i)]); };
  for (const auto& v : vs)
    arr.push_back({{"law", law_name(v.law)}, {"x", name(v.x)}, {"y", name(v.y)}, {"z", name(v.z)}});
  return arr;
}

json band_json(const Band& band) {
  json j;
  j["elements"] = band.labels();
  j["identity"] = band.label(band.identity());
  json table = json::array();
  for (int x = 0; x < band.size(); ++x) {
    json row = json::array();
    for (int y = 0; y < band.size(); ++y) row.push_back(band.label(band.mul(x, y)));
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

std::string verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::NotLrb: return "not-lrb";
    case Verdict::Kind::NotRightHereditary: return "not-right-hereditary";
    case Verdict::Kind::NoLocalLinearOrder: return "no-local-linear-order";
    case Verdict::Kind::Embeddable: return "embeddable";
  }
  return "?";
}

json images_json(const ElementMap& map, const Band& band) {
  json j = json::object();
  for (int x = 0; x < band.size(); ++x)
    j[band.label(x)] = word_to_string(map.image[static_cast<std::size_t>(x)], map.registry,
                                      &band.labels());
  return j;
}

json kernel_json(const std::vector<std::pair<int, int>>& ker, const Band& band) {
  json arr = json::array();
  for (auto [x, y] : ker) arr.push_back({band.label(x), band.label(y)});
  return arr;
}

void print_llo(const Band& band, const LocalLinearOrder& llo, std::ostream& out) {
  for (int b = 0; b < band.size(); ++b) {
    if (b == band.identity()) continue;
    const auto& ord = llo.order_of[static_cast<std::size_t>(b)];
    out << "  " << band.label(b) << ":";
    for (std::size_t i = 0; i < ord.size(); ++i)
      out << (i ? " < " : " ") << band.label(ord[i]);
    out << '\n';
  }
}

json llo_json(const Band& band, const LocalLinearOrder& llo) {
  json j = json::object();
  for (int b = 0; b < band.size(); ++b) {
    if (b == band.identity()) continue;
    json seq = json::array();
    for (int x : llo.order_of[static_cast<std::size_t>(b)]) seq.push_back(band.label(x));
    j[band.label(b)] = seq;
  }
  return j;
}

int cmd_validate(const Loaded& loaded, bool as_json, std::ostream& out) {
  auto checked = Band::validate(loaded.rt.table, loaded.rt.n, loaded.rt.identity, loaded.rt.labels);
  if (std::holds_alternative<Band>(checked)) {
    if (as_json)
      out << json{{"command", "validate"}, {"ok", true},
                  {"band", band_json(std::get<Band>(checked))}}.dump(2)
          << '\n';
    else
      out << "valid left regular band with identity: " << loaded.rt.n << " elements\n";
    return 0;
  }
  const auto& vs = std::get<std::vector<AxiomViolation>>(checked);
  if (as_json) {
    out << json{{"command", "validate"}, {"ok", false},
                {"violations", violations_json(vs, loaded.rt.labels)}}.dump(2)
        << '\n';
  } else {
    out << "not a left regular band: " << vs.size() << " axiom violation(s)\n";
    auto name = [&](int i) { return i < 0 ? std::string("-") : loaded.rt.labels[static_cast<std::size_t>(i)]; };
    for (const auto& v : vs)
      out << "  " << law_name(v.law) << " at (" << name(v.x) << ", " << name(v.y) << ", "
          << name(v.z) << ")\n";
  }
  return 1;
}

int cmd_analyze(const Loaded& loaded, bool as_json, std::ostream& out) {
  auto checked = Band::validate(loaded.rt.table, loaded.rt.n, loaded.rt.identity, loaded.rt.labels);
  if (std::holds_alternative<std::vector<AxiomViolation>>(checked)) {
    const auto& vs = std::get<std::vector<AxiomViolation>>(checked);
    if (as_json)
      out << json{{"command", "analyze"}, {"verdict", "not-lrb"},
                  {"violations", violations_json(vs, loaded.rt.labels)}}.dump(2)
          << '\n';
    else
      out << "not a left regular band (" << vs.size() << " violations); run validate for details\n";
    return 1;
  }
  const Band& band = std::get<Band>(checked);
  json j{{"command", "analyze"}};
  j["band"] = band_json(band);

  auto tree_or = ancestor_tree(band);
  if (std::holds_alternative<NotRightHereditaryWitness>(tree_or)) {
    const auto& w = std::get<NotRightHereditaryWitness>(tree_or);
    if (as_json) {
      j["verdict"] = "not-right-hereditary";
      j["witness"] = {{"element", band.label(w.element)},
                      {"cover1", band.label(w.cover1)},
                      {"cover2", band.label(w.cover2)}};
      out << j.dump(2) << '\n';
    } else {
      out << "not right hereditary: " << band.label(w.element) << " has incomparable lower covers "
          << band.label(w.cover1) << " and " << band.label(w.cover2) << '\n';
    }
    return 1;
  }
  const AncestorTree& tree = std::get<AncestorTree>(tree_or);
  const SupportQuotient quotient = support_quotient(band);
  const NuMap numap = nu(quotient.semilattice);
  const auto sets = s_sets(band, tree);
  const LloSearch search = find_local_linear_order(band, tree, quotient, numap, sets);

  if (!as_json) {
    out << "band: " << band.size() << " elements, identity " << band.label(band.identity())
        << (loaded.rt.adjoined ? " (adjoined)" : "") << "\n";
    out << "right hereditary: yes\n";
    out << "ancestors:\n";
    for (int s = 0; s < band.size(); ++s)
      if (s != band.identity())
        out << "  " << band.label(s) << " -> "
            << band.label(tree.parent[static_cast<std::size_t>(s)]) << '\n';
    out << "support classes (" << quotient.semilattice.m << "):\n";
    for (std::size_t c = 0; c < quotient.classes.size(); ++c) {
      out << "  class " << c << " [a" << numap.gen_of_class[c] << "]:";
      for (int x : quotient.classes[c]) out << ' ' << band.label(x);
      out << '\n';
    }
    out << "difference words:\n";
    ElementMap scratch;  // only for printing the nu letters
    std::vector<LetterId> letter_of(static_cast<std::size_t>(quotient.semilattice.m));
    for (int t = 0; t < quotient.semilattice.m; ++t)
      letter_of[static_cast<std::size_t>(t)] =
          scratch.registry.base(numap.gen_of_class[static_cast<std::size_t>(t)]);
    for (int s = 0; s < band.size(); ++s) {
      if (s == band.identity()) continue;
      const FreeWord w =
          to_sorted_word(delta_nu(quotient, numap, tree, s), letter_of, scratch.registry);
      out << "  " << band.label(s) << ": " << word_to_string(w, scratch.registry) << '\n';
    }
    out << "S-sets:\n";
    for (int c = 0; c < band.size(); ++c) {
      if (c == band.identity()) continue;
      out << "  S[" << band.label(c) << "] = {";
      const auto& set = sets[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << band.label(set[i]);
      out << "}\n";
    }
    if (search.llo) {
      out << "local linear order: found (" << (search.fast_path ? "fast path" : "backtracking")
          << ")\n";
      print_llo(band, *search.llo, out);
      out << "schedules:\n";
      for (int c = 0; c < band.size(); ++c) {
        if (c == band.identity()) continue;
        const Schedule sched = chi(band, tree, sets, *search.llo, c);
        out << "  " << band.label(c) << ": (";
        for (std::size_t i = 0; i < sched.entries.size(); ++i)
          out << (i ? " " : "") << band.label(sched.entries[i].first);
        out << ")\n";
      }
    } else {
      out << "local linear order: none exists\n";
      if (search.conflict)
        out << "  conflicting pair in S[" << band.label(search.conflict->b)
            << "]: " << band.label(search.conflict->x) << ", " << band.label(search.conflict->y)
            << '\n';
    }
    return search.llo ? 0 : 1;
  }

  j["verdict"] = search.llo ? "analyzable" : "no-local-linear-order";
  json parents = json::object();
  for (int s = 0; s < band.size(); ++s)
    if (s != band.identity())
      parents[band.label(s)] = band.label(tree.parent[static_cast<std::size_t>(s)]);
  j["ancestors"] = parents;
  json classes = json::array();
  for (const auto& cls : quotient.classes) {
    json members = json::array();
    for (int x : cls) members.push_back(band.label(x));
    classes.push_back(members);
  }
  j["support_classes"] = classes;
  json ss = json::object();
  for (int c = 0; c < band.size(); ++c) {
    if (c == band.identity()) continue;
    json arr = json::array();
    for (int x : sets[static_cast<std::size_t>(c)]) arr.push_back(band.label(x));
    ss[band.label(c)] = arr;
  }
  j["s_sets"] = ss;
  if (search.llo) {
    j["local_order"] = llo_json(band, *search.llo);
    j["local_order_fast_path"] = search.fast_path;
    json schedules = json::object();
    for (int c = 0; c < band.size(); ++c) {
      if (c == band.identity()) continue;
      json arr = json::array();
      for (auto [el, owner] : chi(band, tree, sets, *search.llo, c).entries)
        arr.push_back({band.label(el), band.label(owner)});
      schedules[band.label(c)] = arr;
    }
    j["schedules"] = schedules;
  }
  out << j.dump(2) << '\n';
  return search.llo ? 0 : 1;
}

int cmd_embed(const Loaded& loaded, bool as_json, bool trace_rounds, std::ostream& out) {
  Verdict v = decide_embeddable(loaded.rt.table, loaded.rt.n, loaded.rt.identity,
                                loaded.rt.labels);
  json j{{"command", "embed"}, {"verdict", verdict_name(v.kind)}};
  if (v.kind == Verdict::Kind::NotLrb) {
    if (as_json) {
      j["violations"] = violations_json(v.violations, loaded.rt.labels);
      out << j.dump(2) << '\n';
    } else {
      out << "verdict: not a left regular band (" << v.violations.size() << " violations)\n";
    }
    return 1;
  }
  auto checked = Band::validate(loaded.rt.table, loaded.rt.n, loaded.rt.identity, loaded.rt.labels);
  const Band& band = std::get<Band>(checked);
  j["band"] = band_json(band);
  if (v.kind == Verdict::Kind::NotRightHereditary) {
    if (as_json) {
      j["witness"] = {{"element", band.label(v.witness->element)},
                      {"cover1", band.label(v.witness->cover1)},
                      {"cover2", band.label(v.witness->cover2)}};
      out << j.dump(2) << '\n';
    } else {
      out << "verdict: not right hereditary (" << band.label(v.witness->element)
          << " has two incomparable lower covers)\n";
    }
    return 1;
  }
  if (v.kind == Verdict::Kind::NoLocalLinearOrder) {
    if (as_json)
      out << j.dump(2) << '\n';
    else
      out << "verdict: right hereditary but no local linear order exists\n";
    return 1;
  }

  // recompute with the trace to expose per-round images when asked
  std::vector<RoundTrace> trace;
  auto tree_or = ancestor_tree(band);
  const AncestorTree& tree = std::get<AncestorTree>(tree_or);
  const SupportQuotient quotient = support_quotient(band);
  const NuMap numap = nu(quotient.semilattice);
  const auto sets = s_sets(band, tree);
  ElementMap map = run_embedding_algorithm(band, tree, quotient, numap, sets, *v.llo, &trace);

  if (as_json) {
    j["rounds"] = v.rounds;
    j["rank"] = v.rank;
    j["local_order"] = llo_json(band, *v.llo);
    j["witness"] = {{"images", images_json(map, band)}};
    if (trace_rounds) {
      json rounds = json::array();
      for (const auto& r : trace) {
        ElementMap snapshot{r.images, map.registry, r.round};
        rounds.push_back({{"round", r.round},
                          {"at", r.c < 0 ? json() : json(band.label(r.c))},
                          {"images", images_json(snapshot, band)},
                          {"kernel", kernel_json(r.kernel, band)}});
      }
      j["trace"] = rounds;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "verdict: embeddable into a free left regular band\n";
    out << "rounds: " << v.rounds << ", rank: " << v.rank << '\n';
    out << "local linear order:\n";
    print_llo(band, *v.llo, out);
    if (trace_rounds) {
      for (const auto& r : trace) {
        out << "after round " << r.round;
        if (r.c >= 0) out << " (at " << band.label(r.c) << ")";
        out << ", kernel size " << r.kernel.size() << ":\n";
        ElementMap snapshot{r.images, map.registry, r.round};
        for (int x = 0; x < band.size(); ++x)
          out << "  " << band.label(x) << " = "
              << word_to_string(snapshot.image[static_cast<std::size_t>(x)], map.registry,
                                &band.labels())
              << '\n';
      }
    }
    out << "embedding:\n";
    for (int x = 0; x < band.size(); ++x)
      out << "  " << band.label(x) << " = "
          << word_to_string(map.image[static_cast<std::size_t>(x)], map.registry, &band.labels())
          << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << '\n';
    return 2;
  }
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("band") || !j.contains("witness")) {
    err << "error: not a witness report\n";
    return 2;
  }
  BandDocument doc;
  for (const auto& e : j["band"]["elements"]) doc.labels.push_back(e.get<std::string>());
  doc.identity = j["band"]["identity"].get<std::string>();
  for (const auto& row : j["band"]["table"]) {
    doc.table.emplace_back();
    for (const auto& cell : row) doc.table.back().push_back(cell.get<std::string>());
  }
  auto realized = realize(doc);
  if (std::holds_alternative<std::vector<ParseError>>(realized)) {
    err << "error: report band is malformed\n";
    return 2;
  }
  const RealizedTable& rt = std::get<RealizedTable>(realized);
  auto checked = Band::validate(rt.table, rt.n, rt.identity, rt.labels);
  if (std::holds_alternative<std::vector<AxiomViolation>>(checked)) {
    out << "verify: report band violates the band axioms\n";
    return 1;
  }
  const Band& band = std::get<Band>(checked);
  ElementMap map;
  map.image.assign(static_cast<std::size_t>(band.size()), FreeWord{});
  for (int x = 0; x < band.size(); ++x) {
    const std::string key = band.label(x);
    if (!j["witness"]["images"].contains(key)) {
      err << "error: witness misses image of " << key << '\n';
      return 2;
    }
    auto parsed = word_from_string(j["witness"]["images"][key].get<std::string>(), map.registry,
                                   band.labels());
    if (!parsed) {
      err << "error: unparsable word for " << key << '\n';
      return 2;
    }
    map.image[static_cast<std::size_t>(x)] = std::move(*parsed);
  }
  if (auto bad = verify_embedding(map, band)) {
    out << "verify: FAILED ("
        << (bad->kind == EmbedFailure::Kind::NotInjective ? "not injective" : "not a homomorphism")
        << " at " << band.label(bad->x) << ", " << band.label(bad->y) << ")\n";
    return 1;
  }
  out << "verify: OK (injective homomorphism on " << band.size() << " elements)\n";
  return 0;
}

int cmd_qvar(const Loaded& loaded, bool as_json, std::ostream& out) {
  auto checked = Band::validate(loaded.rt.table, loaded.rt.n, loaded.rt.identity, loaded.rt.labels);
  if (std::holds_alternative<std::vector<AxiomViolation>>(checked)) {
    out << (as_json ? json{{"command", "qvar"}, {"verdict", "not-lrb"}}.dump(2) + "\n"
                    : "not a left regular band\n");
    return 1;
  }
  const Band& band = std::get<Band>(checked);
  QvarResult res = qvar_membership(band);
  if (as_json) {
    json j{{"command", "qvar"}, {"member", res.member}};
    if (!res.member)
      j["witness"] = {band.label(res.witness->first), band.label(res.witness->second)};
    else {
      json certs = json::array();
      for (const auto& c : res.certificates) {
        json hom = json::object();
        for (int x = 0; x < band.size(); ++x)
          hom[band.label(x)] = std::string(1, h3_name(c.hom[static_cast<std::size_t>(x)]));
        certs.push_back({{"pair", {band.label(c.s1), band.label(c.s2)}}, {"hom", hom}});
      }
      j["certificates"] = certs;
    }
    out << j.dump(2) << '\n';
  } else if (res.member) {
    out << "member of the quasi-variety: every pair separated ("
        << res.certificates.size() << " certificates)\n";
  } else {
    out << "not a member: " << band.label(res.witness->first) << " and "
        << band.label(res.witness->second) << " cannot be separated\n";
  }
  return res.member ? 0 : 1;
}

int cmd_census(int max_size, std::ostream& out) {
  out << "k,index,table,verdict,rounds,rank,llo_fast_path,qvar\n";
  census(max_size, [&](const CensusRecord& rec) {
    out << rec.k << ',' << rec.index << ',' << rec.table << ',' << rec.verdict << ','
        << (rec.rounds < 0 ? std::string("-") : std::to_string(rec.rounds)) << ','
        << (rec.rank < 0 ? std::string("-") : std::to_string(rec.rank)) << ','
        << (rec.llo_fast_path ? "1" : "0") << ',' << (rec.qvar ? "1" : "0") << '\n';
  });
  return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite left regular bands: free-band embeddability and witnesses"};
  app.require_subcommand(1);

  std::string path;
  bool adjoin = false;
  bool as_json = false;
  bool trace_rounds = false;
  std::uint64_t seed = 1;
  int max_size = 3;
  int count = 200;
  int max_generators = 5;
  int max_seeds = 4;

  auto add_band_arg = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "band description file")->required();
    cmd->add_flag("--adjoin-identity", adjoin, "force adjoining a fresh identity");
    cmd->add_flag("--json", as_json, "machine-readable output");
  };
  CLI::App* validate = app.add_subcommand("validate", "check the band axioms");
  add_band_arg(validate);
  CLI::App* analyze = app.add_subcommand("analyze", "orders, supports, S-sets, local order");
  add_band_arg(analyze);
  CLI::App* embed = app.add_subcommand("embed", "decide embeddability and emit a witness");
  add_band_arg(embed);
  embed->add_flag("--trace", trace_rounds, "include per-round images");
  CLI::App* verify = app.add_subcommand("verify", "recheck a saved witness report");
  verify->add_option("file", path, "witness report (JSON)")->required();
  CLI::App* qvar = app.add_subcommand("qvar", "quasi-variety membership");
  add_band_arg(qvar);
  CLI::App* census_cmd = app.add_subcommand("census", "classify all small bands (CSV)");
  census_cmd->add_option("--max-size", max_size, "max nonidentity element count");
  census_cmd->add_option("--seed", seed, "unused; census is exhaustive")->default_val(1);
  CLI::App* fuzz = app.add_subcommand("fuzz", "random subbands of a free band");
  fuzz->add_option("--seed", seed, "base seed");
  fuzz->add_option("--count", count, "number of cases");
  fuzz->add_option("--max-generators", max_generators, "alphabet size");
  fuzz->add_option("--max-seeds", max_seeds, "seed words per case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(path, out, err);
    if (app.got_subcommand(census_cmd)) return cmd_census(max_size, out);
    if (app.got_subcommand(fuzz)) {
      FuzzSummary s = fuzz_subbands(seed, count, max_generators, max_seeds, 512, &err);
      out << "fuzz: " << s.cases << " cases, " << s.passed << " passed, " << s.skipped
          << " skipped, " << s.failures.size() << " failed\n";
      for (const auto& f : s.failures)
        out << "  case " << f.index << " (seed " << f.seed << "): " << f.what << '\n';
      return s.failures.empty() ? 0 : 1;
    }
    Loaded loaded;
    const int rc = load_band_file(path, adjoin, loaded, err);
    if (rc != 0) return rc;
    if (app.got_subcommand(validate)) return cmd_validate(loaded, as_json, out);
    if (app.got_subcommand(analyze)) return cmd_analyze(loaded, as_json, out);
    if (app.got_subcommand(embed)) return cmd_embed(loaded, as_json, trace_rounds, out);
    if (app.got_subcommand(qvar)) return cmd_qvar(loaded, as_json, out);
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return 2;
  }
  err << "no command\n";
  return 2;
}

}  // namespace lrb
