// Command-line front end: compute, verify, dims, special, export.
//
// Exit status: 0 on success, 1 on bad input or a failed check, 2 when the
// library raises an error during computation.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <thread>

#include "CLI11.hpp"
#include "qg2/catalog.hpp"
#include "qg2/dimensions.hpp"
#include "qg2/errors.hpp"
#include "qg2/serialize.hpp"
#include "qg2/tsystem.hpp"

using namespace qg2;

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string engine = "fm";
  std::size_t max_terms = FmOptions{}.max_terms;
  std::string cache_dir;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--engine", c.engine, "fm, recursive or both")
      ->check(CLI::IsMember({"fm", "recursive", "both"}))
      ->capture_default_str();
  cmd->add_option("--max-terms", c.max_terms, "FM term cap")->capture_default_str();
  cmd->add_option("--cache-dir", c.cache_dir, "character cache directory (default $QG2_CACHE)");
}

std::vector<Engine> engines_of(const std::string& name) {
  if (name == "both") return {Engine::fm, Engine::recursive};
  return {name == "fm" ? Engine::fm : Engine::recursive};
}

// A store per engine, optionally backed by the disk cache.
class Characters {
 public:
  explicit Characters(const Common& c) {
    FmOptions opts;
    opts.max_terms = c.max_terms;
    for (Engine e : {Engine::fm, Engine::recursive}) stores_.push_back(std::make_unique<CharacterStore>(e, opts));
    std::string dir = c.cache_dir;
    if (dir.empty()) {
      if (const char* env = std::getenv("QG2_CACHE")) dir = env;
    }
    if (!dir.empty()) cache_.emplace(dir);
  }

  CharPtr get(const FamilyId& id, Engine e) {
    if (cache_) {
      if (auto hit = cache_->load(id, e)) return std::make_shared<const QPolynomial>(std::move(*hit));
    }
    CharPtr p = stores_[e == Engine::fm ? 0 : 1]->get(id);
    if (cache_) cache_->store(id, e, *p);
    return p;
  }

  CharacterProvider provider(Engine e) {
    return [this, e](const FamilyId& id) { return get(id, e); };
  }

 private:
  std::vector<std::unique_ptr<CharacterStore>> stores_;
  std::optional<CharacterCache> cache_;
};

FamilyId parse_id(const std::string& text) {
  try {
    return parse_family_id(text);
  } catch (const ParseError& e) {
    throw BadInput(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw BadInput("cannot write " + path);
  out << text;
}

// ---- compute ----------------------------------------------------------------

struct ComputeArgs {
  Common common;
  std::string id;
  std::string output;
};

int run_compute(const ComputeArgs& a) {
  const FamilyId id = parse_id(a.id);
  Characters chars(a.common);
  std::optional<QPolynomial> first;
  std::string json;
  for (Engine e : engines_of(a.common.engine)) {
    CharPtr p = chars.get(id, e);
    std::cout << to_string(id) << " [" << engine_name(e) << "]: terms " << p->size() << ", dim " << p->mass()
              << ", dominant " << dominant_monomials(*p).size() << ", anti-dominant "
              << anti_dominant_monomials(*p).size() << "\n";
    if (first && *first != *p) {
      std::cout << "engines disagree\n";
      return 1;
    }
    if (!first) {
      first = *p;
      json = character_to_json(highest_monomial(id), *p, engine_name(e));
    }
  }
  if (!a.output.empty()) write_file(a.output, json);
  return 0;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string name;
  std::string suite;
  int k = 1;
  int l = 1;
  int t = 2;
  int s = 0;
  int kmax = 2;
  int lmax = 2;
  int tmax = 5;
  bool tilde = false;
  bool no_tilde = false;
  int jobs = 1;
  std::string report;
};

std::string masses(const VerificationReport& r, const RelationInstance& inst) {
  std::string out = std::to_string(r.lhs_mass) + " = " + std::to_string(r.top_bottom_mass);
  if (!inst.sources.empty()) out += " + " + std::to_string(r.source_mass);
  return out;
}

int run_verify(const VerifyArgs& a) {
  std::vector<RelationId> ids;
  if (a.suite == "grid") {
    ids = relation_grid(a.kmax, a.lmax, a.tmax, a.s, !a.no_tilde);
  } else if (!a.suite.empty()) {
    throw BadInput("unknown suite '" + a.suite + "'");
  } else {
    if (a.name.empty()) throw BadInput("give a relation name or --suite grid");
    RelationKind kind;
    try {
      kind = parse_relation_kind(a.name);
    } catch (const ParseError& e) {
      throw BadInput(e.what());
    }
    RelationId id{kind, a.k, a.l, a.s, a.tilde};
    if (kind == RelationKind::eext) id.k = a.t;
    ids.push_back(id);
  }
  std::vector<RelationInstance> insts;
  for (const auto& id : ids) {
    try {
      insts.push_back(relation_instance(id));
    } catch (const InvalidParameters& e) {
      throw BadInput(e.what());
    }
  }

  Characters chars(a.common);
  const auto engines = engines_of(a.common.engine);
  struct Row {
    std::vector<VerificationReport> reports;
    std::string error;
  };
  std::vector<Row> rows(insts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < insts.size(); i = next++) {
      try {
        for (Engine e : engines) rows[i].reports.push_back(verify_relation(insts[i], chars.provider(e)));
      } catch (const std::exception& ex) {
        rows[i].error = ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, a.jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  bool all = true;
  bool engine_error = false;
  std::string json_lines;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const Row& row = rows[i];
    if (!row.error.empty()) {
      std::cout << "ERROR " << to_string(insts[i].id) << ": " << row.error << "\n";
      engine_error = true;
      continue;
    }
    for (std::size_t j = 0; j < row.reports.size(); ++j) {
      const auto& r = row.reports[j];
      all = all && r.passed;
      std::cout << (r.passed ? "PASS " : "FAIL ") << to_string(r.id) << "  " << masses(r, insts[i]);
      if (engines.size() > 1) std::cout << "  [" << engine_name(engines[j]) << "]";
      if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        std::cout << "  at " << to_string(d.monomial) << " (" << d.lhs << " vs " << d.rhs << ")";
      }
      std::cout << "\n";
      json_lines += report_to_json(r) + "\n";
    }
  }
  if (!a.report.empty()) write_file(a.report, json_lines);
  if (engine_error) return 2;
  return all ? 0 : 1;
}

// ---- dims -------------------------------------------------------------------

struct DimsArgs {
  Common common;
  std::string family;
  int kmax = 2;
  int lmax = 2;
  bool check = false;
};

int run_dims(const DimsArgs& a) {
  const std::pair<const char*, DimFamily> names[] = {
      {"B", DimFamily::B}, {"C", DimFamily::C}, {"D", DimFamily::D}, {"E", DimFamily::E}, {"F", DimFamily::F}};
  std::optional<DimFamily> df;
  for (auto [n, f] : names) {
    if (a.family == n) df = f;
  }
  if (!df) throw BadInput("family must be one of B, C, D, E, F");
  const FamilyId probe = parse_id(a.family);
  Characters chars(a.common);
  bool ok = true;
  for (int k = 0; k <= a.kmax; ++k) {
    for (int l = 0; l <= a.lmax; ++l) {
      const std::uint64_t d = dim_closed_form({*df, k, l});
      std::cout << a.family << "[k=" << k << ",l=" << l << "] " << d;
      if (a.check) {
        const FamilyId id{probe.family, k, l, 0};
        for (Engine e : engines_of(a.common.engine)) {
          const std::uint64_t m = dim_of_character(*chars.get(id, e));
          std::cout << "  " << engine_name(e) << " " << m << (m == d ? " ok" : " MISMATCH");
          ok = ok && m == d;
        }
      }
      std::cout << "\n";
    }
  }
  return ok ? 0 : 1;
}

// ---- special ----------------------------------------------------------------

struct SpecialArgs {
  Common common;
  std::string id;
  std::string monomial;
};

int run_special(const SpecialArgs& a) {
  QPolynomial chi;
  std::string label;
  if (!a.monomial.empty()) {
    LMonomial m;
    try {
      m = parse_monomial(a.monomial);
    } catch (const ParseError& e) {
      throw BadInput(e.what());
    }
    FmOptions opts;
    opts.max_terms = a.common.max_terms;
    opts.expect_special = false;
    FmResult res = fm_run(m, opts);
    chi = std::move(res.character);
    label = to_string(m);
    if (!res.verified) std::cout << "note: FM output unverified (the input is not special)\n";
  } else {
    if (a.id.empty()) throw BadInput("give a family id or --monomial");
    const FamilyId id = parse_id(a.id);
    Characters chars(a.common);
    chi = *chars.get(id, engines_of(a.common.engine).front());
    label = to_string(id);
  }
  const auto dom = dominant_monomials(chi);
  const auto anti = anti_dominant_monomials(chi);
  std::cout << label << ": terms " << chi.size() << ", dim " << chi.mass() << "\n";
  std::cout << "dominant (" << dom.size() << "):";
  for (const auto& d : dom) std::cout << "  " << to_string(d.monomial) << (d.coeff > 1 ? " x" + std::to_string(d.coeff) : "");
  std::cout << "\nanti-dominant (" << anti.size() << "):";
  for (const auto& d : anti) std::cout << "  " << to_string(d.monomial) << (d.coeff > 1 ? " x" + std::to_string(d.coeff) : "");
  std::cout << "\nspecial: " << (dom.size() == 1 ? "yes" : "no") << "\nanti-special: " << (anti.size() == 1 ? "yes" : "no")
            << "\n";
  return 0;
}

// ---- export -----------------------------------------------------------------

struct ExportArgs {
  Common common;
  std::vector<std::string> ids;
  int kmax = -1;
  int lmax = -1;
  int s = 0;
  std::string out = "characters";
};

int run_export(const ExportArgs& a) {
  std::vector<FamilyId> ids;
  for (const auto& text : a.ids) ids.push_back(parse_id(text));
  if (a.kmax >= 0 || a.lmax >= 0) {
    for (Family f : kAllFamilies) {
      if (f == Family::KR1 || f == Family::KR2 || f == Family::MinAff) continue;
      for (int k = 0; k <= std::max(a.kmax, 0); ++k) {
        for (int l = 0; l <= std::max(a.lmax, 0); ++l) ids.push_back({f, k, l, a.s});
      }
    }
  }
  if (ids.empty()) throw BadInput("nothing to export: give ids or --kmax/--lmax");
  std::filesystem::create_directories(a.out);
  Characters chars(a.common);
  const Engine e = engines_of(a.common.engine).front();
  for (const auto& id : ids) {
    CharPtr p = chars.get(id, e);
    const auto path = std::filesystem::path(a.out) / (to_string(id) + ".json");
    write_file(path.string(), character_to_json(highest_monomial(id), *p, engine_name(e)));
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-characters of G2 minimal affinizations"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "compute the character of a family module");
  compute->add_option("id", ca.id, "family id, e.g. B[k=1,l=1,s=0]")->required();
  compute->add_option("-o,--output", ca.output, "write JSON here ('-' for stdout)");
  add_common(compute, ca.common);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "verify relations");
  verify->add_option("name", va.name, "tsys1, tsys2, b, e0, e1, eext, c, d0, d or f");
  verify->add_option("--suite", va.suite, "grid");
  verify->add_option("--k", va.k)->capture_default_str();
  verify->add_option("--l", va.l)->capture_default_str();
  verify->add_option("--t", va.t, "t for eext")->capture_default_str();
  verify->add_option("--s", va.s)->capture_default_str();
  verify->add_flag("--tilde", va.tilde, "the mirrored relation");
  verify->add_option("--kmax", va.kmax)->capture_default_str();
  verify->add_option("--lmax", va.lmax)->capture_default_str();
  verify->add_option("--tmax", va.tmax)->capture_default_str();
  verify->add_flag("--no-tilde", va.no_tilde, "skip mirrored relations in the grid");
  verify->add_option("--jobs", va.jobs, "parallel workers")->capture_default_str();
  verify->add_option("--report", va.report, "write JSON lines here ('-' for stdout)");
  add_common(verify, va.common);

  DimsArgs da;
  auto* dims = app.add_subcommand("dims", "dimension table from the closed forms");
  dims->add_option("family", da.family, "B, C, D, E or F")->required();
  dims->add_option("--kmax", da.kmax)->capture_default_str();
  dims->add_option("--lmax", da.lmax)->capture_default_str();
  dims->add_flag("--check", da.check, "compare with character masses");
  add_common(dims, da.common);

  SpecialArgs sa;
  auto* special = app.add_subcommand("special", "dominant and anti-dominant monomials of a character");
  special->add_option("id", sa.id, "family id");
  special->add_option("--monomial", sa.monomial, "run FM on this head instead, without assuming speciality");
  add_common(special, sa.common);

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "write characters as JSON files");
  exp->add_option("ids", ea.ids, "family ids");
  exp->add_option("--kmax", ea.kmax, "every family with k <= kmax");
  exp->add_option("--lmax", ea.lmax, "and l <= lmax");
  exp->add_option("--s", ea.s)->capture_default_str();
  exp->add_option("--out", ea.out, "output directory")->capture_default_str();
  add_common(exp, ea.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*compute) return run_compute(ca);
    if (*verify) return run_verify(va);
    if (*dims) return run_dims(da);
    if (*special) return run_special(sa);
    if (*exp) return run_export(ea);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
