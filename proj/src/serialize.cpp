#include "qg2/serialize.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qg2/errors.hpp"

namespace qg2 {

namespace {

using nlohmann::json;

json monomial_json(const LMonomial& m) {
  json out = json::array();
  for (const auto& f : m.factors()) out.push_back({node_number(f.node), f.shift, f.exp});
  return out;
}

LMonomial monomial_from(const json& j) {
  if (!j.is_array()) throw ParseError("monomial must be an array");
  std::vector<Factor> fs;
  for (const auto& f : j) {
    if (!f.is_array() || f.size() != 3) throw ParseError("factor must be [node, shift, exp]");
    const int node = f[0].get<int>();
    if (node != 1 && node != 2) throw ParseError("node must be 1 or 2");
    fs.push_back({node == 1 ? Node::one : Node::two, f[1].get<int>(), f[2].get<int>()});
  }
  return LMonomial::from_factors(std::move(fs));
}

}  // namespace

std::string character_to_json(const LMonomial& head, const QPolynomial& chi, std::string_view engine) {
  json terms = json::array();
  for (const auto& t : chi) terms.push_back({{"c", t.coeff}, {"m", monomial_json(t.monomial)}});
  json out = {{"head", monomial_json(head)},
              {"terms", std::move(terms)},
              {"dim", chi.mass()},
              {"engine", engine},
              {"version", kLibraryVersion}};
  return out.dump() + "\n";
}

StoredCharacter character_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    StoredCharacter out;
    out.head = monomial_from(j.at("head"));
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) terms.push_back({monomial_from(t.at("m")), t.at("c").get<Coeff>()});
    out.chi = QPolynomial::from_terms(std::move(terms));
    out.engine = j.at("engine").get<std::string>();
    out.version = j.at("version").get<std::string>();
    if (j.at("dim").get<Coeff>() != out.chi.mass()) throw ParseError("dim does not match the terms");
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad character JSON: ") + e.what());
  }
}

std::string report_to_json(const VerificationReport& rep) {
  json out = {{"relation", to_string(rep.id)},
              {"passed", rep.passed},
              {"lhs_mass", rep.lhs_mass},
              {"top_bottom_mass", rep.top_bottom_mass},
              {"source_mass", rep.source_mass}};
  if (rep.first_discrepancy) {
    out["first_discrepancy"] = {{"m", monomial_json(rep.first_discrepancy->monomial)},
                                {"lhs", rep.first_discrepancy->lhs},
                                {"rhs", rep.first_discrepancy->rhs}};
  }
  return out.dump();
}

CharacterCache::CharacterCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path CharacterCache::path_for(const FamilyId& id, Engine engine) const {
  return dir_ / (std::string(engine_name(engine)) + "_" + to_string(id) + ".json");
}

std::optional<QPolynomial> CharacterCache::load(const FamilyId& id, Engine engine) const {
  std::ifstream in(path_for(id, engine));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    StoredCharacter sc = character_from_json(buf.str());
    if (sc.version != kLibraryVersion || sc.engine != engine_name(engine) || sc.head != highest_monomial(id)) {
      return std::nullopt;
    }
    if (sc.chi.is_zero() || sc.chi.leading().monomial != sc.head) return std::nullopt;
    return std::move(sc.chi);
  } catch (const Error&) {
    return std::nullopt;
  }
}

void CharacterCache::store(const FamilyId& id, Engine engine, const QPolynomial& chi) const {
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(id, engine);
  auto tmp = target;
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << counter++;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << character_to_json(highest_monomial(id), chi, engine_name(engine));
    if (!out) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace qg2
