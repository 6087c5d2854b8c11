#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qg2/catalog.hpp"
#include "qg2/polynomial.hpp"
#include "qg2/tsystem.hpp"

namespace qg2 {

inline constexpr std::string_view kLibraryVersion = "0.1.0";

/// {"head": [[node, shift, exp], ...], "terms": [{"m": [...], "c": n}, ...],
///  "dim": n, "engine": "...", "version": "..."}. Terms in canonical order, so
/// the text is deterministic.
std::string character_to_json(const LMonomial& head, const QPolynomial& chi, std::string_view engine);

struct StoredCharacter {
  LMonomial head;
  QPolynomial chi;
  std::string engine;
  std::string version;
};

/// Throws ParseError on malformed input or when dim disagrees with the terms.
StoredCharacter character_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& rep);

/// One JSON file per (engine, family id). Entries written by another library
/// version or failing to parse are treated as missing and later overwritten.
class CharacterCache {
 public:
  explicit CharacterCache(std::filesystem::path dir);

  std::optional<QPolynomial> load(const FamilyId& id, Engine engine) const;
  /// Writes through a temporary file and a rename.
  void store(const FamilyId& id, Engine engine, const QPolynomial& chi) const;
  std::filesystem::path path_for(const FamilyId& id, Engine engine) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace qg2
