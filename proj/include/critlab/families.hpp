#pragma once

#include <critlab/families/addition.hpp>
#include <critlab/families/alphabetize.hpp>
#include <critlab/families/paired_mcq.hpp>
#include <critlab/families/three_sat.hpp>

namespace critlab {

inline std::shared_ptr<const Family> make_family(FamilyId id, const FamilyConfig& config = {}) {
  switch (id) {
    case FamilyId::addition: return std::make_shared<const AdditionFamily>();
    case FamilyId::three_sat: return std::make_shared<const ThreeSatFamily>(config.sat);
    case FamilyId::alphabetize: return std::make_shared<const AlphabetizeFamily>(config.words);
    case FamilyId::paired_mcq: return std::make_shared<const PairedMcqFamily>(config.corpus);
  }
  throw InvalidArgument("unknown family id");
}

/// Default-configured family handles, built on first use.
inline const Family& family_lookup(FamilyId id) {
  static const std::array<std::shared_ptr<const Family>, 4> handles = {
      make_family(FamilyId::addition), make_family(FamilyId::three_sat),
      make_family(FamilyId::alphabetize), make_family(FamilyId::paired_mcq)};
  return *handles[static_cast<std::size_t>(id)];
}

inline TaskInstance generate(FamilyId id, std::uint64_t seed, const FamilyConfig& config = {}) {
  return make_family(id, config)->generate(seed);
}

}  // namespace critlab
