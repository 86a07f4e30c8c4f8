#include "kyfan/chains.hpp"

#include "kyfan/errors.hpp"

namespace kyfan {

std::vector<CheckReport> verify_chain(const ChainSpec& chain, const CheckOptions& opts) {
  std::vector<MeanDescriptor> means;
  means.reserve(chain.mean_ids.size());
  for (const auto& id : chain.mean_ids) means.push_back(find_mean(id));
  std::vector<CheckReport> reports;
  for (std::size_t i = 0; i + 1 < means.size(); ++i)
    reports.push_back(check_kyfan(chain.relation, means[i], means[i + 1], chain.grid, opts));
  return reports;
}

const std::vector<ChainPreset>& chain_presets() {
  static const std::vector<ChainPreset> presets = {
      {"ns2003",
       "G/G' <= L/L' <= P/P' <= A/A' <= NS/NS' <= T/T'",
       {{{"G", "L", "P", "A", "NS", "T"}, Relation::Ratio}}},
      {"ns2003-extended",
       "ns2003 followed by T/T' <= Q/Q'",
       {{{"G", "L", "P", "A", "NS", "T", "Q"}, Relation::Ratio}}},
      {"harmonic-upper",
       "1/M - 1/M' increasing along Stanh, T, Ssin, NS, A",
       {{{"Stanh", "T", "Ssin", "NS", "A"}, Relation::Harmonic}}},
      {"harmonic-lower",
       "1/M - 1/M' increasing along A, Ssinh, {Stan | P}, L",
       {{{"A", "Ssinh", "Stan", "L"}, Relation::Harmonic},
        {{"A", "Ssinh", "P", "L"}, Relation::Harmonic}}},
  };
  return presets;
}

const ChainPreset& find_chain_preset(std::string_view name) {
  for (const auto& p : chain_presets())
    if (p.name == name) return p;
  throw RegistryError("unknown chain preset '" + std::string(name) + "'");
}

const std::vector<PairClaim>& preset_pairs() {
  static const std::vector<PairClaim> pairs = [] {
    std::vector<PairClaim> out;
    const auto add = [&](std::string lower, std::string upper, Relation rel) {
      out.push_back({lower, upper, rel, true});
      out.push_back({upper, lower, rel, false});
    };
    // Adjacent pairs of every preset chain.
    for (const auto& preset : chain_presets())
      for (const auto& chain : preset.chains)
        for (std::size_t i = 0; i + 1 < chain.mean_ids.size(); ++i) {
          const PairClaim claim{chain.mean_ids[i], chain.mean_ids[i + 1], chain.relation, true};
          bool seen = false;
          for (const auto& p : out)
            seen = seen || (p.lower == claim.lower && p.upper == claim.upper &&
                            p.relation == claim.relation);
          if (!seen) add(claim.lower, claim.upper, claim.relation);
        }
    // Worked examples on power, Heronian, logarithmic and Seiffert-type means.
    add("Ar(-1)", "Ar(0)", Relation::Ratio);
    add("Ar(0)", "Ar(1)", Relation::Ratio);
    add("Ar(1/3)", "Ar(1/2)", Relation::Ratio);
    add("Ar(1)", "Ar(2)", Relation::Ratio);
    add("Ar(1/2)", "He", Relation::Ratio);
    add("He", "Ar(2/3)", Relation::Ratio);
    add("L", "Ar(1/3)", Relation::Ratio);
    add("Ssinh", "A", Relation::Ratio);
    add("Ar(1/2)", "P", Relation::Ratio);
    add("L", "Stan", Relation::Ratio);
    add("G", "A", Relation::Ratio);
    return out;
  }();
  return pairs;
}

}  // namespace kyfan
