#include "qsym/descent_algebra.hpp"

#include <json.hpp>

namespace qsym {

int Caps::for_flavor(Flavor flavor) const {
  switch (flavor) {
    case Flavor::A: return a;
    case Flavor::B: return b;
    case Flavor::S: return s;
  }
  return 0;
}

void check_cap(Flavor flavor, int n, const Caps& caps) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  const int cap = caps.for_flavor(flavor);
  if (n > cap) {
    throw CapExceeded("degree " + std::to_string(n) + " exceeds the flavor " + to_string(flavor) + " cap of " +
                      std::to_string(cap) + "; raise it with --cap-override");
  }
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "json") return TableFormat::Json;
  if (text == "csv") return TableFormat::Csv;
  throw std::invalid_argument("unknown table format '" + std::string(text) + "' (expected json or csv)");
}

template <BasisIndex Index>
std::string export_table(const StructureConstantTable<Index>& table, TableFormat format) {
  const std::string flavor = to_string(table.flavor);
  if (format == TableFormat::Csv) {
    std::string out = "flavor,n,alpha,beta,gamma,count\n";
    for (const auto& [key, count] : table.entries) {
      const auto& [alpha, beta, gamma] = key;
      out += flavor + ',' + std::to_string(table.degree) + ",\"" + alpha.to_string() + "\",\"" + beta.to_string() +
             "\",\"" + gamma.to_string() + "\"," + std::to_string(count) + '\n';
    }
    return out;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, count] : table.entries) {
    const auto& [alpha, beta, gamma] = key;
    rows.push_back({{"flavor", flavor},
                    {"n", table.degree},
                    {"alpha", alpha.to_string()},
                    {"beta", beta.to_string()},
                    {"gamma", gamma.to_string()},
                    {"count", count}});
  }
  return rows.dump(2) + '\n';
}

template std::string export_table(const StructureConstantTable<Composition>&, TableFormat);
template std::string export_table(const StructureConstantTable<PseudoComposition>&, TableFormat);
template std::string export_table(const StructureConstantTable<SignedComposition>&, TableFormat);

}  // namespace qsym
