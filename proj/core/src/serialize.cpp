#include "prym/serialize.hpp"

#include <sstream>

namespace prym {

Json pipeline_report_json(const PipelineReport& rep) {
  Json j;
  j["g"] = rep.g;
  j["case"] = case_name(rep.case_tag);
  j["match"] = rep.match;
  Json arr = Json::array();
  for (const auto& [r, coeff] : rep.mather) {
    Json row;
    row["r"] = r;
    row["coefficient"] = rational_str(coeff);
    row["binomial_check"] =
        (coeff == binomial(2 * rep.g - 2 * r - 2, rep.g - r - 1) /
                      factorial(rep.g - r));
    arr.push_back(row);
  }
  j["mather"] = arr;
  j["derived_class"] = rep.derived.to_text();
  j["closed_form"] = rep.closed.to_text();
  return j;
}

Json stratum_json(const StratumDescriptor& s) {
  Json j;
  j["family"] = s.family;
  j["indices"] = s.indices;
  j["k"] = s.k;
  j["dim_picN"] = s.dim_picN;
  j["exceptional"] = s.exceptional;
  return j;
}

Json strata_json(const std::vector<StratumDescriptor>& list) {
  Json arr = Json::array();
  for (const auto& s : list) arr.push_back(stratum_json(s));
  return arr;
}

std::string mather_csv(const PipelineReport& rep) {
  std::ostringstream os;
  os << "r,coefficient\n";
  for (const auto& [r, coeff] : rep.mather)
    os << r << "," << rational_str(coeff) << "\n";
  return os.str();
}

std::string mather_text(const PipelineReport& rep) {
  std::ostringstream os;
  os << "g=" << rep.g << " case=" << case_name(rep.case_tag)
     << " match=" << (rep.match ? "yes" : "no") << "\n";
  for (const auto& [r, coeff] : rep.mather)
    os << "  r=" << r << "  coeff(h^r xi^" << (rep.g - r)
       << ") = " << rational_str(coeff) << "\n";
  return os.str();
}

}  // namespace prym
