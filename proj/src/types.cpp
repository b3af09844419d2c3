#include "relprice/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace relprice {

namespace {

[[noreturn]] void bad_value(const char* what, const std::string& s) {
  throw Error(ErrorKind::validation,
              std::string("unknown ") + what + " value: '" + s + "'");
}

}  // namespace

std::string to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::schema: return "schema";
    case ErrorKind::validation: return "validation";
    case ErrorKind::conversion: return "conversion";
    case ErrorKind::domain: return "domain";
    case ErrorKind::singular_design: return "singular_design";
    case ErrorKind::no_within_variance: return "no_within_variance";
    case ErrorKind::subset: return "subset";
    case ErrorKind::config: return "config";
    case ErrorKind::io: return "io";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

bool is_regulating(ServiceTag tag) {
  switch (tag) {
    case ServiceTag::water_regulation:
    case ServiceTag::air_quality:
    case ServiceTag::climate:
    case ServiceTag::erosion:
    case ServiceTag::purification_waste:
    case ServiceTag::natural_hazard:
    case ServiceTag::disease:
    case ServiceTag::pest:
    case ServiceTag::pollination:
      return true;
    default:
      return false;
  }
}

bool is_cultural(ServiceTag tag) {
  switch (tag) {
    case ServiceTag::aesthetic:
    case ServiceTag::recreation_ecotourism:
    case ServiceTag::spiritual_religious:
      return true;
    default:
      return false;
  }
}

std::string to_string(WtpFrequency v) {
  switch (v) {
    case WtpFrequency::monthly: return "monthly";
    case WtpFrequency::yearly: return "yearly";
    case WtpFrequency::one_time: return "one_time";
  }
  return "?";
}

std::string to_string(IncomeBasis v) {
  switch (v) {
    case IncomeBasis::gross: return "gross";
    case IncomeBasis::net: return "net";
    case IncomeBasis::unclear: return "unclear";
  }
  return "?";
}

std::string to_string(IncomeUnit v) {
  return v == IncomeUnit::person ? "person" : "household";
}

std::string to_string(Elicitation v) {
  switch (v) {
    case Elicitation::dichotomous: return "dichotomous";
    case Elicitation::open_ended: return "open_ended";
    case Elicitation::other: return "other";
  }
  return "?";
}

std::string to_string(SurveyFormat v) {
  switch (v) {
    case SurveyFormat::written: return "written";
    case SurveyFormat::oral: return "oral";
    case SurveyFormat::mixed: return "mixed";
  }
  return "?";
}

std::string to_string(PaymentVehicle v) {
  switch (v) {
    case PaymentVehicle::tax: return "tax";
    case PaymentVehicle::donation: return "donation";
    case PaymentVehicle::use_charge: return "use_charge";
    case PaymentVehicle::free_choice: return "free_choice";
    case PaymentVehicle::mixed: return "mixed";
  }
  return "?";
}

std::string to_string(PaymentTerms v) {
  return v == PaymentTerms::recurring ? "recurring" : "one_time";
}

std::string to_string(SpatialScale v) {
  switch (v) {
    case SpatialScale::local_regional: return "local_regional";
    case SpatialScale::national: return "national";
    case SpatialScale::international: return "international";
  }
  return "?";
}

std::string to_string(Continent v) {
  switch (v) {
    case Continent::north_america: return "north_america";
    case Continent::south_america: return "south_america";
    case Continent::africa: return "africa";
    case Continent::europe: return "europe";
    case Continent::asia: return "asia";
    case Continent::australia: return "australia";
  }
  return "?";
}

std::string to_string(ServiceTag v) {
  switch (v) {
    case ServiceTag::water_regulation: return "water_regulation";
    case ServiceTag::air_quality: return "air_quality";
    case ServiceTag::climate: return "climate";
    case ServiceTag::erosion: return "erosion";
    case ServiceTag::purification_waste: return "purification_waste";
    case ServiceTag::natural_hazard: return "natural_hazard";
    case ServiceTag::disease: return "disease";
    case ServiceTag::pest: return "pest";
    case ServiceTag::pollination: return "pollination";
    case ServiceTag::aesthetic: return "aesthetic";
    case ServiceTag::recreation_ecotourism: return "recreation_ecotourism";
    case ServiceTag::spiritual_religious: return "spiritual_religious";
    case ServiceTag::biodiversity: return "biodiversity";
    case ServiceTag::forest: return "forest";
  }
  return "?";
}

WtpFrequency parse_wtp_frequency(const std::string& s) {
  if (s == "monthly") return WtpFrequency::monthly;
  if (s == "yearly" || s == "annual") return WtpFrequency::yearly;
  if (s == "one_time") return WtpFrequency::one_time;
  bad_value("wtp_frequency", s);
}

IncomeBasis parse_income_basis(const std::string& s) {
  if (s == "gross") return IncomeBasis::gross;
  if (s == "net") return IncomeBasis::net;
  if (s == "unclear" || s.empty()) return IncomeBasis::unclear;
  bad_value("income_basis", s);
}

IncomeUnit parse_income_unit(const std::string& s) {
  if (s == "person") return IncomeUnit::person;
  if (s == "household") return IncomeUnit::household;
  bad_value("income_unit", s);
}

Elicitation parse_elicitation(const std::string& s) {
  if (s == "dichotomous") return Elicitation::dichotomous;
  if (s == "open_ended") return Elicitation::open_ended;
  if (s == "other" || s.empty()) return Elicitation::other;
  bad_value("elicitation", s);
}

SurveyFormat parse_survey_format(const std::string& s) {
  if (s == "written") return SurveyFormat::written;
  if (s == "oral") return SurveyFormat::oral;
  if (s == "mixed") return SurveyFormat::mixed;
  bad_value("survey_format", s);
}

PaymentVehicle parse_payment_vehicle(const std::string& s) {
  if (s == "tax") return PaymentVehicle::tax;
  if (s == "donation") return PaymentVehicle::donation;
  if (s == "use_charge") return PaymentVehicle::use_charge;
  if (s == "free_choice") return PaymentVehicle::free_choice;
  if (s == "mixed") return PaymentVehicle::mixed;
  bad_value("payment_vehicle", s);
}

PaymentTerms parse_payment_terms(const std::string& s) {
  if (s == "recurring") return PaymentTerms::recurring;
  if (s == "one_time") return PaymentTerms::one_time;
  bad_value("payment_terms", s);
}

SpatialScale parse_spatial_scale(const std::string& s) {
  if (s == "local_regional") return SpatialScale::local_regional;
  if (s == "national") return SpatialScale::national;
  if (s == "international") return SpatialScale::international;
  bad_value("spatial_scale", s);
}

Continent parse_continent(const std::string& s) {
  if (s == "north_america") return Continent::north_america;
  if (s == "south_america") return Continent::south_america;
  if (s == "africa") return Continent::africa;
  if (s == "europe") return Continent::europe;
  if (s == "asia") return Continent::asia;
  if (s == "australia") return Continent::australia;
  bad_value("continent", s);
}

ServiceTag parse_service_tag(const std::string& s) {
  for (int i = 0; i < kServiceTagCount; ++i) {
    auto tag = static_cast<ServiceTag>(i);
    if (to_string(tag) == s) return tag;
  }
  bad_value("service_tag", s);
}

void MonetaryAmount::validate() const {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::validation, "monetary value is not finite");
  }
  if (base_year < 1980 || base_year > 2030) {
    throw Error(ErrorKind::validation,
                "monetary base_year " + std::to_string(base_year) +
                    " outside [1980, 2030]");
  }
  if (currency.size() != 3 ||
      !std::all_of(currency.begin(), currency.end(),
                   [](unsigned char c) { return std::isalpha(c); })) {
    throw Error(ErrorKind::validation,
                "currency code '" + currency + "' is not 3 letters");
  }
}

void IncomeBracketTable::validate(double share_tolerance) const {
  if (brackets.empty()) {
    throw Error(ErrorKind::validation, "income bracket table is empty");
  }
  double share_sum = 0.0;
  double prev_upper = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const auto& b = brackets[i];
    if (b.share < 0.0 || b.share > 1.0) {
      throw Error(ErrorKind::validation, "bracket share outside [0, 1]");
    }
    share_sum += b.share;
    if (!b.lower && i != 0) {
      throw Error(ErrorKind::validation,
                  "bottom-open bracket must be the first bracket");
    }
    if (!b.upper && i + 1 != brackets.size()) {
      throw Error(ErrorKind::validation,
                  "top-open bracket must be the last bracket");
    }
    if (b.lower && b.upper && *b.lower >= *b.upper) {
      throw Error(ErrorKind::validation, "bracket bounds not ascending");
    }
    double lo = b.lower ? *b.lower : -std::numeric_limits<double>::infinity();
    if (lo < prev_upper - 1e-9) {
      throw Error(ErrorKind::validation, "brackets overlap or are unsorted");
    }
    prev_upper = b.upper ? *b.upper : std::numeric_limits<double>::infinity();
  }
  if (std::abs(share_sum - 1.0) > share_tolerance) {
    throw Error(ErrorKind::validation,
                "bracket shares sum to " + std::to_string(share_sum) +
                    ", outside 1 +/- " + std::to_string(share_tolerance));
  }
}

bool ObservationRecord::has_tag(ServiceTag tag) const {
  return std::find(service_tags.begin(), service_tags.end(), tag) !=
         service_tags.end();
}

void ObservationRecord::validate() const {
  if (study_id.empty()) {
    throw Error(ErrorKind::validation, "study_id is empty");
  }
  if (sample_size < 1) {
    throw Error(ErrorKind::validation,
                "sample_size must be >= 1, got " + std::to_string(sample_size));
  }
  wtp.validate();
  if (std::holds_alternative<MonetaryAmount>(income)) {
    const auto& amt = std::get<MonetaryAmount>(income);
    amt.validate();
    if (amt.value <= 0.0) {
      throw Error(ErrorKind::validation, "mean income must be positive");
    }
  } else {
    std::get<BracketIncome>(income).table.validate();
  }
  if (publication_year < 1980 || publication_year > 2030) {
    throw Error(ErrorKind::validation, "publication_year outside [1980, 2030]");
  }
  if (study_year && (*study_year < 1980 || *study_year > 2030)) {
    throw Error(ErrorKind::validation, "study_year outside [1980, 2030]");
  }
  if (service_count < static_cast<int>(service_tags.size()) ||
      service_count < 1) {
    throw Error(ErrorKind::validation,
                "service_count must cover the tagged services");
  }
  if (provision_level && (*provision_level < 0.0 || *provision_level > 1.0)) {
    throw Error(ErrorKind::validation, "provision_level outside [0, 1]");
  }
  if (household_size && *household_size < 1.0) {
    throw Error(ErrorKind::validation, "household_size must be >= 1");
  }
}

bool ConversionTables::covers(const std::string& country) const {
  auto it = cpi.find(country);
  return it != cpi.end() && !it->second.empty() &&
         it->second.count(kTargetYear) > 0 && ppp.count(country) > 0;
}

std::size_t Dataset::n_studies() const {
  std::vector<std::string> ids;
  ids.reserve(observations.size());
  for (const auto& o : observations) ids.push_back(o.study_id);
  std::sort(ids.begin(), ids.end());
  return std::unique(ids.begin(), ids.end()) - ids.begin();
}

void Dataset::validate() const {
  for (const auto& o : observations) o.validate();
}

}  // namespace relprice
