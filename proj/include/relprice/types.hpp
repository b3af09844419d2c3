#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace relprice {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
  schema,
  validation,
  conversion,
  domain,
  singular_design,
  no_within_variance,
  subset,
  config,
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string to_string(ErrorKind kind);

// ---------------------------------------------------------------------------
// Enumerations
// ---------------------------------------------------------------------------

enum class WtpFrequency { monthly, yearly, one_time };
enum class IncomeBasis { gross, net, unclear };
enum class IncomeUnit { person, household };
enum class Elicitation { dichotomous, open_ended, other };
enum class SurveyFormat { written, oral, mixed };
enum class PaymentVehicle { tax, donation, use_charge, free_choice, mixed };
enum class PaymentTerms { recurring, one_time };
enum class SpatialScale { local_regional, national, international };

enum class Continent {
  north_america,
  south_america,
  africa,
  europe,
  asia,
  australia,
};

// Closed set of ecosystem-service categories.
enum class ServiceTag {
  water_regulation,
  air_quality,
  climate,
  erosion,
  purification_waste,
  natural_hazard,
  disease,
  pest,
  pollination,
  aesthetic,
  recreation_ecotourism,
  spiritual_religious,
  biodiversity,
  forest,
};

inline constexpr int kServiceTagCount = 14;

bool is_regulating(ServiceTag tag);
bool is_cultural(ServiceTag tag);

std::string to_string(WtpFrequency v);
std::string to_string(IncomeBasis v);
std::string to_string(IncomeUnit v);
std::string to_string(Elicitation v);
std::string to_string(SurveyFormat v);
std::string to_string(PaymentVehicle v);
std::string to_string(PaymentTerms v);
std::string to_string(SpatialScale v);
std::string to_string(Continent v);
std::string to_string(ServiceTag v);

WtpFrequency parse_wtp_frequency(const std::string& s);
IncomeBasis parse_income_basis(const std::string& s);
IncomeUnit parse_income_unit(const std::string& s);
Elicitation parse_elicitation(const std::string& s);
SurveyFormat parse_survey_format(const std::string& s);
PaymentVehicle parse_payment_vehicle(const std::string& s);
PaymentTerms parse_payment_terms(const std::string& s);
SpatialScale parse_spatial_scale(const std::string& s);
Continent parse_continent(const std::string& s);
ServiceTag parse_service_tag(const std::string& s);

// ---------------------------------------------------------------------------
// Monetary values
// ---------------------------------------------------------------------------

struct MonetaryAmount {
  double value = 0.0;
  std::string currency = "USD";  // ISO-4217
  int base_year = 2020;

  void validate() const;
  bool operator==(const MonetaryAmount&) const = default;
};

// One income category: open bounds encoded as nullopt. Shares are fractions.
struct IncomeBracket {
  std::optional<double> lower;
  std::optional<double> upper;
  double share = 0.0;

  bool operator==(const IncomeBracket&) const = default;
};

struct IncomeBracketTable {
  std::vector<IncomeBracket> brackets;

  // Ascending, non-overlapping, at most one open end per side, shares
  // summing to 1 within the survey-rounding tolerance.
  void validate(double share_tolerance = 0.02) const;
  bool operator==(const IncomeBracketTable&) const = default;
};

struct BracketIncome {
  IncomeBracketTable table;
  std::string currency = "USD";
  int base_year = 2020;
  bool operator==(const BracketIncome&) const = default;
};

using IncomeField = std::variant<MonetaryAmount, BracketIncome>;

// ---------------------------------------------------------------------------
// Observations
// ---------------------------------------------------------------------------

// Derived, analysis-ready values attached by prepare().
struct PreparedValues {
  double income_usd = 0.0;      // mean annual income, 2020 USD
  double wtp_usd_annual = 0.0;  // annualized WTP, 2020 USD (sign preserved)
  double ln_income = 0.0;
  double ln_wtp = 0.0;
  bool negative_wtp = false;
  int study_year_used = 0;

  bool operator==(const PreparedValues&) const = default;
};

struct ObservationRecord {
  std::size_t row_id = 0;  // stable ingestion order id
  std::string study_id;
  MonetaryAmount wtp;
  WtpFrequency wtp_frequency = WtpFrequency::yearly;
  IncomeField income;
  IncomeBasis income_basis = IncomeBasis::unclear;
  IncomeUnit income_unit = IncomeUnit::household;
  long sample_size = 1;
  std::optional<int> study_year;
  int publication_year = 2000;
  Elicitation elicitation = Elicitation::other;
  SurveyFormat survey_format = SurveyFormat::written;
  PaymentVehicle payment_vehicle = PaymentVehicle::tax;
  PaymentTerms payment_terms = PaymentTerms::recurring;
  std::vector<ServiceTag> service_tags;  // kept sorted, unique
  int service_count = 1;
  SpatialScale spatial_scale = SpatialScale::local_regional;
  Continent continent = Continent::europe;
  std::string country;  // ISO code
  std::optional<double> respondent_age;
  std::optional<double> household_size;
  std::optional<double> provision_level;  // fraction of full provision
  std::optional<std::string> level_group_id;

  std::optional<PreparedValues> prepared;

  bool has_tag(ServiceTag tag) const;
  void validate() const;  // throws Error{validation} with a reason
  bool operator==(const ObservationRecord&) const = default;
};

// ---------------------------------------------------------------------------
// Conversion tables (CPI series per country-year, PPP factor per country)
// ---------------------------------------------------------------------------

struct ConversionTables {
  // country -> (year -> CPI level)
  std::map<std::string, std::map<int, double>> cpi;
  // country -> multiplicative PPP-to-USD factor
  std::map<std::string, double> ppp;

  bool covers(const std::string& country) const;
  bool operator==(const ConversionTables&) const = default;
};

// ---------------------------------------------------------------------------
// Dataset
// ---------------------------------------------------------------------------

struct RowIssue {
  std::size_t row = 0;  // 0-based data-row index (header excluded)
  std::string reason;
  bool operator==(const RowIssue&) const = default;
};

struct IngestReport {
  std::vector<RowIssue> errors;
  std::vector<RowIssue> warnings;
  std::size_t rows_read = 0;
  std::size_t rows_kept = 0;
};

struct PrepareReport {
  std::vector<RowIssue> errors;    // rows dropped during preparation
  std::vector<RowIssue> warnings;  // tie-breaks, fallbacks, flags
  double study_year_lag_used = 4.0;
  std::size_t level_groups_collapsed = 0;
};

// Immutable after construction; transformation steps return a new Dataset.
struct Dataset {
  std::vector<ObservationRecord> observations;
  ConversionTables tables;
  IngestReport ingest_report;
  PrepareReport prepare_report;
  bool prepared = false;

  std::size_t n_observations() const { return observations.size(); }
  std::size_t n_studies() const;
  void validate() const;
};

inline constexpr int kTargetYear = 2020;

}  // namespace relprice
