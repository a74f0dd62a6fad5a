#pragma once

// JSON and CSV renderings of the library's result types.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsdensity/density.hpp"
#include "rsdensity/dseries.hpp"
#include "rsdensity/powersum.hpp"
#include "rsdensity/ranksel.hpp"
#include "rsdensity/repmodel.hpp"

namespace rsd::cli {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;  // empty for bare matrices
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
};

// One command result. `table` is absent when the result has no tabular form.
struct Document {
  Json json;
  std::optional<Table> table;
};

Json complex_json(Complex z);
std::string cell(double x);
std::string cell(Complex z);
std::string cell(const std::string& s);
std::string cell(bool b);
std::string cell(std::int64_t v);

Document violations_document(const Family& family, const std::vector<Violation>& violations);
Document matrix_document(const Family& family, const CoeffMatrix& matrix);
Document exponent_document(const ExponentReport& r, const std::string& base);
Document amplified_document(const AmplifiedReport& r);
Document chain_document(const ChainReport& r);
Document sweep_document(const TuranSweepReport& r);

}  // namespace rsd::cli
