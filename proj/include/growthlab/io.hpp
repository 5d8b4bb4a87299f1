// io.hpp — file formats: parent-array persistence, CSV writers, summary JSON.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "growthlab/model.hpp"
#include "growthlab/observables.hpp"
#include "growthlab/tree.hpp"

namespace growthlab {

// Numbers in text outputs carry 9 significant digits.
std::string fmt9(double v);
double round9(double v);  // nearest double to the 9-digit decimal form

// Parent-array persistence: n-1 records, record i holding parent[i+1].
// CSV form has header "node,parent"; binary form is little-endian uint32
// values with no header. Loaders validate parent[i] < i and reconstruct the
// tree; they throw std::runtime_error on malformed input.
void save_parents_csv(const GrowingTree& tree, std::ostream& out);
void save_parents_binary(const GrowingTree& tree, std::ostream& out);
GrowingTree load_parents_csv(std::istream& in);
GrowingTree load_parents_binary(std::istream& in);

// Header "degree,count", rows in ascending degree, zero-count rows omitted.
void write_histogram_csv(const DegreeHistogram& hist, std::ostream& out);
DegreeHistogram read_histogram_csv(std::istream& in);

// One summary as a JSON object (keys sorted, values rounded to 9 digits).
// Infinite alpha is encoded as the string "inf" / "-inf"; absent eta_cv as
// null. seed is the master seed; replica identifies the derived stream.
nlohmann::json summary_json(const RunSummary& summary, const ModelParams& params,
                            std::uint64_t seed, std::uint64_t replica);

}  // namespace growthlab
