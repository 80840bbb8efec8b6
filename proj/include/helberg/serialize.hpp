#pragma once

#include <string>

#include <json.hpp>

#include "helberg/codebook.hpp"
#include "helberg/decoder.hpp"
#include "helberg/oracle.hpp"

namespace helberg {

/// Big integers are serialized as decimal strings throughout: the moments
/// and residues outgrow every native JSON number type.
std::string to_decimal(const Int& v);

nlohmann::json to_json(const SizeSearchResult& result);

/// "n,N_n,r1;r2;..." - one best-residue search per row.
std::string to_csv_row(const SizeSearchResult& result);

nlohmann::json to_json(const VerificationReport& report);

/// The trace's text lines as a JSON array of strings.
nlohmann::json to_json(const DecodeTrace& trace);

}  // namespace helberg
