#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divtop/checks.hpp"
#include "divtop/prime_stream.hpp"
#include "divtop/text.hpp"

namespace divtop {

inline constexpr std::string_view kSchemaVersion = "divtop/1";

/// Hasse edges (i, j): points[i] divides points[j], i != j, with no point
/// strictly between them. Sorted.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Fragment& fragment);

/// FragmentDocument: schema, ring, seeds, points, covering edges and the
/// full divisibility matrix as rows of '0'/'1'.
nlohmann::ordered_json fragment_document(const Fragment& fragment);
std::string fragment_to_json(const Fragment& fragment);

/// Rebuilds the fragment from the document's ring and seeds and checks that
/// points, edges and matrix agree. InvalidArgument on mismatch.
Fragment fragment_from_json(std::string_view text);

/// Hasse diagram, divisors below multiples, nodes ranked by divisor count.
std::string fragment_to_dot(const Fragment& fragment);

nlohmann::ordered_json report_document(const CheckReport& report);
/// {check, verdict, witnesses[], details{}} on one line.
std::string report_to_json(const CheckReport& report);

std::string prime_list_to_json(const PrimeList& list, const std::vector<EuclidStep>& steps);

}  // namespace divtop
