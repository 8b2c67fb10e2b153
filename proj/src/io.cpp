#include "divtop/io.hpp"

#include <algorithm>
#include <map>

namespace divtop {

using nlohmann::ordered_json;

namespace {

ordered_json ring_document(const RingDescriptor& ring) {
  ordered_json out = {{"tag", ring_selector(ring.tag)}};
  if (ring.prime) out["p"] = *ring.prime;
  return out;
}

ordered_json class_texts(std::span<const ClassId> classes) {
  ordered_json out = ordered_json::array();
  for (const auto& c : classes) out.push_back(to_text(c));
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Fragment& fragment) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = fragment.size();
  for (std::size_t j = 0; j < n; ++j) {
    Bitset below = fragment.divisors_of(j);
    below.reset(j);
    for (auto i = below.find_first(); i != Bitset::npos; i = below.find_next(i)) {
      // i is covered by j unless some other proper divisor of j is a proper multiple of i
      Bitset between = fragment.multiples_of(i) & below;
      between.reset(i);
      if (between.none()) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json fragment_document(const Fragment& fragment) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["ring"] = ring_document(fragment.domain().descriptor());
  doc["seeds"] = class_texts(fragment.seeds());
  doc["points"] = class_texts(fragment.points());
  ordered_json edges = ordered_json::array();
  for (const auto& [i, j] : covering_pairs(fragment)) {
    edges.push_back({to_text(fragment.point(i)), to_text(fragment.point(j))});
  }
  doc["edges"] = edges;
  ordered_json matrix = ordered_json::array();
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    std::string row(fragment.size(), '0');
    for (std::size_t j = 0; j < fragment.size(); ++j) {
      if (fragment.divides(i, j)) row[j] = '1';
    }
    matrix.push_back(row);
  }
  doc["matrix"] = matrix;
  return doc;
}

std::string fragment_to_json(const Fragment& fragment) { return fragment_document(fragment).dump(); }

Fragment fragment_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.byte, "malformed fragment document");
  }
  try {
    if (doc.at("schema").get<std::string>() != kSchemaVersion) {
      throw Error(ErrorCode::InvalidArgument, "unsupported schema version");
    }
    const auto& ring = doc.at("ring");
    std::optional<std::uint64_t> prime;
    if (ring.contains("p")) prime = ring.at("p").get<std::uint64_t>();
    const RingDescriptor descriptor = parse_ring_descriptor(ring.at("tag").get<std::string>(), prime);
    DomainPtr domain = make_domain(descriptor);
    std::vector<ClassId> seeds;
    for (const auto& s : doc.at("seeds")) {
      seeds.push_back(canonical_class(*domain, parse_element(descriptor, s.get<std::string>())));
    }
    Fragment fragment = build_fragment(domain, seeds);
    const ordered_json rebuilt = fragment_document(fragment);
    for (const char* key : {"points", "edges", "matrix"}) {
      if (doc.at(key) != rebuilt.at(key)) {
        throw Error(ErrorCode::InvalidArgument, std::string("fragment document field '") + key +
                                                    "' disagrees with its seeds");
      }
    }
    return fragment;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("fragment document: ") + e.what());
  }
}

std::string fragment_to_dot(const Fragment& fragment) {
  std::string out = "digraph divtop {\n  rankdir=BT;\n  node [shape=box];\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    out += "  " + quoted(to_text(fragment.point(i))) + ";\n";
    ranks[fragment.divisors_of(i).count()].push_back(i);
  }
  for (const auto& [rank, nodes] : ranks) {
    out += "  { rank=same;";
    for (auto i : nodes) out += " " + quoted(to_text(fragment.point(i))) + ";";
    out += " }\n";
  }
  for (const auto& [i, j] : covering_pairs(fragment)) {
    out += "  " + quoted(to_text(fragment.point(i))) + " -> " + quoted(to_text(fragment.point(j))) + ";\n";
  }
  out += "}\n";
  return out;
}

ordered_json report_document(const CheckReport& report) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    if (const auto* c = std::get_if<ClassId>(&w)) {
      witnesses.push_back(to_text(*c));
    } else {
      witnesses.push_back(class_texts(std::get<std::vector<ClassId>>(w)));
    }
  }
  ordered_json doc;
  doc["check"] = report.check;
  doc["verdict"] = verdict_name(report.verdict);
  doc["witnesses"] = witnesses;
  doc["details"] = report.details;
  return doc;
}

std::string report_to_json(const CheckReport& report) { return report_document(report).dump(); }

std::string prime_list_to_json(const PrimeList& list, const std::vector<EuclidStep>& steps) {
  ordered_json doc;
  doc["schema"] = kSchemaVersion;
  doc["ring"] = ring_selector(list.tag);
  doc["primes"] = class_texts(list.members);
  ordered_json s = ordered_json::array();
  for (const auto& step : steps) {
    s.push_back({{"m", step.m}, {"x", to_text(step.witness)}, {"prime", to_text(step.prime)}});
  }
  doc["steps"] = s;
  return doc.dump();
}

}  // namespace divtop
