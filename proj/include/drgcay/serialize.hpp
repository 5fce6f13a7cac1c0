#pragma once

#include <string>

#include <json.hpp>

#include "drgcay/analysis.hpp"
#include "drgcay/metrics.hpp"
#include "drgcay/regular_subgroup.hpp"
#include "drgcay/spectral.hpp"
#include "drgcay/structure.hpp"

namespace drgcay {

// nlohmann::json keeps object keys in a std::map, so every dump is sorted.
using Json = nlohmann::json;

// Reals are rounded to 10 decimals so reports are stable across platforms.
double report_real(double x);

Json to_json(const GraphMetrics& m);
// [[value, multiplicity], ...], descending.
Json to_json(const Spectrum& s);
Json to_json(const SrgParams& p);
// {"b": [...], "c": [...]}
Json to_json(const IntersectionArray& a);
// Summary: clique count, root order/size/degree/girth/bipartite.
Json to_json(const KrauszDecomposition& k);
Json to_json(const ConnectionStructureReport& r);
// Group table digest (FNV-1a, hex), generators, connection set, bijection.
Json to_json(const CayleyCertificate& c);
Json to_json(const ObstructionReport& r);
Json to_json(const GenerationScan& s);
Json to_json(const OrderAnalysis& a);

std::string table_digest(const FiniteGroup& g);

}  // namespace drgcay
