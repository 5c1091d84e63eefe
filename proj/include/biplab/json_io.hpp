#pragma once

#include <json.hpp>

#include "biplab/construction.hpp"
#include "biplab/ramsey.hpp"
#include "biplab/spectrum.hpp"

namespace biplab {

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const SpectrumReport& rep);
OrderedJson to_json(const CoverageProfile& prof);
OrderedJson to_json(const BicliqueWitness& w);
OrderedJson to_json(const RamseyVerdict& v);
OrderedJson to_json(const DiversityReport& rep);
OrderedJson to_json(const RichnessReport& rep);
OrderedJson to_json(const Lemma46Report& rep);
OrderedJson to_json(const ClaimDiagnostics& diag);
OrderedJson to_json(const ConstructionParams& p);
OrderedJson witness_to_json(const ConstructionWitness& w, bool with_timings);
OrderedJson family_to_json(const SizeFamily& fam);

}  // namespace biplab
