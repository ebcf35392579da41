#pragma once

#include <json.hpp>

#include "ectff/diffset.hpp"
#include "ectff/frames.hpp"
#include "ectff/fusion.hpp"
#include "ectff/pairing.hpp"
#include "ectff/quadform.hpp"
#include "ectff/search.hpp"

namespace ectff {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "ectff/v1";

Json to_json(const Rational& r);
Json to_json(const DifferenceSetCertificate& cert);
Json to_json(const FrameCertificate& cert);
Json to_json(const SrgCertificate& cert);
Json to_json(const PairedDSCertificate& cert);
Json to_json(const CharsumResult& cs);
Json to_json(const EctffCertificate& cert);
Json to_json(const FeasibleTriple& t);
Json to_json(const ScanReport& report);
Json to_json(const SearchReport& report);
Json to_json(const InfiniteFamilyBundle& bundle);

/// Deterministic report envelope: command echo, schema version and tolerances up
/// front, timing in a separate block so reruns differ only there.
Json run_report(const std::string& command_echo, const Tolerance& tol, Json payload,
                double elapsed_seconds);

}  // namespace ectff
