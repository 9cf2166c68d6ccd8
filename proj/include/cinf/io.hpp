#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cinf/dupont.hpp"
#include "cinf/transfer.hpp"
#include "cinf/trees.hpp"

namespace cinf {

using Json = nlohmann::ordered_json;

// Every rational is written as a "p/q" (or "p") string.
Json to_json(const ContractionReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const IntervalTable& t);
Json to_json(const std::vector<PPolynomialRow>& rows);

std::string to_text(const ContractionReport& r);
std::string to_text(const VerificationReport& r);
std::string to_text(const IntervalTable& t);
std::string to_text(const std::vector<PPolynomialRow>& rows);

// "m_3(t,dt,dt)" for the table word "tdd".
std::string interval_word_label(const std::string& word);

}  // namespace cinf
