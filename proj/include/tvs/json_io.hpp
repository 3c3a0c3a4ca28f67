#ifndef TVS_JSON_IO_HPP
#define TVS_JSON_IO_HPP

#include <string>

#include "tvs/forest.hpp"
#include "tvs/labeler.hpp"
#include "tvs/verifier.hpp"

namespace tvs {

std::string labeling_to_json(const Forest& f, const TotalWeighting& tw);
TotalWeighting labeling_from_json(const std::string& text, const Forest& f);
std::string certificate_to_json(const Certificate& cert);
std::string audit_to_json(const AuditReport& rep);

// graph { a -- b [label="3"]; a [label="1|10"]; }
std::string to_dot(const Forest& f, const TotalWeighting& tw);

}  // namespace tvs

#endif
