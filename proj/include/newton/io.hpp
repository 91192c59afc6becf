#pragma once

#include <string>

#include <json.hpp>

#include "newton/diagram.hpp"

namespace newton {

// "x1:y1,x2:y2,..."
std::string diagram_to_text(const Diagram &d);

// accepts the x:y list above or "TRI p q"
Diagram diagram_from_text(const std::string &text);

// {"vertices": [[x,y],...]}
nlohmann::json diagram_to_json(const Diagram &d);
Diagram diagram_from_json(const nlohmann::json &j);

} // namespace newton
