#include "knotforge/arc_io.hpp"

#include <sstream>

#include "json.hpp"

namespace knotforge {

namespace {

using nlohmann::ordered_json;

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> known,
                         const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ParseError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const ordered_json& require_key(const ordered_json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing required key");
  return *it;
}

long long require_int(const ordered_json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<long long>();
}

}  // namespace

PresentationFile parse_presentation(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("", "top level must be an object");
  reject_unknown_keys(doc, {"name", "crossing_number", "class", "arcs"}, "");

  KnotMeta meta;
  const auto& name = require_key(doc, "name", "");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  meta.name = name.get<std::string>();
  if (meta.name.empty()) throw ParseError("name", "must not be empty");

  meta.crossing_number = require_int(require_key(doc, "crossing_number", ""), "crossing_number");
  if (meta.crossing_number < 1) throw ParseError("crossing_number", "must be positive");

  const auto& cls = require_key(doc, "class", "");
  if (cls.is_string()) {
    const std::string s = cls.get<std::string>();
    if (s == "general") {
      meta.knot_class = {KnotClassKind::general, 0};
    } else if (s == "nonalternating_prime") {
      meta.knot_class = {KnotClassKind::nonalternating_prime, 0};
    } else {
      throw ParseError("class", "expected \"general\", \"nonalternating_prime\" or {\"torus\": n}");
    }
  } else if (cls.is_object()) {
    reject_unknown_keys(cls, {"torus"}, "class");
    const long long n = require_int(require_key(cls, "torus", "class"), "class.torus");
    if (n < 2) throw ParseError("class.torus", "torus parameter must be at least 2");
    meta.knot_class = {KnotClassKind::torus, static_cast<int>(n)};
    if (meta.crossing_number != n * n - 1) {
      std::ostringstream os;
      os << "crossing_number must be n^2-1 = " << n * n - 1 << " for an (n+1,n)-torus knot";
      throw ParseError("crossing_number", os.str());
    }
  } else {
    throw ParseError("class", "expected a string or {\"torus\": n}");
  }

  const auto& arcs_json = require_key(doc, "arcs", "");
  if (!arcs_json.is_array()) throw ParseError("arcs", "expected an array");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (size_t i = 0; i < arcs_json.size(); ++i) {
    std::ostringstream prefix;
    prefix << "arcs[" << i << "]";
    const auto& entry = arcs_json[i];
    if (!entry.is_object()) throw ParseError(prefix.str(), "expected an object");
    reject_unknown_keys(entry, {"page", "binding"}, prefix.str());
    Arc arc;
    arc.page = static_cast<int>(require_int(require_key(entry, "page", prefix.str()), prefix.str() + ".page"));
    if (arc.page < 1) throw ParseError(prefix.str() + ".page", "must be at least 1");
    const auto& binding = require_key(entry, "binding", prefix.str());
    if (!binding.is_array() || binding.size() != 2) {
      throw ParseError(prefix.str() + ".binding", "expected [lo, hi]");
    }
    arc.lo = static_cast<int>(require_int(binding[0], prefix.str() + ".binding[0]"));
    arc.hi = static_cast<int>(require_int(binding[1], prefix.str() + ".binding[1]"));
    if (arc.lo < 1) throw ParseError(prefix.str() + ".binding[0]", "binding index must be at least 1");
    if (arc.hi <= arc.lo) throw ParseError(prefix.str() + ".binding", "must satisfy lo < hi");
    arcs.push_back(arc);
  }

  auto validated = ArcPresentation::validate(std::move(arcs));
  if (auto* issues = std::get_if<std::vector<ValidationIssue>>(&validated)) {
    std::ostringstream os;
    os << "invalid presentation:";
    for (const auto& issue : *issues) os << " [" << issue.rule << "] " << issue.detail << ";";
    throw ParseError("arcs", os.str());
  }
  return PresentationFile{std::move(meta), std::get<ArcPresentation>(std::move(validated))};
}

std::string serialize_presentation(const PresentationFile& file) {
  ordered_json doc;
  doc["name"] = file.meta.name;
  doc["crossing_number"] = file.meta.crossing_number;
  switch (file.meta.knot_class.kind) {
    case KnotClassKind::general:
      doc["class"] = "general";
      break;
    case KnotClassKind::nonalternating_prime:
      doc["class"] = "nonalternating_prime";
      break;
    case KnotClassKind::torus:
      doc["class"] = ordered_json{{"torus", file.meta.knot_class.torus_n}};
      break;
  }
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : file.presentation.arcs()) {
    arcs.push_back(ordered_json{{"page", a.page}, {"binding", {a.lo, a.hi}}});
  }
  doc["arcs"] = std::move(arcs);
  return doc.dump(2) + "\n";
}

}  // namespace knotforge
