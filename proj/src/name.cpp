#include "godp/name.hpp"

#include <cctype>
#include <utility>

namespace godp {

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class:
      return "Class";
    case EntityKind::ObjectProperty:
      return "ObjectProperty";
    case EntityKind::DataProperty:
      return "DataProperty";
    case EntityKind::Individual:
      return "Individual";
  }
  return "?";
}

std::optional<EntityKind> parse_entity_kind(std::string_view keyword) {
  if (keyword == "Class") return EntityKind::Class;
  if (keyword == "ObjectProperty") return EntityKind::ObjectProperty;
  if (keyword == "DataProperty") return EntityKind::DataProperty;
  if (keyword == "Individual") return EntityKind::Individual;
  return std::nullopt;
}

bool is_identifier(std::string_view text) {
  if (text == kThing) return true;
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

StructuredName::StructuredName(std::string base, std::vector<Group> groups)
    : base_(std::move(base)), groups_(std::move(groups)) {}

std::string StructuredName::str() const {
  std::string out = base_;
  for (const auto& group : groups_) {
    out += '[';
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i > 0) out += ',';
      out += group[i].str();
    }
    out += ']';
  }
  return out;
}

bool StructuredName::has_constituent(const StructuredName& other) const {
  for (const auto& group : groups_) {
    for (const auto& c : group) {
      if (c == other || c.has_constituent(other)) return true;
    }
  }
  return false;
}

bool operator<(const StructuredName& a, const StructuredName& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return a.groups_ < b.groups_;
}

std::string stratify_name(const StructuredName& name) {
  std::string out;
  for (char c : name.str()) {
    if (c == '[' || c == ',') {
      out += '_';
    } else if (c != ']') {
      out += c;
    }
  }
  return out;
}

void collect_closure(const StructuredName& name, std::vector<StructuredName>& out) {
  out.push_back(name);
  if (name.is_plain()) return;
  out.emplace_back(name.base());
  for (const auto& group : name.groups()) {
    for (const auto& c : group) collect_closure(c, out);
  }
}

}  // namespace godp
