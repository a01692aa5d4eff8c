// Structured names and entity kinds.
//
// A structured name is an identifier optionally followed by bracketed groups
// of constituent names, e.g. `rolePerformedBy[Performer]` or `rel[A,B]`.
// Constituents are replaced during instantiation and flattened away by
// stratification at the very end of expansion.

#ifndef GODP_NAME_HPP
#define GODP_NAME_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace godp {

enum class EntityKind { Class, ObjectProperty, DataProperty, Individual };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view keyword);

inline constexpr std::string_view kThing = "owl:Thing";

bool is_identifier(std::string_view text);

class StructuredName {
 public:
  using Group = std::vector<StructuredName>;

  StructuredName() = default;
  explicit StructuredName(std::string base, std::vector<Group> groups = {});

  const std::string& base() const { return base_; }
  const std::vector<Group>& groups() const { return groups_; }

  bool is_plain() const { return groups_.empty(); }
  bool is_thing() const { return groups_.empty() && base_ == kThing; }

  // Literal rendering with brackets, e.g. "rel[A,B][C]".
  std::string str() const;

  // True if `other` occurs as a constituent at any depth (not the name itself).
  bool has_constituent(const StructuredName& other) const;

  friend bool operator==(const StructuredName&, const StructuredName&) = default;
  friend bool operator<(const StructuredName& a, const StructuredName& b);

 private:
  std::string base_;
  std::vector<Group> groups_;
};

// Renders the name and rewrites "[" and "," to "_", dropping "]".
std::string stratify_name(const StructuredName& name);

// The name itself, its base as a plain name, and every constituent closure.
void collect_closure(const StructuredName& name, std::vector<StructuredName>& out);

}  // namespace godp

#endif  // GODP_NAME_HPP
