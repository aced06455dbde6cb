#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace intcat::cli {

struct Location {
  int line = 0;
  int column = 0;
};

/// One statement: a word list with an optional nested block. Locations are
/// kept for diagnostics and ignored by equality.
struct Stmt {
  std::vector<std::string> words;
  std::vector<Location> at;
  bool has_block = false;
  std::vector<Stmt> block;

  bool operator==(const Stmt& o) const {
    return words == o.words && has_block == o.has_block && block == o.block;
  }
  Location where(std::size_t i = 0) const { return i < at.size() ? at[i] : (at.empty() ? Location{} : at.back()); }
};

enum class DeclKind { base, presheaf, map, category, functor, diagram, task };
std::string to_string(DeclKind k);

struct Decl {
  DeclKind kind;
  std::string name;
  Stmt stmt;
  /// Names of the declarations this one refers to, in order of appearance.
  std::vector<std::string> references;

  bool operator==(const Decl& o) const { return kind == o.kind && name == o.name && stmt == o.stmt; }
};

struct SpecDocument {
  int version = 1;
  std::vector<Decl> decls;

  const Decl* find(std::string_view name) const;
  std::vector<const Decl*> tasks() const;
  bool operator==(const SpecDocument& o) const { return version == o.version && decls == o.decls; }
};

class ParseError : public std::runtime_error {
 public:
  /// kind is one of "syntax", "unresolved-name", "arity".
  ParseError(std::string kind, Location loc, const std::string& message);
  const std::string& kind() const { return kind_; }
  Location location() const { return loc_; }

 private:
  std::string kind_;
  Location loc_;
};

inline constexpr int kFormatVersion = 1;

/// Parses and checks a document: statement syntax, per-declaration arity,
/// and that every reference names an earlier declaration of the right kind.
SpecDocument parse(std::string_view text);

/// Canonical text; parse(serialize(d)) == d.
std::string serialize(const SpecDocument& doc);

/// The shape names accepted by limit-functor tasks.
const std::vector<std::string>& shape_names();

}  // namespace intcat::cli
