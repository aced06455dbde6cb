#include "intcat/cli/document.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace intcat::cli {

std::string to_string(DeclKind k) {
  switch (k) {
    case DeclKind::base: return "base";
    case DeclKind::presheaf: return "presheaf";
    case DeclKind::map: return "map";
    case DeclKind::category: return "category";
    case DeclKind::functor: return "functor";
    case DeclKind::diagram: return "diagram";
    default: return "task";
  }
}

ParseError::ParseError(std::string kind, Location loc, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + kind + ": " + message),
      kind_(std::move(kind)),
      loc_(loc) {}

const Decl* SpecDocument::find(std::string_view name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

std::vector<const Decl*> SpecDocument::tasks() const {
  std::vector<const Decl*> out;
  for (const auto& d : decls)
    if (d.kind == DeclKind::task) out.push_back(&d);
  return out;
}

const std::vector<std::string>& shape_names() {
  static const std::vector<std::string> names{"empty", "one", "discrete-2", "chain-2", "parallel-pair"};
  return names;
}

namespace {

// ---- statements ----

struct Token {
  enum Kind { word, open, close, end, eof } kind;
  std::string text;
  Location loc;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](char ch) {
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < s.size()) {
    char ch = s[i];
    Location here{line, col};
    if (ch == '#') {
      while (i < s.size() && s[i] != '\n') advance(s[i++]);
    } else if (ch == '\n' || ch == ';') {
      out.push_back({Token::end, std::string(1, ch), here});
      advance(s[i++]);
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(s[i++]);
    } else if (ch == '{' || ch == '}') {
      out.push_back({ch == '{' ? Token::open : Token::close, std::string(1, ch), here});
      advance(s[i++]);
    } else {
      std::string w;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '{' && s[i] != '}' &&
             s[i] != ';' && s[i] != '#') {
        w += s[i];
        advance(s[i++]);
      }
      out.push_back({Token::word, std::move(w), here});
    }
  }
  out.push_back({Token::eof, "", Location{line, col}});
  return out;
}

class StmtParser {
 public:
  explicit StmtParser(std::vector<Token> t) : t_(std::move(t)) {}

  std::vector<Stmt> statements(bool nested) {
    std::vector<Stmt> out;
    while (true) {
      const auto& tok = t_[i_];
      if (tok.kind == Token::eof) {
        if (nested) throw ParseError("syntax", tok.loc, "unclosed '{'");
        return out;
      }
      if (tok.kind == Token::close) {
        if (!nested) throw ParseError("syntax", tok.loc, "unmatched '}'");
        ++i_;
        return out;
      }
      if (tok.kind == Token::end) {
        ++i_;
        continue;
      }
      if (tok.kind == Token::open) throw ParseError("syntax", tok.loc, "'{' without a statement");
      Stmt s;
      while (t_[i_].kind == Token::word) {
        s.words.push_back(t_[i_].text);
        s.at.push_back(t_[i_].loc);
        ++i_;
      }
      if (t_[i_].kind == Token::open) {
        ++i_;
        s.has_block = true;
        s.block = statements(true);
      }
      out.push_back(std::move(s));
    }
  }

 private:
  std::vector<Token> t_;
  std::size_t i_ = 0;
};

// ---- declaration checks ----

bool is_name(const std::string& w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  for (char ch : w)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-')) return false;
  return true;
}

bool is_int(const std::string& w) {
  return !w.empty() && w.size() < 6 && std::all_of(w.begin(), w.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

class Checker {
 public:
  explicit Checker(SpecDocument& doc) : doc_(doc) {}

  void declaration(Stmt s) {
    if (s.words.empty()) throw ParseError("syntax", s.where(), "empty statement");
    static const std::map<std::string, DeclKind> kinds{
        {"base", DeclKind::base},         {"presheaf", DeclKind::presheaf}, {"map", DeclKind::map},
        {"category", DeclKind::category}, {"functor", DeclKind::functor},   {"diagram", DeclKind::diagram},
        {"task", DeclKind::task}};
    auto it = kinds.find(s.words[0]);
    if (it == kinds.end()) throw ParseError("syntax", s.where(), "unknown declaration '" + s.words[0] + "'");
    if (s.words.size() < 2 || !is_name(s.words[1]))
      throw ParseError("syntax", s.where(1), "expected a declaration name");
    if (names_.count(s.words[1])) throw ParseError("syntax", s.where(1), "duplicate name '" + s.words[1] + "'");
    Decl d{it->second, s.words[1], {}, {}};
    refs_.clear();
    cur_ = &s;
    switch (d.kind) {
      case DeclKind::base: base(); break;
      case DeclKind::presheaf: presheaf(); break;
      case DeclKind::map: map(); break;
      case DeclKind::category: category(); break;
      case DeclKind::functor: functor(); break;
      case DeclKind::diagram: diagram(); break;
      case DeclKind::task: task(); break;
    }
    d.references = refs_;
    d.stmt = std::move(s);
    names_[d.name] = d.kind;
    doc_.decls.push_back(std::move(d));
  }

 private:
  const std::string& word(std::size_t i) const {
    if (i >= cur_->words.size()) throw ParseError("arity", cur_->where(i), "statement is too short");
    return cur_->words[i];
  }
  void literal(std::size_t i, const char* w) const {
    if (word(i) != w) throw ParseError("syntax", cur_->where(i), std::string("expected '") + w + "'");
  }
  void length(std::size_t n) const {
    if (cur_->words.size() != n)
      throw ParseError("arity", cur_->where(std::min(n, cur_->words.size())),
                       "expected " + std::to_string(n) + " words, found " + std::to_string(cur_->words.size()));
  }
  void at_least(std::size_t n) const {
    if (cur_->words.size() < n) throw ParseError("arity", cur_->where(cur_->words.size()), "statement is too short");
  }
  void integer(std::size_t i) const {
    if (!is_int(word(i))) throw ParseError("syntax", cur_->where(i), "expected a small non-negative integer");
  }
  void ref(std::size_t i, std::initializer_list<DeclKind> allowed) {
    const auto& w = word(i);
    auto it = names_.find(w);
    if (it == names_.end()) throw ParseError("unresolved-name", cur_->where(i), "'" + w + "' is not declared");
    bool ok = allowed.size() == 0;
    for (auto k : allowed) ok |= it->second == k;
    if (!ok) throw ParseError("arity", cur_->where(i), "'" + w + "' is a " + to_string(it->second) + " here");
    refs_.push_back(w);
  }
  void block(bool required) const {
    if (required && !cur_->has_block) throw ParseError("syntax", cur_->where(cur_->words.size()), "expected '{'");
    if (!required && cur_->has_block) throw ParseError("syntax", cur_->where(cur_->words.size()), "unexpected '{'");
  }
  // Runs fn on each nested statement with cur_ pointing at it.
  void each(const std::function<void()>& fn) {
    const Stmt* outer = cur_;
    for (const auto& s : outer->block) {
      cur_ = &s;
      fn();
    }
    cur_ = outer;
  }
  void arrow_pairs() {
    each([&] {
      length(3);
      literal(1, "->");
      block(false);
    });
  }

  void base() {
    literal(2, "=");
    const auto& k = word(3);
    if (k == "point") {
      length(4);
      block(false);
    } else if (k == "chain") {
      length(5);
      integer(4);
      block(false);
    } else if (k == "index") {
      length(4);
      block(true);
      each([&] {
        const auto& h = word(0);
        block(false);
        if (h == "objects") {
          at_least(2);
        } else if (h == "arrow") {
          length(6);
          literal(2, ":");
          literal(4, "->");
        } else if (h == "compose") {
          length(5);
          literal(3, "=");
        } else {
          throw ParseError("syntax", cur_->where(), "expected objects, arrow or compose");
        }
      });
    } else {
      throw ParseError("syntax", cur_->where(3), "expected point, chain or index");
    }
  }

  void presheaf() {
    literal(2, "on");
    ref(3, {DeclKind::base});
    if (cur_->words.size() == 4) {
      block(true);
      each([&] {
        const auto& h = word(0);
        if (h == "at") {
          at_least(3);
          literal(2, ":");
          block(false);
        } else if (h == "restrict") {
          length(2);
          block(true);
          arrow_pairs();
        } else {
          throw ParseError("syntax", cur_->where(), "expected 'at' or 'restrict'");
        }
      });
      return;
    }
    literal(4, "=");
    block(false);
    const auto& k = word(5);
    if (k == "constant") {
      at_least(6);
    } else if (k == "terminal" || k == "empty") {
      length(6);
    } else if (k == "representable") {
      length(7);
    } else {
      throw ParseError("syntax", cur_->where(5), "expected constant, terminal, empty or representable");
    }
  }

  void map() {
    length(6);
    literal(2, ":");
    ref(3, {DeclKind::presheaf});
    literal(4, "->");
    ref(5, {DeclKind::presheaf});
    block(true);
    each([&] {
      length(2);
      literal(0, "at");
      block(true);
      arrow_pairs();
    });
  }

  void category() {
    literal(2, "=");
    const auto& k = word(3);
    if (k == "divisors" || k == "powerset" || k == "chain") {
      length(5);
      integer(4);
      block(false);
    } else if (k == "discrete" || k == "indiscrete") {
      length(5);
      ref(4, {DeclKind::presheaf});
      block(false);
    } else if (k == "opposite") {
      length(5);
      ref(4, {DeclKind::category});
      block(false);
    } else if (k == "terminal") {
      length(5);
      ref(4, {DeclKind::base});
      block(false);
    } else if (k == "product") {
      length(6);
      ref(4, {DeclKind::category});
      ref(5, {DeclKind::category});
      block(false);
    } else if (k == "poset" || k == "lattice") {
      length(4);
      block(true);
      bool elements = false;
      each([&] {
        if (word(0) == "elements") {
          if (elements) throw ParseError("syntax", cur_->where(), "elements listed twice");
          elements = true;
        } else {
          length(3);
          literal(1, "<=");
        }
        block(false);
      });
      if (!elements) throw ParseError("syntax", cur_->where(3), "poset without an elements line");
    } else if (k == "internal") {
      length(4);
      block(true);
      std::set<std::string> seen;
      each([&] {
        const auto& h = word(0);
        if (!seen.insert(h).second) throw ParseError("syntax", cur_->where(), "'" + h + "' given twice");
        if (h == "objects" || h == "arrows") {
          length(2);
          ref(1, {DeclKind::presheaf});
          block(false);
        } else if (h == "source" || h == "target" || h == "identity") {
          length(2);
          ref(1, {DeclKind::map});
          block(false);
        } else if (h == "compose") {
          length(1);
          block(true);
          each([&] {
            length(2);
            literal(0, "at");
            block(true);
            each([&] {
              length(4);
              literal(2, "->");
              block(false);
            });
          });
        } else {
          throw ParseError("syntax", cur_->where(), "expected objects, arrows, source, target, identity or compose");
        }
      });
      if (seen.size() != 6) throw ParseError("arity", cur_->where(3), "internal category needs all six parts");
    } else {
      throw ParseError("syntax", cur_->where(3), "unknown category form '" + k + "'");
    }
  }

  void functor() {
    literal(2, ":");
    ref(3, {DeclKind::category});
    literal(4, "->");
    ref(5, {DeclKind::category});
    literal(6, "=");
    const auto& k = word(7);
    if (k == "identity") {
      length(8);
      block(false);
    } else if (k == "monotone") {
      length(8);
      block(true);
      arrow_pairs();
    } else if (k == "maps") {
      length(10);
      ref(8, {DeclKind::map});
      ref(9, {DeclKind::map});
      block(false);
    } else {
      throw ParseError("syntax", cur_->where(7), "expected identity, monotone or maps");
    }
  }

  void diagram() {
    literal(2, "in");
    ref(3, {DeclKind::category});
    literal(4, "=");
    block(false);
    const auto& k = word(5);
    if (k == "empty" || k == "identity") {
      length(6);
    } else if (k == "discrete" || k == "chain") {
      at_least(6);
    } else if (k == "parallel") {
      length(8);
    } else if (k == "span" || k == "cospan") {
      length(9);
    } else if (k == "functor") {
      length(7);
      ref(6, {DeclKind::functor});
    } else {
      throw ParseError("syntax", cur_->where(5), "unknown diagram form '" + k + "'");
    }
  }

  void task() {
    literal(2, "=");
    block(false);
    const auto& k = word(3);
    using K = DeclKind;
    if (k == "validate") {
      length(5);
      ref(4, {K::base, K::presheaf, K::map, K::category, K::functor, K::diagram});
    } else if (k == "exponential") {
      length(6);
      ref(4, {K::category});
      ref(5, {K::category});
    } else if (k == "limit" || k == "colimit") {
      length(5);
      ref(4, {K::diagram});
    } else if (k == "complete-check") {
      length(5);
      ref(4, {K::category});
    } else if (k == "limit-functor") {
      length(6);
      ref(4, {K::category});
      const auto& names = shape_names();
      if (std::find(names.begin(), names.end(), word(5)) == names.end())
        throw ParseError("syntax", cur_->where(5), "unknown shape '" + word(5) + "'");
    } else if (k == "aft" || k == "continuity-check") {
      length(5);
      ref(4, {K::functor});
    } else if (k == "duality-check") {
      if (cur_->words.size() == 5) {
        ref(4, {K::diagram});
      } else {
        length(7);
        ref(4, {K::category});
        literal(5, "samples");
        integer(6);
      }
    } else {
      throw ParseError("syntax", cur_->where(3), "unknown task '" + k + "'");
    }
  }

  SpecDocument& doc_;
  std::map<std::string, DeclKind> names_;
  std::vector<std::string> refs_;
  const Stmt* cur_ = nullptr;
};

void write(std::string& out, const Stmt& s, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    if (i) out += ' ';
    out += s.words[i];
  }
  if (s.has_block) {
    out += " {\n";
    for (const auto& c : s.block) write(out, c, depth + 1);
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += "}";
  }
  out += '\n';
}

}  // namespace

SpecDocument parse(std::string_view text) {
  auto stmts = StmtParser(tokenize(text)).statements(false);
  SpecDocument doc;
  std::size_t start = 0;
  if (!stmts.empty() && !stmts[0].words.empty() && stmts[0].words[0] == "intcat") {
    const auto& h = stmts[0];
    if (h.words.size() != 2 || !is_int(h.words[1]) || h.has_block)
      throw ParseError("syntax", h.where(), "header is 'intcat <version>'");
    doc.version = std::stoi(h.words[1]);
    if (doc.version != kFormatVersion)
      throw ParseError("syntax", h.where(1), "unsupported format version " + h.words[1]);
    start = 1;
  }
  Checker check(doc);
  for (std::size_t i = start; i < stmts.size(); ++i) check.declaration(std::move(stmts[i]));
  return doc;
}

std::string serialize(const SpecDocument& doc) {
  std::string out = "intcat " + std::to_string(doc.version) + "\n";
  for (const auto& d : doc.decls) {
    out += '\n';
    write(out, d.stmt, 0);
  }
  return out;
}

}  // namespace intcat::cli
