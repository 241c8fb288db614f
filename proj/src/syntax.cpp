#include "hlab/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hlab/errors.hpp"

namespace hlab {

namespace {

enum class Tok {
  kName,     // lowercase/quoted/numeral functor or predicate
  kVar,
  kLParen,
  kRParen,
  kComma,
  kBar,
  kLBracket,
  kRBracket,
  kSlash,
  kArrow,    // :-
  kDot,      // clause terminator
  kDirective,  // #name
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::kEnd, "", line, col};
    char c = text_[pos_];
    if (c == '(') return take(Tok::kLParen);
    if (c == ')') return take(Tok::kRParen);
    if (c == ',') return take(Tok::kComma);
    if (c == '|') return take(Tok::kBar);
    if (c == '[') return take(Tok::kLBracket);
    if (c == ']') return take(Tok::kRBracket);
    if (c == '/') return take(Tok::kSlash);
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        advance();
        advance();
        return {Tok::kArrow, ":-", line, col};
      }
      throw ParseError(line, col, "expected ':-'");
    }
    if (c == '.') {
      std::size_t after = pos_ + 1;
      if (after >= text_.size() || std::isspace((unsigned char)text_[after]) ||
          text_[after] == '%') {
        advance();
        return {Tok::kDot, ".", line, col};
      }
      throw ParseError(line, col, "unexpected '.'");
    }
    if (c == '#') {
      advance();
      std::string name = ident();
      if (name.empty()) throw ParseError(line, col, "expected directive name");
      return {Tok::kDirective, name, line, col};
    }
    if (c == '\'') {
      advance();
      std::string name;
      for (;;) {
        if (pos_ >= text_.size())
          throw ParseError(line, col, "unterminated quoted name");
        char d = text_[pos_];
        advance();
        if (d == '\'') {
          if (pos_ < text_.size() && text_[pos_] == '\'') {
            name += '\'';
            advance();
            continue;
          }
          break;
        }
        name += d;
      }
      if (!name.empty() && name[0] == '$')
        throw ParseError(line, col, "names starting with '$' are reserved");
      return {Tok::kName, name, line, col};
    }
    if (std::isupper((unsigned char)c) || c == '_') {
      return {Tok::kVar, ident(), line, col};
    }
    if (std::islower((unsigned char)c) || std::isdigit((unsigned char)c)) {
      return {Tok::kName, ident(), line, col};
    }
    throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }

 private:
  Token take(Tok kind) {
    Token t{kind, std::string(1, text_[pos_]), line_, col_};
    advance();
    return t;
  }

  std::string ident() {
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum((unsigned char)c) || c == '_') {
        out += c;
        advance();
      } else {
        break;
      }
    }
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace((unsigned char)c)) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { bump(); }

  std::pair<Program, Signature> program() {
    Program p;
    bool have_alphabet = false;
    std::vector<Symbol> alphabet;
    while (cur_.kind != Tok::kEnd) {
      if (cur_.kind == Tok::kDirective) {
        if (cur_.text != "alphabet")
          fail("unknown directive '#" + cur_.text + "'");
        bump();
        auto syms = symbol_pairs();
        expect(Tok::kDot, "'.'");
        alphabet.insert(alphabet.end(), syms.begin(), syms.end());
        have_alphabet = true;
        continue;
      }
      p.clauses.push_back(clause());
    }
    Signature sig;
    sig.predicates = occurring_predicates(p);
    SymbolSet occ = occurring_symbols(p);
    if (have_alphabet) {
      sig.functions.insert(alphabet.begin(), alphabet.end());
      for (const auto& s : occ)
        if (!sig.functions.count(s))
          throw ParseError(1, 1, "alphabet directive is missing occurring symbol " +
                                     s.first + "/" + std::to_string(s.second));
    } else {
      sig.functions = occ;
    }
    if (!sig.has_constant())
      throw ParseError(1, 1,
                       "empty Herbrand universe: the alphabet has no constant");
    return {std::move(p), std::move(sig)};
  }

  Query query() {
    Query q;
    if (cur_.kind == Tok::kEnd) fail("empty query");
    q.atoms.push_back(atom());
    while (cur_.kind == Tok::kComma) {
      bump();
      q.atoms.push_back(atom());
    }
    if (cur_.kind == Tok::kDot) bump();
    if (cur_.kind != Tok::kEnd) fail("trailing input after query");
    return q;
  }

  TermPtr single_term() {
    if (cur_.kind == Tok::kEnd) fail("empty term");
    TermPtr t = term();
    if (cur_.kind == Tok::kDot) bump();
    if (cur_.kind != Tok::kEnd) fail("trailing input after term");
    return t;
  }

  std::vector<Symbol> symbol_list() {
    auto syms = symbol_pairs();
    if (cur_.kind == Tok::kDot) bump();
    if (cur_.kind != Tok::kEnd) fail("trailing input after symbol list");
    return syms;
  }

 private:
  Clause clause() {
    Clause c;
    c.head = atom();
    if (cur_.kind == Tok::kArrow) {
      bump();
      c.body.push_back(atom());
      while (cur_.kind == Tok::kComma) {
        bump();
        c.body.push_back(atom());
      }
    }
    expect(Tok::kDot, "'.'");
    return c;
  }

  TermPtr atom() {
    if (cur_.kind != Tok::kName) fail("expected an atom");
    std::string name = cur_.text;
    bump();
    std::vector<TermPtr> args;
    if (cur_.kind == Tok::kLParen) {
      bump();
      args.push_back(term());
      while (cur_.kind == Tok::kComma) {
        bump();
        args.push_back(term());
      }
      expect(Tok::kRParen, "')'");
    }
    return Term::make(name, std::move(args));
  }

  TermPtr term() {
    if (cur_.kind == Tok::kVar) {
      TermPtr t = Term::var(cur_.text);
      bump();
      return t;
    }
    if (cur_.kind == Tok::kLBracket) return list();
    if (cur_.kind == Tok::kName) return atom();
    fail("expected a term");
    return nullptr;
  }

  TermPtr list() {
    expect(Tok::kLBracket, "'['");
    if (cur_.kind == Tok::kRBracket) {
      bump();
      return Term::constant("[]");
    }
    std::vector<TermPtr> items;
    items.push_back(term());
    while (cur_.kind == Tok::kComma) {
      bump();
      items.push_back(term());
    }
    TermPtr tail = Term::constant("[]");
    if (cur_.kind == Tok::kBar) {
      bump();
      tail = term();
    }
    expect(Tok::kRBracket, "']'");
    for (auto it = items.rbegin(); it != items.rend(); ++it)
      tail = Term::make(".", {*it, tail});
    return tail;
  }

  std::vector<Symbol> symbol_pairs() {
    std::vector<Symbol> out;
    for (;;) {
      if (cur_.kind != Tok::kName) fail("expected a symbol name");
      std::string name = cur_.text;
      bump();
      expect(Tok::kSlash, "'/'");
      if (cur_.kind != Tok::kName) fail("expected an arity");
      int arity = 0;
      for (char c : cur_.text) {
        if (!std::isdigit((unsigned char)c)) fail("arity must be a number");
        arity = arity * 10 + (c - '0');
      }
      bump();
      out.emplace_back(name, arity);
      if (cur_.kind != Tok::kComma) break;
      bump();
    }
    return out;
  }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind) fail("expected " + what);
    bump();
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(cur_.line, cur_.col, msg);
  }

  void bump() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_{Tok::kEnd, "", 1, 1};
};

void collect_atom_symbols(const TermPtr& atom, SymbolSet& out) {
  for (const auto& a : atom->args) collect_symbols(a, out);
}

bool plain_name(const std::string& s) {
  if (s.empty()) return false;
  if (std::islower((unsigned char)s[0])) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isalnum(c) || c == '_';
    });
  }
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

std::string quote_name(const std::string& s) {
  if (plain_name(s)) return s;
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "''";
    else out += c;
  }
  out += "'";
  return out;
}

}  // namespace

bool Signature::has_constant() const {
  for (const auto& [name, arity] : functions)
    if (arity == 0) return true;
  return false;
}

bool Signature::finite_universe() const {
  for (const auto& [name, arity] : functions)
    if (arity > 0) return false;
  return true;
}

std::pair<Program, Signature> parse_program(const std::string& text) {
  return Parser(text).program();
}

Query parse_query(const std::string& text) { return Parser(text).query(); }

TermPtr parse_term(const std::string& text) { return Parser(text).single_term(); }

std::vector<Symbol> parse_symbol_list(const std::string& text) {
  return Parser(text).symbol_list();
}

SymbolSet occurring_symbols(const TermPtr& atom) {
  SymbolSet out;
  collect_atom_symbols(atom, out);
  return out;
}

SymbolSet occurring_symbols(const Program& p) {
  SymbolSet out;
  for (const auto& c : p.clauses) {
    collect_atom_symbols(c.head, out);
    for (const auto& b : c.body) collect_atom_symbols(b, out);
  }
  return out;
}

SymbolSet occurring_symbols(const Query& q) {
  SymbolSet out;
  for (const auto& a : q.atoms) collect_atom_symbols(a, out);
  return out;
}

SymbolSet occurring_predicates(const Program& p) {
  SymbolSet out;
  for (const auto& c : p.clauses) {
    out.emplace(c.head->symbol, c.head->arity());
    for (const auto& b : c.body) out.emplace(b->symbol, b->arity());
  }
  return out;
}

SymbolSet occurring_predicates(const Query& q) {
  SymbolSet out;
  for (const auto& a : q.atoms) out.emplace(a->symbol, a->arity());
  return out;
}

Signature extend_signature(const Signature& sig, const std::vector<Symbol>& fresh) {
  Signature out = sig;
  for (const auto& s : fresh) {
    for (const auto& ex : out.functions)
      if (ex.first == s.first && ex.second != s.second)
        throw PremiseError("extend_signature: symbol " + s.first +
                           " already present with arity " +
                           std::to_string(ex.second));
    if (!out.functions.insert(s).second)
      throw PremiseError("extend_signature: symbol " + s.first + "/" +
                         std::to_string(s.second) + " already present");
  }
  return out;
}

Symbol fresh_constant(const Signature& sig, const std::set<std::string>& taken,
                      const std::string& base) {
  for (int i = 1;; ++i) {
    std::string name = base + std::to_string(i);
    if (taken.count(name)) continue;
    bool clash = false;
    for (const auto& [n, a] : sig.functions) clash = clash || n == name;
    for (const auto& [n, a] : sig.predicates) clash = clash || n == name;
    if (!clash) return {name, 0};
  }
}

std::string render_term(const TermPtr& t) {
  if (t->is_variable) return t->symbol;
  if (t->symbol == "[]" && t->args.empty()) return "[]";
  if (t->symbol == "." && t->args.size() == 2) {
    std::string out = "[" + render_term(t->args[0]);
    TermPtr tail = t->args[1];
    while (!tail->is_variable && tail->symbol == "." && tail->args.size() == 2) {
      out += "," + render_term(tail->args[0]);
      tail = tail->args[1];
    }
    if (tail->is_variable || tail->symbol != "[]" || !tail->args.empty())
      out += "|" + render_term(tail);
    return out + "]";
  }
  std::string out = quote_name(t->symbol);
  if (!t->args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < t->args.size(); ++i) {
      if (i) out += ",";
      out += render_term(t->args[i]);
    }
    out += ")";
  }
  return out;
}

std::string render_atoms(const std::vector<TermPtr>& atoms) {
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += render_term(atoms[i]);
  }
  return out;
}

std::string render_query(const Query& q) { return render_atoms(q.atoms); }

std::string render_clause(const Clause& c) {
  std::string out = render_term(c.head);
  if (!c.body.empty()) out += " :- " + render_atoms(c.body);
  return out + ".";
}

std::string render_program(const Program& p) {
  std::string out;
  for (const auto& c : p.clauses) out += render_clause(c) + "\n";
  return out;
}

std::string render_subst(const Subst& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += v + "/" + render_term(t);
  }
  return out + "}";
}

std::string render_symbols(const SymbolSet& syms) {
  std::string out;
  bool first = true;
  for (const auto& [n, a] : syms) {
    if (!first) out += ", ";
    first = false;
    out += quote_name(n) + "/" + std::to_string(a);
  }
  return out;
}

std::vector<TermPtr> ground_terms_upto_depth(const SymbolSet& functions,
                                             int depth) {
  std::vector<TermPtr> cur;
  for (const auto& [n, a] : functions)
    if (a == 0) cur.push_back(Term::constant(n));
  for (int d = 1; d <= depth; ++d) {
    std::vector<TermPtr> next = cur;  // depth < d terms carry over
    for (const auto& [n, a] : functions) {
      if (a == 0) continue;
      // all argument tuples from the previous level
      std::vector<std::size_t> idx(a, 0);
      if (cur.empty()) continue;
      for (;;) {
        std::vector<TermPtr> args;
        args.reserve(a);
        for (int i = 0; i < a; ++i) args.push_back(cur[idx[i]]);
        next.push_back(Term::make(n, std::move(args)));
        int i = a - 1;
        while (i >= 0 && ++idx[i] == cur.size()) idx[i--] = 0;
        if (i < 0) break;
      }
    }
    // dedup: terms of depth < d appear in both cur and the carry-over
    std::sort(next.begin(), next.end(),
              [](const TermPtr& x, const TermPtr& y) { return term_compare(x, y) < 0; });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const TermPtr& x, const TermPtr& y) {
                             return term_eq(x, y);
                           }),
               next.end());
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(),
            [](const TermPtr& x, const TermPtr& y) { return term_compare(x, y) < 0; });
  return cur;
}

GroundTermEnumerator::GroundTermEnumerator(SymbolSet functions)
    : functions_(std::move(functions)) {
  bool has_const = false, has_fun = false;
  for (const auto& [n, a] : functions_) (a == 0 ? has_const : has_fun) = true;
  infinite_ = has_const && has_fun;
  by_size_.resize(2);
  for (const auto& [n, a] : functions_)
    if (a == 0) by_size_[1].push_back(Term::constant(n));
  std::sort(by_size_[1].begin(), by_size_[1].end(),
            [](const TermPtr& x, const TermPtr& y) { return term_compare(x, y) < 0; });
}

const std::vector<TermPtr>& GroundTermEnumerator::bucket(std::size_t size) {
  while (by_size_.size() <= size) {
    std::size_t s = by_size_.size();
    std::vector<TermPtr> out;
    for (const auto& [n, a] : functions_) {
      if (a == 0 || (std::size_t)a > s - 1) continue;
      // argument sizes: compositions of s-1 into a positive parts,
      // written as 1+extra[i] with the extras summing to rest
      std::size_t rest = s - 1 - a;
      std::vector<std::size_t> extra(a, 0);
      for (;;) {
        std::size_t sum = 0;
        for (auto e : extra) sum += e;
        if (sum == rest) {
          // build cartesian product of buckets of sizes 1+extra[i]
          std::vector<const std::vector<TermPtr>*> pools;
          bool ok = true;
          for (int i = 0; i < a && ok; ++i) {
            const auto& b = bucket(1 + extra[i]);
            if (b.empty()) ok = false;
            pools.push_back(&b);
          }
          if (ok) {
            std::vector<std::size_t> idx(a, 0);
            for (;;) {
              std::vector<TermPtr> args;
              args.reserve(a);
              for (int i = 0; i < a; ++i) args.push_back((*pools[i])[idx[i]]);
              out.push_back(Term::make(n, std::move(args)));
              int i = a - 1;
              while (i >= 0 && ++idx[i] == pools[i]->size()) idx[i--] = 0;
              if (i < 0) break;
            }
          }
        }
        // next extra vector with entries in [0, rest]
        int i = a - 1;
        while (i >= 0 && ++extra[i] > rest) extra[i--] = 0;
        if (i < 0) break;
      }
    }
    std::sort(out.begin(), out.end(), [](const TermPtr& x, const TermPtr& y) {
      return term_compare(x, y) < 0;
    });
    by_size_.push_back(std::move(out));
  }
  return by_size_[size];
}

TermPtr GroundTermEnumerator::next() {
  int empty_streak = 0;
  for (;;) {
    const auto& b = bucket(size_);
    if (index_ < b.size()) return b[index_++];
    if (!infinite_ && size_ >= 1) return nullptr;
    ++size_;
    index_ = 0;
    if (b.empty()) {
      if (++empty_streak > 512)
        throw std::logic_error("ground term enumeration stalled");
    } else {
      empty_streak = 0;
    }
  }
}

}  // namespace hlab
