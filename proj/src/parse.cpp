#include "kat/parse.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace kat {

namespace {

enum class Tok {
  Ident,
  Zero,
  One,
  Plus,
  Star,
  Semi,
  SemiSemi,
  LBrack,
  RBrack,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Bang,
  Amp,
  Pipe,
  EqEq,
  Le,
  Tilde,
  Comma,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

const std::unordered_set<std::string_view> kKeywords = {
    "tests", "actions", "assume", "show", "skip", "if", "then",
    "else",  "fi",      "while",  "do",   "od",   "T",  "F"};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto step = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') step(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      step(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back(Token{kind, std::string(text.substr(i, len)), tl, tc});
      step(len);
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      emit(Tok::Ident, j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string_view num = text.substr(i, j - i);
      if (num == "0")
        emit(Tok::Zero, 1);
      else if (num == "1")
        emit(Tok::One, 1);
      else
        throw parse_error("unexpected number '" + std::string(num) +
                              "' (only the constants 0 and 1 exist)",
                          tl, tc);
      continue;
    }
    switch (c) {
      case '+':
        emit(Tok::Plus, 1);
        break;
      case '*':
        emit(Tok::Star, 1);
        break;
      case ';':
        if (i + 1 < text.size() && text[i + 1] == ';')
          emit(Tok::SemiSemi, 2);
        else
          emit(Tok::Semi, 1);
        break;
      case '[':
        emit(Tok::LBrack, 1);
        break;
      case ']':
        emit(Tok::RBrack, 1);
        break;
      case '(':
        emit(Tok::LParen, 1);
        break;
      case ')':
        emit(Tok::RParen, 1);
        break;
      case '{':
        emit(Tok::LBrace, 1);
        break;
      case '}':
        emit(Tok::RBrace, 1);
        break;
      case '!':
        emit(Tok::Bang, 1);
        break;
      case '&':
        emit(Tok::Amp, 1);
        break;
      case '|':
        emit(Tok::Pipe, 1);
        break;
      case ',':
        emit(Tok::Comma, 1);
        break;
      case '~':
        emit(Tok::Tilde, 1);
        break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          emit(Tok::EqEq, 2);
        } else {
          throw parse_error("single '=' (use '==' for equations)", tl, tc);
        }
        break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          emit(Tok::Le, 2);
        } else {
          throw parse_error("single '<' (use '<=' for inequations)", tl, tc);
        }
        break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", tl,
                          tc);
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig)
      : toks_(lex(text)), sig_(sig) {}

  // --- token helpers ---------------------------------------------------
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  Token expect(Tok kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what);
    return next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "'");
    next();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found =
        t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw parse_error(msg + ", found " + found, t.line, t.col);
  }

  // --- grammar ----------------------------------------------------------
  Signature parse_signature(std::size_t atom_limit) {
    const Token& start = peek();
    expect_word("tests");
    std::vector<std::string> tests = ident_list();
    expect_word("actions");
    std::vector<std::string> actions = ident_list();
    try {
      return Signature(std::move(tests), std::move(actions), atom_limit);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), start.line, start.col);
    }
  }

  std::vector<std::string> ident_list() {
    std::vector<std::string> names;
    while (at(Tok::Ident)) {
      if (kKeywords.count(peek().text))
        fail("reserved word '" + peek().text + "' cannot be declared");
      names.push_back(next().text);
    }
    if (names.empty()) fail("expected at least one identifier");
    expect(Tok::Semi, "';'");
    return names;
  }

  std::size_t action_index(const Token& t) {
    if (auto i = sig_->find_letter(t.text)) return *i;
    if (sig_->find_test(t.text))
      throw parse_error("test '" + t.text +
                            "' used where an action is expected (write [" +
                            t.text + "])",
                        t.line, t.col);
    throw parse_error("undeclared identifier '" + t.text + "'", t.line, t.col);
  }

  std::size_t test_index(const Token& t) {
    if (auto i = sig_->find_test(t.text)) return *i;
    if (sig_->find_letter(t.text))
      throw parse_error(
          "action '" + t.text + "' used where a test is expected", t.line,
          t.col);
    throw parse_error("undeclared identifier '" + t.text + "'", t.line, t.col);
  }

  BoolPtr parse_bool() {
    BoolPtr acc = parse_bool_term();
    while (at(Tok::Pipe)) {
      next();
      acc = mk_or(std::move(acc), parse_bool_term());
    }
    return acc;
  }

  BoolPtr parse_bool_term() {
    BoolPtr acc = parse_bool_factor();
    while (at(Tok::Amp)) {
      next();
      acc = mk_and(std::move(acc), parse_bool_factor());
    }
    return acc;
  }

  BoolPtr parse_bool_factor() {
    if (at(Tok::Bang)) {
      next();
      return mk_not(parse_bool_factor());
    }
    if (at(Tok::LParen)) {
      next();
      BoolPtr b = parse_bool();
      expect(Tok::RParen, "')'");
      return b;
    }
    if (at(Tok::Ident)) {
      Token t = next();
      if (t.text == "T") return mk_top();
      if (t.text == "F") return mk_bot();
      return mk_prim(test_index(t));
    }
    fail("expected a boolean expression");
  }

  ExprPtr parse_expr() {
    ExprPtr acc = parse_term();
    while (at(Tok::Plus)) {
      next();
      acc = mk_plus(std::move(acc), parse_term());
    }
    return acc;
  }

  ExprPtr parse_term() {
    ExprPtr acc = parse_factor();
    while (at(Tok::Semi)) {
      next();
      acc = mk_dot(std::move(acc), parse_factor());
    }
    return acc;
  }

  ExprPtr parse_factor() {
    ExprPtr e = parse_base();
    while (at(Tok::Star)) {
      next();
      e = mk_star(std::move(e));
    }
    return e;
  }

  ExprPtr parse_base() {
    if (at(Tok::Zero)) {
      next();
      return mk_zero();
    }
    if (at(Tok::One)) {
      next();
      return mk_one();
    }
    if (at(Tok::LBrack)) {
      next();
      BoolPtr b = parse_bool();
      expect(Tok::RBrack, "']'");
      return mk_test(std::move(b));
    }
    if (at(Tok::LParen)) {
      next();
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::Ident)) {
      Token t = next();
      return mk_letter(action_index(t));
    }
    if (at(Tok::SemiSemi))
      fail("program sequencing ';;' is not valid in expressions");
    fail("expected an expression");
  }

  Equation parse_equation() {
    ExprPtr lhs = parse_expr();
    EqRel rel;
    if (at(Tok::EqEq)) {
      rel = EqRel::Eq;
    } else if (at(Tok::Le)) {
      rel = EqRel::Le;
    } else {
      fail("expected '==' or '<='");
    }
    next();
    ExprPtr rhs = parse_expr();
    return {std::move(lhs), std::move(rhs), rel};
  }

  ProgPtr parse_prog() {
    std::vector<ProgPtr> parts;
    parts.push_back(parse_prog_atom());
    while (at(Tok::SemiSemi)) {
      next();
      parts.push_back(parse_prog_atom());
    }
    ProgPtr acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;)
      acc = p_seq(parts[i], std::move(acc));
    return acc;
  }

  ProgPtr parse_prog_atom() {
    if (at_word("skip")) {
      next();
      return p_skip();
    }
    if (at_word("if")) {
      next();
      BoolPtr cond = parse_bool();
      expect_word("then");
      ProgPtr t = parse_prog();
      expect_word("else");
      ProgPtr e = parse_prog();
      expect_word("fi");
      return p_ite(std::move(cond), std::move(t), std::move(e));
    }
    if (at_word("while")) {
      next();
      BoolPtr cond = parse_bool();
      expect_word("do");
      ProgPtr body = parse_prog();
      expect_word("od");
      return p_whl(std::move(cond), std::move(body));
    }
    if (at(Tok::Ident)) {
      Token t = next();
      return p_act(action_index(t));
    }
    fail("expected a program");
  }

  HoareTriple parse_triple() {
    expect(Tok::LBrace, "'{'");
    BoolPtr pre = parse_bool();
    expect(Tok::RBrace, "'}'");
    ProgPtr prog = parse_prog();
    expect(Tok::LBrace, "'{'");
    BoolPtr post = parse_bool();
    expect(Tok::RBrace, "'}'");
    return {std::move(pre), std::move(prog), std::move(post)};
  }

  // Decide the show form by scanning ahead for the separator token.
  std::variant<Equation, ProgPair, HoareTriple> parse_show_body() {
    if (at(Tok::LBrace)) return parse_triple();
    for (std::size_t ahead = 0;; ++ahead) {
      Tok k = peek(ahead).kind;
      if (k == Tok::Tilde) {
        ProgPtr l = parse_prog();
        expect(Tok::Tilde, "'~'");
        ProgPtr r = parse_prog();
        return ProgPair{std::move(l), std::move(r)};
      }
      if (k == Tok::EqEq || k == Tok::Le || k == Tok::End) break;
    }
    return parse_equation();
  }

  GuardedString parse_guarded_string() {
    std::vector<GsStep> body;
    Atom a = parse_atom();
    while (at(Tok::Ident)) {
      Token t = next();
      std::size_t letter = action_index(t);
      body.push_back(GsStep{a, letter});
      a = parse_atom();
    }
    return GuardedString(std::move(body), a);
  }

  Atom parse_atom() {
    const Token& open = peek();
    expect(Tok::LBrace, "'{'");
    std::vector<bool> assigned(sig_->test_count(), false);
    Atom a{0};
    bool first = true;
    while (!at(Tok::RBrace)) {
      if (!first) expect(Tok::Comma, "','");
      first = false;
      bool value = true;
      if (at(Tok::Bang)) {
        next();
        value = false;
      }
      Token t = expect(Tok::Ident, "a test name");
      std::size_t i = test_index(t);
      if (assigned[i])
        throw parse_error("test '" + t.text + "' assigned twice in atom",
                          t.line, t.col);
      assigned[i] = true;
      if (value) a.value |= (1u << i);
    }
    next();
    for (std::size_t i = 0; i < assigned.size(); ++i)
      if (!assigned[i])
        throw parse_error(
            "atom does not assign test '" + sig_->test_name(i) + "'",
            open.line, open.col);
    return a;
  }

  void expect_end() {
    if (!at(Tok::End)) fail("expected end of input");
  }

  void set_signature(const Signature* sig) { sig_ = sig; }

  bool at_assume() const { return at_word("assume"); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature* sig_;
};

}  // namespace

GoalFile parse_goal(std::string_view text, std::size_t atom_limit) {
  Parser p(text, nullptr);
  Signature sig = p.parse_signature(atom_limit);
  p.set_signature(&sig);
  std::vector<Equation> assumes;
  while (p.at_assume()) {
    p.expect_word("assume");
    assumes.push_back(p.parse_equation());
  }
  p.expect_word("show");
  auto show = p.parse_show_body();
  p.expect_end();
  return GoalFile{std::move(sig), std::move(assumes), std::move(show)};
}

ExprPtr parse_expr(const Signature& sig, std::string_view text) {
  Parser p(text, &sig);
  ExprPtr e = p.parse_expr();
  p.expect_end();
  return e;
}

BoolPtr parse_bool(const Signature& sig, std::string_view text) {
  Parser p(text, &sig);
  BoolPtr b = p.parse_bool();
  p.expect_end();
  return b;
}

ProgPtr parse_prog(const Signature& sig, std::string_view text) {
  Parser p(text, &sig);
  ProgPtr pr = p.parse_prog();
  p.expect_end();
  return pr;
}

Equation parse_equation(const Signature& sig, std::string_view text) {
  Parser p(text, &sig);
  Equation e = p.parse_equation();
  p.expect_end();
  return e;
}

GuardedString parse_guarded_string(const Signature& sig,
                                   std::string_view text) {
  Parser p(text, &sig);
  GuardedString g = p.parse_guarded_string();
  p.expect_end();
  return g;
}

}  // namespace kat
