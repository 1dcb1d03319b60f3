#include "epikit/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "epikit/errors.hpp"

namespace epikit {

namespace {

enum class Tok {
  lparen, rparen, lbracket, rbracket, langle, rangle,
  comma, colon, bang, amp, pipe, arrow, darrow,
  ident, knows, khat, end
};

struct Token {
  Tok kind;
  std::string text;  // ident name; for knows/khat the agent name
  std::size_t pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::langle: return "'<'";
    case Tok::rangle: return "'>'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::bang: return "'!'";
    case Tok::amp: return "'&'";
    case Tok::pipe: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::darrow: return "'<->'";
    case Tok::ident: return "identifier";
    case Tok::knows: return "knowledge operator";
    case Tok::khat: return "possibility operator";
    case Tok::end: return "end of input";
  }
  return "?";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    switch (c) {
      case '(': out.push_back({Tok::lparen, "(", pos}); ++i; continue;
      case ')': out.push_back({Tok::rparen, ")", pos}); ++i; continue;
      case '[': out.push_back({Tok::lbracket, "[", pos}); ++i; continue;
      case ']': out.push_back({Tok::rbracket, "]", pos}); ++i; continue;
      case '>': out.push_back({Tok::rangle, ">", pos}); ++i; continue;
      case ',': out.push_back({Tok::comma, ",", pos}); ++i; continue;
      case ':': out.push_back({Tok::colon, ":", pos}); ++i; continue;
      case '!': out.push_back({Tok::bang, "!", pos}); ++i; continue;
      case '&': out.push_back({Tok::amp, "&", pos}); ++i; continue;
      case '|': out.push_back({Tok::pipe, "|", pos}); ++i; continue;
      case '<':
        if (text.substr(i, 3) == "<->") {
          out.push_back({Tok::darrow, "<->", pos});
          i += 3;
        } else {
          out.push_back({Tok::langle, "<", pos});
          ++i;
        }
        continue;
      case '-':
        if (text.substr(i, 2) == "->") {
          out.push_back({Tok::arrow, "->", pos});
          i += 2;
          continue;
        }
        throw SyntaxError(pos, "'->'", "'-'");
      default:
        break;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      i = j;
      if (word.starts_with("Khat_") && word.size() > 5) {
        out.push_back({Tok::khat, word.substr(5), pos});
      } else if (word.starts_with("K_") && word.size() > 2) {
        out.push_back({Tok::knows, word.substr(2), pos});
      } else {
        out.push_back({Tok::ident, word, pos});
      }
      continue;
    }
    throw SyntaxError(pos, "a formula token", "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::end, "", text.size()});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, const Signature& sig)
      : tokens_(std::move(tokens)), sig_(sig) {}

  FormulaRef parse() {
    FormulaRef f = parse_iff();
    expect(Tok::end);
    return f;
  }

private:
  std::vector<Token> tokens_;
  const Signature& sig_;
  std::size_t at_ = 0;

  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  Token expect(Tok kind) {
    if (peek().kind != kind)
      throw SyntaxError(peek().pos, tok_name(kind), tok_name(peek().kind));
    return take();
  }

  std::string expect_ident(const char* what) {
    if (peek().kind != Tok::ident)
      throw SyntaxError(peek().pos, what, tok_name(peek().kind));
    return take().text;
  }

  std::string resolve(std::string name, const char* kind) {
    bool ok = false;
    std::string k = kind;
    if (k == "agent") ok = sig_.has_agent(name);
    else if (k == "prop") ok = sig_.has_prop(name);
    else if (k == "action") ok = sig_.has_action(name);
    if (!ok) throw UnknownIdentifier(name, kind);
    return name;
  }

  FormulaRef parse_iff() {
    FormulaRef f = parse_imp();
    while (peek().kind == Tok::darrow) {
      take();
      f = Formula::iff(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaRef parse_imp() {
    std::vector<FormulaRef> parts;
    parts.push_back(parse_or());
    while (peek().kind == Tok::arrow) {
      take();
      parts.push_back(parse_or());
    }
    FormulaRef f = parts.back();
    for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
      f = Formula::implies(*it, std::move(f));
    return f;
  }

  FormulaRef parse_or() {
    FormulaRef f = parse_and();
    while (peek().kind == Tok::pipe) {
      take();
      f = Formula::lor(std::move(f), parse_and());
    }
    return f;
  }

  FormulaRef parse_and() {
    FormulaRef f = parse_unary();
    while (peek().kind == Tok::amp) {
      take();
      f = Formula::land(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaRef parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::bang:
        take();
        return Formula::lnot(parse_unary());
      case Tok::knows: {
        Token tok = take();
        return Formula::knows(resolve(tok.text, "agent"), parse_unary());
      }
      case Tok::khat: {
        Token tok = take();
        return Formula::khat(resolve(tok.text, "agent"), parse_unary());
      }
      case Tok::lbracket: {
        take();
        std::string first = expect_ident("an action or action-model name");
        if (peek().kind == Tok::colon) {
          take();
          std::string action = expect_ident("an action name");
          expect(Tok::rbracket);
          return Formula::am_update(std::move(first), resolve(action, "action"), parse_unary());
        }
        expect(Tok::rbracket);
        return Formula::update(resolve(first, "action"), parse_unary());
      }
      case Tok::langle: {
        take();
        std::string action = expect_ident("an action name");
        expect(Tok::rangle);
        return Formula::diamond(resolve(action, "action"), parse_unary());
      }
      case Tok::lparen: {
        take();
        FormulaRef f = parse_iff();
        expect(Tok::rparen);
        return f;
      }
      case Tok::ident: {
        Token tok = take();
        if (tok.text == "xi" && peek().kind == Tok::lparen) {
          take();
          std::string agent = resolve(expect_ident("an agent name"), "agent");
          expect(Tok::comma);
          std::string performed = resolve(expect_ident("an action name"), "action");
          expect(Tok::comma);
          std::string confusable = resolve(expect_ident("an action name"), "action");
          expect(Tok::rparen);
          return Formula::xi(std::move(agent), std::move(performed), std::move(confusable));
        }
        return Formula::atom(resolve(tok.text, "prop"));
      }
      default:
        throw SyntaxError(t.pos, "a formula", tok_name(t.kind));
    }
  }
};

}  // namespace

FormulaRef parse_formula(std::string_view text, const Signature& sig) {
  Parser parser(lex(text), sig);
  FormulaRef f = parser.parse();
  if (fragment(*f) == Fragment::mixed)
    throw UnsupportedFragment("formula mixes [A:s] with [s] or xi; no combined semantics");
  return f;
}

}  // namespace epikit
