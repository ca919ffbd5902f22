#include <cctype>
#include <map>

#include "fotensor/error.hpp"
#include "fotensor/formula.hpp"

namespace fotensor {
namespace {

enum class Tok { kIdent, kExists, kForall, kLParen, kRParen, kComma, kDot, kNot, kAnd, kOr, kArrow, kEq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kExists: return "'exists'";
    case Tok::kForall: return "'forall'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kDot: return "'.'";
    case Tok::kNot: return "'!'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kEq: return "'='";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      Tok kind = word == "exists" ? Tok::kExists : word == "forall" ? Tok::kForall : Tok::kIdent;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case '.': kind = Tok::kDot; break;
      case '!': kind = Tok::kNot; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '=': kind = Tok::kEq; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          kind = Tok::kArrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(text.substr(i, len)), i});
    i += len;
  }
  out.push_back({Tok::kEnd, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Formula parse() {
    Formula f = formula();
    expect(Tok::kEnd);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  Token advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                           describe(peek().kind),
                       peek().pos);
    }
    return advance();
  }

  Formula formula() {
    if (peek().kind == Tok::kExists || peek().kind == Tok::kForall) return quantified();
    return implication();
  }

  Formula quantified() {
    const Quantifier q = advance().kind == Tok::kExists ? Quantifier::kExists : Quantifier::kForall;
    Token var = expect(Tok::kIdent);
    expect(Tok::kDot);
    return Formula::quantified(q, var.text, formula());
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::kArrow)) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    std::vector<Formula> ops{conjunction()};
    while (accept(Tok::kOr)) ops.push_back(conjunction());
    return ops.size() == 1 ? ops.front() : Formula::disjunction(std::move(ops));
  }

  Formula conjunction() {
    std::vector<Formula> ops{negation()};
    while (accept(Tok::kAnd)) ops.push_back(negation());
    return ops.size() == 1 ? ops.front() : Formula::conjunction(std::move(ops));
  }

  Formula negation() {
    if (accept(Tok::kNot)) return Formula::negation(negation());
    if (peek().kind == Tok::kExists || peek().kind == Tok::kForall) return quantified();
    return atom();
  }

  Formula atom() {
    if (accept(Tok::kLParen)) {
      Formula f = formula();
      expect(Tok::kRParen);
      return f;
    }
    if (peek().kind != Tok::kIdent) {
      throw ParseError(std::string("expected a formula, found ") + describe(peek().kind),
                       peek().pos);
    }
    Token head = advance();
    if (accept(Tok::kEq)) {
      Token rhs = expect(Tok::kIdent);
      return Formula::equal(head.text, rhs.text);
    }
    expect(Tok::kLParen);
    std::vector<Variable> args{expect(Tok::kIdent).text};
    while (accept(Tok::kComma)) args.push_back(expect(Tok::kIdent).text);
    expect(Tok::kRParen);
    check_arity(head, args.size());
    return Formula::atom(head.text, std::move(args));
  }

  void check_arity(const Token& head, std::size_t arity) {
    const std::string& name = head.text;
    const bool order_relation = name == kSuccessor || name == kPrecedence;
    if (order_relation && arity != 2) {
      throw ArityError("'" + name + "' is binary but applied to " + std::to_string(arity) +
                       " argument(s) at offset " + std::to_string(head.pos));
    }
    if (arity > 2) {
      throw ArityError("'" + name + "' applied to " + std::to_string(arity) +
                       " arguments at offset " + std::to_string(head.pos) +
                       "; predicates are at most binary");
    }
    auto [it, inserted] = arities_.emplace(name, arity);
    if (!inserted && it->second != arity) {
      throw ArityError("'" + name + "' applied to " + std::to_string(arity) +
                       " argument(s) at offset " + std::to_string(head.pos) +
                       " but to " + std::to_string(it->second) + " earlier");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> arities_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

}  // namespace fotensor
