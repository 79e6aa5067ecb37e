#include "riskarg/parse.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <tuple>

namespace riskarg {

namespace {

enum class Tok { Ident, Number, Colon, Amp, Arrow, Sign, Dot, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Colon: return "':'";
    case Tok::Amp: return "'&'";
    case Tok::Arrow: return "'->'";
    case Tok::Sign: return "sign";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};

    const char c = src_[pos_];
    auto single = [&](Tok t) {
      advance(1);
      return Token{t, std::string(1, c), line, col};
    };

    if (std::isalpha(static_cast<unsigned char>(c)) && static_cast<unsigned char>(c) < 0x80) {
      std::size_t end = pos_;
      while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                   src_[end] == '_') &&
             static_cast<unsigned char>(src_[end]) < 0x80) {
        ++end;
      }
      std::string text(src_.substr(pos_, end - pos_));
      advance(end - pos_);
      return {Tok::Ident, std::move(text), line, col};
    }
    if (c >= '0' && c <= '9') {
      std::size_t end = pos_;
      while (end < src_.size() && src_[end] >= '0' && src_[end] <= '9') ++end;
      // A '.' only belongs to the number when a digit follows; otherwise it
      // terminates the statement.
      if (end + 1 < src_.size() && src_[end] == '.' && src_[end + 1] >= '0' &&
          src_[end + 1] <= '9') {
        ++end;
        while (end < src_.size() && src_[end] >= '0' && src_[end] <= '9') ++end;
      }
      std::string text(src_.substr(pos_, end - pos_));
      advance(end - pos_);
      return {Tok::Number, std::move(text), line, col};
    }
    switch (c) {
      case ':': return single(Tok::Colon);
      case '&': return single(Tok::Amp);
      case '.': return single(Tok::Dot);
      case '+':
      case '-': {
        const char n = pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0';
        if (c == '-' && n == '>') {
          advance(2);
          return {Tok::Arrow, "->", line, col};
        }
        if (n == c) {
          advance(2);
          return {Tok::Sign, std::string(2, c), line, col};
        }
        return single(Tok::Sign);
      }
      default: break;
    }

    // Report the whole UTF-8 sequence as the offending token.
    std::size_t len = 1;
    while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    std::string bad(src_.substr(pos_, len));
    throw KbError(KbError::Kind::Syntax, "unexpected character '" + bad + "'", line, col, bad);
  }

 private:
  void skip_blank() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance(1);
      } else {
        break;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i, ++pos_) {
      const auto c = static_cast<unsigned char>(src_[pos_]);
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { shift(); }

  KnowledgeBase run() {
    while (cur_.type != Tok::End) statement();
    return KnowledgeBase(std::move(items_));
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& what) {
    throw KbError(KbError::Kind::Syntax,
                  what + ", found " +
                      (t.type == Tok::End ? std::string(describe(t.type)) : "'" + t.text + "'"),
                  t.line, t.column, t.text);
  }

  void shift() { cur_ = lex_.next(); }

  Token expect(Tok t) {
    if (cur_.type != t) fail(cur_, "expected " + std::string(describe(t)));
    Token got = cur_;
    shift();
    return got;
  }

  Proposition proposition() {
    Token t = expect(Tok::Ident);
    if (!Proposition::is_valid_name(t.text)) {
      fail(t, "expected proposition name (lowercase initial)");
    }
    return Proposition(t.text);
  }

  void statement() {
    Token kw = cur_;
    if (kw.type != Tok::Ident || (kw.text != "fact" && kw.text != "rule")) {
      fail(kw, "expected 'fact' or 'rule'");
    }
    shift();

    KbItem item;
    Token id_tok = expect(Tok::Ident);
    expect(Tok::Colon);

    if (kw.text == "fact") {
      item.kind = ItemKind::Fact;
      if (cur_.type == Tok::Sign) {
        if (!Proposition::is_valid_name(id_tok.text)) {
          fail(id_tok, "expected proposition name (lowercase initial)");
        }
        item.consequent = Proposition(id_tok.text);
      } else {
        item.consequent = proposition();
        expect(Tok::Colon);
      }
    } else {
      item.kind = ItemKind::Rule;
      std::vector<Token> ante_toks;
      ante_toks.push_back(cur_);
      item.antecedents.push_back(proposition());
      while (cur_.type == Tok::Amp) {
        shift();
        ante_toks.push_back(cur_);
        item.antecedents.push_back(proposition());
      }
      expect(Tok::Arrow);
      item.consequent = proposition();
      expect(Tok::Colon);
      for (std::size_t i = 0; i < item.antecedents.size(); ++i) {
        if (item.antecedents[i] == item.consequent) {
          const Token& t = ante_toks[i];
          throw KbError(KbError::Kind::SelfLoop,
                        "rule '" + id_tok.text + "': '" + t.text +
                            "' is both antecedent and consequent",
                        t.line, t.column, t.text);
        }
      }
    }

    if (!is_valid_item_id(id_tok.text)) fail(id_tok, "expected item id");
    item.id = id_tok.text;
    if (!seen_ids_.insert(item.id).second) {
      throw KbError(KbError::Kind::DuplicateId, "duplicate item id '" + item.id + "'",
                    id_tok.line, id_tok.column, id_tok.text);
    }

    Token sign_tok = expect(Tok::Sign);
    item.sign = *sign_from_token(sign_tok.text);

    std::optional<Token> weight_tok;
    if (cur_.type == Tok::Ident && cur_.text == "weight") {
      shift();
      weight_tok = expect(Tok::Number);
      const std::string& w = weight_tok->text;
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), item.weight);
      if (ec != std::errc{} || ptr != w.data() + w.size()) fail(*weight_tok, "malformed weight");
      if (!(item.weight > 0.0 && item.weight <= 1.0)) {
        throw KbError(KbError::Kind::WeightRange, "weight " + w + " outside (0, 1]",
                      weight_tok->line, weight_tok->column, w);
      }
    }
    if (cur_.type == Tok::Ident && cur_.text == "axiom") {
      Token ax = cur_;
      shift();
      item.axiomatic = true;
      if (item.weight != 1.0) {
        throw KbError(KbError::Kind::AxiomWeight, "axiomatic item '" + item.id + "' must have weight 1",
                      ax.line, ax.column, ax.text);
      }
    }

    if (cur_.type != Tok::Dot) {
      fail(cur_, weight_tok ? "expected 'axiom' or '.'" : "expected 'weight', 'axiom' or '.'");
    }
    shift();
    items_.push_back(std::move(item));
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0};
  std::vector<KbItem> items_;
  std::set<std::string> seen_ids_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view source) {
  // Skip a UTF-8 byte order mark.
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
  return Parser(source).run();
}

std::vector<KbWarning> validate_kb(const KnowledgeBase& kb) {
  std::vector<KbWarning> out;

  std::set<std::string> antecedents;
  for (const auto& item : kb.items()) {
    for (const auto& a : item.antecedents) antecedents.insert(a.name());
  }
  for (const auto& name : antecedents) {
    const auto concl = kb.concluding(Proposition(name));
    if (concl.empty()) {
      out.push_back({KbWarning::Kind::UnderivableAntecedent, name,
                     "'" + name + "' is used as an antecedent but no item concludes it"});
      continue;
    }
    bool any_for = false;
    for (std::size_t i : concl) any_for = any_for || polarity(kb.item(i).sign) == Polarity::For;
    if (!any_for) {
      out.push_back({KbWarning::Kind::UnusableAntecedent, name,
                     "'" + name +
                         "' is used as an antecedent but is only ever opposed or excluded, so no "
                         "rule depending on it can apply"});
    }
  }

  std::map<std::tuple<std::string, SignTag, double, bool>, std::string> facts;
  for (const auto& item : kb.items()) {
    if (item.kind != ItemKind::Fact) continue;
    auto key = std::make_tuple(item.consequent.name(), item.sign, item.weight, item.axiomatic);
    auto [it, inserted] = facts.emplace(key, item.id);
    if (!inserted) {
      out.push_back({KbWarning::Kind::DuplicateFact, item.id,
                     "fact '" + item.id + "' duplicates fact '" + it->second + "'"});
    }
  }
  return out;
}

}  // namespace riskarg
