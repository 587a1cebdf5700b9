#include "tolrep/relterms.hpp"

#include <cctype>  // for isalpha, isalnum, isspace

#include "tolrep/errors.hpp"

namespace tolrep {

  ////////////////////////////////////////////////////////////////////////
  // RelTerm
  ////////////////////////////////////////////////////////////////////////

  RelTerm::RelTerm(Kind                           k,
                   std::string                    name,
                   std::shared_ptr<RelTerm const> l,
                   std::shared_ptr<RelTerm const> r)
      : _kind(k), _name(std::move(name)), _left(std::move(l)), _right(std::move(r)) {}

  RelTerm RelTerm::variable(std::string name) {
    if (name.empty()) {
      throw ArgumentError("variable names must be nonempty");
    }
    return RelTerm(Kind::variable, std::move(name), nullptr, nullptr);
  }

  RelTerm RelTerm::compose(RelTerm left, RelTerm right) {
    return RelTerm(Kind::compose,
                   "",
                   std::make_shared<RelTerm const>(std::move(left)),
                   std::make_shared<RelTerm const>(std::move(right)));
  }

  RelTerm RelTerm::intersect(RelTerm left, RelTerm right) {
    return RelTerm(Kind::intersect,
                   "",
                   std::make_shared<RelTerm const>(std::move(left)),
                   std::make_shared<RelTerm const>(std::move(right)));
  }

  std::size_t RelTerm::size() const noexcept {
    if (_kind == Kind::variable) {
      return 1;
    }
    return 1 + _left->size() + _right->size();
  }

  std::size_t RelTerm::leaf_count() const noexcept {
    if (_kind == Kind::variable) {
      return 1;
    }
    return _left->leaf_count() + _right->leaf_count();
  }

  std::set<std::string> RelTerm::variables() const {
    if (_kind == Kind::variable) {
      return {_name};
    }
    auto out = _left->variables();
    out.merge(_right->variables());
    return out;
  }

  bool RelTerm::operator==(RelTerm const& other) const {
    if (_kind != other._kind) {
      return false;
    }
    if (_kind == Kind::variable) {
      return _name == other._name;
    }
    return *_left == *other._left && *_right == *other._right;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    enum class Tok { ident, compose, meet, lparen, rparen, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t pos;
    };

    constexpr std::string_view ring_op      = "\xE2\x88\x98";  // U+2218
    constexpr std::string_view intersection = "\xE2\x88\xA9";  // U+2229

    std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        unsigned char const ch = s[i];
        if (std::isspace(ch)) {
          ++i;
        } else if (ch == '(') {
          out.push_back({Tok::lparen, "(", i++});
        } else if (ch == ')') {
          out.push_back({Tok::rparen, ")", i++});
        } else if (ch == '&') {
          out.push_back({Tok::meet, "&", i++});
        } else if (s.substr(i, 3) == ring_op) {
          out.push_back({Tok::compose, "o", i});
          i += 3;
        } else if (s.substr(i, 3) == intersection) {
          out.push_back({Tok::meet, "&", i});
          i += 3;
        } else if (std::isalpha(ch) || ch == '_') {
          std::size_t const start = i;
          while (i < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[i]))
                     || s[i] == '_')) {
            ++i;
          }
          std::string word(s.substr(start, i - start));
          if (word == "o") {
            out.push_back({Tok::compose, word, start});
          } else {
            out.push_back({Tok::ident, std::move(word), start});
          }
        } else {
          throw SyntaxError("unexpected character '" + std::string(1, ch) + "'",
                            i);
        }
      }
      out.push_back({Tok::end, "", s.size()});
      return out;
    }

    class Parser {
     public:
      explicit Parser(std::vector<Token> toks) : _toks(std::move(toks)), _at(0) {}

      RelTerm parse() {
        RelTerm t = term();
        if (peek().kind != Tok::end) {
          throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        }
        return t;
      }

     private:
      Token const& peek() const {
        return _toks[_at];
      }

      RelTerm term() {
        RelTerm t = factor();
        while (peek().kind == Tok::meet) {
          ++_at;
          t = RelTerm::intersect(std::move(t), factor());
        }
        return t;
      }

      RelTerm factor() {
        RelTerm t = atom();
        while (peek().kind == Tok::compose) {
          ++_at;
          t = RelTerm::compose(std::move(t), atom());
        }
        return t;
      }

      RelTerm atom() {
        Token const& tok = peek();
        switch (tok.kind) {
          case Tok::ident:
            ++_at;
            return RelTerm::variable(tok.text);
          case Tok::lparen: {
            ++_at;
            RelTerm t = term();
            if (peek().kind != Tok::rparen) {
              throw SyntaxError("expected ')'", peek().pos);
            }
            ++_at;
            return t;
          }
          case Tok::end:
            throw SyntaxError("unexpected end of term", tok.pos);
          default:
            throw SyntaxError("expected a variable or '(' but found '"
                                  + tok.text + "'",
                              tok.pos);
        }
      }

      std::vector<Token> _toks;
      std::size_t        _at;
    };

    std::string parenthesized(RelTerm const& t) {
      return "(" + to_string(t) + ")";
    }
  }  // namespace

  RelTerm parse_term(std::string_view text) {
    return Parser(tokenize(text)).parse();
  }

  std::string to_string(RelTerm const& t) {
    using Kind = RelTerm::Kind;
    switch (t.kind()) {
      case Kind::variable:
        return t.name();
      case Kind::intersect: {
        auto const& r = t.right();
        return to_string(t.left()) + " & "
               + (r.kind() == Kind::intersect ? parenthesized(r) : to_string(r));
      }
      case Kind::compose: {
        auto const& l = t.left();
        auto const& r = t.right();
        return (l.kind() == Kind::intersect ? parenthesized(l) : to_string(l))
               + " o "
               + (r.kind() == Kind::variable ? to_string(r) : parenthesized(r));
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Term graphs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void build_graph(RelTerm const& t,
                     std::size_t    from,
                     std::size_t    to,
                     TermGraph&     g) {
      switch (t.kind()) {
        case RelTerm::Kind::variable:
          g.edges.push_back({from, to, t.name()});
          break;
        case RelTerm::Kind::compose: {
          std::size_t const mid = g.vertex_count++;
          build_graph(t.left(), from, mid, g);
          build_graph(t.right(), mid, to, g);
          break;
        }
        case RelTerm::Kind::intersect:
          build_graph(t.left(), from, to, g);
          build_graph(t.right(), from, to, g);
          break;
      }
    }
  }  // namespace

  TermGraph term_graph(RelTerm const& t) {
    TermGraph g{2, {}, 0, 1};
    build_graph(t, g.source, g.sink, g);
    return g;
  }

  bool is_regular(RelTerm const& t) {
    TermGraph const                                g = term_graph(t);
    std::vector<std::map<std::string, std::size_t>> incident(g.vertex_count);
    for (auto const& e : g.edges) {
      if (++incident[e.u][e.label] > 1 || ++incident[e.v][e.label] > 1) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  BinRel eval_term(RelTerm const& t, Environment const& env) {
    switch (t.kind()) {
      case RelTerm::Kind::variable: {
        auto it = env.find(t.name());
        if (it == env.end()) {
          throw LookupError("unbound variable " + t.name());
        }
        return it->second;
      }
      case RelTerm::Kind::compose:
        return compose(eval_term(t.left(), env), eval_term(t.right(), env));
      case RelTerm::Kind::intersect:
        return intersect(eval_term(t.left(), env), eval_term(t.right(), env));
    }
    throw Error("eval_term: corrupt term");
  }

  Environment square_environment(Environment const& env) {
    Environment out;
    for (auto const& [name, r] : env) {
      out.emplace(name, compose(r, r));
    }
    return out;
  }

  bool check_identity_iv(Algebra const&     alg,
                         RelTerm const&     p,
                         RelTerm const&     q,
                         Environment const& env) {
    for (auto const& [name, r] : env) {
      if (r.size() != alg.size()) {
        throw DimensionError("variable " + name + " is bound to a relation on "
                             + std::to_string(r.size()) + " elements");
      }
      if (!classify_relation(alg, r).tolerance) {
        throw PreconditionError("variable " + name
                                + " is not bound to a tolerance");
      }
    }
    Environment const squared = square_environment(env);
    return is_subset(eval_term(p, squared), eval_term(q, squared));
  }

}  // namespace tolrep
